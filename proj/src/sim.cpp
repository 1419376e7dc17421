#include "ilifc/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <numeric>
#include <sstream>

#include "ilifc/bounds.hpp"
#include "json.hpp"

namespace ilifc::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Unbiasedness is irrelevant at these ranges; determinism is what matters.
std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return rng() % n; }

BitVector uniform_bits(int k, Rng& rng) {
    BitVector v(k);
    std::uint64_t word = 0;
    int avail = 0;
    for (int i = 1; i <= k; ++i) {
        if (avail == 0) {
            word = rng();
            avail = 64;
        }
        v.set(i, word & 1);
        word >>= 1;
        --avail;
    }
    return v;
}

}  // namespace

Workload Workload::parse(std::string_view text) {
    if (text == "uniform") return uniform();
    if (text == "alternating") return alternating();
    constexpr std::string_view prefix = "distance:";
    if (text.substr(0, prefix.size()) == prefix) {
        int d = 0;
        try {
            d = std::stoi(std::string(text.substr(prefix.size())));
        } catch (const std::exception&) {
            throw InvalidParamsError("bad distance in workload '" + std::string(text) + "'");
        }
        if (d < 1) throw InvalidParamsError("workload distance must be at least 1");
        return fixed_distance(d);
    }
    throw InvalidParamsError("unknown workload '" + std::string(text) +
                             "' (expected uniform|alternating|distance:<d>)");
}

std::string Workload::str() const {
    switch (kind) {
        case WorkloadKind::UniformRandom: return "uniform";
        case WorkloadKind::AlternatingComplement: return "alternating";
        case WorkloadKind::FixedDistance: return "distance:" + std::to_string(distance);
    }
    return "?";
}

std::uint64_t derive_epoch_seed(std::uint64_t base_seed, std::uint64_t epoch_index) {
    return splitmix64(base_seed + 0x9E3779B97F4A7C15ull * (epoch_index + 1));
}

BitVector next_data(const Workload& workload, const BitVector& current, Rng& rng) {
    const int k = current.size();
    switch (workload.kind) {
        case WorkloadKind::UniformRandom: {
            BitVector v = uniform_bits(k, rng);
            while (v == current) v = uniform_bits(k, rng);
            return v;
        }
        case WorkloadKind::AlternatingComplement:
            return current.complemented();
        case WorkloadKind::FixedDistance: {
            const int d = workload.distance;
            if (d < 1 || d > k) throw InvalidParamsError("workload distance must be in [1, k]");
            // Partial Fisher-Yates draw of d distinct positions.
            std::vector<int> pos(static_cast<std::size_t>(k));
            std::iota(pos.begin(), pos.end(), 1);
            BitVector v = current;
            for (int i = 0; i < d; ++i) {
                const auto j = i + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(k - i)));
                std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
                v.flip(pos[static_cast<std::size_t>(i)]);
            }
            return v;
        }
    }
    throw InvalidParamsError("unknown workload kind");
}

EpochOutcome run_epoch(IilifcCodec& codec, WriteStrategy strategy, const Workload& workload, Rng& rng) {
    EpochOutcome out;
    for (;;) {
        const BitVector next = next_data(workload, codec.data(), rng);
        const WriteOutcome res = codec.write(next, strategy);
        if (!res.applied()) {
            out.at_erasure = res.diagnostics;
            codec.erase();
            return out;
        }
        ++out.writes;
    }
}

double SimResult::sample_variance() const {
    if (writes_per_epoch.size() < 2) return 0.0;
    double acc = 0.0;
    for (long long w : writes_per_epoch) {
        const double dev = static_cast<double>(w) - mean;
        acc += dev * dev;
    }
    return acc / (static_cast<double>(writes_per_epoch.size()) - 1.0);
}

SimResult run_average(const CodeParams& params, WriteStrategy strategy, const Workload& workload,
                      long long epochs, std::uint64_t seed) {
    if (epochs < 1) throw InvalidParamsError("epochs must be at least 1");
    SimResult result;
    result.n = params.n;
    result.k = params.k;
    result.q = params.q;
    result.r = params.r;
    result.strategy = strategy;
    result.workload = workload;
    result.seed = seed;
    result.epochs = epochs;
    result.writes_per_epoch.reserve(static_cast<std::size_t>(epochs));
    result.erasure_per_epoch.reserve(static_cast<std::size_t>(epochs));

    IilifcCodec codec{params};
    long long total = 0;
    for (long long e = 0; e < epochs; ++e) {
        Rng rng(derive_epoch_seed(seed, static_cast<std::uint64_t>(e)));
        const EpochOutcome epoch = run_epoch(codec, strategy, workload, rng);
        result.writes_per_epoch.push_back(epoch.writes);
        result.erasure_per_epoch.push_back(epoch.at_erasure);
        total += epoch.writes;
    }
    result.mean = static_cast<double>(total) / static_cast<double>(epochs);
    result.min = *std::min_element(result.writes_per_epoch.begin(), result.writes_per_epoch.end());
    result.max = *std::max_element(result.writes_per_epoch.begin(), result.writes_per_epoch.end());
    return result;
}

std::vector<int> admissible_inversion_counts(int n, int k) {
    if (k < 2) throw InvalidParamsError("k must be at least 2");
    std::vector<int> out;
    for (int r = n % k; n - r >= k * k; r += k) out.push_back(r);
    return out;
}

std::vector<SimResult> sweep_inversion_counts(int n, int k, int q, WriteStrategy strategy,
                                              const Workload& workload, long long epochs,
                                              std::uint64_t seed, bool parallel) {
    const std::vector<int> counts = admissible_inversion_counts(n, k);
    if (counts.empty()) throw InvalidParamsError("no admissible inversion-cell counts for (n, k)");
    std::vector<SimResult> results;
    results.reserve(counts.size());
    if (!parallel) {
        for (int r : counts)
            results.push_back(run_average(CodeParams(n, k, q, r), strategy, workload, epochs, seed));
        return results;
    }
    std::vector<std::future<SimResult>> futures;
    futures.reserve(counts.size());
    for (int r : counts)
        futures.push_back(std::async(std::launch::async, [=] {
            return run_average(CodeParams(n, k, q, r), strategy, workload, epochs, seed);
        }));
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

std::string to_csv(std::span<const SimResult> results) {
    std::ostringstream out;
    out << "n,k,q,r,strategy,workload,seed,epochs,mean_writes,min_writes,max_writes\n";
    char mean[32];
    for (const SimResult& res : results) {
        std::snprintf(mean, sizeof mean, "%.4f", res.mean);
        out << res.n << ',' << res.k << ',' << res.q << ',' << res.r << ','
            << to_string(res.strategy) << ',' << res.workload.str() << ',' << res.seed << ','
            << res.epochs << ',' << mean << ',' << res.min << ',' << res.max << '\n';
    }
    return out.str();
}

std::string to_json(const SimResult& result, bool include_epochs) {
    nlohmann::json j{
        {"schema_version", 1},
        {"n", result.n},
        {"k", result.k},
        {"q", result.q},
        {"r", result.r},
        {"strategy", to_string(result.strategy)},
        {"workload", result.workload.str()},
        {"seed", result.seed},
        {"epochs", result.epochs},
        {"rng", SimResult::rng_name},
        {"mean_writes", result.mean},
        {"min_writes", result.min},
        {"max_writes", result.max},
    };
    if (include_epochs) {
        j["writes_per_epoch"] = result.writes_per_epoch;
        auto& diags = j["erasures"] = nlohmann::json::array();
        for (const EraseDiagnostics& d : result.erasure_per_epoch)
            diags.push_back({{"bits_without_slice", d.bits_without_slice},
                             {"empty_slices", d.empty_slices},
                             {"unused_levels", d.unused_levels},
                             {"exhausted", d.exhausted}});
    }
    return j.dump(2);
}

AuditResult bound_audit(const CodeParams& params, WriteStrategy strategy, const Workload& workload,
                        long long trials, std::uint64_t seed) {
    AuditResult audit;
    audit.trials = trials;
    if (trials == 0) return audit;
    const long long used_floor =
        bounds::min_used_at_erasure(params.n, params.k, params.q, params.r, strategy);
    const long long unused_cap = bounds::max_unused_at_erasure(params.k, params.q, strategy);
    IilifcCodec codec{params};
    for (long long t = 0; t < trials; ++t) {
        Rng rng(derive_epoch_seed(seed, static_cast<std::uint64_t>(t)));
        const EpochOutcome epoch = run_epoch(codec, strategy, workload, rng);
        if (epoch.at_erasure.exhausted) continue;  // bounds assume spare mode changes
        ++audit.erasures_checked;
        const long long used = params.data_capacity() - epoch.at_erasure.unused_levels;
        if (used < used_floor) ++audit.used_below_bound;
        if (epoch.at_erasure.unused_levels > unused_cap) ++audit.unused_above_max;
    }
    return audit;
}

}  // namespace ilifc::sim
