#include "ilifc/verify.hpp"

#include <climits>
#include <random>
#include <unordered_map>

#include "ilifc/bounds.hpp"
#include "json.hpp"

namespace ilifc::verify {

namespace {

std::vector<BitVector> all_vectors(int k) {
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
        out.push_back(BitVector::from_mask(mask, k));
    return out;
}

}  // namespace

ModeRuleResult oracle_mode_rule(int k) {
    if (k < 1 || k > 12) throw InvalidParamsError("mode-rule oracle covers k in [1, 12]");
    ModeRuleResult res;
    res.k = k;
    const std::vector<BitVector> vectors = all_vectors(k);
    for (const BitVector& from : vectors) {
        for (const BitVector& to : vectors) {
            if (from == to) continue;
            ++res.pairs;
            const int d = hamming_distance(from, to);
            const int keep_cost = d;
            const int invert_cost = k - d + 1;
            const bool expect_invert = invert_cost < keep_cost;  // ties keep the mode
            const int expect_cost = std::min(keep_cost, invert_cost);
            const ModeDecision dec = choose_mode(from, to, false);
            const int got_cost = dec.predicted_data_cost + dec.predicted_inversion_cost;
            if (dec.invert != expect_invert || got_cost != expect_cost) ++res.mismatches;
        }
    }
    return res;
}

int oracle_delta(int k) {
    if (k < 2 || k > 64) throw InvalidParamsError("data-cost oracle covers k in [2, 64]");
    int best = 0;
    for (int d = 1; d <= k; ++d) {
        const int cost = 2 * d <= k + 1 ? d : k - d;
        best = std::max(best, cost);
    }
    return best;
}

ErasureCheck oracle_erasure_condition(int k, int q, int m, int bits_without_slice,
                                      int empty_slices, WriteStrategy strategy,
                                      std::uint64_t weight_seed) {
    if (k < 2 || k > 16 || q < 2 || m < k)
        throw InvalidParamsError("erasure oracle covers k in [2, 16], q >= 2, m >= k");
    if (bits_without_slice < 0 || bits_without_slice > k || empty_slices < 0)
        throw UnrealizableOccupancyError("occupancy counts out of range");
    const int active = k - bits_without_slice;
    if (active + empty_slices > m)
        throw UnrealizableOccupancyError("occupancy does not fit in " + std::to_string(m) +
                                         " slices");

    // One inversion cell, fresh: normal mode, not exhausted.
    const CodeParams params(m * k + 1, k, q, 1);
    std::vector<Level> levels(static_cast<std::size_t>(params.n), 0);
    std::mt19937_64 rng(weight_seed);
    const int max_active_weight = k * (q - 1) - 1;
    for (int j = 1; j <= active; ++j) {
        const int weight =
            weight_seed == 0 ? 1 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_active_weight));
        std::span<Level> s{levels.data() + 1 + static_cast<std::size_t>(j - 1) * k,
                           static_cast<std::size_t>(k)};
        for (int w = 0; w < weight; ++w) slice_increment(s, q, j);
    }
    for (int j = active + empty_slices + 1; j <= m; ++j)
        for (int c = 0; c < k; ++c)
            levels[static_cast<std::size_t>(1 + (j - 1) * k + c)] = static_cast<Level>(q - 1);

    IilifcCodec codec{params};
    codec.load_cells(levels);

    ErasureCheck check;
    const std::vector<BitVector> vectors = all_vectors(k);
    for (const BitVector& cand : vectors) {
        if (cand == codec.data()) continue;
        IilifcCodec probe = codec;
        if (!probe.write(cand, strategy).applied()) {
            check.search_says_erasable = true;
            break;
        }
    }
    check.formula_says_erasable =
        bounds::erasure_possible(bits_without_slice, empty_slices, k, strategy);
    return check;
}

namespace {

struct WorstCaseSearch {
    WriteStrategy strategy;
    std::vector<BitVector> vectors;
    std::unordered_map<std::string, long long> memo;
    std::size_t max_states;

    long long value(const IilifcCodec& codec) {
        const std::vector<Level> cells = codec.all_cells();
        std::string key(cells.begin(), cells.end());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (memo.size() >= max_states)
            throw StateSpaceTooLargeError("worst-case search exceeded its state budget");

        long long best = LLONG_MAX;
        for (const BitVector& cand : vectors) {
            if (cand == codec.data()) continue;
            IilifcCodec child = codec;
            if (!child.write(cand, strategy).applied()) {
                best = 0;  // the adversary can force erasure right here
                break;
            }
            best = std::min(best, 1 + value(child));
        }
        memo.emplace(std::move(key), best);
        return best;
    }
};

}  // namespace

WorstCaseResult oracle_worstcase_small(const CodeParams& params, WriteStrategy strategy,
                                       std::size_t max_states) {
    // A-priori bound on distinct cell states.
    double states = 1.0;
    for (int i = 0; i < params.r + params.slice_count * params.k; ++i) {
        states *= params.q;
        if (states > static_cast<double>(max_states))
            throw StateSpaceTooLargeError("state space of this instance exceeds the budget");
    }

    WorstCaseSearch search{strategy, all_vectors(params.k), {}, max_states};
    IilifcCodec codec{params};
    WorstCaseResult res;
    res.writes = search.value(codec);
    res.states_explored = search.memo.size();
    return res;
}

namespace {

void add_claim(nlohmann::json& claims, bool& all_pass, const std::string& name, bool pass,
               const std::string& detail) {
    claims.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
}

}  // namespace

Certificate run_suite(Scope scope) {
    nlohmann::json claims = nlohmann::json::array();
    bool all_pass = true;

    const int mode_rule_max = scope == Scope::Quick ? 5 : 10;
    for (int k = 2; k <= mode_rule_max; ++k) {
        const ModeRuleResult res = oracle_mode_rule(k);
        add_claim(claims, all_pass, "mode-rule k=" + std::to_string(k), res.ok(),
                  std::to_string(res.pairs) + " ordered pairs, " + std::to_string(res.mismatches) +
                      " mismatches");
    }

    {
        int bad = 0;
        for (int k = 2; k <= 64; ++k)
            if (oracle_delta(k) != max_usual_data_cost(k)) ++bad;
        add_claim(claims, all_pass, "usual-cost-cap closed form", bad == 0,
                  "k in [2, 64], " + std::to_string(bad) + " mismatches");
    }

    const int m_extra = scope == Scope::Quick ? 1 : 3;
    const std::vector<int> ks = scope == Scope::Quick ? std::vector<int>{2, 4} : std::vector<int>{2, 4, 5};
    for (int k : ks) {
        for (int q : {2, 3}) {
            if (k % 2 != 0 && (q - 1) % 2 != 0) continue;
            for (WriteStrategy strategy : {WriteStrategy::UsualOnly, WriteStrategy::AllowUnusual}) {
                long long cases = 0, bad = 0;
                for (int m = k; m <= k + m_extra; ++m) {
                    for (int without = 0; without <= k; ++without) {
                        for (int empty = 0; empty + (k - without) <= m; ++empty) {
                            for (std::uint64_t seed :
                                 {std::uint64_t{0}, static_cast<std::uint64_t>(0xACCE55 + m)}) {
                                ++cases;
                                if (!oracle_erasure_condition(k, q, m, without, empty, strategy, seed)
                                         .match())
                                    ++bad;
                            }
                        }
                    }
                }
                add_claim(claims, all_pass,
                          "erasure-condition " + to_string(strategy) + " k=" + std::to_string(k) +
                              " q=" + std::to_string(q),
                          bad == 0,
                          std::to_string(cases) + " occupancies, " + std::to_string(bad) +
                              " mismatches");
            }
        }
    }

    if (scope == Scope::Full) {
        {
            const CodeParams params(4, 2, 2, 0);
            const WorstCaseResult wc = oracle_worstcase_small(params, WriteStrategy::UsualOnly);
            const bool pass = wc.writes >= 1 && 2 * wc.writes <= 4;
            add_claim(claims, all_pass, "worst-case plain n=4 k=2 q=2", pass,
                      "exact worst case " + std::to_string(wc.writes) + ", " +
                          std::to_string(wc.states_explored) + " states");
        }
        {
            const CodeParams params(9, 2, 3, 4);
            const long long floor = bounds::guaranteed_writes(9, 2, 3, 4, WriteStrategy::UsualOnly);
            const WorstCaseResult wc = oracle_worstcase_small(params, WriteStrategy::UsualOnly);
            add_claim(claims, all_pass, "worst-case usual n=9 k=2 q=3 r=4", wc.writes >= floor,
                      "exact worst case " + std::to_string(wc.writes) + " >= guaranteed " +
                          std::to_string(floor));
        }
        {
            const CodeParams params(11, 2, 3, 6);
            const long long floor =
                bounds::guaranteed_writes(11, 2, 3, 6, WriteStrategy::AllowUnusual);
            const WorstCaseResult wc = oracle_worstcase_small(params, WriteStrategy::AllowUnusual);
            add_claim(claims, all_pass, "worst-case unusual n=11 k=2 q=3 r=6", wc.writes >= floor,
                      "exact worst case " + std::to_string(wc.writes) + " >= guaranteed " +
                          std::to_string(floor));
        }
    }

    nlohmann::json cert{{"schema_version", 1},
                        {"scope", scope == Scope::Quick ? "quick" : "full"},
                        {"claims", claims},
                        {"all_pass", all_pass}};
    return Certificate{cert.dump(2), all_pass};
}

}  // namespace ilifc::verify
