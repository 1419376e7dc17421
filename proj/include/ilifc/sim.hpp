#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ilifc/inversion.hpp"

namespace ilifc::sim {

using Rng = std::mt19937_64;

enum class WorkloadKind { UniformRandom, AlternatingComplement, FixedDistance };

// Data-sequence generator. Every generated vector differs from the current
// data: uniform draws are rejected on collision, the alternating workload
// complements every bit, and the fixed-distance workload flips exactly
// `distance` uniformly chosen positions.
struct Workload {
    WorkloadKind kind = WorkloadKind::UniformRandom;
    int distance = 1;

    static Workload uniform() { return {WorkloadKind::UniformRandom, 0}; }
    static Workload alternating() { return {WorkloadKind::AlternatingComplement, 0}; }
    static Workload fixed_distance(int d) { return {WorkloadKind::FixedDistance, d}; }
    static Workload parse(std::string_view text);

    std::string str() const;  // "uniform" | "alternating" | "distance:<d>"
};

// Deterministic per-epoch seed stream: epochs are independent of each
// other and of execution order.
std::uint64_t derive_epoch_seed(std::uint64_t base_seed, std::uint64_t epoch_index);

BitVector next_data(const Workload& workload, const BitVector& current, Rng& rng);

struct EpochOutcome {
    long long writes = 0;
    EraseDiagnostics at_erasure{};
};

// Applies generated writes to a freshly erased codec until one cannot be
// stored, then erases. The triggering write is not counted.
EpochOutcome run_epoch(IilifcCodec& codec, WriteStrategy strategy, const Workload& workload, Rng& rng);

struct SimResult {
    int n = 0, k = 0, q = 0, r = 0;
    WriteStrategy strategy = WriteStrategy::UsualOnly;
    Workload workload;
    std::uint64_t seed = 0;
    long long epochs = 0;
    std::vector<long long> writes_per_epoch;
    std::vector<EraseDiagnostics> erasure_per_epoch;
    double mean = 0.0;
    long long min = 0;
    long long max = 0;

    static constexpr const char* rng_name = "mt19937_64+splitmix64";

    double sample_variance() const;
};

SimResult run_average(const CodeParams& params, WriteStrategy strategy, const Workload& workload,
                      long long epochs, std::uint64_t seed);

// Inversion-cell counts admissible for a sweep: (n - r) divisible by k and
// still leaving at least k slices. Ascending, r = 0 included when valid.
std::vector<int> admissible_inversion_counts(int n, int k);

std::vector<SimResult> sweep_inversion_counts(int n, int k, int q, WriteStrategy strategy,
                                              const Workload& workload, long long epochs,
                                              std::uint64_t seed, bool parallel = true);

// CSV with the fixed header
// n,k,q,r,strategy,workload,seed,epochs,mean_writes,min_writes,max_writes
std::string to_csv(std::span<const SimResult> results);
std::string to_json(const SimResult& result, bool include_epochs = true);

struct AuditResult {
    long long trials = 0;
    long long erasures_checked = 0;
    long long used_below_bound = 0;
    long long unused_above_max = 0;

    bool ok() const { return used_below_bound == 0 && unused_above_max == 0; }
};

// Runs `trials` epochs and checks, at every erasure with non-exhausted
// inversion cells, that the used-level total has reached the guaranteed
// minimum and the unused-level total stays within the strategy's maximum.
AuditResult bound_audit(const CodeParams& params, WriteStrategy strategy, const Workload& workload,
                        long long trials, std::uint64_t seed);

}  // namespace ilifc::sim
