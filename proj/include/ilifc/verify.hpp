#pragma once

#include <cstdint>
#include <string>

#include "ilifc/inversion.hpp"

namespace ilifc::verify {

// Brute-force checks of the codec's combinatorial claims at small sizes.
// Each oracle re-derives its answer by enumeration, independently of the
// closed forms it is compared against.

struct ModeRuleResult {
    int k = 0;
    long long pairs = 0;
    long long mismatches = 0;

    bool ok() const { return mismatches == 0; }
};

// Enumerates all ordered pairs of distinct k-bit vectors and checks that
// choose_mode matches cost minimization with keep-on-tie. k <= 12.
ModeRuleResult oracle_mode_rule(int k);

// Maximum data-cell cost over all distances d in [1, k] under the mode
// rule: d when 2d <= k + 1, otherwise k - d. k in [2, 64].
int oracle_delta(int k);

struct ErasureCheck {
    bool search_says_erasable = false;
    bool formula_says_erasable = false;

    bool match() const { return search_says_erasable == formula_says_erasable; }
};

// Builds a block with the given occupancy (bits without a slice, empty
// slices, remainder full; active slice weights 1 unless weight_seed != 0),
// then tries every possible next data vector and compares the existence of
// an unstorable write against the closed-form erasure condition.
ErasureCheck oracle_erasure_condition(int k, int q, int m, int bits_without_slice,
                                      int empty_slices, WriteStrategy strategy,
                                      std::uint64_t weight_seed = 0);

struct WorstCaseResult {
    long long writes = 0;
    std::size_t states_explored = 0;
};

// Exact worst-case write count between erasures, by memoized game search
// with the data sequence chosen adversarially after observing the full
// state. Refuses instances whose a-priori state space exceeds max_states.
WorstCaseResult oracle_worstcase_small(const CodeParams& params, WriteStrategy strategy,
                                       std::size_t max_states = 10'000'000);

enum class Scope { Quick, Full };

struct Certificate {
    std::string json;
    bool all_pass = false;
};

// Runs the oracle suite and emits one pass/fail claim per check.
Certificate run_suite(Scope scope);

}  // namespace ilifc::verify
