#pragma once

#include <optional>
#include <string>

#include "ilifc/params.hpp"
#include "ilifc/rational.hpp"

namespace ilifc::bounds {

// All quantities below are closed forms in (n, k, q, r). Comparisons that
// decide integers (minimum inversion-cell counts, threshold verdicts) are
// made in exact rational arithmetic; doubles appear only in display code.

// Upper bound on the worst-case write count of the plain codec: n(q-1)/k.
Rational plain_worst_case_upper_bound(int n, int k, int q);

// Least used-level total a block can have when erasure becomes necessary,
// and the exact (non-floored) variant used in threshold derivations.
// UsualOnly: (floor((n-r)/k) - k + 1) * k(q-1) + k - delta.
// AllowUnusual: (floor((n-r)/k) - k + 2) * k(q-1) + k - 2.
long long min_used_at_erasure(int n, int k, int q, int r, WriteStrategy strategy);
Rational min_used_at_erasure_exact(int n, int k, int q, int r, WriteStrategy strategy);

// Largest unused-level total possible at erasure time.
// UsualOnly: (k-1) * k(q-1) - k + delta.  AllowUnusual: (k-2) * k(q-1) - k + 2.
long long max_unused_at_erasure(int k, int q, WriteStrategy strategy);

// Whether some next data can force an erasure, given the number of bits
// lacking a slice and the number of empty slices.
// UsualOnly: empty < min(without, delta).  AllowUnusual: floor(without/2) > empty.
bool erasure_possible(int bits_without_slice, int empty_slices, int k, WriteStrategy strategy);

// Writes guaranteed between erasures with r inversion cells.
long long guaranteed_usual_writes(int n, int k, int q, int r);          // ceil(U/delta)
long long guaranteed_extra_unusual_writes(int n, int k, int q, int r);  // the unusual surplus
long long guaranteed_writes(int n, int k, int q, int r, WriteStrategy strategy);

// Exact inversion-cell budget threshold and the least integer budget that
// makes the guarantee self-supporting. The integer value is computed from
// the closed form and re-derived by scanning the defining inequality; a
// mismatch is a hard error.
Rational inversion_cells_needed(int n, int k, int q, WriteStrategy strategy);
int min_inversion_cells(int n, int k, int q, WriteStrategy strategy);

// Code-length precondition for min_inversion_cells to fit in the block.
bool length_condition_holds(int n, int k, int q, WriteStrategy strategy);

// Relaxed (floor-free) used-level minimum, defined for fractional r.
Rational relaxed_min_used(int n, int k, int q, const Rational& r, WriteStrategy strategy);

// Closed-form lower bound on the worst-case write count at the minimal
// inversion budget, in the printed per-parity form and via the direct
// route through relaxed_min_used; the two agree identically.
Rational worst_case_lower_bound(int n, int k, int q, WriteStrategy strategy);
Rational worst_case_lower_bound_direct(int n, int k, int q, WriteStrategy strategy);

// Code length above which the inversion-cell codec beats the plain codec
// in the worst case. Defined for even k >= 4 and odd k >= 5.
Rational improvement_length_threshold(int k, int q, WriteStrategy strategy);
bool improvement_threshold_defined(int k);

// Closed form of the usual-minus-unusual threshold difference; positive
// wherever both thresholds are defined.
Rational improvement_threshold_gap(int k, int q);

struct BoundsReport {
    int n = 0, k = 0, q = 0;
    int usual_cost_cap = 0;
    Rational upper_bound;  // plain codec, worst case
    long long max_unused_usual = 0;
    long long max_unused_unusual = 0;

    bool length_ok_usual = false;
    std::optional<Rational> cells_needed_usual;
    std::optional<int> min_cells_usual;
    std::optional<long long> min_used_usual;          // at min_cells_usual
    std::optional<long long> guaranteed_writes_usual; // at min_cells_usual
    std::optional<Rational> lower_bound_usual;

    bool length_ok_unusual = false;
    std::optional<Rational> cells_needed_unusual;
    std::optional<int> min_cells_unusual;
    std::optional<long long> min_used_unusual;          // at min_cells_unusual
    std::optional<long long> guaranteed_writes_unusual; // usual + extra, at min_cells_unusual
    std::optional<Rational> lower_bound_unusual;

    std::optional<Rational> threshold_usual;
    std::optional<Rational> threshold_unusual;
    std::optional<Rational> threshold_gap;
    std::optional<bool> beats_plain_usual;    // n > threshold_usual
    std::optional<bool> beats_plain_unusual;  // n > threshold_unusual
};

BoundsReport compute_report(int n, int k, int q);

std::string report_table(const BoundsReport& rep);
std::string report_json(const BoundsReport& rep);

}  // namespace ilifc::bounds
