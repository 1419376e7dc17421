#include "doctest.h"
#include "ilifc/bounds.hpp"

using namespace ilifc;
using namespace ilifc::bounds;

namespace {

// Reference route used by the tests: the defining inequalities evaluated
// from first principles, scanned from r = 1. Independent of the closed
// forms inside the library.
Rational ref_min_used_exact(int n, int k, int q, int r, WriteStrategy s) {
    const Rational slices(n - r, k);
    const Rational cap(1LL * k * (q - 1));
    if (s == WriteStrategy::UsualOnly)
        return (slices - k + 1) * cap + Rational(k - max_usual_data_cost(k));
    return (slices - k + 2) * cap + Rational(k - 2);
}

bool ref_budget_ok(int n, int k, int q, int r, WriteStrategy s) {
    const int cap = max_usual_data_cost(k);
    Rational rhs = ref_min_used_exact(n, k, q, r, WriteStrategy::UsualOnly) / cap;
    if (s == WriteStrategy::UsualOnly) {
        rhs += 1;
    } else {
        rhs += (ref_min_used_exact(n, k, q, r, WriteStrategy::AllowUnusual) -
                ref_min_used_exact(n, k, q, r, WriteStrategy::UsualOnly) - Rational(cap) + 1) /
                   Rational(k - 1) +
               2;
    }
    return Rational(1LL * r * (q - 1)) >= rhs;
}

int ref_scan_min_cells(int n, int k, int q, WriteStrategy s) {
    for (int r = 1; r <= n - k * k; ++r)
        if (ref_budget_ok(n, k, q, r, s)) return r;
    return -1;
}

}  // namespace

TEST_CASE("usual-write cost cap") {
    CHECK(max_usual_data_cost(16) == 8);
    CHECK(max_usual_data_cost(7) == 4);
    CHECK(max_usual_data_cost(2) == 1);
}

TEST_CASE("plain-codec upper bound") {
    CHECK(plain_worst_case_upper_bound(640, 16, 4) == Rational(120));
    CHECK(plain_worst_case_upper_bound(192, 8, 8) == Rational(168));
    CHECK(plain_worst_case_upper_bound(4, 2, 1) == Rational(0));
}

TEST_CASE("used-level minimum at erasure, usual writes") {
    CHECK(min_used_at_erasure(640, 16, 4, 32, WriteStrategy::UsualOnly) == 1112);
    CHECK(guaranteed_usual_writes(640, 16, 4, 32) == 139);
    // One slice row above the floor: r = n - k^2 with k | (n - r).
    CHECK(min_used_at_erasure(272, 16, 4, 16, WriteStrategy::UsualOnly) == 16LL * 3 + 16 - 8);
    // Strictly decreasing across each multiple of k.
    long long prev = min_used_at_erasure(640, 16, 4, 0, WriteStrategy::UsualOnly);
    for (int r = 16; r <= 384; r += 16) {
        const long long cur = min_used_at_erasure(640, 16, 4, r, WriteStrategy::UsualOnly);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(min_used_at_erasure(640, 16, 4, 400, WriteStrategy::UsualOnly),
                    InvalidParamsError);
}

TEST_CASE("used-level minimum at erasure, unusual writes") {
    // With k | (n - r) the two floors differ by k(q-1) + cap - 2.
    for (int r : {0, 16, 32, 128}) {
        const long long diff = min_used_at_erasure(640, 16, 4, r, WriteStrategy::AllowUnusual) -
                               min_used_at_erasure(640, 16, 4, r, WriteStrategy::UsualOnly);
        CHECK(diff == 16 * 3 + 8 - 2);
    }
    CHECK(guaranteed_extra_unusual_writes(640, 16, 4, 47) == 4);
    CHECK(guaranteed_writes(640, 16, 4, 47, WriteStrategy::AllowUnusual) == 137);
}

TEST_CASE("minimum inversion-cell budget, usual") {
    CHECK(inversion_cells_needed(640, 16, 4, WriteStrategy::UsualOnly) == Rational(1216, 27));
    const int r_min = min_inversion_cells(640, 16, 4, WriteStrategy::UsualOnly);
    CHECK(r_min == 46);
    CHECK(r_min == ref_scan_min_cells(640, 16, 4, WriteStrategy::UsualOnly));
    CHECK(ref_budget_ok(640, 16, 4, r_min, WriteStrategy::UsualOnly));
    CHECK_FALSE(ref_budget_ok(640, 16, 4, r_min - 1, WriteStrategy::UsualOnly));
    // Integral threshold lands exactly on the minimum.
    CHECK(inversion_cells_needed(9, 2, 3, WriteStrategy::UsualOnly) == Rational(4));
    CHECK(min_inversion_cells(9, 2, 3, WriteStrategy::UsualOnly) == 4);
}

TEST_CASE("minimum inversion-cell budget, unusual") {
    CHECK(inversion_cells_needed(640, 16, 4, WriteStrategy::AllowUnusual) == Rational(18736, 405));
    const int r_min = min_inversion_cells(640, 16, 4, WriteStrategy::AllowUnusual);
    CHECK(r_min == 47);
    CHECK(r_min == ref_scan_min_cells(640, 16, 4, WriteStrategy::AllowUnusual));
    CHECK(inversion_cells_needed(11, 2, 3, WriteStrategy::AllowUnusual) == Rational(6));
    CHECK(min_inversion_cells(11, 2, 3, WriteStrategy::AllowUnusual) == 6);
}

TEST_CASE("length conditions gate the budget computation") {
    CHECK(length_condition_holds(9, 2, 3, WriteStrategy::UsualOnly));
    CHECK_FALSE(length_condition_holds(8, 2, 3, WriteStrategy::UsualOnly));
    CHECK_FALSE(length_condition_holds(9, 2, 3, WriteStrategy::AllowUnusual));
    CHECK(length_condition_holds(11, 2, 3, WriteStrategy::AllowUnusual));
    CHECK_THROWS_AS(min_inversion_cells(8, 2, 3, WriteStrategy::UsualOnly), LengthTooSmallError);
    CHECK_THROWS_AS(min_inversion_cells(9, 2, 3, WriteStrategy::AllowUnusual), LengthTooSmallError);
}

TEST_CASE("worst-case lower bounds at the minimal budget") {
    const Rational usual = worst_case_lower_bound(640, 16, 4, WriteStrategy::UsualOnly);
    CHECK(usual == Rational(9197, 72));
    CHECK(usual.decimal(3) == "127.736");
    CHECK(usual > plain_worst_case_upper_bound(640, 16, 4));

    const Rational unusual = worst_case_lower_bound(640, 16, 4, WriteStrategy::AllowUnusual);
    CHECK(unusual == Rational(140843, 1080));
    CHECK(unusual > usual);
}

TEST_CASE("printed lower-bound forms equal the direct derivation route") {
    for (int k = 4; k <= 32; ++k) {
        for (int q = 2; q <= 8; ++q) {
            if (k % 2 != 0 && (q - 1) % 2 != 0) continue;
            for (int n = k * k + k; n <= 4 * k * k; n += k + 3) {
                for (WriteStrategy s : {WriteStrategy::UsualOnly, WriteStrategy::AllowUnusual})
                    CHECK(worst_case_lower_bound(n, k, q, s) ==
                          worst_case_lower_bound_direct(n, k, q, s));
            }
        }
    }
}

TEST_CASE("code-length thresholds") {
    const Rational p_usual = improvement_length_threshold(16, 4, WriteStrategy::UsualOnly);
    CHECK(p_usual == Rational(12326, 21));
    CHECK(Rational(640) > p_usual);

    const Rational p_unusual = improvement_length_threshold(16, 4, WriteStrategy::AllowUnusual);
    CHECK(p_unusual == Rational(179114, 315));
    CHECK(p_usual - p_unusual == improvement_threshold_gap(16, 4));
    CHECK(improvement_threshold_gap(16, 4) == Rational(5776, 315));

    CHECK_FALSE(improvement_threshold_defined(2));
    CHECK_FALSE(improvement_threshold_defined(3));
    CHECK(improvement_threshold_defined(4));
    CHECK(improvement_threshold_defined(5));
    CHECK_THROWS_AS(improvement_length_threshold(3, 3, WriteStrategy::UsualOnly),
                    InvalidParamsError);
}

TEST_CASE("budget minimality and threshold signs across the parameter sweep") {
    for (int k = 4; k <= 32; ++k) {
        for (int q = 2; q <= 8; ++q) {
            if (k % 2 != 0 && (q - 1) % 2 != 0) continue;

            const Rational p_usual = improvement_length_threshold(k, q, WriteStrategy::UsualOnly);
            const Rational p_unusual =
                improvement_length_threshold(k, q, WriteStrategy::AllowUnusual);
            CHECK(p_usual > p_unusual);
            CHECK(p_usual - p_unusual == improvement_threshold_gap(k, q));

            const int n_hi = 4 * k * k;
            const int stride = std::max(1, (n_hi - k * k) / 12);
            for (int n = k * k; n <= n_hi; n += stride) {
                for (WriteStrategy s : {WriteStrategy::UsualOnly, WriteStrategy::AllowUnusual}) {
                    if (!length_condition_holds(n, k, q, s)) continue;
                    const int r_min = min_inversion_cells(n, k, q, s);
                    CHECK(r_min == ref_scan_min_cells(n, k, q, s));
                    CHECK(ref_budget_ok(n, k, q, r_min, s));
                    if (r_min > 1) CHECK_FALSE(ref_budget_ok(n, k, q, r_min - 1, s));

                    const Rational margin =
                        worst_case_lower_bound(n, k, q, s) - plain_worst_case_upper_bound(n, k, q);
                    const Rational excess =
                        Rational(n) - improvement_length_threshold(k, q, s);
                    CHECK(margin.sign() == excess.sign());
                }
            }
        }
    }
}

TEST_CASE("relaxed used-level floors differ by a constant") {
    const Rational at(37, 2);
    const Rational diff = relaxed_min_used(640, 16, 4, at, WriteStrategy::AllowUnusual) -
                          relaxed_min_used(640, 16, 4, at, WriteStrategy::UsualOnly);
    CHECK(diff == Rational(16 * 3 + 8 - 2));
}

TEST_CASE("unused-level maxima and the erasure conditions") {
    CHECK(max_unused_at_erasure(16, 4, WriteStrategy::UsualOnly) == 712);
    CHECK(max_unused_at_erasure(16, 4, WriteStrategy::AllowUnusual) == 658);

    const int cap = max_usual_data_cost(16);
    CHECK(erasure_possible(cap, cap - 1, 16, WriteStrategy::UsualOnly));
    CHECK_FALSE(erasure_possible(cap, cap, 16, WriteStrategy::UsualOnly));
    CHECK_FALSE(erasure_possible(0, 0, 16, WriteStrategy::UsualOnly));
    CHECK(erasure_possible(2, 0, 16, WriteStrategy::AllowUnusual));
    CHECK_FALSE(erasure_possible(2, 1, 16, WriteStrategy::AllowUnusual));
}

TEST_CASE("report gathers every quantity and renders three-decimal values") {
    const BoundsReport rep = compute_report(640, 16, 4);
    CHECK(rep.length_ok_usual);
    CHECK(rep.length_ok_unusual);
    CHECK(rep.min_cells_usual == 46);
    CHECK(rep.min_cells_unusual == 47);
    CHECK(rep.guaranteed_writes_usual == 133);
    CHECK(rep.guaranteed_writes_unusual == 137);
    CHECK(rep.beats_plain_usual == true);
    CHECK(rep.beats_plain_unusual == true);

    const std::string table = report_table(rep);
    CHECK(table.find("120.000") != std::string::npos);
    CHECK(table.find("127.736") != std::string::npos);

    const std::string json = report_json(rep);
    CHECK(json.find("\"9197/72\"") != std::string::npos);

    // Small k: thresholds are not defined, the rest still is.
    const BoundsReport small = compute_report(9, 2, 3);
    CHECK(small.length_ok_usual);
    CHECK_FALSE(small.threshold_usual.has_value());
    CHECK_FALSE(small.length_ok_unusual);
}
