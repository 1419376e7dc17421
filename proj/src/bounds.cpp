#include "ilifc/bounds.hpp"

#include <sstream>

#include "json.hpp"

namespace ilifc::bounds {

namespace {

void check_base(int n, int k, int q) {
    if (k < 2) throw InvalidParamsError("k must be at least 2");
    if (q < 2) throw InvalidParamsError("q must be at least 2");
    if (k % 2 != 0 && (q - 1) % 2 != 0) throw InvalidParamsError("k or q-1 must be even");
    if (n < k * k) throw InvalidParamsError("n must be at least k^2");
}

Rational defining_rhs(int n, int k, int q, int r, WriteStrategy strategy) {
    const int cap = max_usual_data_cost(k);
    Rational rhs = min_used_at_erasure_exact(n, k, q, r, WriteStrategy::UsualOnly) / cap;
    if (strategy == WriteStrategy::UsualOnly) return rhs + 1;
    const Rational surplus = min_used_at_erasure_exact(n, k, q, r, WriteStrategy::AllowUnusual) -
                             min_used_at_erasure_exact(n, k, q, r, WriteStrategy::UsualOnly) -
                             Rational(cap) + Rational(1);
    return rhs + surplus / Rational(k - 1) + 2;
}

bool budget_sufficient(int n, int k, int q, int r, WriteStrategy strategy) {
    return Rational(1LL * r * (q - 1)) >= defining_rhs(n, k, q, r, strategy);
}

}  // namespace

Rational plain_worst_case_upper_bound(int n, int k, int q) {
    if (k < 1 || q < 1 || n < 0) throw InvalidParamsError("bad parameters");
    return Rational(1LL * n * (q - 1), k);
}

long long min_used_at_erasure(int n, int k, int q, int r, WriteStrategy strategy) {
    check_base(n, k, q);
    if (n - r < k * k) throw InvalidParamsError("n - r must be at least k^2");
    const long long m = (n - r) / k;
    const long long cap = 1LL * k * (q - 1);
    if (strategy == WriteStrategy::UsualOnly) return (m - k + 1) * cap + k - max_usual_data_cost(k);
    return (m - k + 2) * cap + k - 2;
}

Rational min_used_at_erasure_exact(int n, int k, int q, int r, WriteStrategy strategy) {
    check_base(n, k, q);
    const Rational slices = Rational(n - r, k);
    const Rational cap(1LL * k * (q - 1));
    if (strategy == WriteStrategy::UsualOnly)
        return (slices - k + 1) * cap + Rational(k - max_usual_data_cost(k));
    return (slices - k + 2) * cap + Rational(k - 2);
}

long long max_unused_at_erasure(int k, int q, WriteStrategy strategy) {
    if (k < 2 || q < 2) throw InvalidParamsError("bad parameters");
    const long long cap = 1LL * k * (q - 1);
    if (strategy == WriteStrategy::UsualOnly) return (k - 1) * cap - k + max_usual_data_cost(k);
    return (k - 2) * cap - k + 2;
}

bool erasure_possible(int bits_without_slice, int empty_slices, int k, WriteStrategy strategy) {
    if (strategy == WriteStrategy::UsualOnly) {
        const int cap = max_usual_data_cost(k);
        return empty_slices < std::min(bits_without_slice, cap);
    }
    return bits_without_slice / 2 > empty_slices;
}

long long guaranteed_usual_writes(int n, int k, int q, int r) {
    return Rational(min_used_at_erasure(n, k, q, r, WriteStrategy::UsualOnly),
                    max_usual_data_cost(k))
        .ceil_val();
}

long long guaranteed_extra_unusual_writes(int n, int k, int q, int r) {
    const long long diff = min_used_at_erasure(n, k, q, r, WriteStrategy::AllowUnusual) -
                           min_used_at_erasure(n, k, q, r, WriteStrategy::UsualOnly) -
                           max_usual_data_cost(k) + 1;
    return Rational(diff, k - 1).ceil_val();
}

long long guaranteed_writes(int n, int k, int q, int r, WriteStrategy strategy) {
    long long total = guaranteed_usual_writes(n, k, q, r);
    if (strategy == WriteStrategy::AllowUnusual) total += guaranteed_extra_unusual_writes(n, k, q, r);
    return total;
}

Rational inversion_cells_needed(int n, int k, int q, WriteStrategy strategy) {
    check_base(n, k, q);
    const int cap = max_usual_data_cost(k);
    if (strategy == WriteStrategy::UsualOnly)
        return (Rational(n - 1LL * k * k + k) + Rational(k, q - 1)) / Rational(cap + 1);
    const Rational inner = Rational(n - 1LL * k * k + k) + Rational(k + cap, q - 1) +
                           Rational(1LL * k * cap, k - 1) - Rational(cap, 1LL * (q - 1) * (k - 1));
    return inner / Rational(cap + 1);
}

bool length_condition_holds(int n, int k, int q, WriteStrategy strategy) {
    check_base(n, k, q);
    const int cap = max_usual_data_cost(k);
    if (strategy == WriteStrategy::UsualOnly) {
        const Rational rhs = Rational(1LL * k * k) + (Rational(k + 1) + Rational(k, q - 1)) / cap + 1;
        return Rational(n) >= rhs;
    }
    const Rational inner = Rational(k) + Rational(k + cap, q - 1) + Rational(1LL * k * cap, k - 1) -
                           Rational(cap, 1LL * (q - 1) * (k - 1));
    const Rational rhs = Rational(1LL * k * k) + inner / cap + Rational(cap + 1, cap);
    return Rational(n) >= rhs;
}

int min_inversion_cells(int n, int k, int q, WriteStrategy strategy) {
    if (!length_condition_holds(n, k, q, strategy))
        throw LengthTooSmallError("code length below the bound's length condition");
    const Rational needed = inversion_cells_needed(n, k, q, strategy);
    const long long closed_form = needed.ceil_val();

    // Re-derive by scanning the defining inequality; the predicate is
    // monotone in r, so the first satisfying value is the minimum.
    int scanned = -1;
    for (int r = 1; r <= n - k * k; ++r) {
        if (budget_sufficient(n, k, q, r, strategy)) {
            scanned = r;
            break;
        }
    }
    if (scanned != closed_form)
        throw std::logic_error("inversion-cell minimum mismatch: closed form " +
                               std::to_string(closed_form) + ", scan " + std::to_string(scanned));
    return scanned;
}

Rational relaxed_min_used(int n, int k, int q, const Rational& r, WriteStrategy strategy) {
    check_base(n, k, q);
    if (strategy == WriteStrategy::UsualOnly)
        return (Rational(n - 1LL * k * k) - r) * (q - 1) + Rational(k - max_usual_data_cost(k));
    return (Rational(n - 1LL * k * k + k) - r) * (q - 1) + Rational(k - 2);
}

Rational worst_case_lower_bound(int n, int k, int q, WriteStrategy strategy) {
    check_base(n, k, q);
    const long long k2 = 1LL * k * k;
    if (strategy == WriteStrategy::UsualOnly) {
        if (k % 2 == 0)
            return Rational(2) * (Rational(n - k2 - 2, k + 2) - Rational(1, k)) * (q - 1) +
                   Rational(2LL * k, k + 2) - 1;
        return Rational(2) * Rational(n - k2 - 3, k + 3) * (q - 1) + Rational(2LL * k, k + 3) - 1;
    }
    if (k % 2 == 0)
        return Rational(2, k + 2) *
                   (Rational(n - k2) +
                    Rational(1LL * k * k * k - 6 * k2 + 2 * k + 4, 2LL * k * (k - 1))) *
                   (q - 1) +
               Rational(k2 - 6LL * k + 4, 1LL * (k - 1) * (k + 2));
    return Rational(2, k + 3) *
               (Rational(n - k2) +
                Rational(1LL * k * k * k - 4 * k2 + k + 6, 2LL * (k + 1) * (k - 1))) *
               (q - 1) +
           Rational(k2 - 7LL * k + 4, 1LL * (k + 3) * (k - 1));
}

Rational worst_case_lower_bound_direct(int n, int k, int q, WriteStrategy strategy) {
    const int cap = max_usual_data_cost(k);
    const Rational at = inversion_cells_needed(n, k, q, strategy) + 1;
    Rational lb = relaxed_min_used(n, k, q, at, WriteStrategy::UsualOnly) / cap;
    if (strategy == WriteStrategy::AllowUnusual)
        lb += Rational(1LL * k * (q - 1) - 1, k - 1);
    return lb;
}

bool improvement_threshold_defined(int k) { return k % 2 == 0 ? k >= 4 : k >= 5; }

Rational improvement_length_threshold(int k, int q, WriteStrategy strategy) {
    if (q < 2) throw InvalidParamsError("q must be at least 2");
    if (!improvement_threshold_defined(k))
        throw InvalidParamsError("length threshold needs k >= 4 (even) or k >= 5 (odd)");
    const long long k2 = 1LL * k * k, k3 = k2 * k, k4 = k3 * k;
    if (strategy == WriteStrategy::UsualOnly) {
        if (k % 2 == 0) return Rational(2 * (k3 + 3 * k + 2), k - 2) - Rational(k, q - 1);
        return Rational(2 * k * (k2 + 3), k - 3) - Rational(k, q - 1);
    }
    if (k % 2 == 0)
        return Rational(2 * k4 - 3 * k3 + 6 * k2 - 2 * k - 4, 1LL * (k - 1) * (k - 2)) -
               Rational(k * (k2 - 6 * k + 4), 1LL * (k - 1) * (k - 2) * (q - 1));
    return Rational(k * (2 * k4 - k3 + 2 * k2 - k - 6), 1LL * (k + 1) * (k - 1) * (k - 3)) -
           Rational(k * (k2 - 7 * k + 4), 1LL * (k - 1) * (k - 3) * (q - 1));
}

Rational improvement_threshold_gap(int k, int q) {
    if (!improvement_threshold_defined(k))
        throw InvalidParamsError("length threshold needs k >= 4 (even) or k >= 5 (odd)");
    const long long k2 = 1LL * k * k, k3 = k2 * k, k4 = k3 * k;
    if (k % 2 == 0)
        return Rational(k3 * (q - 1) - 3 * k2 + 2 * k, 1LL * (k - 1) * (k - 2) * (q - 1));
    return Rational((k4 + 2 * k3 + k2) * (q - 1) - 3 * k3 - 2 * k2 + k,
                    1LL * (k + 1) * (k - 1) * (k - 3) * (q - 1));
}

BoundsReport compute_report(int n, int k, int q) {
    check_base(n, k, q);
    BoundsReport rep;
    rep.n = n;
    rep.k = k;
    rep.q = q;
    rep.usual_cost_cap = max_usual_data_cost(k);
    rep.upper_bound = plain_worst_case_upper_bound(n, k, q);
    rep.max_unused_usual = max_unused_at_erasure(k, q, WriteStrategy::UsualOnly);
    rep.max_unused_unusual = max_unused_at_erasure(k, q, WriteStrategy::AllowUnusual);

    rep.length_ok_usual = length_condition_holds(n, k, q, WriteStrategy::UsualOnly);
    if (rep.length_ok_usual) {
        rep.cells_needed_usual = inversion_cells_needed(n, k, q, WriteStrategy::UsualOnly);
        rep.min_cells_usual = min_inversion_cells(n, k, q, WriteStrategy::UsualOnly);
        rep.min_used_usual =
            min_used_at_erasure(n, k, q, *rep.min_cells_usual, WriteStrategy::UsualOnly);
        rep.guaranteed_writes_usual = guaranteed_usual_writes(n, k, q, *rep.min_cells_usual);
        rep.lower_bound_usual = worst_case_lower_bound(n, k, q, WriteStrategy::UsualOnly);
    }

    rep.length_ok_unusual = length_condition_holds(n, k, q, WriteStrategy::AllowUnusual);
    if (rep.length_ok_unusual) {
        rep.cells_needed_unusual = inversion_cells_needed(n, k, q, WriteStrategy::AllowUnusual);
        rep.min_cells_unusual = min_inversion_cells(n, k, q, WriteStrategy::AllowUnusual);
        rep.min_used_unusual =
            min_used_at_erasure(n, k, q, *rep.min_cells_unusual, WriteStrategy::AllowUnusual);
        rep.guaranteed_writes_unusual =
            guaranteed_writes(n, k, q, *rep.min_cells_unusual, WriteStrategy::AllowUnusual);
        rep.lower_bound_unusual = worst_case_lower_bound(n, k, q, WriteStrategy::AllowUnusual);
    }

    if (improvement_threshold_defined(k)) {
        rep.threshold_usual = improvement_length_threshold(k, q, WriteStrategy::UsualOnly);
        rep.threshold_unusual = improvement_length_threshold(k, q, WriteStrategy::AllowUnusual);
        rep.threshold_gap = improvement_threshold_gap(k, q);
        rep.beats_plain_usual = Rational(n) > *rep.threshold_usual;
        rep.beats_plain_unusual = Rational(n) > *rep.threshold_unusual;
    }
    return rep;
}

namespace {

std::string fmt(const Rational& v) {
    std::string out = v.decimal(3);
    if (!v.is_integer()) out += "  (" + v.str() + ")";
    return out;
}

}  // namespace

std::string report_table(const BoundsReport& rep) {
    std::ostringstream out;
    auto row = [&](const char* label, const std::string& value) {
        out << "  " << label;
        for (std::size_t i = std::char_traits<char>::length(label); i < 34; ++i) out << ' ';
        out << value << '\n';
    };
    out << "bounds for n=" << rep.n << " k=" << rep.k << " q=" << rep.q << '\n';
    row("usual-write cost cap", std::to_string(rep.usual_cost_cap));
    row("plain worst-case upper bound", fmt(rep.upper_bound));
    row("max unused at erasure (usual)", std::to_string(rep.max_unused_usual));
    row("max unused at erasure (unusual)", std::to_string(rep.max_unused_unusual));
    for (WriteStrategy s : {WriteStrategy::UsualOnly, WriteStrategy::AllowUnusual}) {
        const bool usual = s == WriteStrategy::UsualOnly;
        out << (usual ? "usual writes only" : "unusual writes allowed") << '\n';
        const bool ok = usual ? rep.length_ok_usual : rep.length_ok_unusual;
        row("length condition", ok ? "ok" : "fails (bound undefined)");
        if (ok) {
            row("inversion cells needed (exact)",
                fmt(usual ? *rep.cells_needed_usual : *rep.cells_needed_unusual));
            row("min inversion cells",
                std::to_string(usual ? *rep.min_cells_usual : *rep.min_cells_unusual));
            row("min used levels at erasure",
                std::to_string(usual ? *rep.min_used_usual : *rep.min_used_unusual));
            row("guaranteed writes",
                std::to_string(usual ? *rep.guaranteed_writes_usual : *rep.guaranteed_writes_unusual));
            row("worst-case lower bound",
                fmt(usual ? *rep.lower_bound_usual : *rep.lower_bound_unusual));
        }
        const auto& thr = usual ? rep.threshold_usual : rep.threshold_unusual;
        if (thr) {
            row("length threshold", fmt(*thr));
            row("n > threshold",
                (usual ? *rep.beats_plain_usual : *rep.beats_plain_unusual) ? "yes" : "no");
        } else {
            row("length threshold", "undefined for this k");
        }
    }
    return out.str();
}

namespace {

nlohmann::json rational_json(const Rational& v) {
    return {{"exact", v.str()}, {"approx", v.to_double()}};
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Rational>)
        return rational_json(*v);
    else
        return *v;
}

}  // namespace

std::string report_json(const BoundsReport& rep) {
    nlohmann::json j{
        {"schema_version", 1},
        {"n", rep.n},
        {"k", rep.k},
        {"q", rep.q},
        {"usual_cost_cap", rep.usual_cost_cap},
        {"plain_worst_case_upper_bound", rational_json(rep.upper_bound)},
        {"max_unused_usual", rep.max_unused_usual},
        {"max_unused_unusual", rep.max_unused_unusual},
        {"usual",
         {{"length_ok", rep.length_ok_usual},
          {"cells_needed", opt_json(rep.cells_needed_usual)},
          {"min_inversion_cells", opt_json(rep.min_cells_usual)},
          {"min_used_at_erasure", opt_json(rep.min_used_usual)},
          {"guaranteed_writes", opt_json(rep.guaranteed_writes_usual)},
          {"worst_case_lower_bound", opt_json(rep.lower_bound_usual)},
          {"length_threshold", opt_json(rep.threshold_usual)},
          {"beats_plain", opt_json(rep.beats_plain_usual)}}},
        {"unusual",
         {{"length_ok", rep.length_ok_unusual},
          {"cells_needed", opt_json(rep.cells_needed_unusual)},
          {"min_inversion_cells", opt_json(rep.min_cells_unusual)},
          {"min_used_at_erasure", opt_json(rep.min_used_unusual)},
          {"guaranteed_writes", opt_json(rep.guaranteed_writes_unusual)},
          {"worst_case_lower_bound", opt_json(rep.lower_bound_unusual)},
          {"length_threshold", opt_json(rep.threshold_unusual)},
          {"beats_plain", opt_json(rep.beats_plain_unusual)}}},
        {"threshold_gap", opt_json(rep.threshold_gap)},
    };
    return j.dump(2);
}

}  // namespace ilifc::bounds
