#include "ilifc/params.hpp"

namespace ilifc {

int max_usual_data_cost(int k) {
    if (k < 1) throw InvalidParamsError("k must be positive");
    return k % 2 == 0 ? k / 2 : (k + 1) / 2;
}

std::string to_string(WriteStrategy s) {
    return s == WriteStrategy::UsualOnly ? "usual" : "unusual";
}

WriteStrategy strategy_from_string(std::string_view s) {
    if (s == "usual") return WriteStrategy::UsualOnly;
    if (s == "unusual") return WriteStrategy::AllowUnusual;
    throw InvalidParamsError("unknown strategy '" + std::string(s) + "' (expected usual|unusual)");
}

CodeParams::CodeParams(int n_, int k_, int q_, int r_) : n(n_), k(k_), q(q_), r(r_) {
    if (k < 2) throw InvalidParamsError("k must be at least 2");
    if (q < 2) throw InvalidParamsError("q must be at least 2");
    if (r < 0) throw InvalidParamsError("r must be non-negative");
    if (k % 2 != 0 && (q - 1) % 2 != 0)
        throw InvalidParamsError("k or q-1 must be even (a full slice must have even weight)");
    if (n - r < k * k)
        throw InvalidParamsError("n - r must be at least k^2 (one slice per data bit)");
    slice_count = (n - r) / k;
    usual_cost_cap = max_usual_data_cost(k);
}

}  // namespace ilifc
