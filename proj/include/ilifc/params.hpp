#pragma once

#include <string>
#include <string_view>

#include "ilifc/errors.hpp"

namespace ilifc {

// Largest number of data-cell level changes a cost-minimizing write can
// cause: k/2 for even k, (k+1)/2 for odd k.
int max_usual_data_cost(int k);

enum class WriteStrategy {
    UsualOnly,     // erase as soon as the cost-minimizing write does not fit
    AllowUnusual,  // try the opposite storing mode before requiring erasure
};

std::string to_string(WriteStrategy s);
WriteStrategy strategy_from_string(std::string_view s);

// Parameters of one code instance: k data bits stored in a block of n
// q-level cells, r of which are inversion cells. r = 0 gives the plain
// index-less codec.
struct CodeParams {
    int n = 0;
    int k = 0;
    int q = 0;
    int r = 0;
    int slice_count = 0;     // floor((n - r) / k)
    int usual_cost_cap = 0;  // max_usual_data_cost(k)

    CodeParams(int n, int k, int q, int r = 0);

    int data_cell_count() const { return n - r; }
    int leftover_cells() const { return (n - r) % k; }
    long long slice_capacity() const { return 1LL * k * (q - 1); }
    long long data_capacity() const { return slice_count * slice_capacity(); }
    long long inversion_capacity() const { return 1LL * r * (q - 1); }
};

}  // namespace ilifc
