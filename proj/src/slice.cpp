#include "ilifc/slice.hpp"

#include <string>

namespace ilifc {

namespace {

// True iff, scanning cyclically from start0 (0-based), the levels form a
// run of (q-1) values, then one value in [1, q-1], then zeros. The run may
// be empty; the caller has already excluded empty and full slices.
bool fill_run_starts_at(std::span<const Level> s, int q, int start0) {
    const int k = static_cast<int>(s.size());
    const Level top = static_cast<Level>(q - 1);
    auto at = [&](int i) { return s[static_cast<std::size_t>((start0 + i) % k)]; };

    int run = 0;
    while (run < k && at(run) == top) ++run;
    if (run == k) return false;  // full

    // Case 1: the final run cell is the boundary value and the rest is 0.
    if (run >= 1) {
        bool zeros = true;
        for (int i = run; i < k && zeros; ++i) zeros = at(i) == 0;
        if (zeros) return true;
    }
    // Case 2: one partial cell right after the run, then zeros.
    if (at(run) >= 1) {
        for (int i = run + 1; i < k; ++i)
            if (at(i) != 0) return false;
        return true;
    }
    return false;
}

int unique_start(std::span<const Level> s, int q) {
    const int k = static_cast<int>(s.size());
    int found = 0, where = 0;
    for (int start = 0; start < k; ++start) {
        if (fill_run_starts_at(s, q, start)) {
            ++found;
            where = start;
        }
    }
    return found == 1 ? where + 1 : -found;
}

}  // namespace

int slice_weight(std::span<const Level> levels) {
    int w = 0;
    for (Level l : levels) w += l;
    return w;
}

int slice_parity(std::span<const Level> levels) { return slice_weight(levels) % 2; }

SliceKind classify_slice(std::span<const Level> levels, int q) {
    const int w = slice_weight(levels);
    if (w == 0) return SliceKind::Empty;
    if (w == static_cast<int>(levels.size()) * (q - 1)) return SliceKind::Full;
    return SliceKind::Active;
}

std::optional<int> slice_index(std::span<const Level> levels, int q) {
    if (classify_slice(levels, q) != SliceKind::Active) return std::nullopt;
    const int start = unique_start(levels, q);
    if (start < 1)
        throw InvalidPatternError("active slice has " + std::to_string(-start) +
                                  " fill-run starts instead of one");
    return start;
}

bool slice_valid(std::span<const Level> levels, int q) {
    if (classify_slice(levels, q) != SliceKind::Active) return true;
    return unique_start(levels, q) >= 1;
}

void slice_increment(std::span<Level> levels, int q, int bit_index) {
    const int k = static_cast<int>(levels.size());
    if (bit_index < 1 || bit_index > k) throw InvalidParamsError("bit index out of range");
    const SliceKind kind = classify_slice(levels, q);
    if (kind == SliceKind::Full) throw FullSliceError("cannot increment a full slice");
    if (kind == SliceKind::Active) {
        const int idx = *slice_index(levels, q);
        if (idx != bit_index)
            throw IndexMismatchError("slice represents bit " + std::to_string(idx) +
                                     ", not bit " + std::to_string(bit_index));
    }
    for (int i = 0; i < k; ++i) {
        auto& cell = levels[static_cast<std::size_t>((bit_index - 1 + i) % k)];
        if (cell < q - 1) {
            ++cell;
            return;
        }
    }
}

}  // namespace ilifc
