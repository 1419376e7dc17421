#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ilifc/codec.hpp"

namespace ilifc {

// Result of comparing the two storing modes for one write.
struct ModeDecision {
    bool invert = false;
    int predicted_data_cost = 0;       // d when keeping, k - d when inverting
    int predicted_inversion_cost = 0;  // 1 when inverting
};

// Picks the cheaper storing mode: keeping costs d data-cell changes,
// inverting costs (k - d) plus one inversion-cell change, so the mode is
// changed exactly when 2d > k + 1. Exhausted inversion cells force keeping.
ModeDecision choose_mode(const BitVector& current, const BitVector& next, bool exhausted);

// Raises the lowest-index inversion cell below q-1, flipping the mode.
void increment_inversion(std::span<Level> inversion_cells, int q);

// Codec with r inversion cells in front of the sliced data cells. The
// parity of the inversion-cell weight selects whether the slices store the
// data or its complement; each write picks the cheaper of the two.
class IilifcCodec {
public:
    explicit IilifcCodec(CodeParams params);

    const CodeParams& params() const { return data_.params(); }
    const BitVector& data() const { return current_; }
    BitVector decode() const;  // recomputed from raw cells
    int storing_mode() const { return static_cast<int>(inv_weight_ % 2); }
    bool exhausted() const { return inv_weight_ == params().inversion_capacity(); }
    long long inversion_weight() const { return inv_weight_; }
    std::span<const Level> inversion_cells() const { return inversion_; }
    const IlifcCodec& data_codec() const { return data_; }

    WriteOutcome write(const BitVector& next, WriteStrategy strategy);
    void erase();
    std::uint64_t erase_count() const { return data_.erase_count(); }

    EraseDiagnostics diagnostics() const;

    std::vector<Level> all_cells() const;  // inversion cells then data cells
    void load_cells(std::span<const Level> levels);

private:
    std::vector<Level> inversion_;
    IlifcCodec data_;
    BitVector current_;
    long long inv_weight_ = 0;

    WriteOutcome attempt(const BitVector& next, bool invert);
    void bump_mode();
};

}  // namespace ilifc
