#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ilifc/bitvec.hpp"
#include "ilifc/params.hpp"
#include "ilifc/slice.hpp"

namespace ilifc {

// Block-state counters captured when a write cannot be stored.
struct EraseDiagnostics {
    int bits_without_slice = 0;
    int empty_slices = 0;
    long long unused_levels = 0;
    bool exhausted = false;
};

struct WriteOutcome {
    enum class Kind { Applied, EraseRequired };

    Kind kind = Kind::Applied;
    int data_cell_changes = 0;
    int inversion_cell_changes = 0;
    bool unusual = false;
    EraseDiagnostics diagnostics{};

    bool applied() const { return kind == Kind::Applied; }

    static WriteOutcome make_applied(int data_changes, int inversion_changes) {
        WriteOutcome o;
        o.kind = Kind::Applied;
        o.data_cell_changes = data_changes;
        o.inversion_cell_changes = inversion_changes;
        return o;
    }
    static WriteOutcome make_erase_required(EraseDiagnostics d) {
        WriteOutcome o;
        o.kind = Kind::EraseRequired;
        o.diagnostics = d;
        return o;
    }
};

// Plain index-less codec over the data-cell portion of a block. Each slice
// of k cells stores one bit as its weight parity; the bit's index is the
// start of the slice's cyclic fill run. A write is all-or-nothing: if the
// full set of flipped bits cannot be stored, nothing is changed.
class IlifcCodec {
public:
    explicit IlifcCodec(CodeParams params);

    const CodeParams& params() const { return params_; }
    const BitVector& decode() const { return stored_; }

    WriteOutcome write(const BitVector& new_data);
    void erase();

    long long used_levels() const { return used_; }
    long long unused_levels() const { return params_.data_capacity() - used_; }
    int empty_slices() const { return empty_count_; }
    int bits_without_slice() const { return params_.k - mapped_count_; }

    std::optional<int> slice_of_bit(int bit) const;    // 1-based
    std::optional<int> bit_of_slice(int slice) const;  // 1-based
    std::span<const Level> slice(int slice_index) const;
    std::span<const Level> cells() const { return cells_; }
    std::uint64_t erase_count() const { return erase_count_; }

    EraseDiagnostics diagnostics() const;

    // Rebuilds the whole state (bit/slice map, caches) from raw cell
    // levels; the map is recovered from the fill-run starts alone.
    void load_cells(std::span<const Level> levels);

private:
    CodeParams params_;
    std::vector<Level> cells_;
    std::vector<int> slice_weight_;
    std::vector<int> bit_to_slice_;  // 1-based slice index, 0 = none
    std::vector<int> slice_to_bit_;  // 1-based bit index, 0 = none
    BitVector stored_;
    long long used_ = 0;
    int empty_count_ = 0;
    int mapped_count_ = 0;
    std::uint64_t erase_count_ = 0;

    std::span<Level> slice_mut(int slice_index);
    void reset_cells();
    void increment_mapped(int bit, int slice_index);
};

}  // namespace ilifc
