#include "ilifc/codec.hpp"

#include <algorithm>
#include <string>

namespace ilifc {

IlifcCodec::IlifcCodec(CodeParams params) : params_(params) {
    cells_.assign(static_cast<std::size_t>(params_.data_cell_count()), 0);
    slice_weight_.assign(static_cast<std::size_t>(params_.slice_count), 0);
    bit_to_slice_.assign(static_cast<std::size_t>(params_.k), 0);
    slice_to_bit_.assign(static_cast<std::size_t>(params_.slice_count), 0);
    stored_ = BitVector(params_.k);
    empty_count_ = params_.slice_count;
}

std::span<Level> IlifcCodec::slice_mut(int slice_index) {
    return std::span<Level>(cells_).subspan(static_cast<std::size_t>(slice_index - 1) * params_.k,
                                            static_cast<std::size_t>(params_.k));
}

std::span<const Level> IlifcCodec::slice(int slice_index) const {
    if (slice_index < 1 || slice_index > params_.slice_count)
        throw InvalidParamsError("slice index out of range");
    return std::span<const Level>(cells_).subspan(
        static_cast<std::size_t>(slice_index - 1) * params_.k, static_cast<std::size_t>(params_.k));
}

std::optional<int> IlifcCodec::slice_of_bit(int bit) const {
    if (bit < 1 || bit > params_.k) throw InvalidParamsError("bit index out of range");
    const int j = bit_to_slice_[static_cast<std::size_t>(bit - 1)];
    return j == 0 ? std::nullopt : std::optional<int>(j);
}

std::optional<int> IlifcCodec::bit_of_slice(int slice_index) const {
    if (slice_index < 1 || slice_index > params_.slice_count)
        throw InvalidParamsError("slice index out of range");
    const int b = slice_to_bit_[static_cast<std::size_t>(slice_index - 1)];
    return b == 0 ? std::nullopt : std::optional<int>(b);
}

EraseDiagnostics IlifcCodec::diagnostics() const {
    return EraseDiagnostics{bits_without_slice(), empty_slices(), unused_levels(), false};
}

// One increment of a mapped slice: raise the first free cell scanning
// cyclically from the bit's own position. The slice invariant (fill run
// starting at the bit index) makes the position check redundant here.
void IlifcCodec::increment_mapped(int bit, int slice_index) {
    auto s = slice_mut(slice_index);
    for (int i = 0; i < params_.k; ++i) {
        auto& cell = s[static_cast<std::size_t>((bit - 1 + i) % params_.k)];
        if (cell < params_.q - 1) {
            ++cell;
            break;
        }
    }
    ++slice_weight_[static_cast<std::size_t>(slice_index - 1)];
    ++used_;
    if (slice_weight_[static_cast<std::size_t>(slice_index - 1)] == params_.slice_capacity()) {
        // A filled slice stops representing its bit; even weight keeps the
        // decoded value (0) consistent.
        bit_to_slice_[static_cast<std::size_t>(bit - 1)] = 0;
        slice_to_bit_[static_cast<std::size_t>(slice_index - 1)] = 0;
        --mapped_count_;
    }
}

WriteOutcome IlifcCodec::write(const BitVector& new_data) {
    if (new_data.size() != params_.k) throw InvalidParamsError("data width mismatch");
    if (new_data == stored_) throw SameDataError("new data equals stored data");

    int flips = 0, need_new_slices = 0;
    for (int i = 1; i <= params_.k; ++i) {
        if (new_data.get(i) == stored_.get(i)) continue;
        ++flips;
        if (bit_to_slice_[static_cast<std::size_t>(i - 1)] == 0) ++need_new_slices;
    }
    if (need_new_slices > empty_count_) return WriteOutcome::make_erase_required(diagnostics());

    int next_empty = 1;
    for (int i = 1; i <= params_.k; ++i) {
        if (new_data.get(i) == stored_.get(i)) continue;
        int j = bit_to_slice_[static_cast<std::size_t>(i - 1)];
        if (j == 0) {
            while (slice_weight_[static_cast<std::size_t>(next_empty - 1)] != 0) ++next_empty;
            j = next_empty++;
            bit_to_slice_[static_cast<std::size_t>(i - 1)] = j;
            slice_to_bit_[static_cast<std::size_t>(j - 1)] = i;
            ++mapped_count_;
            --empty_count_;
        }
        increment_mapped(i, j);
        stored_.set(i, new_data.get(i));
    }
    return WriteOutcome::make_applied(flips, 0);
}

void IlifcCodec::reset_cells() {
    std::fill(cells_.begin(), cells_.end(), static_cast<Level>(0));
    std::fill(slice_weight_.begin(), slice_weight_.end(), 0);
    std::fill(bit_to_slice_.begin(), bit_to_slice_.end(), 0);
    std::fill(slice_to_bit_.begin(), slice_to_bit_.end(), 0);
    stored_ = BitVector(params_.k);
    used_ = 0;
    mapped_count_ = 0;
    empty_count_ = params_.slice_count;
}

void IlifcCodec::erase() {
    reset_cells();
    ++erase_count_;
}

void IlifcCodec::load_cells(std::span<const Level> levels) {
    if (static_cast<int>(levels.size()) != params_.data_cell_count())
        throw DeserializeError("expected " + std::to_string(params_.data_cell_count()) +
                               " data-cell levels, got " + std::to_string(levels.size()));
    for (Level l : levels)
        if (l > params_.q - 1) throw DeserializeError("cell level exceeds q-1");
    for (std::size_t i = static_cast<std::size_t>(params_.slice_count) * params_.k; i < levels.size(); ++i)
        if (levels[i] != 0) throw DeserializeError("leftover cells must stay at level 0");

    reset_cells();
    std::copy(levels.begin(), levels.end(), cells_.begin());
    for (int j = 1; j <= params_.slice_count; ++j) {
        auto s = slice(j);
        const int w = slice_weight(s);
        slice_weight_[static_cast<std::size_t>(j - 1)] = w;
        used_ += w;
        if (w == 0) continue;
        --empty_count_;
        if (w == params_.slice_capacity()) continue;
        const int bit = *slice_index(s, params_.q);  // throws on corrupt patterns
        if (bit_to_slice_[static_cast<std::size_t>(bit - 1)] != 0)
            throw DeserializeError("two active slices represent bit " + std::to_string(bit));
        bit_to_slice_[static_cast<std::size_t>(bit - 1)] = j;
        slice_to_bit_[static_cast<std::size_t>(j - 1)] = bit;
        ++mapped_count_;
        stored_.set(bit, w % 2 != 0);
    }
}

}  // namespace ilifc
