#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "ilifc/errors.hpp"

namespace ilifc {

using Level = std::uint8_t;

enum class SliceKind { Empty, Active, Full };

int slice_weight(std::span<const Level> levels);
int slice_parity(std::span<const Level> levels);

SliceKind classify_slice(std::span<const Level> levels, int q);

// 1-based start position of the cyclic fill run of an active slice:
// scanning from the start, the levels form a (possibly empty) run of
// (q-1) values, one value in [1, q-1], then zeros. Empty and full slices
// carry no position. Throws InvalidPatternError when the slice is active
// but no unique start exists.
std::optional<int> slice_index(std::span<const Level> levels, int q);

// True iff the slice is empty, full, or active with a unique start.
bool slice_valid(std::span<const Level> levels, int q);

// Raises by one the first cell, scanning cyclically from bit_index, whose
// level is below q-1. An empty slice becomes reserved for bit_index; an
// active slice must already represent bit_index.
void slice_increment(std::span<Level> levels, int q, int bit_index);

}  // namespace ilifc
