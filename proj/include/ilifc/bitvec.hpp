#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ilifc {

// Fixed-width vector of data bits. Positions are 1-based to match slice
// numbering throughout the codec.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int size) : bits_(static_cast<std::size_t>(size), 0) {}

    static BitVector zeros(int size) { return BitVector(size); }
    static BitVector ones(int size);
    static BitVector from_string(std::string_view s);          // e.g. "0110"
    static BitVector from_mask(std::uint64_t mask, int size);  // bit 1 = lsb

    int size() const { return static_cast<int>(bits_.size()); }

    bool get(int pos) const {
        assert(pos >= 1 && pos <= size());
        return bits_[static_cast<std::size_t>(pos - 1)] != 0;
    }
    void set(int pos, bool value) {
        assert(pos >= 1 && pos <= size());
        bits_[static_cast<std::size_t>(pos - 1)] = value ? 1 : 0;
    }
    void flip(int pos) {
        assert(pos >= 1 && pos <= size());
        bits_[static_cast<std::size_t>(pos - 1)] ^= 1;
    }

    int count() const;
    bool any() const { return count() > 0; }
    BitVector complemented() const;
    std::string str() const;

    bool operator==(const BitVector&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

int hamming_distance(const BitVector& a, const BitVector& b);

}  // namespace ilifc
