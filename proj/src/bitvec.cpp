#include "ilifc/bitvec.hpp"

#include "ilifc/errors.hpp"

namespace ilifc {

BitVector BitVector::ones(int size) {
    BitVector v(size);
    for (auto& b : v.bits_) b = 1;
    return v;
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw InvalidParamsError("bit string may contain only 0 and 1");
        v.bits_[i] = s[i] == '1' ? 1 : 0;
    }
    return v;
}

BitVector BitVector::from_mask(std::uint64_t mask, int size) {
    BitVector v(size);
    for (int i = 0; i < size && i < 64; ++i) v.bits_[i] = (mask >> i) & 1;
    return v;
}

int BitVector::count() const {
    int c = 0;
    for (auto b : bits_) c += b;
    return c;
}

BitVector BitVector::complemented() const {
    BitVector v(size());
    for (std::size_t i = 0; i < bits_.size(); ++i) v.bits_[i] = bits_[i] ^ 1;
    return v;
}

std::string BitVector::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

int hamming_distance(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw InvalidParamsError("bit vectors differ in width");
    int d = 0;
    for (int i = 1; i <= a.size(); ++i) d += a.get(i) != b.get(i);
    return d;
}

}  // namespace ilifc
