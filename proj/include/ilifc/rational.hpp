#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ilifc {

// Exact rational over 64-bit integers, always kept reduced with a positive
// denominator. Intermediates are widened to 128 bits so that every add,
// multiply and comparison is exact; the quantities handled here stay far
// below the 64-bit range.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    long long floor_val() const;
    long long ceil_val() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const;                 // "9197/72" or "120"
    std::string decimal(int places) const;   // rounded half away from zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

private:
    long long num_ = 0;
    long long den_ = 1;

    static Rational normalized(__int128 num, __int128 den);
};

}  // namespace ilifc
