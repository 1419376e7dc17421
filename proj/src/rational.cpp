#include "ilifc/rational.hpp"

#include <limits>

namespace ilifc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational out of 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::normalized(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(long long num, long long den) { *this = normalized(num, den); }

long long Rational::floor_val() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

long long Rational::ceil_val() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int places) const {
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 mag = num_ >= 0 ? static_cast<__int128>(num_) : -static_cast<__int128>(num_);
    __int128 t = mag * scale;
    __int128 q = t / den_;
    __int128 rem = t % den_;
    if (2 * rem >= den_) ++q;
    __int128 whole = q / scale;
    __int128 frac = q % scale;

    std::string fs(static_cast<std::size_t>(places), '0');
    for (int i = places - 1; i >= 0; --i) {
        fs[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
        frac /= 10;
    }
    std::string out = num_ < 0 && q != 0 ? "-" : "";
    out += std::to_string(static_cast<long long>(whole));
    if (places > 0) out += "." + fs;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::normalized(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::normalized(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::normalized(static_cast<__int128>(a.num_) * b.num_,
                                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational::normalized(static_cast<__int128>(a.num_) * b.den_,
                                static_cast<__int128>(a.den_) * b.num_);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

}  // namespace ilifc
