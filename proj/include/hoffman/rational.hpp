#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hoffman/errors.hpp"

namespace hoffman {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Covering masses, rounding probabilities and conditional
// expectations are all ratios of small integers; boundary comparisons like
// h_v >= 1 must not depend on floating point, so they are done here.
// Overflow after reduction throws instead of wrapping.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) { *this = make(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return make128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("rational division by zero");
        return make128(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational operator-() const { return make128(-i128(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static Rational make(long long num, long long den) { return make128(num, den); }

    static Rational make128(i128 num, i128 den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw Error("rational overflow");
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_;
    long long den_;
};

// Parses "3", "-1/2" or a plain decimal like "0.25" exactly.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        try {
            return Rational(std::stoll(a), std::stoll(b));
        } catch (const std::logic_error&) {
            throw ParseError("bad rational literal: " + text);
        }
    }
    const auto dot = text.find('.');
    try {
        if (dot == std::string::npos) return Rational(std::stoll(text));
        const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.size() > 18) throw ParseError("too many decimal digits: " + text);
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const bool neg = !whole.empty() && whole[0] == '-';
        const long long w = (whole.empty() || whole == "-" || whole == "+") ? 0 : std::stoll(whole);
        const long long f = frac.empty() ? 0 : std::stoll(frac);
        Rational r = Rational(w < 0 ? -w : w) + Rational(f, den);
        if (neg || w < 0) r = -r;
        return r;
    } catch (const std::logic_error&) {
        throw ParseError("bad rational literal: " + text);
    }
}

} // namespace hoffman
