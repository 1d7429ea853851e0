#pragma once

/// Exact rational arithmetic on 64-bit numerator/denominator pairs.
///
/// Values are always reduced (coprime, denominator positive) so equality is
/// representational equality.  Intermediates run through 128-bit integers;
/// results that do not fit back into 64 bits throw OverflowError instead of
/// wrapping.  Sums and min/max of values over a common grid keep their
/// denominators inside the lcm of the input denominators, which is what makes
/// whole pipelines of cumulative sums and bound formulas exactly
/// representable.

#include <cstdint>
#include <compare>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator-(const Rational& r) {
        // -INT64_MIN does not fit; make128 turns that into OverflowError.
        return make128(-detail::int128(r.num_), detail::int128(r.den_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // Work over the lcm of the denominators to keep intermediates small.
        std::int64_t g = std::gcd(a.den_, b.den_);
        detail::int128 bd = b.den_ / g;
        detail::int128 n = detail::int128(a.num_) * bd +
                           detail::int128(b.num_) * (a.den_ / g);
        detail::int128 d = detail::int128(a.den_) * bd;
        return make128(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return make128(detail::int128(a.num_) * b.num_,
                       detail::int128(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return make128(detail::int128(a.num_) * b.den_,
                       detail::int128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a,
                                            const Rational& b) {
        detail::int128 lhs = detail::int128(a.num_) * b.den_;
        detail::int128 rhs = detail::int128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Parses "123", "-4.75", "2.5e-3" or "7/20" exactly.
    static Rational from_string(std::string_view text);

    /// Decimal rendering when the denominator divides a power of ten
    /// ("0.25", "-3", "1.7"), "n/d" otherwise.  Lossless either way:
    /// from_string(to_string(r)) == r.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static Rational make(std::int64_t n, std::int64_t d) {
        return make128(n, d);
    }

    static Rational make128(detail::int128 n, detail::int128 d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            d = 1;
        } else {
            detail::int128 g = detail::gcd128(n, d);
            n /= g;
            d /= g;
        }
        constexpr detail::int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr detail::int128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < lo || n > hi || d > hi)
            throw OverflowError("rational exceeds 64-bit range");
        Rational out;
        out.num_ = static_cast<std::int64_t>(n);
        out.den_ = static_cast<std::int64_t>(d);
        return out;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw ParseError("empty number");

    // Fraction form.
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto parse_int = [](std::string_view s) -> std::int64_t {
            if (s.empty()) throw ParseError("empty fraction part");
            bool neg = false;
            std::size_t i = 0;
            if (s[0] == '+' || s[0] == '-') {
                neg = s[0] == '-';
                i = 1;
            }
            if (i == s.size()) throw ParseError("fraction part has no digits");
            detail::int128 v = 0;
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9')
                    throw ParseError("bad digit in fraction: '" +
                                     std::string(s) + "'");
                v = v * 10 + (s[i] - '0');
                if (v > std::numeric_limits<std::int64_t>::max())
                    throw OverflowError("fraction part out of range");
            }
            return static_cast<std::int64_t>(neg ? -v : v);
        };
        return Rational(parse_int(text.substr(0, slash)),
                        parse_int(text.substr(slash + 1)));
    }

    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }

    detail::int128 mantissa = 0;
    int digits = 0;
    int frac_digits = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_point) throw ParseError("two decimal points");
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            if (digits >= 37) throw OverflowError("too many digits");
            mantissa = mantissa * 10 + (c - '0');
            if (mantissa != 0) ++digits;
            if (seen_point) ++frac_digits;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw ParseError("bad number: '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw ParseError("bad number: '" + std::string(text) + "'");

    int exponent = 0;
    if (i < text.size()) {  // at 'e'
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) throw ParseError("empty exponent");
        int e = 0;
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw ParseError("bad exponent in '" + std::string(text) + "'");
            e = e * 10 + (text[i] - '0');
            if (e > 400) throw OverflowError("exponent out of range");
        }
        exponent = eneg ? -e : e;
    }

    int shift = exponent - frac_digits;
    detail::int128 num = neg ? -mantissa : mantissa;
    detail::int128 den = 1;
    while (shift > 0) {
        num *= 10;
        --shift;
        if (detail::abs128(num) >
            detail::int128(std::numeric_limits<std::int64_t>::max()) &&
            num != 0)
            throw OverflowError("number out of range: '" + std::string(text) +
                                "'");
    }
    while (shift < 0) {
        den *= 10;
        ++shift;
        if (den > detail::int128(std::numeric_limits<std::int64_t>::max()))
            throw OverflowError("number out of range: '" + std::string(text) +
                                "'");
    }
    return make128(num, den);
}

inline std::string Rational::to_string() const {
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    int k = twos > fives ? twos : fives;
    if (d != 1 || k > 30) {
        // Not exactly a decimal (or absurdly long): keep the fraction form.
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    detail::int128 factor = 1;  // 10^k / den_, an exact integer
    for (int j = 0; j < k; ++j) factor *= 10;
    factor /= den_;
    constexpr detail::int128 cap =
        detail::int128(std::numeric_limits<std::int64_t>::max()) *
        std::numeric_limits<std::int64_t>::max();
    if (factor != 0 && detail::abs128(num_) > cap / factor)
        return std::to_string(num_) + "/" + std::to_string(den_);
    detail::int128 scaled = detail::int128(num_) * factor;

    bool negative = scaled < 0;
    detail::int128 mag = detail::abs128(scaled);
    std::string digits;
    if (mag == 0) digits = "0";
    while (mag > 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + int(mag % 10)));
        mag /= 10;
    }
    while (static_cast<int>(digits.size()) <= k)
        digits.insert(digits.begin(), '0');

    std::string out;
    if (negative) out += '-';
    out.append(digits, 0, digits.size() - k);
    if (k > 0) {
        std::string frac = digits.substr(digits.size() - k);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) {
            out += '.';
            out += frac;
        }
    }
    return out;
}

/// lcm with overflow checking; used to track the common scale of parsed
/// decimal inputs.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    detail::int128 l = detail::int128(a) / g * b;
    if (l > std::numeric_limits<std::int64_t>::max())
        throw OverflowError("scale lcm exceeds 64-bit range");
    return static_cast<std::int64_t>(l);
}

}  // namespace maxplus
