#pragma once

/// Scalars of the completed max-plus semiring: -inf (bottom), finite values,
/// +inf (top).  Addition is max, multiplication is +, and both divisions are
/// the residuated (greatest-subsolution) inverses of multiplication.
///
/// Infinity conventions, fixed once here and inherited by everything built on
/// top:
///   a (+) top    = top                      (top absorbs joins)
///   a (*) top    = top   for a != bottom
///   bottom (*) a = bottom                   (bottom absorbs, even against top)
///   ldiv(a, b) is the greatest x with a (*) x <= b:
///       bottom \ b = top
///       top    \ b = bottom  unless b = top, in which case top
///       a      \ top = top
///       a      \ bottom = bottom   for finite a
///       a      \ b = b - a         for finite a, b
///
/// The carrier T is a totally ordered field-like type: Rational for exact
/// work, double for tolerance work.  NaN is rejected at construction so the
/// order axioms hold.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "maxplus/errors.hpp"

namespace maxplus {

/// Shortest lossless text form of a carrier value (used in diagnostics and
/// serialized output).
template <class T>
std::string value_string(const T& v) {
    if constexpr (std::is_floating_point_v<T>) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, ptr);
    } else {
        return v.to_string();
    }
}

template <class T>
class Tropical {
public:
    enum class Kind : std::uint8_t { bottom, finite, top };

    /// Default is bottom, the semiring zero.
    constexpr Tropical() = default;

    explicit Tropical(T v) : kind_(Kind::finite), value_(std::move(v)) {
        if constexpr (std::is_floating_point_v<T>) {
            if (std::isnan(value_)) throw DomainError("NaN tropical value");
            if (std::isinf(value_)) {
                kind_ = value_ > 0 ? Kind::top : Kind::bottom;
                value_ = T{};
            }
        }
    }

    static Tropical bottom() { return Tropical(Kind::bottom); }
    static Tropical top() { return Tropical(Kind::top); }
    /// The multiplicative unit (finite zero).
    static Tropical one() { return Tropical(T{}); }

    Kind kind() const { return kind_; }
    bool is_bottom() const { return kind_ == Kind::bottom; }
    bool is_top() const { return kind_ == Kind::top; }
    bool is_finite() const { return kind_ == Kind::finite; }

    const T& value() const {
        if (!is_finite()) throw DomainError("value() on non-finite tropical");
        return value_;
    }

    friend bool operator==(const Tropical& a, const Tropical& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::finite || a.value_ == b.value_;
    }

    // Total order: bottom < finite (by value) < top.
    friend bool operator<(const Tropical& a, const Tropical& b) {
        if (a.kind_ != b.kind_)
            return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::finite && a.value_ < b.value_;
    }
    friend bool operator<=(const Tropical& a, const Tropical& b) {
        return a < b || a == b;
    }
    friend bool operator>(const Tropical& a, const Tropical& b) { return b < a; }
    friend bool operator>=(const Tropical& a, const Tropical& b) {
        return b <= a;
    }

private:
    explicit constexpr Tropical(Kind k) : kind_(k) {}

    Kind kind_ = Kind::bottom;
    T value_{};
};

/// Semiring addition: the maximum.
template <class T>
Tropical<T> oplus(const Tropical<T>& a, const Tropical<T>& b) {
    return a < b ? b : a;
}

/// Lattice meet: the minimum.
template <class T>
Tropical<T> wedge(const Tropical<T>& a, const Tropical<T>& b) {
    return a < b ? a : b;
}

/// Semiring multiplication: + on finite values, bottom absorbing.
template <class T>
Tropical<T> odot(const Tropical<T>& a, const Tropical<T>& b) {
    if (a.is_bottom() || b.is_bottom()) return Tropical<T>::bottom();
    if (a.is_top() || b.is_top()) return Tropical<T>::top();
    return Tropical<T>(a.value() + b.value());
}

/// Left residuation a \ b: the greatest x with odot(a, x) <= b.
template <class T>
Tropical<T> ldiv(const Tropical<T>& a, const Tropical<T>& b) {
    if (a.is_bottom()) return Tropical<T>::top();
    if (b.is_top()) return Tropical<T>::top();
    if (a.is_top()) return Tropical<T>::bottom();
    if (b.is_bottom()) return Tropical<T>::bottom();
    return Tropical<T>(b.value() - a.value());
}

/// Right residuation b / a: the greatest x with odot(x, a) <= b.  Scalar
/// multiplication commutes, so this mirrors ldiv; it exists to match the
/// asymmetric matrix-level divisions.
template <class T>
Tropical<T> rdiv(const Tropical<T>& b, const Tropical<T>& a) {
    return ldiv(a, b);
}

/// Multiplicative inverse (negation).  Only finite values are invertible.
template <class T>
Tropical<T> inverse(const Tropical<T>& a) {
    if (!a.is_finite()) throw DomainError("tropical inverse of infinite value");
    return Tropical<T>(-a.value());
}

template <class T>
std::string to_string(const Tropical<T>& a) {
    if (a.is_bottom()) return "-inf";
    if (a.is_top()) return "+inf";
    return value_string(a.value());
}

/// Comparison context.  The primary template compares exactly; the double
/// specialization compares with an absolute tolerance, which is how the
/// floating mode keeps order predicates stable under roundoff.
template <class T>
struct Compare {
    bool eq(const T& a, const T& b) const { return a == b; }
    bool le(const T& a, const T& b) const { return a <= b; }

    bool eq(const Tropical<T>& a, const Tropical<T>& b) const {
        if (a.kind() != b.kind()) return false;
        return !a.is_finite() || eq(a.value(), b.value());
    }
    bool le(const Tropical<T>& a, const Tropical<T>& b) const {
        if (a.kind() != b.kind()) return a < b;
        return !a.is_finite() || le(a.value(), b.value());
    }
};

template <>
struct Compare<double> {
    double epsilon = 1e-9;

    bool eq(double a, double b) const { return std::fabs(a - b) <= epsilon; }
    bool le(double a, double b) const { return a <= b + epsilon; }

    bool eq(const Tropical<double>& a, const Tropical<double>& b) const {
        if (a.kind() != b.kind()) return false;
        return !a.is_finite() || eq(a.value(), b.value());
    }
    bool le(const Tropical<double>& a, const Tropical<double>& b) const {
        if (a.kind() != b.kind()) return a < b;
        return !a.is_finite() || le(a.value(), b.value());
    }
};

}  // namespace maxplus
