#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "degen/arith.hpp"

namespace degen {

// Exact rational in lowest terms with a positive denominator.
//
// Storage is 64-bit; intermediates are computed in 128 bits and reduced
// before narrowing, so a result that does not fit throws OverflowError
// instead of silently wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit from integers
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational abs() const;
    Rational reciprocal() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Accepts "p", "-p", "p/q"; the result is reduced.
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Positive multiple of 1/2, stored as twice its value.
class HalfInteger {
public:
    explicit HalfInteger(std::uint64_t twice_value);

    static HalfInteger from_integer(std::uint64_t n);
    /// Accepts "k" or "k/2" with a positive value.
    static HalfInteger parse(std::string_view text);

    std::uint64_t twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    Rational value() const;
    std::string str() const { return value().str(); }

    friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
    friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

private:
    std::uint64_t twice_;
};

} // namespace degen
