#include "degen/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace degen {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text)
{
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("integer out of range: " + std::string(text));
    if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError("not an integer: '" + std::string(text) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0)
        den = 1;
    if (!fits64(num) || !fits64(den))
        throw OverflowError("rational result exceeds 64-bit numerator/denominator");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::reciprocal() const
{
    if (num_ == 0)
        throw std::domain_error("reciprocal of zero");
    return from_wide(den_, num_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw std::domain_error("division by zero rational");
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

HalfInteger::HalfInteger(std::uint64_t twice_value) : twice_(twice_value)
{
    if (twice_value == 0)
        throw std::invalid_argument("half-integer must be positive");
}

HalfInteger HalfInteger::from_integer(std::uint64_t n) { return HalfInteger(checked_mul(n, 2)); }

HalfInteger HalfInteger::parse(std::string_view text)
{
    Rational r;
    try {
        r = Rational::parse(text);
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    if (r.den() != 1 && r.den() != 2)
        throw ParseError("not a half-integer: '" + std::string(text) + "'");
    if (!r.is_positive())
        throw ParseError("half-integer must be positive: '" + std::string(text) + "'");
    return HalfInteger(static_cast<std::uint64_t>(r.num()) * (r.den() == 1 ? 2 : 1));
}

Rational HalfInteger::value() const
{
    if (twice_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw OverflowError("half-integer too large for a rational");
    return Rational(static_cast<std::int64_t>(twice_), 2);
}

} // namespace degen
