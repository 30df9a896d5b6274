#include "degen/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace degen {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer addition overflows 64 bits");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer multiplication overflows 64 bits");
    return r;
}

std::optional<std::uint64_t> try_weighted_norm(std::uint64_t x, std::uint64_t y)
{
    std::uint64_t xx = 0, yy = 0, t = 0, r = 0;
    if (__builtin_mul_overflow(x, x, &xx) || __builtin_mul_overflow(xx, std::uint64_t{3}, &t) ||
        __builtin_mul_overflow(y, y, &yy) || __builtin_add_overflow(t, yy, &r))
        return std::nullopt;
    return r;
}

std::uint64_t weighted_norm(std::uint64_t x, std::uint64_t y)
{
    if (auto r = try_weighted_norm(x, y))
        return *r;
    throw OverflowError("3x^2 + y^2 overflows 64 bits");
}

std::uint64_t isqrt(std::uint64_t n)
{
    if (n == 0)
        return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    r = std::min<std::uint64_t>(r, 0xFFFFFFFFull);
    while (r * r > n)
        --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

namespace {

// Quadratic residues mod 64: rejects ~80% of non-squares before the sqrt.
constexpr std::array<bool, 64> square_mod64 = [] {
    std::array<bool, 64> t{};
    for (unsigned i = 0; i < 64; ++i)
        t[(i * i) % 64] = true;
    return t;
}();

} // namespace

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n)
{
    if (!square_mod64[n & 63])
        return std::nullopt;
    std::uint64_t r = isqrt(n);
    if (r * r != n)
        return std::nullopt;
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

Divisors::Divisors(std::uint64_t limit)
{
    std::uint64_t bound = std::max<std::uint64_t>(isqrt(limit), 2);
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p])
            continue;
        primes_.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= bound; q += p)
            composite[q] = true;
    }
}

std::vector<Divisors::PrimePower> Divisors::factor(std::uint64_t n) const
{
    std::vector<PrimePower> out;
    if (n <= 1)
        return out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.push_back({p, e});
    };
    for (std::uint64_t p : primes_) {
        if (p * p > n)
            break;
        strip(p);
    }
    // Past the table: continue with odd candidates (only for n above the limit).
    std::uint64_t p = primes_.empty() ? 2 : primes_.back() + 2;
    if (p % 2 == 0)
        ++p;
    for (; n > 1 && p <= n / p; p += 2)
        strip(p);
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> Divisors::of(std::uint64_t n) const
{
    if (n == 0)
        return {};
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : factor(n)) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace degen
