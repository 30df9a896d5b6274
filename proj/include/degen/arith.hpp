#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace degen {

/// Energies and state indices. Every product is overflow-checked; nothing wraps.
using Energy = std::uint64_t;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// 3x^2 + y^2, throwing OverflowError when the result does not fit.
std::uint64_t weighted_norm(std::uint64_t x, std::uint64_t y);

/// Same as weighted_norm but returns nullopt instead of throwing.
std::optional<std::uint64_t> try_weighted_norm(std::uint64_t x, std::uint64_t y);

/// floor(sqrt(n)), exact for the whole uint64 range.
std::uint64_t isqrt(std::uint64_t n);

/// Returns r when n == r*r.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Trial-division factoring backed by a prime table sieved up to sqrt(limit).
// Numbers above `limit` still factor correctly, just more slowly.
class Divisors {
public:
    explicit Divisors(std::uint64_t limit);

    /// All positive divisors of n in ascending order.
    std::vector<std::uint64_t> of(std::uint64_t n) const;

    struct PrimePower {
        std::uint64_t prime;
        unsigned exponent;
    };
    std::vector<PrimePower> factor(std::uint64_t n) const;

private:
    std::vector<std::uint32_t> primes_;
};

} // namespace degen
