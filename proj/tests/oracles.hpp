#pragma once

// Brute-force references used only by the tests. Nothing here shares code
// with the library's search paths: plain nested loops over bounded indices.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// energy -> states (n1 ascending), by a double loop over every (n1, n2).
inline std::map<std::uint64_t, std::vector<Pair>> naive_levels(std::uint64_t e_max)
{
    std::map<std::uint64_t, std::vector<Pair>> out;
    for (std::uint64_t n1 = 1; 3 * n1 * n1 < e_max; ++n1)
        for (std::uint64_t n2 = 1; 3 * n1 * n1 + n2 * n2 <= e_max; ++n2)
            out[3 * n1 * n1 + n2 * n2].push_back({n1, n2});
    return out;
}

// (v1, v2, 2*v3, 2*v4) tuples with (3v1^2+v2^2)(3v3^2+v4^2) = E, grouped by E,
// for every E <= e_max. A quadruple loop, pruned only by the product bound.
inline std::map<std::uint64_t, std::vector<std::array<std::uint64_t, 4>>> naive_reps(std::uint64_t e_max)
{
    std::map<std::uint64_t, std::vector<std::array<std::uint64_t, 4>>> out;
    const std::uint64_t bound = 4 * e_max; // (3v1^2+v2^2)(3a^2+b^2) = 4E
    for (std::uint64_t v1 = 1; 3 * v1 * v1 * 4 <= bound; ++v1)
        for (std::uint64_t v2 = 1; (3 * v1 * v1 + v2 * v2) * 4 <= bound; ++v2) {
            const std::uint64_t d1 = 3 * v1 * v1 + v2 * v2;
            for (std::uint64_t a = 1; d1 * (3 * a * a + 1) <= bound; ++a)
                for (std::uint64_t b = 1; d1 * (3 * a * a + b * b) <= bound; ++b) {
                    const std::uint64_t prod = d1 * (3 * a * a + b * b);
                    if (prod % 4 == 0)
                        out[prod / 4].push_back({v1, v2, a, b});
                }
        }
    for (auto& [e, reps] : out)
        std::sort(reps.begin(), reps.end());
    return out;
}

// Seed search over the m1 range: m1 < sqrt(E/12), m2 from the quadratic.
inline std::vector<Pair> naive_perrin_seeds(std::uint64_t e, const std::vector<Pair>& level)
{
    std::vector<Pair> seeds;
    if (e % 4 != 0)
        return seeds;
    const std::uint64_t l = e / 4;
    for (std::uint64_t m1 = 1; 3 * m1 * m1 < l; ++m1)
        for (std::uint64_t m2 = m1 + 1; m1 * m1 + m1 * m2 + m2 * m2 <= l; ++m2) {
            if (m1 * m1 + m1 * m2 + m2 * m2 != l)
                continue;
            const Pair t[3] = {{m1, m1 + 2 * m2}, {m2, m2 + 2 * m1}, {m1 + m2, m2 - m1}};
            bool all = true;
            for (const Pair& s : t)
                all = all && std::find(level.begin(), level.end(), s) != level.end();
            if (all)
                seeds.push_back({m1, m2});
        }
    return seeds;
}

} // namespace oracle
