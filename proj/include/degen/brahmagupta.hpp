#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/rational.hpp"
#include "degen/spectrum.hpp"

namespace degen {

/// Both sides of (m v1^2 + v2^2)(m v3^2 + v4^2) = m(v1v4 -+ v2v3)^2 + (m v1v3 +- v2v4)^2.
struct IdentityExpansion {
    Rational product;
    // (v1v4 - v2v3, m v1v3 + v2v4) and (v1v4 + v2v3, m v1v3 - v2v4)
    std::pair<Rational, Rational> minus_terms;
    std::pair<Rational, Rational> plus_terms;
    Rational minus_form;
    Rational plus_form;

    bool holds() const { return minus_form == product && plus_form == product; }
};

IdentityExpansion identity_expand(const Rational& m, const Rational& v1, const Rational& v2, const Rational& v3,
                                  const Rational& v4);

// Factorization E = (3 v1^2 + v2^2)(3 v3^2 + v4^2) with integer v1, v2 and
// half-integer v3, v4.
struct BrahmaguptaRep {
    std::uint64_t v1;
    std::uint64_t v2;
    HalfInteger v3;
    HalfInteger v4;
    Energy energy;

    /// Checks the product equation; throws std::invalid_argument when it fails.
    static BrahmaguptaRep make(std::uint64_t v1, std::uint64_t v2, HalfInteger v3, HalfInteger v4);

    friend bool operator==(const BrahmaguptaRep&, const BrahmaguptaRep&) = default;
    auto key() const { return std::array<std::uint64_t, 4>{v1, v2, v3.twice(), v4.twice()}; }
};

using RationalPair = std::pair<Rational, Rational>;

struct Doublet {
    RationalPair first;  // (|v1v4 - v2v3|, 3v1v3 + v2v4)
    RationalPair second; // (v1v4 + v2v3, |3v1v3 - v2v4|)
    bool both_states;    // all four entries are positive integers
    bool distinct;

    bool is_strict() const { return both_states && distinct; }
    /// The members as States; only meaningful when both_states.
    std::pair<State, State> states() const;
};

Doublet doublet_from_rep(const BrahmaguptaRep& rep);

enum class SearchMode { Factorization, Strict };
std::string_view to_string(SearchMode m);

enum class RepKind { AllInteger, NeedsHalfInteger };
std::string_view to_string(RepKind k);

RepKind classify_rep(const BrahmaguptaRep& rep);

/// All reps of E ordered by (v1, v2, v3, v4).
std::vector<BrahmaguptaRep> rep_search(Energy e, SearchMode mode);

/// Whether E factors as (3a^2+b^2)(3c^2+d^2) with all four positive integers.
bool has_all_integer_rep(Energy e);

// Repeated searches over one energy range. Shares the prime table and,
// when a spectrum is supplied, answers 3x^2 + y^2 = n lookups from it for
// n <= e_max instead of solving directly. The spectrum must outlive the
// searcher.
class RepSearcher {
public:
    explicit RepSearcher(Energy max_energy, const Spectrum* table = nullptr);

    std::vector<BrahmaguptaRep> search(Energy e, SearchMode mode) const;
    /// Some rep of E in the given mode; stops at the first hit.
    std::optional<BrahmaguptaRep> find(Energy e, SearchMode mode) const;
    bool has_all_integer(Energy e) const;

private:
    std::vector<State> representations(Energy n) const;
    bool representable(Energy n) const;
    template <typename Visit>
    void for_each_rep(Energy e, Visit&& visit) const;

    const Spectrum* table_;
    Divisors divisors_;
};

struct InverseRep {
    Rational v1, v2, v3, v4;
};

class InverseRepError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const Rational default_xi{1, 6};

// Solves for (v1..v4) whose unsigned doublet reproduces (first, second):
//   v1 = (first.n2 + second.n2) xi
//   v2 = 3 (second.n1 - first.n1) xi
//   v3 = 1 / (6 xi)
//   v4 = (second.n1 + first.n1) / (2 (second.n2 + first.n2) xi)
// Throws InverseRepError for equal states, unequal energies, or xi <= 0.
InverseRep inverse_rep(const State& first, const State& second, const Rational& xi = default_xi);

/// (v1v4 - v2v3, 3v1v3 + v2v4) and (v1v4 + v2v3, 3v1v3 - v2v4), no absolute values.
std::pair<RationalPair, RationalPair> unsigned_doublet(const InverseRep& v);

} // namespace degen
