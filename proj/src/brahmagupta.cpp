#include "degen/brahmagupta.hpp"

#include <algorithm>
#include <limits>

namespace degen {

namespace {

Rational as_rational(std::uint64_t v)
{
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw OverflowError("index too large for a rational");
    return Rational(static_cast<std::int64_t>(v));
}

bool is_positive_integer(const Rational& r) { return r.is_integer() && r.is_positive(); }

bool keep(const BrahmaguptaRep& rep, SearchMode mode)
{
    return mode == SearchMode::Factorization || doublet_from_rep(rep).is_strict();
}

} // namespace

IdentityExpansion identity_expand(const Rational& m, const Rational& v1, const Rational& v2, const Rational& v3,
                                  const Rational& v4)
{
    IdentityExpansion out;
    out.product = (m * v1 * v1 + v2 * v2) * (m * v3 * v3 + v4 * v4);
    const Rational cross14 = v1 * v4, cross23 = v2 * v3;
    const Rational weighted13 = m * v1 * v3, cross24 = v2 * v4;
    out.minus_terms = {cross14 - cross23, weighted13 + cross24};
    out.plus_terms = {cross14 + cross23, weighted13 - cross24};
    out.minus_form = m * out.minus_terms.first * out.minus_terms.first + out.minus_terms.second * out.minus_terms.second;
    out.plus_form = m * out.plus_terms.first * out.plus_terms.first + out.plus_terms.second * out.plus_terms.second;
    return out;
}

BrahmaguptaRep BrahmaguptaRep::make(std::uint64_t v1, std::uint64_t v2, HalfInteger v3, HalfInteger v4)
{
    if (v1 == 0 || v2 == 0)
        throw std::invalid_argument("v1 and v2 must be positive integers");
    // (3 v1^2 + v2^2)(3 a^2 + b^2) = 4E with a = 2 v3, b = 2 v4.
    const std::uint64_t quad = checked_mul(weighted_norm(v1, v2), weighted_norm(v3.twice(), v4.twice()));
    if (quad % 4 != 0)
        throw std::invalid_argument("(3v1^2+v2^2)(3v3^2+v4^2) is not an integer");
    return {v1, v2, v3, v4, quad / 4};
}

std::pair<State, State> Doublet::states() const
{
    if (!both_states)
        throw std::logic_error("doublet members are not states");
    auto to_state = [](const RationalPair& p) {
        return State{static_cast<std::uint64_t>(p.first.num()), static_cast<std::uint64_t>(p.second.num())};
    };
    return {to_state(first), to_state(second)};
}

Doublet doublet_from_rep(const BrahmaguptaRep& rep)
{
    const Rational v1 = as_rational(rep.v1), v2 = as_rational(rep.v2);
    const Rational v3 = rep.v3.value(), v4 = rep.v4.value();
    const Rational three(3);

    Doublet d;
    d.first = {(v1 * v4 - v2 * v3).abs(), three * v1 * v3 + v2 * v4};
    d.second = {v1 * v4 + v2 * v3, (three * v1 * v3 - v2 * v4).abs()};
    d.both_states = is_positive_integer(d.first.first) && is_positive_integer(d.first.second) &&
                    is_positive_integer(d.second.first) && is_positive_integer(d.second.second);
    d.distinct = d.first != d.second;
    return d;
}

std::string_view to_string(SearchMode m) { return m == SearchMode::Factorization ? "factorization" : "strict"; }

std::string_view to_string(RepKind k) { return k == RepKind::AllInteger ? "all-integer" : "half-integer"; }

RepKind classify_rep(const BrahmaguptaRep& rep)
{
    return rep.v3.is_integer() && rep.v4.is_integer() ? RepKind::AllInteger : RepKind::NeedsHalfInteger;
}

RepSearcher::RepSearcher(Energy max_energy, const Spectrum* table)
    : table_(table), divisors_(checked_mul(4, std::max<Energy>(max_energy, 4)))
{
}

std::vector<State> RepSearcher::representations(Energy n) const
{
    if (table_ != nullptr && n <= table_->e_max()) {
        auto level = table_->find(n);
        if (!level)
            return {};
        return {level->states().begin(), level->states().end()};
    }
    auto level = level_of(n);
    return level ? std::move(level->states) : std::vector<State>{};
}

bool RepSearcher::representable(Energy n) const
{
    if (table_ != nullptr && n <= table_->e_max())
        return table_->find(n).has_value();
    return level_of(n).has_value();
}

// Walks every factorization 4E = d1 * d2 with d1 = 3v1^2 + v2^2 and
// d2 = 3a^2 + b^2, (v3, v4) = (a/2, b/2). `visit` returns true to stop.
template <typename Visit>
void RepSearcher::for_each_rep(Energy e, Visit&& visit) const
{
    const std::uint64_t quad = checked_mul(4, e);
    for (std::uint64_t d1 : divisors_.of(quad)) {
        const std::uint64_t d2 = quad / d1;
        if (d1 < 4 || d2 < 4)
            continue;
        const auto outer = representations(d1);
        if (outer.empty())
            continue;
        const auto inner = representations(d2);
        for (const State& p : outer)
            for (const State& q : inner)
                if (visit(BrahmaguptaRep{p.n1, p.n2, HalfInteger(q.n1), HalfInteger(q.n2), e}))
                    return;
    }
}

std::vector<BrahmaguptaRep> RepSearcher::search(Energy e, SearchMode mode) const
{
    std::vector<BrahmaguptaRep> out;
    if (e < 4)
        return out;
    for_each_rep(e, [&](const BrahmaguptaRep& rep) {
        if (keep(rep, mode))
            out.push_back(rep);
        return false;
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
    return out;
}

std::optional<BrahmaguptaRep> RepSearcher::find(Energy e, SearchMode mode) const
{
    std::optional<BrahmaguptaRep> found;
    if (e < 4)
        return found;
    for_each_rep(e, [&](const BrahmaguptaRep& rep) {
        if (!keep(rep, mode))
            return false;
        found = rep;
        return true;
    });
    return found;
}

bool RepSearcher::has_all_integer(Energy e) const
{
    if (e < 16)
        return false;
    for (std::uint64_t d : divisors_.of(e)) {
        const std::uint64_t rest = e / d;
        if (d > rest)
            break;
        if (d >= 4 && representable(d) && representable(rest))
            return true;
    }
    return false;
}

std::vector<BrahmaguptaRep> rep_search(Energy e, SearchMode mode) { return RepSearcher(e).search(e, mode); }

bool has_all_integer_rep(Energy e) { return RepSearcher(e).has_all_integer(e); }

InverseRep inverse_rep(const State& first, const State& second, const Rational& xi)
{
    if (first == second)
        throw InverseRepError("inverse map needs two distinct states");
    if (energy_of(first) != energy_of(second))
        throw InverseRepError("states have different energies");
    if (!xi.is_positive())
        throw InverseRepError("xi must be positive");

    const Rational a1 = as_rational(first.n1), a2 = as_rational(first.n2);
    const Rational b1 = as_rational(second.n1), b2 = as_rational(second.n2);
    InverseRep v;
    v.v1 = (a2 + b2) * xi;
    v.v2 = Rational(3) * (b1 - a1) * xi;
    v.v3 = (Rational(6) * xi).reciprocal();
    v.v4 = (b1 + a1) / (Rational(2) * (b2 + a2) * xi);
    return v;
}

std::pair<RationalPair, RationalPair> unsigned_doublet(const InverseRep& v)
{
    const Rational three(3);
    return {{v.v1 * v.v4 - v.v2 * v.v3, three * v.v1 * v.v3 + v.v2 * v.v4},
            {v.v1 * v.v4 + v.v2 * v.v3, three * v.v1 * v.v3 - v.v2 * v.v4}};
}

} // namespace degen
