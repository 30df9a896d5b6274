#include <doctest.h>

#include <random>
#include <string>

#include "degen/brahmagupta.hpp"
#include "oracles.hpp"

using namespace degen;

namespace {

BrahmaguptaRep rep(std::uint64_t v1, std::uint64_t v2, const char* v3, const char* v4)
{
    return BrahmaguptaRep::make(v1, v2, HalfInteger::parse(v3), HalfInteger::parse(v4));
}

std::string text(const BrahmaguptaRep& r)
{
    return std::to_string(r.v1) + "," + std::to_string(r.v2) + "," + r.v3.str() + "," + r.v4.str();
}

std::vector<std::string> texts(const std::vector<BrahmaguptaRep>& reps)
{
    std::vector<std::string> out;
    for (const auto& r : reps)
        out.push_back(text(r));
    return out;
}

RationalPair rp(std::int64_t a, std::int64_t b) { return {Rational(a), Rational(b)}; }

// Inverse map with v1 = (second.n1 + first.n2) xi, otherwise identical.
InverseRep inverse_mixed_index(const State& first, const State& second, const Rational& xi)
{
    InverseRep v = inverse_rep(first, second, xi);
    v.v1 = Rational(static_cast<std::int64_t>(second.n1 + first.n2)) * xi;
    return v;
}

} // namespace

TEST_CASE("identity_expand reproduces the E=91 doublet")
{
    const auto x = identity_expand(3, 1, 2, 2, 1);
    CHECK(x.product == Rational(91));
    CHECK(x.minus_terms == rp(-3, 8));
    CHECK(x.plus_terms == rp(5, 4));
    CHECK(x.minus_form == Rational(91));
    CHECK(x.plus_form == Rational(91));
    CHECK(x.holds());
}

TEST_CASE("identity_expand in the m=1 case")
{
    const auto x = identity_expand(1, 1, 1, 1, 1);
    CHECK(x.product == Rational(4));
    CHECK(x.minus_terms == rp(0, 2));
    CHECK(x.plus_terms == rp(2, 0));
    CHECK(x.holds());
}

TEST_CASE("identity holds exactly on fuzzed rationals")
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> num(-60, 60), den(1, 24);
    std::uniform_int_distribution<int> coin(0, 9);
    auto draw = [&] { return coin(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng)); };
    int zeros = 0, negatives = 0;
    for (int i = 0; i < 10000; ++i) {
        const Rational m = draw(), v1 = draw(), v2 = draw(), v3 = draw(), v4 = draw();
        zeros += m.is_zero() || v1.is_zero() || v2.is_zero() || v3.is_zero() || v4.is_zero();
        negatives += m.sign() < 0 || v1.sign() < 0 || v2.sign() < 0 || v3.sign() < 0 || v4.sign() < 0;
        const auto x = identity_expand(m, v1, v2, v3, v4);
        REQUIRE(x.holds());
    }
    CHECK(zeros > 1000);
    CHECK(negatives > 1000);
}

TEST_CASE("BrahmaguptaRep::make checks the product")
{
    CHECK(rep(1, 2, "2", "1").energy == 91);
    CHECK(rep(3, 8, "1/2", "1/2").energy == 91);
    // (3+1)(3/4 + 1/4) = 4, and (3*1+4)(3/4+1/4)=7: both integers
    CHECK(rep(1, 2, "1/2", "1/2").energy == 7);
    // (3*4+1)(3/4+1/4) = 13; (3*1+1)*(3/4 + 9/4) = 12; (3*1+4)(3/4+9/4)=21
    // (3+4)(3/4+1) = 49/4 is not an integer
    CHECK_THROWS_AS(rep(1, 2, "1/2", "1"), std::invalid_argument);
    CHECK_THROWS_AS(BrahmaguptaRep::make(0, 1, HalfInteger(2), HalfInteger(2)), std::invalid_argument);
}

TEST_CASE("doublet_from_rep")
{
    auto d = doublet_from_rep(rep(1, 2, "2", "1"));
    CHECK(d.first == rp(3, 8));
    CHECK(d.second == rp(5, 4));
    CHECK(d.both_states);
    CHECK(d.distinct);
    CHECK(d.is_strict());
    CHECK(d.states() == std::pair<State, State>{{3, 8}, {5, 4}});

    d = doublet_from_rep(rep(1, 1, "1", "1"));
    CHECK(d.first == rp(0, 4));
    CHECK_FALSE(d.both_states);
    CHECK_THROWS_AS(d.states(), std::logic_error);

    d = doublet_from_rep(rep(2, 4, "1", "1/2"));
    CHECK(d.first == rp(3, 8));
    CHECK(d.second == rp(5, 4));
    CHECK(d.is_strict());

    // Factorization-only rep: half-integer members.
    d = doublet_from_rep(rep(3, 8, "1/2", "1/2"));
    CHECK_FALSE(d.both_states);
    CHECK(d.first == RationalPair{Rational(5, 2), Rational(17, 2)});
}

TEST_CASE("classify_rep")
{
    CHECK(classify_rep(rep(1, 2, "2", "1")) == RepKind::AllInteger);
    CHECK(classify_rep(rep(3, 8, "1/2", "1/2")) == RepKind::NeedsHalfInteger);
    CHECK(classify_rep(rep(2, 4, "1", "1/2")) == RepKind::NeedsHalfInteger);
}

TEST_CASE("rep_search at E=91")
{
    const std::vector<std::string> expect{
        "1,1,3/2,4", "1,1,5/2,2",   "1,2,1/2,7/2", "1,2,3/2,5/2", "1,2,2,1",     "1,5,1,1/2",
        "1,7,1/2,1", "2,1,1/2,5/2", "2,1,1,2",     "2,1,3/2,1/2", "2,4,1,1/2",   "3,1,1,1/2",
        "3,5,1/2,1", "3,8,1/2,1/2", "4,2,1/2,1",   "5,4,1/2,1/2"};
    const auto reps = rep_search(91, SearchMode::Factorization);
    CHECK(texts(reps) == expect);
    std::size_t all_integer = 0;
    for (const auto& r : reps)
        all_integer += classify_rep(r) == RepKind::AllInteger;
    CHECK(all_integer == 2);

    CHECK(texts(rep_search(91, SearchMode::Strict)) ==
          std::vector<std::string>{"1,2,2,1", "2,1,1,2", "2,4,1,1/2", "4,2,1/2,1"});
}

TEST_CASE("rep_search at E=1267")
{
    const auto found = texts(rep_search(1267, SearchMode::Factorization));
    for (const char* known : {"1,1,17/2,10", "1,2,11/2,19/2", "1,2,15/2,7/2", "1,5,1,13/2", "2,4,1,13/2",
                               "3,1,1,13/2"})
        CHECK(std::find(found.begin(), found.end(), known) != found.end());
    CHECK(found.size() == 16);
    // All-integer factorizations exist: 1267 = 7 * 181.
    CHECK(std::find(found.begin(), found.end(), "1,2,2,13") != found.end());
    CHECK(std::find(found.begin(), found.end(), "2,13,1,2") != found.end());
    CHECK(has_all_integer_rep(1267));
    CHECK(doublet_from_rep(rep(2, 13, "1", "2")).states() == std::pair<State, State>{{9, 32}, {17, 20}});
}

TEST_CASE("rep_search edge cases")
{
    CHECK(rep_search(3, SearchMode::Factorization).empty());
    CHECK(rep_search(5, SearchMode::Factorization).empty());
    // E=4: 16 = 4 * 4, the only rep is (1,1,1/2,1/2) with doublet (0,1),(1,1)/... not strict
    CHECK(texts(rep_search(4, SearchMode::Factorization)) == std::vector<std::string>{"1,1,1/2,1/2"});
    CHECK(rep_search(4, SearchMode::Strict).empty());
}

TEST_CASE("rep_search matches the quadruple-loop oracle up to 5000")
{
    const auto expect = oracle::naive_reps(5000);
    const Spectrum table = enumerate_spectrum(5000);
    const RepSearcher with_table(5000, &table);
    for (Energy e = 1; e <= 5000; ++e) {
        std::vector<std::array<std::uint64_t, 4>> got;
        for (const auto& r : rep_search(e, SearchMode::Factorization))
            got.push_back({r.v1, r.v2, r.v3.twice(), r.v4.twice()});
        auto it = expect.find(e);
        const auto& want = it == expect.end() ? std::vector<std::array<std::uint64_t, 4>>{} : it->second;
        REQUIRE_MESSAGE(got == want, "E=" << e);
        CHECK(texts(with_table.search(e, SearchMode::Factorization)) ==
              texts(rep_search(e, SearchMode::Factorization)));
    }
}

TEST_CASE("search soundness and strict members lie in the level")
{
    const Spectrum table = enumerate_spectrum(3000);
    const RepSearcher searcher(3000, &table);
    for (Energy e = 4; e <= 3000; ++e) {
        const auto all = searcher.search(e, SearchMode::Factorization);
        std::size_t all_integer = 0;
        for (const auto& r : all) {
            CHECK(BrahmaguptaRep::make(r.v1, r.v2, r.v3, r.v4).energy == e);
            all_integer += classify_rep(r) == RepKind::AllInteger;
        }
        CHECK(searcher.has_all_integer(e) == (all_integer > 0));
        CHECK(has_all_integer_rep(e) == (all_integer > 0));
        CHECK(searcher.find(e, SearchMode::Factorization).has_value() == !all.empty());

        const auto strict = searcher.search(e, SearchMode::Strict);
        CHECK(searcher.find(e, SearchMode::Strict).has_value() == !strict.empty());
        for (const auto& r : strict) {
            const auto [a, b] = doublet_from_rep(r).states();
            CHECK(a != b);
            auto level = table.find(e);
            REQUIRE(level);
            CHECK(level->contains(a));
            CHECK(level->contains(b));
        }
    }
}

TEST_CASE("inverse_rep examples")
{
    auto v = inverse_rep({3, 8}, {5, 4});
    CHECK(v.v1 == Rational(2));
    CHECK(v.v2 == Rational(1));
    CHECK(v.v3 == Rational(1));
    CHECK(v.v4 == Rational(2));
    auto [first, second] = unsigned_doublet(v);
    CHECK(first == rp(3, 8));
    CHECK(second == rp(5, 4));

    v = inverse_rep({1, 5}, {2, 4}, Rational(1, 6));
    CHECK(v.v1 == Rational(3, 2));
    CHECK(v.v2 == Rational(1, 2));
    CHECK(v.v3 == Rational(1));
    CHECK(v.v4 == Rational(1));
    std::tie(first, second) = unsigned_doublet(v);
    CHECK(first == rp(1, 5));
    CHECK(second == rp(2, 4));

    CHECK_THROWS_AS(inverse_rep({1, 5}, {1, 5}), InverseRepError);
    CHECK_THROWS_AS(inverse_rep({1, 5}, {1, 4}), InverseRepError);
    CHECK_THROWS_AS(inverse_rep({1, 5}, {2, 4}, Rational(0)), InverseRepError);
    CHECK_THROWS_AS(inverse_rep({1, 5}, {2, 4}, Rational(-1, 6)), InverseRepError);
}

TEST_CASE("inverse round trip over every degenerate pair up to 2700")
{
    const Spectrum s = enumerate_spectrum(2700);
    const Rational xis[] = {Rational(1, 6), Rational(1), Rational(5, 3)};
    std::size_t pairs = 0;
    for (LevelView level : s.levels())
        for (const State& a : level.states())
            for (const State& b : level.states()) {
                if (a == b)
                    continue;
                ++pairs;
                const InverseRep base = inverse_rep(a, b, xis[0]);
                for (const Rational& xi : xis) {
                    const InverseRep v = inverse_rep(a, b, xi);
                    const auto [first, second] = unsigned_doublet(v);
                    CHECK(first == RationalPair{Rational(a.n1), Rational(a.n2)});
                    CHECK(second == RationalPair{Rational(b.n1), Rational(b.n2)});
                    // (v1, v2) scale with xi, (v3, v4) inversely.
                    const Rational ratio = xi / xis[0];
                    CHECK(v.v1 == base.v1 * ratio);
                    CHECK(v.v2 == base.v2 * ratio);
                    CHECK(v.v3 == base.v3 / ratio);
                    CHECK(v.v4 == base.v4 / ratio);
                }
            }
    CHECK(pairs > 0);
}

TEST_CASE("a v1 mixing first and second indices does not round-trip")
{
    const InverseRep v = inverse_mixed_index({3, 8}, {5, 4}, Rational(1, 6));
    CHECK(v.v1 == Rational(13, 6));
    const auto [first, second] = unsigned_doublet(v);
    CHECK_FALSE((first == rp(3, 8) && second == rp(5, 4)));
}
