#include <doctest.h>

#include <random>

#include "filterlab/cofinite.hpp"

using namespace filterlab;

namespace {

CofiniteSet random_set(std::mt19937_64& rng)
{
    std::vector<std::uint64_t> support;
    const std::size_t size = rng() % 6;
    for (std::size_t k = 0; k < size; ++k) {
        support.push_back(rng() % 12);
    }
    return rng() % 2 ? CofiniteSet::finite(support) : CofiniteSet::cofinite(support);
}

// Membership of n, read off the definition rather than the algebra.
bool has(const CofiniteSet& s, std::uint64_t n)
{
    return s.contains(n);
}

} // namespace

TEST_CASE("canonical representation")
{
    const auto s = CofiniteSet::finite({3, 1, 3, 2});
    CHECK(std::vector<std::uint64_t>(s.support().begin(), s.support().end()) ==
          std::vector<std::uint64_t>{1, 2, 3});
    CHECK(s == CofiniteSet::finite({1, 2, 3}));
    CHECK(s.to_string() == "finite{1,2,3}");
    CHECK(CofiniteSet::omega().to_string() == "cofinite{}");
}

TEST_CASE("cof_complement")
{
    CHECK(cof_complement(CofiniteSet::finite({1, 2})) == CofiniteSet::cofinite({1, 2}));
    CHECK(cof_complement(CofiniteSet::omega()) == CofiniteSet::empty());
    const auto s = CofiniteSet::cofinite({4});
    CHECK(cof_complement(cof_complement(s)) == s);
}

TEST_CASE("cof_intersect")
{
    CHECK(cof_intersect(CofiniteSet::cofinite({1}), CofiniteSet::cofinite({2})) ==
          CofiniteSet::cofinite({1, 2}));
    CHECK(cof_intersect(CofiniteSet::finite({1, 2, 3}), CofiniteSet::cofinite({2})) ==
          CofiniteSet::finite({1, 3}));
    CHECK(cof_intersect(CofiniteSet::cofinite({2}), CofiniteSet::finite({1, 2, 3})) ==
          CofiniteSet::finite({1, 3}));
    CHECK(cof_intersect(CofiniteSet::finite({1}), CofiniteSet::finite({2})).is_empty());
}

TEST_CASE("frechet_contains")
{
    CHECK(frechet_contains(CofiniteSet::cofinite({3, 5})));
    CHECK_FALSE(frechet_contains(CofiniteSet::finite({1, 2, 3})));
    CHECK(frechet_contains(CofiniteSet::omega()));
    CHECK_FALSE(frechet_contains(CofiniteSet::empty()));
}

TEST_CASE("frechet_axiom_suite")
{
    const std::vector<CofiniteSet> sample{CofiniteSet::cofinite({1}), CofiniteSet::cofinite({2}),
                                          CofiniteSet::finite({7})};
    CHECK(frechet_axiom_suite(sample));
    CHECK(frechet_axiom_suite({}));
    std::mt19937_64 rng(8);
    std::vector<CofiniteSet> many;
    for (int k = 0; k < 100; ++k) {
        many.push_back(random_set(rng));
    }
    CHECK(frechet_axiom_suite(many));
}

TEST_CASE("boolean algebra laws agree with pointwise membership")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = random_set(rng);
        const auto t = random_set(rng);
        const auto r = random_set(rng);
        REQUIRE(cof_intersect(s, t) == cof_intersect(t, s));
        REQUIRE(cof_intersect(cof_intersect(s, t), r) == cof_intersect(s, cof_intersect(t, r)));
        REQUIRE(cof_complement(cof_intersect(s, t)) ==
                cof_union(cof_complement(s), cof_complement(t)));
        for (std::uint64_t n = 0; n < 16; ++n) {
            REQUIRE(has(cof_intersect(s, t), n) == (has(s, n) && has(t, n)));
            REQUIRE(has(cof_complement(s), n) == !has(s, n));
        }
        // ⊆ agrees with pointwise inclusion on a window past every support element
        bool pointwise = true;
        for (std::uint64_t n = 0; n < 16; ++n) {
            pointwise = pointwise && (!has(s, n) || has(t, n));
        }
        REQUIRE(s.is_subset_of(t) == pointwise);
        REQUIRE(frechet_contains(s) != frechet_contains(cof_complement(s)));
    }
}
