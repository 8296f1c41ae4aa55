#include <doctest.h>

#include <random>
#include <set>

#include "filterlab/setcore.hpp"

using namespace filterlab;

namespace {
const Universe xyz({"x", "y", "z"});
}

TEST_CASE("complement")
{
    CHECK(complement(xyz, xyz.subset({"x"})) == xyz.subset({"y", "z"}));
    CHECK(complement(xyz, xyz.none()) == xyz.full());
    CHECK(complement(xyz, xyz.full()) == xyz.none());
    CHECK_THROWS_AS(complement(xyz, Subset(1, 2)), StructuralError);
}

TEST_CASE("complement laws hold for every subset of a 6-set")
{
    const Universe u = Universe::numbered(6);
    for (auto a : powerset_iter(u)) {
        const Subset c = complement(u, a);
        CHECK(complement(u, c) == a);
        CHECK((a & c).is_empty());
        CHECK((a | c) == u.full());
    }
}

TEST_CASE("intersect_all")
{
    CHECK(intersect_all(SubsetFamily({xyz.subset({"x", "y"}), xyz.subset({"y", "z"})}, 3)) ==
          xyz.subset({"y"}));
    CHECK(intersect_all(SubsetFamily({xyz.subset({"x"})}, 3)) == xyz.subset({"x"}));
    CHECK(intersect_all(SubsetFamily({xyz.subset({"x"}), xyz.subset({"y"})}, 3)).is_empty());
    CHECK_THROWS_AS(intersect_all(SubsetFamily(3)), PreconditionError);
}

TEST_CASE("intersect_all matches a pairwise fold in any member order")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Subset> members;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 8); ++k) {
            members.emplace_back(rng() & 0xFF, 8);
        }
        std::shuffle(members.begin(), members.end(), rng);
        Subset acc = members.front();
        for (const auto& m : members) {
            acc = acc & m;
        }
        CHECK(intersect_all(SubsetFamily(members, 8)) == acc);
    }
}

TEST_CASE("powerset_iter yields every subset once in ascending order")
{
    const Universe x({"x"});
    std::vector<Subset> one(powerset_iter(x).begin(), powerset_iter(x).end());
    CHECK(one == std::vector<Subset>{x.none(), x.full()});

    const Universe xy({"x", "y"});
    std::vector<Subset> two;
    for (auto s : powerset_iter(xy)) {
        two.push_back(s);
    }
    CHECK(two == std::vector<Subset>{xy.none(), xy.subset({"x"}), xy.subset({"y"}), xy.full()});

    const Universe five = Universe::numbered(5);
    std::set<std::uint64_t> seen;
    std::size_t length = 0;
    for (auto s : powerset_iter(five)) {
        seen.insert(s.bits());
        ++length;
    }
    CHECK(length == 32);
    CHECK(seen.size() == 32);
}

TEST_CASE("universe validation")
{
    CHECK_THROWS_AS(Universe({"x", "x"}), StructuralError);
    CHECK_THROWS_AS(Universe(std::vector<std::string>{}), StructuralError);
    CHECK_THROWS_AS(Universe::numbered(64), CapacityError);
    CHECK(Universe::numbered(63).size() == 63);
    CHECK_THROWS_AS(xyz.subset({"w"}), StructuralError);
    CHECK(xyz.format(xyz.subset({"z", "x"})) == "{x,z}");
    CHECK_THROWS_AS(powerset_family(Universe::numbered(21)), CapacityError);
}

TEST_CASE("subset invariants")
{
    CHECK_THROWS_AS(Subset(0b100, 2), StructuralError);
    CHECK_THROWS_AS(Subset(0, 64), CapacityError);
    CHECK(Subset::full(63).count() == 63);
    CHECK_THROWS_AS(Subset(1, 2) & Subset(1, 3), StructuralError);
}

TEST_CASE("families are deduplicated and canonically ordered")
{
    const SubsetFamily f({xyz.full(), xyz.subset({"x"}), xyz.full(), xyz.subset({"y"})}, 3);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == xyz.subset({"x"}));
    CHECK(f[1] == xyz.subset({"y"}));
    CHECK(f[2] == xyz.full());
    CHECK(f.contains(xyz.subset({"y"})));
    CHECK_FALSE(f.contains(xyz.subset({"z"})));
    CHECK(f.with(xyz.subset({"z"})).size() == 4);
    CHECK(f.with(xyz.subset({"z"})).includes(f));
    CHECK_THROWS_AS(SubsetFamily({Subset(1, 2)}, 3), StructuralError);
}
