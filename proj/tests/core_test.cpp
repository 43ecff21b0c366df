#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hyperperm/dperm.hpp"
#include "hyperperm/enumeration.hpp"

using namespace hyperperm;

namespace {

Direction dir(const char* text) { return Direction::from_string(text); }

}  // namespace

TEST_CASE("negative direction family enumeration") {
    auto f2 = negative_directions(2);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == dir("--"));
    CHECK(f2[1] == dir("+-"));

    auto f3 = negative_directions(3);
    REQUIRE(f3.size() == 4);
    CHECK(f3[0] == dir("---"));
    CHECK(f3[1] == dir("-+-"));
    CHECK(f3[2] == dir("+--"));
    CHECK(f3[3] == dir("++-"));

    CHECK(negative_directions(5).size() == 16);
    CHECK_THROWS_AS(negative_directions(1), std::invalid_argument);
}

TEST_CASE("family index round trip") {
    for (int d = 2; d <= 5; ++d) {
        auto family = negative_directions(d);
        for (int i = 0; i < static_cast<int>(family.size()); ++i) {
            CHECK(family[static_cast<std::size_t>(i)].family_index() == i);
            CHECK(Direction::family_member(d, i) == family[static_cast<std::size_t>(i)]);
        }
    }
    CHECK_THROWS_AS(dir("++").family_index(), std::invalid_argument);
}

TEST_CASE("opposite flips every sign") {
    CHECK(dir("+--").opposite() == dir("-++"));
    CHECK(dir("--").opposite() == dir("++"));
    for (const Direction& f : negative_directions(4)) {
        CHECK(f.opposite().opposite() == f);
        CHECK(!f.opposite().in_negative_family());
    }
}

TEST_CASE("direction string round trip and validation") {
    CHECK(dir("+-+").to_string() == "+-+");
    CHECK_THROWS_AS(dir("+0-"), std::invalid_argument);
    CHECK_THROWS_AS(dir("+"), std::invalid_argument);
}

TEST_CASE("direction between points") {
    DPermutation perm = DPermutation::parse("3 2 1 4 5 / 5 2 1 3 4");
    // point 1 is the one with z = 5, point 2 has z = 2
    CHECK(perm.coordinate(2, 1) == 5);
    CHECK(perm.coordinate(2, 2) == 2);
    CHECK(direction_between(perm, 1, 2) == dir("+--"));

    DPermutation increasing = DPermutation::parse("1 2");
    CHECK(direction_between(increasing, 1, 2) == dir("++"));

    CHECK_THROWS_AS(direction_between(perm, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(direction_between(perm, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(direction_between(perm, 1, 6), std::invalid_argument);
}

TEST_CASE("antisymmetry and the negative-family split, exhaustively") {
    for (int n = 2; n <= 3; ++n) {
        DPermStream stream(3, n);
        while (auto perm = stream.next()) {
            for (int a = 1; a <= n; ++a) {
                for (int b = 1; b <= n; ++b) {
                    if (a == b) {
                        continue;
                    }
                    Direction ab = direction_between(*perm, a, b);
                    Direction ba = direction_between(*perm, b, a);
                    CHECK(ab == ba.opposite());
                    CHECK(ab.in_negative_family() != ba.in_negative_family());
                }
            }
        }
    }
}

TEST_CASE("row validation names the offending row and value") {
    CHECK_THROWS_WITH_AS(DPermutation::parse("1 2 2"), doctest::Contains("row 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(DPermutation::parse("1 2 2"), doctest::Contains("duplicate value 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(DPermutation::parse("1 2 3 / 1 2 7"), doctest::Contains("row 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(DPermutation::parse("1 2 3 / 1 2 7"), doctest::Contains("value 7"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(DPermutation::parse("1 2 3 / 2 1"), doctest::Contains("expected 3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(DPermutation::parse("1 x 2"), doctest::Contains("got 'x'"),
                         std::invalid_argument);
}

TEST_CASE("permutation text format round trip") {
    const char* text = "3 2 1 4 5 / 5 2 1 3 4";
    DPermutation perm = DPermutation::parse(text);
    CHECK(perm.dimension() == 3);
    CHECK(perm.size() == 5);
    CHECK(perm.to_string() == text);
    CHECK(DPermutation::parse(perm.to_string()) == perm);

    CHECK(perm.row(1) == std::vector<int>{3, 2, 1, 4, 5});
    CHECK(perm.row(2) == std::vector<int>{5, 2, 1, 3, 4});
    CHECK_THROWS_AS(perm.row(0), std::invalid_argument);
    CHECK_THROWS_AS(perm.row(3), std::invalid_argument);
}

TEST_CASE("empty permutations are valid") {
    DPermutation empty2 = DPermutation::empty(2);
    CHECK(empty2.size() == 0);
    CHECK(empty2.dimension() == 2);
    CHECK(DPermutation::parse(empty2.to_string()) == empty2);

    DPermutation empty3 = DPermutation::empty(3);
    CHECK(empty3.to_string() == " / ");
    CHECK(DPermutation::parse(" / ") == empty3);
}

TEST_CASE("points carry 1-based coordinates with the position first") {
    DPermutation perm = DPermutation::parse("1 4 3 2 / 3 1 2 4");
    Point p = perm.point(2);
    CHECK(p.index == 2);
    CHECK(p.coords == std::vector<int>{2, 4, 1});
    CHECK(perm.points().size() == 4);
    CHECK(perm.coordinate(0, 3) == 3);
}

TEST_CASE("identity permutation") {
    DPermutation id = DPermutation::identity(4, 3);
    CHECK(id.dimension() == 4);
    for (int l = 1; l <= 3; ++l) {
        CHECK(id.row(l) == std::vector<int>{1, 2, 3});
    }
    CHECK_THROWS_AS(DPermutation::identity(1, 3), std::invalid_argument);
}
