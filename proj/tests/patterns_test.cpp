#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hyperperm/enumeration.hpp"
#include "hyperperm/orders.hpp"
#include "hyperperm/patterns.hpp"

using namespace hyperperm;

namespace {

std::vector<DPermutation> all_perms(int d, int n) {
    std::vector<DPermutation> out;
    DPermStream stream(d, n);
    while (auto perm = stream.next()) {
        out.push_back(*perm);
    }
    return out;
}

// Cubic reference detector for 231 in a plain value sequence.
bool brute_231(const std::vector<int>& v) {
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            for (std::size_t c = b + 1; c < v.size(); ++c) {
                if (v[c] < v[a] && v[a] < v[b]) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool is_staircase_member(const Direction& d) {
    for (const Direction& f : staircase_family(d.dimension())) {
        if (f == d) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("named patterns") {
    CHECK(pattern_p1().to_string() == "2 1 / 1 2");
    CHECK(pattern_p1().dimension() == 3);
    CHECK(pattern_p1().size() == 2);
    CHECK(pattern_231().to_string() == "2 3 1");
    CHECK(pattern_231().dimension() == 2);
}

TEST_CASE("projection of the worked example") {
    DPermutation perm = DPermutation::parse("1 4 3 2 / 3 1 2 4");
    CHECK(project(perm, {1, 2}) == DPermutation::parse("3 4 2 1"));
    CHECK(project(perm, {0, 1, 2}) == perm);
    CHECK(project(perm, {0, 1}) == DPermutation(std::vector<std::vector<int>>{perm.row(1)}));
    CHECK(project(perm, {0, 2}) == DPermutation(std::vector<std::vector<int>>{perm.row(2)}));

    CHECK_THROWS_AS(project(perm, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(project(perm, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(project(perm, {1}), std::invalid_argument);
}

TEST_CASE("containment of the worked example") {
    DPermutation perm = DPermutation::parse("1 4 3 2 / 3 1 2 4");
    Pattern k1 = DPermutation::parse("1 3 2 / 2 1 3");

    auto witness = contains(perm, k1);
    REQUIRE(witness.has_value());
    // lexicographically first occurrence
    CHECK(witness->projection == std::vector<int>{0, 1, 2});
    CHECK(witness->points == std::vector<int>{1, 2, 4});
    // the occurrence cited alongside the example is also valid
    CHECK(matches_at(perm, k1, {0, 1, 2}, {1, 3, 4}));
    CHECK(!matches_at(perm, k1, {0, 1, 2}, {1, 2, 3}));
    CHECK(!matches_at(perm, k1, {0, 1, 2}, {1, 2}));

    auto witness231 = contains(perm, pattern_231());
    REQUIRE(witness231.has_value());
    CHECK(witness231->projection == std::vector<int>{1, 2});
    CHECK(witness231->points == std::vector<int>{1, 2, 3});
}

TEST_CASE("every permutation contains itself") {
    for (const char* text : {"1 4 3 2 / 3 1 2 4", "3 2 1 4 5 / 5 2 1 3 4", "2 1"}) {
        DPermutation perm = DPermutation::parse(text);
        auto witness = contains(perm, perm);
        REQUIRE(witness.has_value());
        std::vector<int> expect_proj;
        for (int axis = 0; axis < perm.dimension(); ++axis) {
            expect_proj.push_back(axis);
        }
        std::vector<int> expect_points;
        for (int i = 1; i <= perm.size(); ++i) {
            expect_points.push_back(i);
        }
        CHECK(witness->projection == expect_proj);
        CHECK(witness->points == expect_points);
    }
}

TEST_CASE("oversized patterns are absent") {
    DPermutation perm = DPermutation::parse("2 1");
    CHECK(!contains(perm, pattern_231()).has_value());
    CHECK(!contains(perm, pattern_p1()).has_value());
    CHECK(!contains(DPermutation::empty(2), DPermutation::parse("1")).has_value());
}

TEST_CASE("fast P1 detector") {
    CHECK(!has_p1(DPermutation::parse("3 2 1 4 5 / 5 2 1 3 4")));
    CHECK(!has_p1(DPermutation::parse("4 1 5 2 3")));  // dimension 2
    CHECK(has_p1(DPermutation::parse("2 1 / 1 2")));   // minimal occurrence
    CHECK(!has_p1(DPermutation::identity(4, 3)));
}

TEST_CASE("fast 231 detector") {
    CHECK(has_231(DPermutation::parse("1 4 3 2 / 3 1 2 4")));
    CHECK(!has_231(DPermutation::identity(3, 5)));
    CHECK(!has_231(DPermutation::identity(4, 3)));
    CHECK(has_231(DPermutation::parse("2 3 1")));
    CHECK(!has_231(DPermutation::parse("2 1 3")));
}

TEST_CASE("stack detector agrees with the cubic scan on every sequence") {
    for (int n = 0; n <= 7; ++n) {
        for (const DPermutation& perm : all_perms(2, n)) {
            CHECK(has_231(perm) == brute_231(perm.row(1)));
        }
    }
}

TEST_CASE("specialized detectors agree with the generic engine") {
    for (int n = 0; n <= 4; ++n) {
        for (const DPermutation& perm : all_perms(3, n)) {
            CHECK(has_p1(perm) == contains(perm, pattern_p1()).has_value());
            CHECK(has_231(perm) == contains(perm, pattern_231()).has_value());
        }
    }
    for (int n = 0; n <= 3; ++n) {
        for (const DPermutation& perm : all_perms(4, n)) {
            CHECK(has_p1(perm) == contains(perm, pattern_p1()).has_value());
            CHECK(has_231(perm) == contains(perm, pattern_231()).has_value());
        }
    }
}

TEST_CASE("P1-avoidance forces staircase directions, and conversely") {
    for (int n = 2; n <= 5; ++n) {
        for (const DPermutation& perm : all_perms(3, n)) {
            bool all_staircase = true;
            for (int a = 1; a <= n && all_staircase; ++a) {
                for (int b = 1; b <= n && all_staircase; ++b) {
                    if (a == b) {
                        continue;
                    }
                    if (perm.coordinate(2, a) > perm.coordinate(2, b)) {
                        all_staircase = is_staircase_member(direction_between(perm, a, b));
                    }
                }
            }
            CHECK(all_staircase == !has_p1(perm));
        }
    }
}

TEST_CASE("containment is monotone under sub-patterns") {
    DPermutation perm = DPermutation::parse("1 4 3 2 / 3 1 2 4");
    Pattern k1 = DPermutation::parse("1 3 2 / 2 1 3");
    REQUIRE(contains(perm, k1).has_value());
    // every same-dimension pattern inside k1 appears in every permutation
    // containing k1
    for (int n = 1; n <= 2; ++n) {
        for (const DPermutation& sub : all_perms(3, n)) {
            if (contains(k1, sub).has_value()) {
                CHECK(contains(perm, sub).has_value());
            }
        }
    }
    // and k1 does contain the two-point up-down-up pattern
    CHECK(contains(k1, pattern_p1()).has_value());
    CHECK(contains(perm, pattern_p1()).has_value());
}
