#ifndef HYPERPERM_PATTERNS_HPP
#define HYPERPERM_PATTERNS_HPP

#include <optional>
#include <vector>

#include "hyperperm/dperm.hpp"

namespace hyperperm {

/// Patterns are just small d-permutations.
using Pattern = DPermutation;

/// The dimension-3, size-2 pattern with rows (2 1) and (1 2): two points
/// going up on one coordinate, down on a later one, up on a later one still.
const Pattern& pattern_p1();
/// The classical size-3 pattern 231.
const Pattern& pattern_231();

/// Direct projection onto a strictly ascending coordinate list (length >= 2,
/// entries in 0..d-1): points are ordered by the first chosen coordinate and
/// the remaining chosen coordinates are rank-normalized into rows.
DPermutation project(const DPermutation& perm, const std::vector<int>& indices);

/// An occurrence: the projection axes and the 1-based point positions within
/// the projection ordering (positions along the first projection axis).
struct Witness {
    std::vector<int> projection;
    std::vector<int> points;

    bool operator==(const Witness&) const = default;
};

/// Exhaustive containment per the direct-projection definition: searches all
/// ascending coordinate lists of the pattern's dimension and all point
/// subsets, returning the lexicographically first witness (projection axes,
/// then point positions), or nullopt. Oversized patterns are simply absent.
std::optional<Witness> contains(const DPermutation& perm, const Pattern& pattern);

/// Checks one specific candidate occurrence.
bool matches_at(const DPermutation& perm, const Pattern& pattern,
                const std::vector<int>& projection, const std::vector<int>& points);

/// O(n^2 d) specialization: true iff some point pair realizes pattern_p1(),
/// i.e. its direction read from the higher last-axis point leaves the
/// staircase family. Always false for dimension 2.
bool has_p1(const DPermutation& perm);

/// True iff some direct 2-dimensional projection contains 231; each of the
/// C(d,2) projections is scanned with a linear stack detector.
bool has_231(const DPermutation& perm);

}  // namespace hyperperm

#endif
