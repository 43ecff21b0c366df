#ifndef HYPERPERM_DPERM_HPP
#define HYPERPERM_DPERM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hyperperm/direction.hpp"

namespace hyperperm {

/// One point of a d-permutation diagram: 1-based index and the coordinate
/// vector (x_0, ..., x_{d-1}) with x_0 equal to the index itself.
struct Point {
    int index = 0;
    std::vector<int> coords;
};

/// A d-permutation of size n: a tuple of d-1 permutations of {1..n}, viewed
/// as n points in a d-dimensional grid. Row 0 is implicitly the identity
/// (the positions). Immutable after construction; all values are 1-based.
class DPermutation {
public:
    /// rows[l-1] holds pi_l(1)..pi_l(n); the dimension is rows.size() + 1.
    /// Every row must be a permutation of {1..n}; violations throw
    /// std::invalid_argument naming the offending row and value.
    explicit DPermutation(std::vector<std::vector<int>> rows);

    static DPermutation identity(int dimension, int size);
    static DPermutation empty(int dimension) { return identity(dimension, 0); }

    /// Text format: rows separated by "/", values space-separated,
    /// e.g. "3 2 1 4 5 / 5 2 1 3 4". The dimension is the row count + 1.
    static DPermutation parse(std::string_view text);
    std::string to_string() const;

    int dimension() const { return static_cast<int>(rows_.size()) + 1; }
    int size() const { return size_; }

    /// Row l for l in [1, d-1].
    const std::vector<int>& row(int l) const;

    /// Coordinate of the point at 1-based position `index` on `axis`;
    /// axis 0 returns the index itself.
    int coordinate(int axis, int index) const;

    Point point(int index) const;
    std::vector<Point> points() const;

    bool operator==(const DPermutation&) const = default;

private:
    std::vector<std::vector<int>> rows_;
    int size_ = 0;
};

/// Componentwise sign vector of coords(b) - coords(a) for two distinct
/// 1-based point indices. Throws std::invalid_argument when a == b or an
/// index is out of range.
Direction direction_between(const DPermutation& perm, int a, int b);

}  // namespace hyperperm

#endif
