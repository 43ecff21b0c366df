#ifndef HYPERPERM_DIRECTION_HPP
#define HYPERPERM_DIRECTION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperperm {

/// A componentwise sign vector between two points of a d-permutation.
/// Entries are strictly +1 or -1; there is no zero component because distinct
/// points of a d-permutation differ on every coordinate.
class Direction {
public:
    explicit Direction(std::vector<std::int8_t> signs);

    /// Parses a sign string such as "+--". Throws std::invalid_argument on
    /// anything but '+'/'-' characters or fewer than two of them.
    static Direction from_string(std::string_view text);

    int dimension() const { return static_cast<int>(signs_.size()); }
    /// +1 or -1.
    int sign(int axis) const;
    bool is_negative_on(int axis) const { return sign(axis) < 0; }

    /// True iff the last sign is -1, i.e. membership in the family that
    /// labels tree branches (2^{d-1} members in dimension d).
    bool in_negative_family() const { return signs_.back() < 0; }

    Direction opposite() const;

    /// Canonical rank within the negative family: the first d-1 signs read as
    /// bits ('-' -> 0, '+' -> 1), most significant first.
    /// Pre: in_negative_family().
    int family_index() const;

    /// Inverse of family_index: the index-th member of the family in
    /// dimension d.
    static Direction family_member(int d, int index);

    std::string to_string() const;

    bool operator==(const Direction&) const = default;
    /// Orders by dimension, then by sign vector with '-' before '+' per axis.
    /// For members of the negative family this coincides with family_index order.
    auto operator<=>(const Direction&) const = default;

private:
    std::vector<std::int8_t> signs_;
};

/// All 2^{d-1} directions with last sign -1, ascending by family_index.
/// Throws std::invalid_argument for d < 2.
std::vector<Direction> negative_directions(int d);

}  // namespace hyperperm

#endif
