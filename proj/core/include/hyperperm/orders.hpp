#ifndef HYPERPERM_ORDERS_HPP
#define HYPERPERM_ORDERS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hyperperm/direction.hpp"

namespace hyperperm {

/// A subset of the negative direction family of dimension d, kept in
/// canonical family_index order.
class DirectionSubset {
public:
    DirectionSubset(int dimension, std::vector<Direction> members);

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Direction>& members() const { return members_; }
    bool contains(const Direction& dir) const;

private:
    int dimension_;
    std::vector<Direction> members_;
};

/// d total orders on a family F of negative directions, one per axis.
/// Construction validates shape only (each order a permutation of the same
/// family); compatibility is a separate predicate.
class OrderSet {
public:
    explicit OrderSet(std::vector<std::vector<Direction>> orders);

    int dimension() const { return dimension_; }
    /// The common ground set, in canonical family_index order.
    const std::vector<Direction>& family() const { return family_; }
    const std::vector<Direction>& order(int axis) const;
    /// Rank of `dir` within the axis order; std::invalid_argument when the
    /// direction is not a family member.
    int position(int axis, const Direction& dir) const;
    bool contains(const Direction& dir) const;

    /// Text format: one line per axis, directions joined by '<',
    /// e.g. "---<+--<++-".
    static OrderSet parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const OrderSet&) const = default;

private:
    int dimension_;
    std::vector<Direction> family_;
    std::vector<std::vector<Direction>> orders_;
};

/// True iff on every axis l no direction with l-th sign '+' precedes one
/// with l-th sign '-' in the axis order.
bool is_compatible(const OrderSet& orders);

/// dir^i = i plus-signs followed by d-i minus-signs, for i = 0..d-1.
std::vector<Direction> staircase_family(int d);

/// The staircase family with all d axis orders equal: dir^i before dir^j
/// iff i < j. Always compatible.
OrderSet staircase_orders(int d);

}  // namespace hyperperm

#endif
