#include "hyperperm/orders.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperperm {

namespace {

std::vector<Direction> canonical_sorted(std::vector<Direction> members, int dimension) {
    for (const Direction& dir : members) {
        if (dir.dimension() != dimension) {
            throw std::invalid_argument("expected directions of dimension " +
                                        std::to_string(dimension) + ", got " + dir.to_string());
        }
        if (!dir.in_negative_family()) {
            throw std::invalid_argument("direction " + dir.to_string() +
                                        " is not negative on the last axis");
        }
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw std::invalid_argument("duplicate direction in family");
    }
    return members;
}

}  // namespace

DirectionSubset::DirectionSubset(int dimension, std::vector<Direction> members)
    : dimension_(dimension), members_(canonical_sorted(std::move(members), dimension)) {
    if (dimension < 2) {
        throw std::invalid_argument("dimension must be >= 2");
    }
}

bool DirectionSubset::contains(const Direction& dir) const {
    return std::binary_search(members_.begin(), members_.end(), dir);
}

OrderSet::OrderSet(std::vector<std::vector<Direction>> orders) : orders_(std::move(orders)) {
    if (orders_.empty() || orders_.front().empty()) {
        throw std::invalid_argument("an order set needs at least one non-empty order");
    }
    dimension_ = static_cast<int>(orders_.size());
    if (dimension_ < 2) {
        throw std::invalid_argument("an order set needs one order per axis (dimension >= 2)");
    }
    family_ = canonical_sorted(orders_.front(), dimension_);
    for (const auto& order : orders_) {
        std::vector<Direction> sorted = canonical_sorted(order, dimension_);
        if (sorted != family_) {
            throw std::invalid_argument("all axis orders must range over the same direction family");
        }
    }
}

const std::vector<Direction>& OrderSet::order(int axis) const {
    if (axis < 0 || axis >= dimension_) {
        throw std::invalid_argument("axis out of range");
    }
    return orders_[static_cast<std::size_t>(axis)];
}

int OrderSet::position(int axis, const Direction& dir) const {
    const auto& ord = order(axis);
    auto it = std::find(ord.begin(), ord.end(), dir);
    if (it == ord.end()) {
        throw std::invalid_argument("direction " + dir.to_string() + " is not in the family");
    }
    return static_cast<int>(it - ord.begin());
}

bool OrderSet::contains(const Direction& dir) const {
    return std::binary_search(family_.begin(), family_.end(), dir);
}

OrderSet OrderSet::parse(std::string_view text) {
    std::vector<std::vector<Direction>> orders;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        std::vector<Direction> order;
        std::size_t start = 0;
        while (true) {
            std::size_t sep = line.find('<', start);
            std::string token = line.substr(start, sep == std::string::npos ? sep : sep - start);
            order.push_back(Direction::from_string(token));
            if (sep == std::string::npos) {
                break;
            }
            start = sep + 1;
        }
        orders.push_back(std::move(order));
    }
    return OrderSet{std::move(orders)};
}

std::string OrderSet::to_string() const {
    std::string out;
    for (int axis = 0; axis < dimension_; ++axis) {
        const auto& ord = orders_[static_cast<std::size_t>(axis)];
        for (std::size_t i = 0; i < ord.size(); ++i) {
            if (i > 0) {
                out += '<';
            }
            out += ord[i].to_string();
        }
        out += '\n';
    }
    return out;
}

bool is_compatible(const OrderSet& orders) {
    for (int axis = 0; axis < orders.dimension(); ++axis) {
        bool seen_plus = false;
        for (const Direction& dir : orders.order(axis)) {
            if (dir.sign(axis) > 0) {
                seen_plus = true;
            } else if (seen_plus) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Direction> staircase_family(int d) {
    if (d < 2) {
        throw std::invalid_argument("staircase family requires dimension >= 2");
    }
    std::vector<Direction> family;
    family.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<std::int8_t> signs(static_cast<std::size_t>(d), -1);
        for (int axis = 0; axis < i; ++axis) {
            signs[static_cast<std::size_t>(axis)] = 1;
        }
        family.emplace_back(std::move(signs));
    }
    return family;
}

OrderSet staircase_orders(int d) {
    std::vector<Direction> shared = staircase_family(d);
    return OrderSet(std::vector<std::vector<Direction>>(static_cast<std::size_t>(d), shared));
}

}  // namespace hyperperm
