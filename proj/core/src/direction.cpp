#include "hyperperm/direction.hpp"

#include <stdexcept>

namespace hyperperm {

namespace {
constexpr int kMaxTreeDimension = 30;  // keeps 2^{d-1} addressable
}

Direction::Direction(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    if (signs_.size() < 2) {
        throw std::invalid_argument("direction needs at least two components");
    }
    for (std::int8_t s : signs_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("direction components must be +1 or -1");
        }
    }
}

Direction Direction::from_string(std::string_view text) {
    std::vector<std::int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw std::invalid_argument("direction string may contain only '+' and '-': got '" +
                                        std::string(text) + "'");
        }
    }
    return Direction(std::move(signs));
}

int Direction::sign(int axis) const {
    if (axis < 0 || axis >= dimension()) {
        throw std::invalid_argument("direction axis out of range");
    }
    return signs_[static_cast<std::size_t>(axis)];
}

Direction Direction::opposite() const {
    std::vector<std::int8_t> flipped(signs_.size());
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        flipped[i] = static_cast<std::int8_t>(-signs_[i]);
    }
    return Direction(std::move(flipped));
}

int Direction::family_index() const {
    if (!in_negative_family()) {
        throw std::invalid_argument("direction " + to_string() + " is not negative on the last axis");
    }
    int index = 0;
    for (int axis = 0; axis + 1 < dimension(); ++axis) {
        index = (index << 1) | (signs_[static_cast<std::size_t>(axis)] > 0 ? 1 : 0);
    }
    return index;
}

Direction Direction::family_member(int d, int index) {
    if (d < 2 || d > kMaxTreeDimension) {
        throw std::invalid_argument("dimension out of range for direction family");
    }
    if (index < 0 || index >= (1 << (d - 1))) {
        throw std::invalid_argument("direction family index out of range");
    }
    std::vector<std::int8_t> signs(static_cast<std::size_t>(d), -1);
    for (int axis = 0; axis + 1 < d; ++axis) {
        int bit = (index >> (d - 2 - axis)) & 1;
        signs[static_cast<std::size_t>(axis)] = bit ? 1 : -1;
    }
    return Direction(std::move(signs));
}

std::string Direction::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (std::int8_t s : signs_) {
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

std::vector<Direction> negative_directions(int d) {
    if (d < 2) {
        throw std::invalid_argument("negative_directions requires dimension >= 2");
    }
    if (d > kMaxTreeDimension) {
        throw std::invalid_argument("dimension too large to enumerate direction family");
    }
    std::vector<Direction> family;
    family.reserve(std::size_t{1} << (d - 1));
    for (int index = 0; index < (1 << (d - 1)); ++index) {
        family.push_back(Direction::family_member(d, index));
    }
    return family;
}

}  // namespace hyperperm
