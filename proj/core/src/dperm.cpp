#include "hyperperm/dperm.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperperm {

namespace {

void validate_row(const std::vector<int>& row, int row_number, int expected_size) {
    if (static_cast<int>(row.size()) != expected_size) {
        throw std::invalid_argument("row " + std::to_string(row_number) + " has " +
                                    std::to_string(row.size()) + " values, expected " +
                                    std::to_string(expected_size));
    }
    std::vector<char> seen(row.size(), 0);
    for (int value : row) {
        if (value < 1 || value > expected_size) {
            throw std::invalid_argument("row " + std::to_string(row_number) + ": value " +
                                        std::to_string(value) + " out of range 1.." +
                                        std::to_string(expected_size));
        }
        if (seen[static_cast<std::size_t>(value - 1)]) {
            throw std::invalid_argument("row " + std::to_string(row_number) + ": duplicate value " +
                                        std::to_string(value));
        }
        seen[static_cast<std::size_t>(value - 1)] = 1;
    }
}

}  // namespace

DPermutation::DPermutation(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw std::invalid_argument("a d-permutation needs at least one row (dimension >= 2)");
    }
    size_ = static_cast<int>(rows_.front().size());
    for (std::size_t l = 0; l < rows_.size(); ++l) {
        validate_row(rows_[l], static_cast<int>(l) + 1, size_);
    }
}

DPermutation DPermutation::identity(int dimension, int size) {
    if (dimension < 2) {
        throw std::invalid_argument("dimension must be >= 2");
    }
    if (size < 0) {
        throw std::invalid_argument("size must be >= 0");
    }
    std::vector<int> id(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        id[static_cast<std::size_t>(i)] = i + 1;
    }
    return DPermutation(std::vector<std::vector<int>>(static_cast<std::size_t>(dimension - 1), id));
}

DPermutation DPermutation::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (true) {
        std::size_t sep = text.find('/', start);
        std::string_view piece =
            text.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start);
        std::istringstream in{std::string(piece)};
        std::vector<int> row;
        std::string token;
        while (in >> token) {
            try {
                std::size_t used = 0;
                int value = std::stoi(token, &used);
                if (used != token.size()) {
                    throw std::invalid_argument(token);
                }
                row.push_back(value);
            } catch (const std::exception&) {
                throw std::invalid_argument("row " + std::to_string(rows.size() + 1) +
                                            ": expected an integer, got '" + token + "'");
            }
        }
        rows.push_back(std::move(row));
        if (sep == std::string_view::npos) {
            break;
        }
        start = sep + 1;
    }
    return DPermutation(std::move(rows));
}

std::string DPermutation::to_string() const {
    std::string out;
    for (std::size_t l = 0; l < rows_.size(); ++l) {
        if (l > 0) {
            out += " / ";
        }
        for (std::size_t i = 0; i < rows_[l].size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(rows_[l][i]);
        }
    }
    return out;
}

const std::vector<int>& DPermutation::row(int l) const {
    if (l < 1 || l >= dimension()) {
        throw std::invalid_argument("row index out of range");
    }
    return rows_[static_cast<std::size_t>(l - 1)];
}

int DPermutation::coordinate(int axis, int index) const {
    if (index < 1 || index > size_) {
        throw std::invalid_argument("point index out of range");
    }
    if (axis < 0 || axis >= dimension()) {
        throw std::invalid_argument("axis out of range");
    }
    if (axis == 0) {
        return index;
    }
    return rows_[static_cast<std::size_t>(axis - 1)][static_cast<std::size_t>(index - 1)];
}

Point DPermutation::point(int index) const {
    Point p;
    p.index = index;
    p.coords.resize(static_cast<std::size_t>(dimension()));
    for (int axis = 0; axis < dimension(); ++axis) {
        p.coords[static_cast<std::size_t>(axis)] = coordinate(axis, index);
    }
    return p;
}

std::vector<Point> DPermutation::points() const {
    std::vector<Point> all;
    all.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= size_; ++i) {
        all.push_back(point(i));
    }
    return all;
}

Direction direction_between(const DPermutation& perm, int a, int b) {
    if (a == b) {
        throw std::invalid_argument("direction of a point to itself is undefined");
    }
    std::vector<std::int8_t> signs(static_cast<std::size_t>(perm.dimension()));
    for (int axis = 0; axis < perm.dimension(); ++axis) {
        int delta = perm.coordinate(axis, b) - perm.coordinate(axis, a);
        signs[static_cast<std::size_t>(axis)] = delta > 0 ? 1 : -1;
    }
    return Direction(std::move(signs));
}

}  // namespace hyperperm
