#include "hyperperm/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperperm {

namespace {

/// Point positions sorted by the given coordinate (1-based indices).
std::vector<int> order_by_axis(const DPermutation& perm, int axis) {
    std::vector<int> order(static_cast<std::size_t>(perm.size()));
    std::iota(order.begin(), order.end(), 1);
    if (axis != 0) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return perm.coordinate(axis, a) < perm.coordinate(axis, b);
        });
    }
    return order;
}

std::vector<int> rank_normalize(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                                    sorted.begin()) +
                   1;
    }
    return ranks;
}

/// Advances an ascending combination in lexicographic order; false when done.
bool next_combination(std::vector<int>& comb, int limit) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < limit - (k - i)) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

bool order_isomorphic(const std::vector<int>& values, const std::vector<int>& chosen,
                      const std::vector<int>& pattern_row) {
    std::size_t k = chosen.size();
    for (std::size_t a = 0; a + 1 < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            bool lhs = values[static_cast<std::size_t>(chosen[a])] <
                       values[static_cast<std::size_t>(chosen[b])];
            bool rhs = pattern_row[a] < pattern_row[b];
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

/// True iff the value sequence contains the pattern 231: an ascent whose
/// smaller element is undercut later. `floor` tracks the largest value known
/// to start an ascent strictly left of the cursor.
bool sequence_contains_231(const std::vector<int>& values) {
    std::vector<int> stack;
    int floor = 0;
    for (int v : values) {
        if (v < floor) {
            return true;
        }
        while (!stack.empty() && stack.back() < v) {
            floor = std::max(floor, stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    return false;
}

bool is_staircase(const Direction& dir) {
    bool seen_minus = false;
    for (int axis = 0; axis < dir.dimension(); ++axis) {
        if (dir.sign(axis) > 0) {
            if (seen_minus) {
                return false;
            }
        } else {
            seen_minus = true;
        }
    }
    return true;
}

}  // namespace

const Pattern& pattern_p1() {
    static const Pattern p1{std::vector<std::vector<int>>{{2, 1}, {1, 2}}};
    return p1;
}

const Pattern& pattern_231() {
    static const Pattern p231{std::vector<std::vector<int>>{{2, 3, 1}}};
    return p231;
}

DPermutation project(const DPermutation& perm, const std::vector<int>& indices) {
    if (indices.size() < 2) {
        throw std::invalid_argument("projection needs at least two coordinates");
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= perm.dimension()) {
            throw std::invalid_argument("projection index " + std::to_string(indices[i]) +
                                        " out of range");
        }
        if (i > 0 && indices[i] <= indices[i - 1]) {
            throw std::invalid_argument("projection indices must be strictly ascending");
        }
    }
    std::vector<int> order = order_by_axis(perm, indices.front());
    std::vector<std::vector<int>> rows;
    rows.reserve(indices.size() - 1);
    for (std::size_t r = 1; r < indices.size(); ++r) {
        std::vector<int> values(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            values[i] = perm.coordinate(indices[r], order[i]);
        }
        rows.push_back(rank_normalize(values));
    }
    return DPermutation(std::move(rows));
}

bool matches_at(const DPermutation& perm, const Pattern& pattern,
                const std::vector<int>& projection, const std::vector<int>& points) {
    if (static_cast<int>(projection.size()) != pattern.dimension() ||
        static_cast<int>(points.size()) != pattern.size()) {
        return false;
    }
    DPermutation projected = project(perm, projection);
    std::vector<int> chosen;
    chosen.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        int pos = points[i];
        if (pos < 1 || pos > projected.size() || (i > 0 && pos <= points[i - 1])) {
            return false;
        }
        chosen.push_back(pos - 1);
    }
    for (int l = 1; l < pattern.dimension(); ++l) {
        if (!order_isomorphic(projected.row(l), chosen, pattern.row(l))) {
            return false;
        }
    }
    return true;
}

std::optional<Witness> contains(const DPermutation& perm, const Pattern& pattern) {
    int d = perm.dimension();
    int dp = pattern.dimension();
    int n = perm.size();
    int k = pattern.size();
    if (dp > d || k > n) {
        return std::nullopt;
    }

    std::vector<int> axes(static_cast<std::size_t>(dp));
    std::iota(axes.begin(), axes.end(), 0);
    do {
        DPermutation projected = project(perm, axes);
        std::vector<int> chosen(static_cast<std::size_t>(k));
        std::iota(chosen.begin(), chosen.end(), 0);
        do {
            bool all_rows = true;
            for (int l = 1; l < dp && all_rows; ++l) {
                all_rows = order_isomorphic(projected.row(l), chosen, pattern.row(l));
            }
            if (all_rows) {
                Witness w;
                w.projection = axes;
                w.points.reserve(chosen.size());
                for (int c : chosen) {
                    w.points.push_back(c + 1);
                }
                return w;
            }
        } while (next_combination(chosen, n));
    } while (next_combination(axes, d));
    return std::nullopt;
}

bool has_p1(const DPermutation& perm) {
    int d = perm.dimension();
    if (d < 3) {
        return false;
    }
    int last = d - 1;
    for (int a = 1; a <= perm.size(); ++a) {
        for (int b = a + 1; b <= perm.size(); ++b) {
            int hi = perm.coordinate(last, a) > perm.coordinate(last, b) ? a : b;
            int lo = hi == a ? b : a;
            if (!is_staircase(direction_between(perm, hi, lo))) {
                return true;
            }
        }
    }
    return false;
}

bool has_231(const DPermutation& perm) {
    int d = perm.dimension();
    for (int i = 0; i < d; ++i) {
        std::vector<int> order = order_by_axis(perm, i);
        std::vector<int> values(order.size());
        for (int j = i + 1; j < d; ++j) {
            for (std::size_t p = 0; p < order.size(); ++p) {
                values[p] = perm.coordinate(j, order[p]);
            }
            if (sequence_contains_231(values)) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace hyperperm
