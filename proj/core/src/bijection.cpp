#include "hyperperm/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperperm {

namespace {

void check_axis(const DPermutation& perm, int axis) {
    if (axis < 0 || axis >= perm.dimension()) {
        throw std::invalid_argument("axis out of range");
    }
}

/// Child slot of point `p` relative to `root`: signs on the axes other than
/// `axis`, ascending, '+' as bit 1, most significant first. `flip` negates
/// the signs (the min-tree canonicalization).
int slot_of(const DPermutation& perm, int root, int p, int axis, bool flip) {
    int slot = 0;
    for (int ax = 0; ax < perm.dimension(); ++ax) {
        if (ax == axis) {
            continue;
        }
        bool plus = perm.coordinate(ax, p) > perm.coordinate(ax, root);
        slot = (slot << 1) | ((plus != flip) ? 1 : 0);
    }
    return slot;
}

HyperTree build_tree(const DPermutation& perm, std::vector<int>& indices, int axis, bool minimal) {
    int d = perm.dimension();
    if (indices.empty()) {
        return HyperTree::leaf(d);
    }
    auto extreme = [&](int a, int b) {
        int ca = perm.coordinate(axis, a);
        int cb = perm.coordinate(axis, b);
        return minimal ? ca < cb : ca > cb;
    };
    int root = indices.front();
    for (int idx : indices) {
        if (extreme(idx, root)) {
            root = idx;
        }
    }
    int fanout = 1 << (d - 1);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(fanout));
    for (int idx : indices) {
        if (idx == root) {
            continue;
        }
        classes[static_cast<std::size_t>(slot_of(perm, root, idx, axis, minimal))].push_back(idx);
    }
    std::vector<HyperTree> children;
    children.reserve(static_cast<std::size_t>(fanout));
    for (auto& cls : classes) {
        children.push_back(build_tree(perm, cls, axis, minimal));
    }
    return HyperTree::internal(d, perm.coordinate(axis, root), std::move(children));
}

HyperTree decompose(const DPermutation& perm, int axis, bool minimal) {
    check_axis(perm, axis);
    std::vector<int> indices(static_cast<std::size_t>(perm.size()));
    for (int i = 0; i < perm.size(); ++i) {
        indices[static_cast<std::size_t>(i)] = i + 1;
    }
    return build_tree(perm, indices, axis, minimal);
}

/// Admissibility check mirroring the max-tree recursion on index sets, so no
/// tree is materialized. Coordinates stay un-renormalized: the block
/// comparisons are order statements, invariant under rank relabeling.
bool admissible_rec(const DPermutation& perm, const std::vector<int>& indices,
                    const OrderSet& orders) {
    if (indices.empty()) {
        return true;
    }
    int d = perm.dimension();
    int axis = d - 1;
    int root = indices.front();
    for (int idx : indices) {
        if (perm.coordinate(axis, idx) > perm.coordinate(axis, root)) {
            root = idx;
        }
    }
    int fanout = 1 << (d - 1);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(fanout));
    for (int idx : indices) {
        if (idx == root) {
            continue;
        }
        classes[static_cast<std::size_t>(slot_of(perm, root, idx, axis, false))].push_back(idx);
    }
    for (int slot = 0; slot < fanout; ++slot) {
        if (!classes[static_cast<std::size_t>(slot)].empty() &&
            !orders.contains(Direction::family_member(d, slot))) {
            return false;
        }
    }
    for (int ax = 0; ax < d; ++ax) {
        int prev_max = 0;
        for (const Direction& dir : orders.order(ax)) {
            const auto& block = classes[static_cast<std::size_t>(dir.family_index())];
            if (block.empty()) {
                continue;
            }
            int block_min = perm.coordinate(ax, block.front());
            int block_max = block_min;
            for (int idx : block) {
                int c = perm.coordinate(ax, idx);
                block_min = std::min(block_min, c);
                block_max = std::max(block_max, c);
            }
            if (block_min <= prev_max) {
                return false;
            }
            prev_max = block_max;
        }
    }
    for (const auto& cls : classes) {
        if (!admissible_rec(perm, cls, orders)) {
            return false;
        }
    }
    return true;
}

/// Assembled coordinates of one subtree's points, relative values 1..m per
/// axis.
struct SubPoints {
    int size = 0;
    std::vector<std::vector<int>> coords;  // coords[axis][point]
};

SubPoints assemble(const HyperTree::Node* node, int d, const OrderSet& orders) {
    SubPoints out;
    out.coords.assign(static_cast<std::size_t>(d), {});
    if (node == nullptr) {
        return out;
    }
    int fanout = 1 << (d - 1);
    std::vector<SubPoints> subs(static_cast<std::size_t>(fanout));
    for (int slot = 0; slot < fanout; ++slot) {
        const HyperTree::Node* child = node->children[static_cast<std::size_t>(slot)].get();
        if (child != nullptr && !orders.contains(Direction::family_member(d, slot))) {
            throw std::invalid_argument("tree has an internal node in direction " +
                                        Direction::family_member(d, slot).to_string() +
                                        ", outside the order family");
        }
        subs[static_cast<std::size_t>(slot)] = assemble(child, d, orders);
    }
    out.size = 1;
    for (const auto& sub : subs) {
        out.size += sub.size;
    }
    // Point layout shared by all axes: index 0 is the root, then the child
    // blocks in canonical slot order. Per axis, blocks occupy consecutive
    // value ranges in the axis order, with the root squeezed between the
    // minus blocks and the plus blocks (compatibility puts all minus blocks
    // first, so the root ends up maximal on the last axis).
    for (int ax = 0; ax < d; ++ax) {
        std::vector<int> base(static_cast<std::size_t>(fanout), 0);
        int cursor = 0;
        int root_value = 0;
        for (const Direction& dir : orders.order(ax)) {
            if (root_value == 0 && dir.sign(ax) > 0) {
                root_value = ++cursor;
            }
            base[static_cast<std::size_t>(dir.family_index())] = cursor;
            cursor += subs[static_cast<std::size_t>(dir.family_index())].size;
        }
        if (root_value == 0) {
            root_value = ++cursor;
        }
        auto& axis_coords = out.coords[static_cast<std::size_t>(ax)];
        axis_coords.reserve(static_cast<std::size_t>(out.size));
        axis_coords.push_back(root_value);
        for (int slot = 0; slot < fanout; ++slot) {
            const SubPoints& sub = subs[static_cast<std::size_t>(slot)];
            for (int value : sub.coords[static_cast<std::size_t>(ax)]) {
                axis_coords.push_back(base[static_cast<std::size_t>(slot)] + value);
            }
        }
    }
    return out;
}

}  // namespace

HyperTree max_tree(const DPermutation& perm, int axis) { return decompose(perm, axis, false); }

HyperTree max_tree(const DPermutation& perm) { return max_tree(perm, perm.dimension() - 1); }

HyperTree min_tree(const DPermutation& perm, int axis) { return decompose(perm, axis, true); }

HyperTree min_tree(const DPermutation& perm) { return min_tree(perm, perm.dimension() - 1); }

bool is_admissible(const DPermutation& perm, const OrderSet& orders) {
    if (!is_compatible(orders)) {
        throw std::invalid_argument("order set is not compatible");
    }
    if (orders.dimension() != perm.dimension()) {
        throw std::invalid_argument("order set dimension does not match the permutation");
    }
    std::vector<int> indices(static_cast<std::size_t>(perm.size()));
    for (int i = 0; i < perm.size(); ++i) {
        indices[static_cast<std::size_t>(i)] = i + 1;
    }
    return admissible_rec(perm, indices, orders);
}

DPermutation tree_to_perm(const HyperTree& tree, const OrderSet& orders) {
    if (!is_compatible(orders)) {
        throw std::invalid_argument("order set is not compatible");
    }
    int d = tree.dimension();
    if (orders.dimension() != d) {
        throw std::invalid_argument("order set dimension does not match the tree");
    }
    SubPoints points = assemble(tree.root(), d, orders);

    // Blocks are consecutive on every axis, so the per-axis values already
    // range over 1..n; sort by axis 0 to read the rows off.
    std::vector<int> by_position(static_cast<std::size_t>(points.size));
    for (int p = 0; p < points.size; ++p) {
        int pos = points.coords[0][static_cast<std::size_t>(p)];
        by_position[static_cast<std::size_t>(pos - 1)] = p;
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d - 1));
    for (int l = 1; l < d; ++l) {
        auto& row = rows[static_cast<std::size_t>(l - 1)];
        row.resize(static_cast<std::size_t>(points.size));
        for (int pos = 0; pos < points.size; ++pos) {
            row[static_cast<std::size_t>(pos)] =
                points.coords[static_cast<std::size_t>(l)]
                             [static_cast<std::size_t>(by_position[static_cast<std::size_t>(pos)])];
        }
    }
    return DPermutation(std::move(rows));
}

KaryTree restrict_to_kary(const HyperTree& tree, const DirectionSubset& family,
                          const std::vector<Direction>& child_order) {
    int d = tree.dimension();
    if (family.dimension() != d) {
        throw std::invalid_argument("family dimension does not match the tree");
    }
    DirectionSubset order_set(d, child_order);
    if (order_set.members() != family.members()) {
        throw std::invalid_argument("child order must be a permutation of the family");
    }
    int k = family.size();

    auto convert = [&](auto&& self, const HyperTree::Node* node) -> KaryTree {
        if (node == nullptr) {
            return KaryTree::leaf(k);
        }
        for (std::size_t slot = 0; slot < node->children.size(); ++slot) {
            Direction dir = Direction::family_member(d, static_cast<int>(slot));
            if (node->children[slot] != nullptr && !family.contains(dir)) {
                throw std::invalid_argument(
                    "internal node" +
                    (node->children[slot]->label != 0
                         ? " " + std::to_string(node->children[slot]->label)
                         : std::string()) +
                    " found under direction " + dir.to_string() + ", outside the family");
            }
        }
        std::vector<KaryTree> children;
        children.reserve(static_cast<std::size_t>(k));
        for (const Direction& dir : child_order) {
            children.push_back(
                self(self, node->children[static_cast<std::size_t>(dir.family_index())].get()));
        }
        return KaryTree::internal(k, std::move(children));
    };
    return convert(convert, tree.root());
}

HyperTree pad_from_kary(const KaryTree& tree, const DirectionSubset& family, int d,
                        const std::vector<Direction>& child_order) {
    if (family.dimension() != d) {
        throw std::invalid_argument("family dimension mismatch");
    }
    if (tree.arity() != family.size()) {
        throw std::invalid_argument("tree arity " + std::to_string(tree.arity()) +
                                    " does not match the family size " +
                                    std::to_string(family.size()));
    }
    DirectionSubset order_set(d, child_order);
    if (order_set.members() != family.members()) {
        throw std::invalid_argument("child order must be a permutation of the family");
    }
    int fanout = 1 << (d - 1);

    auto convert = [&](auto&& self, const KaryTree::Node* node) -> HyperTree {
        if (node == nullptr) {
            return HyperTree::leaf(d);
        }
        std::vector<HyperTree> children(static_cast<std::size_t>(fanout), HyperTree::leaf(d));
        for (std::size_t i = 0; i < child_order.size(); ++i) {
            children[static_cast<std::size_t>(child_order[i].family_index())] =
                self(self, node->children[i].get());
        }
        return HyperTree::internal(d, 0, std::move(children));
    };
    return convert(convert, tree.root());
}

}  // namespace hyperperm
