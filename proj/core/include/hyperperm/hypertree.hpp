#ifndef HYPERPERM_HYPERTREE_HPP
#define HYPERPERM_HYPERTREE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperperm/direction.hpp"

namespace hyperperm {

/// A 2^{d-1}-ary tree whose internal-node child slots correspond to the
/// negative direction family of dimension d, in canonical family_index order.
/// Leaves are represented by empty child slots (null). Internal nodes carry
/// an optional integer label (the point identifier used in diagnostics and
/// DOT output); labels are not part of equality, which is purely structural.
class HyperTree {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        int label = 0;                  // 0 = unlabeled
        std::vector<NodePtr> children;  // size = fanout; null entry = leaf slot
    };

    static HyperTree leaf(int dimension);
    /// children.size() must equal 2^{dimension-1}; child trees must share the
    /// dimension.
    static HyperTree internal(int dimension, int label, std::vector<HyperTree> children);

    int dimension() const { return dimension_; }
    int fanout() const { return 1 << (dimension_ - 1); }
    bool is_leaf() const { return root_ == nullptr; }
    const Node* root() const { return root_.get(); }
    /// Child subtree of the root at the given family_index slot.
    HyperTree child(int slot) const;

    int internal_node_count() const;
    /// Always internal_node_count() * (fanout - 1) + 1.
    int leaf_count() const;

    /// Structural comparison over child slots; node labels are ignored.
    bool operator==(const HyperTree& other) const;

    /// Canonical serialization: "." for a leaf, "(c0 c1 ... )" for an
    /// internal node with children in family_index order.
    std::string format() const;
    /// Parses the grammar above; whitespace between tokens is free. Throws
    /// std::invalid_argument with a 1-based character position on malformed
    /// input.
    static HyperTree parse(std::string_view text, int dimension);

    /// JSON mirror of the node structure: a node is an object with optional
    /// "label" and a "children" object keyed by direction strings such as
    /// "+--"; a leaf is null.
    std::string to_json() const;

private:
    HyperTree(int dimension, NodePtr root);

    int dimension_;
    NodePtr root_;
};

/// If `descendant` lies in the child subtree of `ancestor` with direction f,
/// returns f; otherwise nullopt. Both nodes must belong to `tree`
/// (std::invalid_argument otherwise).
std::optional<Direction> subtree_membership(const HyperTree& tree, const HyperTree::Node* ancestor,
                                            const HyperTree::Node* descendant);

/// First internal node carrying `label` in depth-first slot order, or null.
const HyperTree::Node* find_label(const HyperTree& tree, int label);

/// Graphviz DOT rendering: internal nodes as labeled circles, leaves as small
/// squares, edges labeled with direction strings.
std::string to_dot(const HyperTree& tree);

}  // namespace hyperperm

#endif
