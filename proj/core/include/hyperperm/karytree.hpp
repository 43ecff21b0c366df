#ifndef HYPERPERM_KARYTREE_HPP
#define HYPERPERM_KARYTREE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hyperperm {

/// A plain ordered k-ary tree: every internal node has exactly k children,
/// leaves have none. Leaves are null child slots, like HyperTree.
class KaryTree {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        std::vector<NodePtr> children;  // size = arity; null entry = leaf
    };

    static KaryTree leaf(int arity);
    static KaryTree internal(int arity, std::vector<KaryTree> children);

    int arity() const { return arity_; }
    bool is_leaf() const { return root_ == nullptr; }
    const Node* root() const { return root_.get(); }
    KaryTree child(int slot) const;

    int internal_node_count() const;
    /// Always internal_node_count() * (arity - 1) + 1.
    int leaf_count() const;

    bool operator==(const KaryTree& other) const;

    /// Same grammar as HyperTree: "." or "(" followed by `arity` subtrees ")".
    std::string format() const;
    static KaryTree parse(std::string_view text, int arity);

private:
    KaryTree(int arity, NodePtr root);

    int arity_;
    NodePtr root_;
};

/// DOT rendering with edges labeled by 1-based child position.
std::string to_dot(const KaryTree& tree);

}  // namespace hyperperm

#endif
