#ifndef HYPERPERM_BIJECTION_HPP
#define HYPERPERM_BIJECTION_HPP

#include "hyperperm/dperm.hpp"
#include "hyperperm/hypertree.hpp"
#include "hyperperm/karytree.hpp"
#include "hyperperm/orders.hpp"

namespace hyperperm {

/// Recursive decomposition of `perm` around the point maximal on `axis`:
/// the root is that point (labeled with its axis value), the child in
/// direction f holds the max-tree of the points lying in hyperoctant f of
/// the root, and empty hyperoctants end in leaves.
///
/// For axis != d-1 the coordinates are implicitly reordered so the chosen
/// axis plays the last role: slot i of an internal node encodes the signs on
/// the axes other than `axis`, in ascending original axis order, with '+' as
/// bit 1 and the most significant bit first.
HyperTree max_tree(const DPermutation& perm, int axis);
/// Max-tree with respect to the last axis, the default construction.
HyperTree max_tree(const DPermutation& perm);

/// Dual construction around the point minimal on `axis`. Branch directions
/// point upward on the axis; they are stored negated so the labels land in
/// the canonical negative family and min- and max-trees share HyperTree.
HyperTree min_tree(const DPermutation& perm, int axis);
HyperTree min_tree(const DPermutation& perm);

/// True iff the max-tree of `perm` (w.r.t. the last axis) uses only internal
/// directions from the family of `orders`, and at every internal node the
/// child subtrees occupy value blocks ordered per the axis orders: whenever
/// f1 precedes f2 on axis l, every point under the f1 child has a smaller
/// l-coordinate than every point under the f2 child.
/// Throws std::invalid_argument for incompatible orders or a dimension
/// mismatch.
bool is_admissible(const DPermutation& perm, const OrderSet& orders);

/// The unique admissible permutation whose max-tree is `tree`: child
/// subtrees become value blocks laid out consecutively in axis order, with
/// the root placed right after the minus blocks on every axis (hence maximal
/// on the last axis). Throws std::invalid_argument when `orders` is
/// incompatible, the dimension differs, or the tree has an internal node in
/// a direction outside the family (named in the message).
DPermutation tree_to_perm(const HyperTree& tree, const OrderSet& orders);

/// Deletes, at every internal node, the child slots whose direction is
/// outside `family`, ordering the survivors by `child_order`. Every removed
/// slot must hold a leaf; an internal node found there raises
/// std::invalid_argument naming the offending node.
KaryTree restrict_to_kary(const HyperTree& tree, const DirectionSubset& family,
                          const std::vector<Direction>& child_order);

/// Inverse of restrict_to_kary: re-inserts leaf slots for the directions
/// outside `family`. The tree arity must equal the family size.
HyperTree pad_from_kary(const KaryTree& tree, const DirectionSubset& family, int d,
                        const std::vector<Direction>& child_order);

}  // namespace hyperperm

#endif
