#include "hyperperm/hypertree.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperperm {

namespace {

constexpr int kMaxTreeDimension = 16;  // fanout 2^{d-1} stays manageable

void check_dimension(int dimension) {
    if (dimension < 2 || dimension > kMaxTreeDimension) {
        throw std::invalid_argument("tree dimension must be in 2.." +
                                    std::to_string(kMaxTreeDimension));
    }
}

int count_internal(const HyperTree::Node* node) {
    if (node == nullptr) {
        return 0;
    }
    int total = 1;
    for (const auto& child : node->children) {
        total += count_internal(child.get());
    }
    return total;
}

bool same_shape(const HyperTree::Node* a, const HyperTree::Node* b) {
    if ((a == nullptr) != (b == nullptr)) {
        return false;
    }
    if (a == nullptr) {
        return true;
    }
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (!same_shape(a->children[i].get(), b->children[i].get())) {
            return false;
        }
    }
    return true;
}

void format_node(const HyperTree::Node* node, std::string& out) {
    if (node == nullptr) {
        out += '.';
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < node->children.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        format_node(node->children[i].get(), out);
    }
    out += ')';
}

struct TreeParser {
    std::string_view text;
    std::size_t pos = 0;
    int fanout;

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                     text[pos] == '\r')) {
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("tree parse error at position " + std::to_string(pos + 1) +
                                    ": " + what);
    }

    HyperTree::NodePtr parse_node() {
        skip_space();
        if (pos >= text.size()) {
            fail("unexpected end of input, expected '.' or '('");
        }
        if (text[pos] == '.') {
            ++pos;
            return nullptr;
        }
        if (text[pos] != '(') {
            fail(std::string("expected '.' or '(', got '") + text[pos] + "'");
        }
        ++pos;
        auto node = std::make_shared<HyperTree::Node>();
        node->children.resize(static_cast<std::size_t>(fanout));
        for (int i = 0; i < fanout; ++i) {
            node->children[static_cast<std::size_t>(i)] = parse_node();
        }
        skip_space();
        if (pos >= text.size() || text[pos] != ')') {
            fail("expected ')'");
        }
        ++pos;
        return node;
    }
};

nlohmann::json node_to_json(const HyperTree::Node* node, int dimension) {
    if (node == nullptr) {
        return nullptr;
    }
    nlohmann::json obj = nlohmann::json::object();
    if (node->label != 0) {
        obj["label"] = node->label;
    }
    nlohmann::json children = nlohmann::json::object();
    for (std::size_t i = 0; i < node->children.size(); ++i) {
        Direction dir = Direction::family_member(dimension, static_cast<int>(i));
        children[dir.to_string()] = node_to_json(node->children[i].get(), dimension);
    }
    obj["children"] = std::move(children);
    return obj;
}

bool node_contains(const HyperTree::Node* haystack, const HyperTree::Node* needle) {
    if (haystack == nullptr) {
        return false;
    }
    if (haystack == needle) {
        return true;
    }
    for (const auto& child : haystack->children) {
        if (node_contains(child.get(), needle)) {
            return true;
        }
    }
    return false;
}

const HyperTree::Node* find_label_node(const HyperTree::Node* node, int label) {
    if (node == nullptr) {
        return nullptr;
    }
    if (node->label == label) {
        return node;
    }
    for (const auto& child : node->children) {
        if (const auto* hit = find_label_node(child.get(), label)) {
            return hit;
        }
    }
    return nullptr;
}

}  // namespace

HyperTree::HyperTree(int dimension, NodePtr root) : dimension_(dimension), root_(std::move(root)) {}

HyperTree HyperTree::leaf(int dimension) {
    check_dimension(dimension);
    return HyperTree(dimension, nullptr);
}

HyperTree HyperTree::internal(int dimension, int label, std::vector<HyperTree> children) {
    check_dimension(dimension);
    if (static_cast<int>(children.size()) != (1 << (dimension - 1))) {
        throw std::invalid_argument("internal node needs exactly 2^{d-1} children");
    }
    auto node = std::make_shared<Node>();
    node->label = label;
    node->children.reserve(children.size());
    for (const HyperTree& child : children) {
        if (child.dimension() != dimension) {
            throw std::invalid_argument("child tree dimension mismatch");
        }
        node->children.push_back(child.root_);
    }
    return HyperTree(dimension, std::move(node));
}

HyperTree HyperTree::child(int slot) const {
    if (is_leaf()) {
        throw std::invalid_argument("a leaf has no children");
    }
    if (slot < 0 || slot >= fanout()) {
        throw std::invalid_argument("child slot out of range");
    }
    return HyperTree(dimension_, root_->children[static_cast<std::size_t>(slot)]);
}

int HyperTree::internal_node_count() const { return count_internal(root_.get()); }

int HyperTree::leaf_count() const { return internal_node_count() * (fanout() - 1) + 1; }

bool HyperTree::operator==(const HyperTree& other) const {
    return dimension_ == other.dimension_ && same_shape(root_.get(), other.root_.get());
}

std::string HyperTree::format() const {
    std::string out;
    format_node(root_.get(), out);
    return out;
}

HyperTree HyperTree::parse(std::string_view text, int dimension) {
    check_dimension(dimension);
    TreeParser parser{text, 0, 1 << (dimension - 1)};
    NodePtr root = parser.parse_node();
    parser.skip_space();
    if (parser.pos != text.size()) {
        parser.fail("trailing characters after tree");
    }
    return HyperTree(dimension, std::move(root));
}

std::string HyperTree::to_json() const { return node_to_json(root_.get(), dimension_).dump(); }

std::optional<Direction> subtree_membership(const HyperTree& tree, const HyperTree::Node* ancestor,
                                            const HyperTree::Node* descendant) {
    if (ancestor == nullptr || descendant == nullptr || !node_contains(tree.root(), ancestor) ||
        !node_contains(tree.root(), descendant)) {
        throw std::invalid_argument("node does not belong to the tree");
    }
    for (std::size_t i = 0; i < ancestor->children.size(); ++i) {
        if (node_contains(ancestor->children[i].get(), descendant)) {
            return Direction::family_member(tree.dimension(), static_cast<int>(i));
        }
    }
    return std::nullopt;
}

const HyperTree::Node* find_label(const HyperTree& tree, int label) {
    return find_label_node(tree.root(), label);
}

std::string to_dot(const HyperTree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    int next_id = 0;
    auto emit = [&](auto&& self, const HyperTree::Node* node) -> int {
        int id = next_id++;
        if (node == nullptr) {
            out << "  n" << id << " [shape=square, width=0.12, label=\"\"];\n";
            return id;
        }
        out << "  n" << id << " [label=\"" << (node->label != 0 ? std::to_string(node->label) : "")
            << "\"];\n";
        for (std::size_t i = 0; i < node->children.size(); ++i) {
            int child_id = self(self, node->children[i].get());
            Direction dir = Direction::family_member(tree.dimension(), static_cast<int>(i));
            out << "  n" << id << " -> n" << child_id << " [label=\"" << dir.to_string()
                << "\"];\n";
        }
        return id;
    };
    emit(emit, tree.root());
    out << "}\n";
    return out.str();
}

}  // namespace hyperperm
