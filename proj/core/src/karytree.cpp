#include "hyperperm/karytree.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperperm {

namespace {

void check_arity(int arity) {
    if (arity < 1 || arity > (1 << 15)) {
        throw std::invalid_argument("tree arity out of range");
    }
}

int count_internal(const KaryTree::Node* node) {
    if (node == nullptr) {
        return 0;
    }
    int total = 1;
    for (const auto& child : node->children) {
        total += count_internal(child.get());
    }
    return total;
}

bool same_shape(const KaryTree::Node* a, const KaryTree::Node* b) {
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

void format_node(const KaryTree::Node* node, std::string& out) {
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
    int arity;

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

    KaryTree::NodePtr parse_node() {
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
        auto node = std::make_shared<KaryTree::Node>();
        node->children.resize(static_cast<std::size_t>(arity));
        for (int i = 0; i < arity; ++i) {
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

}  // namespace

KaryTree::KaryTree(int arity, NodePtr root) : arity_(arity), root_(std::move(root)) {}

KaryTree KaryTree::leaf(int arity) {
    check_arity(arity);
    return KaryTree(arity, nullptr);
}

KaryTree KaryTree::internal(int arity, std::vector<KaryTree> children) {
    check_arity(arity);
    if (static_cast<int>(children.size()) != arity) {
        throw std::invalid_argument("internal node needs exactly `arity` children");
    }
    auto node = std::make_shared<Node>();
    node->children.reserve(children.size());
    for (const KaryTree& child : children) {
        if (child.arity() != arity) {
            throw std::invalid_argument("child tree arity mismatch");
        }
        node->children.push_back(child.root_);
    }
    return KaryTree(arity, std::move(node));
}

KaryTree KaryTree::child(int slot) const {
    if (is_leaf()) {
        throw std::invalid_argument("a leaf has no children");
    }
    if (slot < 0 || slot >= arity_) {
        throw std::invalid_argument("child slot out of range");
    }
    return KaryTree(arity_, root_->children[static_cast<std::size_t>(slot)]);
}

int KaryTree::internal_node_count() const { return count_internal(root_.get()); }

int KaryTree::leaf_count() const { return internal_node_count() * (arity_ - 1) + 1; }

bool KaryTree::operator==(const KaryTree& other) const {
    return arity_ == other.arity_ && same_shape(root_.get(), other.root_.get());
}

std::string KaryTree::format() const {
    std::string out;
    format_node(root_.get(), out);
    return out;
}

KaryTree KaryTree::parse(std::string_view text, int arity) {
    check_arity(arity);
    TreeParser parser{text, 0, arity};
    NodePtr root = parser.parse_node();
    parser.skip_space();
    if (parser.pos != text.size()) {
        parser.fail("trailing characters after tree");
    }
    return KaryTree(arity, std::move(root));
}

std::string to_dot(const KaryTree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    int next_id = 0;
    auto emit = [&](auto&& self, const KaryTree::Node* node) -> int {
        int id = next_id++;
        if (node == nullptr) {
            out << "  n" << id << " [shape=square, width=0.12, label=\"\"];\n";
            return id;
        }
        out << "  n" << id << " [label=\"\"];\n";
        for (std::size_t i = 0; i < node->children.size(); ++i) {
            int child_id = self(self, node->children[i].get());
            out << "  n" << id << " -> n" << child_id << " [label=\"" << (i + 1) << "\"];\n";
        }
        return id;
    };
    emit(emit, tree.root());
    out << "}\n";
    return out.str();
}

}  // namespace hyperperm
