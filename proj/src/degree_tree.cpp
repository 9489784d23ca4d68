#include "tamari/degree_tree.hpp"

#include <cctype>
#include <sstream>

namespace tamari {

DegreeTree::DegreeTree(PlaneTree tree, std::vector<std::size_t> edge_labels)
    : tree_(std::move(tree)), labels_(std::move(edge_labels)) {
  if (labels_.size() != tree_.node_count()) throw Error("degree tree: one label slot per node expected");
  if (labels_[0] != 0) throw Error("degree tree: the root has no incoming edge to label");
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  DegreeTree run() {
    children_.clear();
    labels_.clear();
    std::size_t root = node(0);
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    std::vector<NodeId> id;
    auto tree = PlaneTree::from_children(children_, root, &id);
    std::vector<std::size_t> labels(labels_.size());
    for (std::size_t x = 0; x < labels_.size(); ++x) labels[id[x]] = labels_[x];
    return DegreeTree(std::move(tree), std::move(labels));
  }

 private:
  std::size_t node(std::size_t incoming) {
    std::size_t self = children_.size();
    children_.emplace_back();
    labels_.push_back(incoming);
    expect('(');
    while (true) {
      skip_space();
      if (peek() == ')') break;
      std::size_t label = number();
      expect(':');
      std::size_t child = node(label);
      children_[self].push_back(child);
    }
    expect(')');
    return self;
  }

  std::size_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a label");
    }
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
    }
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error("degree tree text, offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> labels_;
};

void write_node(const DegreeTree& dt, NodeId v, std::string& out) {
  out.push_back('(');
  for (NodeId c : dt.tree().children(v)) {
    out += std::to_string(dt.edge_label(c));
    out.push_back(':');
    write_node(dt, c, out);
  }
  out.push_back(')');
}

}  // namespace

DegreeTree DegreeTree::parse(std::string_view text) { return TreeParser(text).run(); }

std::string DegreeTree::to_string() const {
  std::string out;
  write_node(*this, tree_.root(), out);
  return out;
}

std::vector<std::int64_t> node_labels(const DegreeTree& dt) {
  const auto& t = dt.tree();
  std::vector<std::int64_t> ell(t.node_count(), 0);
  // Reverse preorder visits children before parents.
  for (NodeId v = t.node_count(); v-- > 0;) {
    if (t.is_leaf(v)) continue;
    std::int64_t sum = static_cast<std::int64_t>(t.children(v).size()) -
                       static_cast<std::int64_t>(dt.leftmost_label(v));
    for (NodeId c : t.children(v)) sum += ell[c];
    ell[v] = sum;
  }
  return ell;
}

Validation validate(const DegreeTree& dt) {
  const auto& t = dt.tree();
  auto ell = node_labels(dt);
  for (NodeId v = 0; v < t.node_count(); ++v) {
    const auto& ch = t.children(v);
    for (std::size_t k = 1; k < ch.size(); ++k) {
      if (dt.edge_label(ch[k]) != 0) {
        return Validation::fail("edge to node " + std::to_string(ch[k]) +
                                " is not a leftmost edge but has label " +
                                std::to_string(dt.edge_label(ch[k])));
      }
    }
    if (!ch.empty() && static_cast<std::int64_t>(dt.edge_label(ch.front())) > ell[ch.front()]) {
      return Validation::fail("leftmost edge to node " + std::to_string(ch.front()) + " has label " +
                              std::to_string(dt.edge_label(ch.front())) +
                              " exceeding the child's node label " +
                              std::to_string(ell[ch.front()]));
    }
  }
  return Validation::pass();
}

DegreeTree edge_labels_from_node_labels(const PlaneTree& tree,
                                        const std::vector<std::int64_t>& labels) {
  if (labels.size() != tree.node_count()) throw Error("node labeling: one label per node expected");
  std::vector<std::size_t> edge(tree.node_count(), 0);
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_leaf(v)) {
      if (labels[v] != 0) throw Error("node labeling: leaf " + std::to_string(v) + " must be labeled 0");
      continue;
    }
    const auto& ch = tree.children(v);
    std::int64_t a = static_cast<std::int64_t>(ch.size()) - labels[v];
    for (NodeId c : ch) a += labels[c];
    if (a < 0 || a > labels[ch.front()]) {
      throw Error("node labeling: node " + std::to_string(v) + " needs leftmost label " +
                  std::to_string(a) + ", outside [0, " + std::to_string(labels[ch.front()]) + "]");
    }
    edge[ch.front()] = static_cast<std::size_t>(a);
  }
  return DegreeTree(tree, std::move(edge));
}

TreeStats tree_stats(const DegreeTree& dt) {
  const auto& t = dt.tree();
  TreeStats s;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (t.is_leaf(v)) {
      ++s.lnode;
    } else if (dt.leftmost_label(v) == 0) {
      ++s.znode;
    } else {
      ++s.pnode;
    }
  }
  s.rlabel = static_cast<std::size_t>(node_labels(dt)[t.root()]);
  return s;
}

std::string to_dot(const DegreeTree& dt) {
  const auto& t = dt.tree();
  auto ell = node_labels(dt);
  std::ostringstream os;
  os << "digraph degree_tree {\n"
     << "  ordering=out;\n"
     << "  node [shape=circle, fontsize=10];\n";
  for (NodeId v = 0; v < t.node_count(); ++v) {
    os << "  n" << v << " [label=\"" << ell[v] << "\"";
    if (v == t.root()) os << ", peripheries=2";
    os << "];\n";
  }
  for (NodeId v = 1; v < t.node_count(); ++v) {
    os << "  n" << t.parent(v) << " -> n" << v << " [arrowhead=none";
    if (dt.edge_label(v) != 0) os << ", label=\"" << dt.edge_label(v) << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tamari
