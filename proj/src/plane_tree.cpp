#include "tamari/plane_tree.hpp"

#include <algorithm>

#include "tamari/error.hpp"

namespace tamari {

PlaneTree::PlaneTree() : parent_{no_parent}, children_(1), subtree_size_{0} {}

PlaneTree PlaneTree::from_children(const std::vector<std::vector<std::size_t>>& children,
                                   std::size_t root, std::vector<NodeId>* new_id) {
  const std::size_t count = children.size();
  if (root >= count) throw Error("plane tree: root out of range");

  std::vector<NodeId> id(count, no_parent);
  std::vector<std::size_t> order;
  order.reserve(count);

  // Iterative preorder; children pushed in reverse so the leftmost pops first.
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    if (id[x] != no_parent) throw Error("plane tree: node reached twice (cycle)");
    id[x] = order.size();
    order.push_back(x);
    for (auto it = children[x].rbegin(); it != children[x].rend(); ++it) {
      if (*it >= count) throw Error("plane tree: child id out of range");
      stack.push_back(*it);
    }
  }
  if (order.size() != count) throw Error("plane tree: nodes unreachable from root");

  PlaneTree t;
  t.parent_.assign(count, no_parent);
  t.children_.assign(count, {});
  t.subtree_size_.assign(count, 0);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t c : children[x]) {
      t.children_[id[x]].push_back(id[c]);
      t.parent_[id[c]] = id[x];
    }
  }
  for (std::size_t v = count; v-- > 0;) {
    for (NodeId c : t.children_[v]) t.subtree_size_[v] += t.subtree_size_[c] + 1;
  }
  if (new_id) *new_id = std::move(id);
  return t;
}

std::size_t PlaneTree::depth(NodeId v) const {
  std::size_t d = 0;
  while (parent_.at(v) != no_parent) {
    v = parent_[v];
    ++d;
  }
  return d;
}

std::vector<NodeId> PlaneTree::preorder() const {
  std::vector<NodeId> out(node_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<NodeId> PlaneTree::postorder() const {
  std::vector<NodeId> out;
  out.reserve(node_count());
  // (node, next child index)
  std::vector<std::pair<NodeId, std::size_t>> stack{{root(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children_[v].size()) {
      NodeId c = children_[v][next++];
      stack.emplace_back(c, 0);
    } else {
      out.push_back(v);
      stack.pop_back();
    }
  }
  return out;
}

std::vector<NodeId> PlaneTree::reverse_preorder() const {
  auto out = preorder();
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace tamari
