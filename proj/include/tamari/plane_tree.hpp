#pragma once

#include <cstddef>
#include <vector>

namespace tamari {

// Nodes are identified by their preorder index; the root is node 0.
using NodeId = std::size_t;

// Ordered rooted tree. Nodes are always stored in preorder, so the subtree of
// v occupies the contiguous index range [v, v + subtree_size(v)].
class PlaneTree {
 public:
  static constexpr NodeId no_parent = static_cast<NodeId>(-1);

  // The single-node tree.
  PlaneTree();

  // Builds a tree from arbitrary node ids. `children[x]` lists the children
  // of x from left to right. If `new_id` is given it receives the preorder
  // index assigned to every original id.
  static PlaneTree from_children(const std::vector<std::vector<std::size_t>>& children,
                                 std::size_t root,
                                 std::vector<NodeId>* new_id = nullptr);

  std::size_t node_count() const { return parent_.size(); }
  // Number of edges.
  std::size_t size() const { return parent_.size() - 1; }

  NodeId root() const { return 0; }
  NodeId parent(NodeId v) const { return parent_.at(v); }
  const std::vector<NodeId>& children(NodeId v) const { return children_.at(v); }
  bool is_leaf(NodeId v) const { return children_.at(v).empty(); }
  std::size_t depth(NodeId v) const;

  // Proper descendants of v, equivalently the edge count of its subtree.
  std::size_t subtree_size(NodeId v) const { return subtree_size_.at(v); }
  // Last node of the subtree of v in preorder.
  NodeId subtree_last(NodeId v) const { return v + subtree_size_.at(v); }
  bool is_ancestor_or_self(NodeId a, NodeId v) const {
    return a <= v && v <= subtree_last(a);
  }

  std::vector<NodeId> preorder() const;
  std::vector<NodeId> postorder() const;
  std::vector<NodeId> reverse_preorder() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> subtree_size_;
};

}  // namespace tamari
