#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/error.hpp"
#include "tamari/plane_tree.hpp"

namespace tamari {

// Plane tree with the edge labeling as canonical storage. The label of the
// edge joining v to its parent is stored at index v; the root slot is 0.
// Construction is permissive; use validate() for the degree-tree conditions.
class DegreeTree {
 public:
  DegreeTree() : labels_(1, 0) {}
  DegreeTree(PlaneTree tree, std::vector<std::size_t> edge_labels);

  // Grammar: DT ::= "(" CHILD* ")", CHILD ::= LABEL ":" DT. Whitespace is ignored.
  static DegreeTree parse(std::string_view text);
  std::string to_string() const;

  const PlaneTree& tree() const { return tree_; }
  std::size_t size() const { return tree_.size(); }
  std::size_t node_count() const { return tree_.node_count(); }

  std::size_t edge_label(NodeId child) const { return labels_.at(child); }
  // Label of the leftmost descending edge of v, or 0 for a leaf.
  std::size_t leftmost_label(NodeId v) const {
    return tree_.is_leaf(v) ? 0 : labels_[tree_.children(v).front()];
  }
  const std::vector<std::size_t>& edge_labels() const { return labels_; }

  friend bool operator==(const DegreeTree&, const DegreeTree&) = default;

 private:
  PlaneTree tree_;
  std::vector<std::size_t> labels_;
};

// Node labeling derived from the edge labels: 0 on leaves, and
// k - a + sum of children's labels on an internal node with k children and
// leftmost edge label a. Total on any labeled tree, hence signed.
std::vector<std::int64_t> node_labels(const DegreeTree& dt);

// Checks that only leftmost edges carry labels and that each leftmost label
// is at most the node label of the child it leads to.
Validation validate(const DegreeTree& dt);

// Recovers the edge labels from a node labeling. Throws Error if no valid
// leftmost label reproduces the given labeling.
DegreeTree edge_labels_from_node_labels(const PlaneTree& tree,
                                        const std::vector<std::int64_t>& labels);

struct TreeStats {
  std::size_t lnode = 0;
  std::size_t znode = 0;
  std::size_t pnode = 0;
  std::size_t rlabel = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

TreeStats tree_stats(const DegreeTree& dt);

std::string to_dot(const DegreeTree& dt);

}  // namespace tamari
