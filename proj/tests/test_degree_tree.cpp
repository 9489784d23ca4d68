#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tamari/degree_tree.hpp"
#include "tamari/dyck.hpp"
#include "tamari/enumeration.hpp"

using namespace tamari;

namespace {
DegreeTree T(const char* text) { return DegreeTree::parse(text); }
}  // namespace

TEST_CASE("plane tree traversals") {
  PlaneTree single;
  CHECK(single.preorder() == std::vector<NodeId>{0});
  auto chain = dyck_to_plane_tree(DyckPath::parse("uudd"));
  auto pre = chain.preorder();
  auto post = chain.postorder();
  std::reverse(post.begin(), post.end());
  CHECK(pre == post);
  auto cherry = dyck_to_plane_tree(DyckPath::parse("udud"));
  CHECK(cherry.preorder() == std::vector<NodeId>{0, 1, 2});
  CHECK(cherry.postorder() == std::vector<NodeId>{1, 2, 0});
  CHECK(cherry.reverse_preorder() == std::vector<NodeId>{2, 1, 0});
  CHECK(cherry.subtree_size(0) == 2);
  CHECK(cherry.subtree_size(1) == 0);
}

TEST_CASE("from_children relabels into preorder") {
  std::vector<NodeId> ids;
  auto t = PlaneTree::from_children({{}, {2, 0}, {}}, 1, &ids);
  CHECK(ids == std::vector<NodeId>{2, 0, 1});
  CHECK(t.children(0) == std::vector<NodeId>{1, 2});
  CHECK_THROWS_AS(PlaneTree::from_children({{1}, {0}}, 0), Error);
  CHECK_THROWS_AS(PlaneTree::from_children({{}, {}}, 0), Error);
}

TEST_CASE("text form") {
  CHECK(T("()").to_string() == "()");
  CHECK(T(" ( 1 : ( 0 : () ) ) ").to_string() == "(1:(0:()))");
  CHECK(T("(0:()0:())").node_count() == 3);
  CHECK_THROWS_AS(T("("), Error);
  CHECK_THROWS_AS(T("(1())"), Error);
  CHECK_THROWS_AS(T("()()"), Error);
  CHECK_THROWS_AS(T("(x:())"), Error);
}

TEST_CASE("node_labels") {
  CHECK(node_labels(T("()")) == std::vector<std::int64_t>{0});
  CHECK(node_labels(T("(0:())")) == std::vector<std::int64_t>{1, 0});
  CHECK(node_labels(T("(1:(0:()))")) == std::vector<std::int64_t>{1, 1, 0});
}

TEST_CASE("validate") {
  CHECK(validate(T("(0:())")));
  CHECK_FALSE(validate(T("(1:())")));
  CHECK(validate(T("(1:(0:()))")));
  auto bad = validate(T("(0:()1:(0:()))"));
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.message.empty());
}

TEST_CASE("edge_labels_from_node_labels") {
  CHECK(edge_labels_from_node_labels(PlaneTree(), {0}) == T("()"));
  auto chain2 = dyck_to_plane_tree(DyckPath::parse("ud"));
  CHECK(edge_labels_from_node_labels(chain2, {1, 0}) == T("(0:())"));
  auto chain3 = dyck_to_plane_tree(DyckPath::parse("uudd"));
  CHECK(edge_labels_from_node_labels(chain3, {1, 1, 0}) == T("(1:(0:()))"));
  CHECK_THROWS_AS(edge_labels_from_node_labels(chain3, {1, 1, 1}), Error);
  CHECK_THROWS_AS(edge_labels_from_node_labels(chain3, {5, 1, 0}), Error);
}

TEST_CASE("tree_stats") {
  CHECK(tree_stats(T("()")) == TreeStats{1, 0, 0, 0});
  CHECK(tree_stats(T("(0:(0:()))")) == TreeStats{1, 2, 0, 2});
  CHECK(tree_stats(T("(1:(0:()))")) == TreeStats{1, 1, 1, 1});
}

TEST_CASE("enumeration matches the brute-force count") {
  CHECK(enum_degree_trees(2).size() == 3);
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(enum_degree_trees(n).size() == oracle::degree_tree_count(n));
  }
}

TEST_CASE("labeled tree properties, exhaustive to size 7") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& dt : enum_degree_trees(n)) {
      REQUIRE(validate(dt));
      const auto& t = dt.tree();
      auto labels = node_labels(dt);
      for (NodeId v = 0; v < t.node_count(); ++v) {
        std::int64_t sum = 0;
        for (NodeId x = v + 1; x <= t.subtree_last(v); ++x) sum += static_cast<std::int64_t>(dt.edge_label(x));
        CHECK(labels[v] == static_cast<std::int64_t>(t.subtree_size(v)) - sum);
        CHECK(labels[v] >= 0);
        CHECK((labels[v] == 0) == t.is_leaf(v));
        if (v != 0 && t.children(t.parent(v)).front() != v) CHECK(dt.edge_label(v) == 0);
      }
      auto s = tree_stats(dt);
      CHECK(s.lnode + s.znode + s.pnode == n + 1);
      CHECK(edge_labels_from_node_labels(t, labels) == dt);
      CHECK(DegreeTree::parse(dt.to_string()) == dt);
    }
  }
}

TEST_CASE("random labelings: validate accepts exactly the degree trees") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto words = oracle::dyck_words(n);
    auto tree = dyck_to_plane_tree(DyckPath::parse(words[rng() % words.size()]));
    std::vector<std::size_t> labels(tree.node_count(), 0);
    for (NodeId v = 0; v < tree.node_count(); ++v) {
      if (!tree.is_leaf(v)) labels[tree.children(v).front()] = rng() % 3;
    }
    DegreeTree dt(tree, labels);
    auto labels_now = node_labels(dt);
    bool expected = true;
    for (NodeId v = 0; v < tree.node_count(); ++v) {
      if (!tree.is_leaf(v)) {
        NodeId first = tree.children(v).front();
        if (static_cast<std::int64_t>(labels[first]) > labels_now[first]) expected = false;
      }
    }
    CHECK(static_cast<bool>(validate(dt)) == expected);
  }
}

TEST_CASE("dot export") {
  auto dot = to_dot(T("(1:(0:()))"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("ordering=out") != std::string::npos);
}
