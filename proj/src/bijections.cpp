#include "tamari/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tamari {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::a1: return "A1";
    case StepKind::a2: return "A2";
    case StepKind::a3: return "A3";
    case StepKind::a1p: return "A1'";
    case StepKind::a2p: return "A2'";
    case StepKind::a3p: return "A3'";
    case StepKind::prepare: return "prepare";
    case StepKind::backtrack: return "backtrack";
  }
  return "?";
}

namespace {

bool is_map_dart(const PlanarMap& m, Dart d) { return m.tag(edge_of(d)) == EdgeTag::map; }

// First map dart strictly after `from` in clockwise order around its vertex.
Dart next_map_dart(const PlanarMap& m, Dart from) {
  for (Dart d = m.next_cw(from); d != from; d = m.next_cw(d)) {
    if (is_map_dart(m, d)) return d;
  }
  return no_dart;
}

// Reads the finished all-tree working map as a degree tree. Children appear
// counterclockwise from the dart towards the parent (or from the root dart).
DegreeTree extract_tree(const PlanarMap& working) {
  PlanarMap m = working.compacted();
  std::vector<std::vector<std::size_t>> kids(m.vertex_slots());
  std::vector<std::size_t> label_of(m.vertex_slots(), 0);
  VertexId root = m.root_vertex();

  std::vector<std::pair<VertexId, Dart>> stack{{root, no_dart}};
  while (!stack.empty()) {
    auto [x, up] = stack.back();
    stack.pop_back();
    auto rot = m.rotation(x, up == no_dart ? m.root_dart() : up);
    if (up != no_dart) rot.erase(rot.begin());
    std::reverse(rot.begin(), rot.end());
    for (Dart d : rot) {
      if (m.tag(edge_of(d)) != EdgeTag::tree) throw std::logic_error("map_to_tree: map edge left over");
      auto child = static_cast<std::size_t>(m.vertex(mate(d)));
      kids[x].push_back(child);
      label_of[child] = static_cast<std::size_t>(m.label(edge_of(d)));
      stack.emplace_back(static_cast<VertexId>(child), mate(d));
    }
  }
  std::vector<NodeId> new_id;
  PlaneTree tree = PlaneTree::from_children(kids, static_cast<std::size_t>(root), &new_id);
  std::vector<std::size_t> labels(tree.node_count(), 0);
  for (std::size_t v = 0; v < kids.size(); ++v) labels[new_id[v]] = label_of[v];
  labels[0] = 0;
  return DegreeTree(std::move(tree), std::move(labels));
}

}  // namespace

DegreeTree map_to_tree(const PlanarMap& input, Trace* trace) {
  if (auto v = validate(input); !v) throw Error("map_to_tree: " + v.message);
  if (input.edge_count() == 0) return DegreeTree();

  PlanarMap m = input;
  for (EdgeId e : m.edges()) {
    m.set_tag(e, EdgeTag::map);
    m.set_label(e, 0);
  }
  VertexId cur = m.root_vertex();
  Dart pending = m.root_dart();
  // Darts pointing to the parent, one per non-root vertex on the current path.
  std::vector<Dart> up;
  auto record = [&](StepKind kind) {
    if (trace) trace->push_back({kind, m, cur, pending});
  };

  while (pending != no_dart) {
    Dart d = pending;
    EdgeId e = edge_of(d);
    Dart fresh = no_dart;
    StepKind kind;
    if (m.is_bridge(e)) {
      VertexId v = m.vertex(mate(d));
      if (m.degree(v) == 1) {
        m.set_tag(e, EdgeTag::tree);
        m.set_label(e, 0);
        fresh = d;
        kind = StepKind::a1;
      } else {
        Dart wdart = mate(m.next_cw(mate(d)));
        VertexId w = m.vertex(wdart);
        EdgeId t = m.add_edge(Corner{cur, d}, Corner{w, m.next_cw(wdart)}, EdgeTag::tree, 0);
        bool was_root = m.root_dart() == d;
        m.delete_edge(e);
        if (was_root) m.set_root(2 * t);
        fresh = 2 * t + 1;
        up.push_back(fresh);
        cur = w;
        kind = StepKind::a2;
      }
    } else {
      std::size_t inner = m.face_of(mate(d)).size();
      Dart last = d;
      while (m.next_cw(last) != d && is_map_dart(m, m.next_cw(last))) last = m.next_cw(last);
      Dart q = m.next_cw(last);
      Dart root = m.root_dart();
      VertexId um = m.split_vertex(cur, d, last);
      bool root_moved = m.vertex(root) == um;
      Corner keep = q == d ? Corner{cur, no_dart} : Corner{cur, q};
      EdgeId t = m.add_edge(keep, Corner{um, d}, EdgeTag::tree, static_cast<int>(inner / 2));
      if (root_moved) m.set_root(2 * t);
      m.delete_edge(e);
      fresh = 2 * t + 1;
      up.push_back(fresh);
      cur = um;
      kind = StepKind::a3;
    }
    pending = no_dart;
    record(kind);

    pending = next_map_dart(m, fresh);
    bool backtracked = false;
    while (pending == no_dart && !up.empty()) {
      Dart towards_child = mate(up.back());
      up.pop_back();
      cur = m.vertex(towards_child);
      pending = next_map_dart(m, towards_child);
      backtracked = true;
    }
    record(backtracked ? StepKind::backtrack : StepKind::prepare);
  }
  return extract_tree(m);
}

PlanarMap tree_to_map(const DegreeTree& dt, Trace* trace) {
  if (auto v = validate(dt); !v) throw Error("tree_to_map: " + v.message);
  const PlaneTree& tree = dt.tree();
  if (tree.size() == 0) return PlanarMap::edgeless();

  // Node v is vertex v; the edge above v is edge v-1 with dart 2(v-1) at the
  // parent. Clockwise around a node: parent, then children right to left.
  std::vector<Color> colors;
  std::vector<std::vector<Dart>> rotations;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    colors.push_back(tree.is_leaf(v) ? Color::white : Color::black);
    std::vector<Dart> rot;
    if (v != 0) rot.push_back(static_cast<Dart>(2 * (v - 1) + 1));
    const auto& kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) rot.push_back(static_cast<Dart>(2 * (*it - 1)));
    rotations.push_back(std::move(rot));
  }
  PlanarMap m = PlanarMap::from_rotations(colors, rotations, static_cast<Dart>(2 * (tree.children(0).back() - 1)));
  for (NodeId v = 1; v < tree.node_count(); ++v) {
    m.set_tag(static_cast<EdgeId>(v - 1), EdgeTag::tree);
    m.set_label(static_cast<EdgeId>(v - 1), static_cast<int>(dt.edge_label(v)));
  }

  for (NodeId u : tree.postorder()) {
    if (u == 0) continue;
    auto e = static_cast<EdgeId>(u - 1);
    Dart t = 2 * e;
    Dart tu = t + 1;
    StepKind kind;
    if (tree.is_leaf(u)) {
      m.set_tag(e, EdgeTag::map);
      kind = StepKind::a1p;
    } else if (dt.edge_label(u) == 0) {
      Dart ccw = m.prev_cw(tu);
      m.add_edge(Corner{m.vertex(t), m.next_cw(t)}, Corner{m.vertex(mate(ccw)), mate(ccw)});
      m.delete_edge(e);
      kind = StepKind::a2p;
    } else {
      Dart s = m.next_cw(tu);
      std::size_t degree = 0;
      for (Dart x = s; x != tu; x = m.face_next(x)) {
        if (++degree > 2 * m.edge_slots()) throw std::logic_error("tree_to_map: corner walk does not close");
      }
      std::size_t r = dt.edge_label(u);
      if (2 * r > degree) throw std::logic_error("tree_to_map: outer face too small for label");
      Dart y = m.corner_walk_cw(s, 2 * r - 1);
      m.add_edge(Corner{static_cast<VertexId>(u), s}, Corner{m.vertex(y), y});
      m.contract_edge(e);
      kind = StepKind::a3p;
    }
    if (trace) trace->push_back({kind, m, static_cast<VertexId>(u), no_dart});
  }
  return m.compacted();
}

Validation check_working_shape(const TraceStep& step) {
  const PlanarMap& m = step.snapshot;
  VertexId root = m.root_vertex();
  if (m.root_dart() == no_dart || m.tag(edge_of(m.root_dart())) != EdgeTag::tree) {
    return Validation::fail("root dart is not a tree dart");
  }

  std::vector<char> in_tree(m.vertex_slots(), 0);
  in_tree[root] = 1;
  std::size_t tree_edges = 0;
  for (EdgeId e : m.edges()) {
    if (m.tag(e) != EdgeTag::tree) continue;
    ++tree_edges;
    in_tree[m.vertex(2 * e)] = in_tree[m.vertex(2 * e + 1)] = 1;
  }
  std::size_t tree_vertices = static_cast<std::size_t>(std::count(in_tree.begin(), in_tree.end(), 1));
  if (tree_vertices != tree_edges + 1) return Validation::fail("tree edges do not form a tree");

  std::vector<char> reached(m.vertex_slots(), 0);
  std::vector<VertexId> stack{root};
  reached[root] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (Dart d : m.rotation(x)) {
      if (is_map_dart(m, d)) continue;
      VertexId y = m.vertex(mate(d));
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  if (count != tree_vertices) return Validation::fail("tree edges are not connected");

  // Leftmost branch, root first.
  std::vector<VertexId> branch{root};
  {
    VertexId x = root;
    Dart up = no_dart;
    while (true) {
      auto rot = m.rotation(x, up == no_dart ? m.root_dart() : up);
      Dart leftmost = no_dart;
      for (Dart d : rot) {
        if (d != up && !is_map_dart(m, d)) leftmost = d;
      }
      if (leftmost == no_dart) break;
      x = m.vertex(mate(leftmost));
      up = mate(leftmost);
      branch.push_back(x);
    }
  }
  auto branch_index = [&](VertexId v) -> std::ptrdiff_t {
    auto it = std::find(branch.begin(), branch.end(), v);
    return it == branch.end() ? -1 : it - branch.begin();
  };

  // Map components through union-find on vertices.
  std::vector<VertexId> parent(m.vertex_slots());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  bool any_map = false;
  for (EdgeId e : m.edges()) {
    if (m.tag(e) != EdgeTag::map) continue;
    any_map = true;
    parent[find(m.vertex(2 * e))] = find(m.vertex(2 * e + 1));
  }
  if (!any_map) {
    if (step.pending != no_dart) return Validation::fail("pending edge set after the map is exhausted");
    return Validation::pass();
  }

  std::vector<int> attachments(m.vertex_slots(), 0);
  std::vector<char> has_map(m.vertex_slots(), 0);
  for (EdgeId e : m.edges()) {
    if (m.tag(e) == EdgeTag::map) has_map[m.vertex(2 * e)] = has_map[m.vertex(2 * e + 1)] = 1;
  }
  std::ptrdiff_t deepest = -1;
  std::vector<char> used(branch.size(), 0);
  for (VertexId v : m.vertices()) {
    if (!has_map[v] || !in_tree[v]) continue;
    if (++attachments[find(v)] > 1) return Validation::fail("a map component touches the tree twice");
    auto idx = branch_index(v);
    if (idx < 0) return Validation::fail("a map component hangs off the leftmost branch");
    used[idx] = 1;
    deepest = std::max(deepest, idx);
  }
  for (VertexId v : m.vertices()) {
    if (has_map[v] && attachments[find(v)] != 1) return Validation::fail("a map component is detached from the tree");
  }
  if (deepest < 0 || branch[deepest] != step.current) {
    return Validation::fail("current vertex is not the deepest attachment");
  }
  if (step.pending == no_dart || !is_map_dart(m, step.pending) || m.vertex(step.pending) != step.current) {
    return Validation::fail("pending is not a map dart at the current vertex");
  }
  if (is_map_dart(m, m.prev_cw(step.pending))) return Validation::fail("pending does not open the map block");
  std::size_t switches = 0;
  for (Dart d : m.rotation(step.current)) {
    if (is_map_dart(m, d) != is_map_dart(m, m.next_cw(d))) ++switches;
  }
  if (switches != 2) return Validation::fail("map darts at the current vertex are not contiguous");
  return Validation::pass();
}

CertificateAssignment certificates(const DegreeTree& dt) {
  const PlaneTree& tree = dt.tree();
  std::size_t count = tree.node_count();
  CertificateAssignment out;
  out.certificate.assign(count, 0);
  out.multiplicity.assign(count, 0);
  std::vector<char> red(count, 0);
  for (NodeId v : tree.reverse_preorder()) {
    std::size_t r = dt.leftmost_label(v);
    if (r == 0) {
      out.certificate[v] = v;
      continue;
    }
    std::size_t black_seen = 0;
    NodeId x = v + 1;
    for (;; ++x) {
      if (x >= count) throw Error("certificates: ran past the last node (invalid degree tree)");
      if (red[x]) continue;
      if (black_seen == r) break;
      red[x] = 1;
      ++black_seen;
    }
    out.certificate[v] = x - 1;
  }
  for (NodeId w : out.certificate) ++out.multiplicity[w];
  return out;
}

NewInterval tree_to_interval(const DegreeTree& dt) {
  if (auto v = validate(dt); !v) throw Error("tree_to_interval: " + v.message);
  auto cert = certificates(dt);
  std::string lower;
  for (NodeId v = 0; v < dt.node_count(); ++v) {
    lower += 'u';
    lower.append(cert.multiplicity[v], 'd');
  }
  std::string upper = "u" + plane_tree_to_dyck(dt.tree()).word() + "d";
  return NewInterval(DyckPath::parse(lower), DyckPath::parse(upper));
}

DegreeTree interval_to_tree(const NewInterval& interval) {
  const std::string& q = interval.upper().word();
  PlaneTree tree = dyck_to_plane_tree(DyckPath::parse(q.substr(1, q.size() - 2)));
  std::vector<std::size_t> labels(tree.node_count(), 0);
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_leaf(v)) continue;
    labels[tree.children(v).front()] = rising_contacts(factor_between(interval.lower(), v + 1));
  }
  DegreeTree dt(std::move(tree), std::move(labels));
  if (auto v = validate(dt); !v) throw Error("interval_to_tree: " + v.message);
  return dt;
}

NewInterval map_to_interval(const PlanarMap& m) { return tree_to_interval(map_to_tree(m)); }

PlanarMap interval_to_map(const NewInterval& interval) { return tree_to_map(interval_to_tree(interval)); }

}  // namespace tamari
