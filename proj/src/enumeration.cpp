#include "tamari/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "tamari/bijections.hpp"

namespace tamari {

namespace {

void extend_dyck(std::string& word, std::size_t ups, std::size_t downs, std::size_t n,
                 std::vector<DyckPath>& out) {
  if (word.size() == 2 * n) {
    out.push_back(DyckPath::parse(word));
    return;
  }
  if (downs < ups) {
    word.push_back('d');
    extend_dyck(word, ups, downs + 1, n, out);
    word.pop_back();
  }
  if (ups < n) {
    word.push_back('u');
    extend_dyck(word, ups + 1, downs, n, out);
    word.pop_back();
  }
}

// Chooses the leftmost labels node by node in postorder, so the node label
// of every leftmost child is known when its parent's label range is fixed.
void extend_labels(const PlaneTree& tree, const std::vector<NodeId>& post, std::size_t at,
                   std::vector<std::size_t>& edge, std::vector<std::int64_t>& node,
                   std::vector<DegreeTree>& out) {
  if (at == post.size()) {
    out.emplace_back(tree, edge);
    return;
  }
  NodeId v = post[at];
  if (tree.is_leaf(v)) {
    node[v] = 0;
    extend_labels(tree, post, at + 1, edge, node, out);
    return;
  }
  const auto& kids = tree.children(v);
  std::int64_t sum = 0;
  for (NodeId c : kids) sum += node[c];
  auto first = kids.front();
  for (std::int64_t a = 0; a <= node[first]; ++a) {
    edge[first] = static_cast<std::size_t>(a);
    node[v] = static_cast<std::int64_t>(kids.size()) - a + sum;
    extend_labels(tree, post, at + 1, edge, node, out);
  }
  edge[first] = 0;
}

bool next_permutation(std::vector<std::size_t>& p) { return std::next_permutation(p.begin(), p.end()); }

}  // namespace

std::vector<DyckPath> enum_dyck(std::size_t n) {
  std::vector<DyckPath> out;
  std::string word;
  extend_dyck(word, 0, 0, n, out);
  return out;
}

std::vector<NewInterval> enum_new_intervals(std::size_t n) {
  std::vector<NewInterval> out;
  if (n == 0) return out;
  auto paths = enum_dyck(n);
  std::vector<BracketVector> vectors;
  vectors.reserve(paths.size());
  for (const auto& p : paths) vectors.push_back(bracket_vector(p));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (is_new_interval(vectors[i], vectors[j])) out.emplace_back(paths[i], paths[j]);
    }
  }
  return out;
}

std::vector<DegreeTree> enum_degree_trees(std::size_t n) {
  std::vector<DegreeTree> out;
  for (const auto& p : enum_dyck(n)) {
    PlaneTree tree = dyck_to_plane_tree(p);
    std::vector<std::size_t> edge(tree.node_count(), 0);
    std::vector<std::int64_t> node(tree.node_count(), 0);
    extend_labels(tree, tree.postorder(), 0, edge, node, out);
  }
  return out;
}

std::vector<PlanarMap> enum_maps_oracle(std::size_t n) {
  if (n == 0) return {PlanarMap::edgeless()};
  std::map<std::string, PlanarMap> found;
  HypermapCode h;
  h.n = n;
  h.root = 0;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::size_t> alpha(n);
    std::iota(alpha.begin(), alpha.end(), 0);
    do {
      h.sigma = sigma;
      h.alpha = alpha;
      if (!validate(h)) continue;
      PlanarMap m = from_hypermap(h);
      found.try_emplace(canonical_code(m), std::move(m));
    } while (next_permutation(alpha));
  } while (next_permutation(sigma));

  std::vector<PlanarMap> out;
  out.reserve(found.size());
  for (auto& [code, m] : found) out.push_back(std::move(m));
  return out;
}

BigInt count_formula(std::size_t n) {
  if (n < 2) throw Error("count_formula: n must be at least 2");
  auto factorial = [](std::size_t k) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  BigInt numerator = BigInt(3) * (BigInt(1) << (n - 2)) * factorial(2 * n - 2);
  return numerator / (factorial(n - 1) * factorial(n + 1));
}

void GfTable::add(const Key& key, const BigInt& count) {
  if (count == 0) return;
  coeffs_[key] += count;
}

BigInt GfTable::at(const Key& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

GfTable GfTable::shift_t(std::size_t by) const {
  GfTable out;
  for (const auto& [k, c] : coeffs_) out.add({k[0] + by, k[1], k[2], k[3], k[4]}, c);
  return out;
}

GfTable GfTable::times_w() const {
  GfTable out;
  for (const auto& [k, c] : coeffs_) out.add({k[0], k[1], k[2], k[3], k[4] + 1}, c);
  return out;
}

GfTable GfTable::permuted(const std::array<std::size_t, 3>& perm) const {
  GfTable out;
  for (const auto& [k, c] : coeffs_) {
    Key moved = k;
    for (std::size_t p = 0; p < 3; ++p) moved[2 + perm[p]] = k[2 + p];
    out.add(moved, c);
  }
  return out;
}

GfTable GfTable::at_x_equal_one() const {
  GfTable out;
  for (const auto& [k, c] : coeffs_) out.add({k[0], 0, k[2], k[3], k[4]}, c);
  return out;
}

GfTable GfTable::truncated(std::size_t max_n) const {
  GfTable out;
  for (const auto& [k, c] : coeffs_) {
    if (k[0] <= max_n) out.add(k, c);
  }
  return out;
}

std::string GfTable::dump() const {
  std::ostringstream os;
  for (const auto& [k, c] : coeffs_) {
    os << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << k[3] << ' ' << k[4] << ' ' << c << '\n';
  }
  return os.str();
}

GfTable gf_table(Family family, std::size_t max_n) {
  GfTable table;
  if (family == Family::intervals) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& interval : enum_new_intervals(n)) {
        auto s = interval_stats(interval);
        table.add({n, s.rcont - 1, s.c00, s.c01, s.c11});
      }
    }
  } else {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (const auto& m : enum_maps_oracle(n)) {
        auto s = map_stats(m);
        table.add({n, s.outdeg, s.black, s.white, s.face});
      }
    }
  }
  return table;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.ok ? "PASS " : "FAIL ") << c.id << ' ' << c.detail << '\n';
  return os.str();
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome pass(std::size_t checked) { return {true, "checked=" + std::to_string(checked)}; }
Outcome fail(std::string why) { return {false, std::move(why)}; }

// Shared exhaustive data, computed once per suite run.
struct Corpus {
  std::size_t n_max = 0;
  std::vector<std::vector<PlanarMap>> maps;            // by edge count 0..n_max
  std::vector<std::vector<DegreeTree>> trees;          // by size 0..n_max
  std::vector<std::vector<NewInterval>> intervals;     // by size 0..n_max+1
  std::vector<std::vector<DyckPath>> paths;            // by size 0..n_max+1
};

bool connected_without(const PlanarMap& m, EdgeId skip) {
  auto verts = m.vertices();
  std::vector<char> seen(m.vertex_slots(), 0);
  std::vector<VertexId> stack{m.vertex(2 * skip)};
  seen[stack.back()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (Dart d : m.rotation(x)) {
      if (edge_of(d) == skip) continue;
      VertexId y = m.vertex(mate(d));
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == verts.size();
}

bool euler_holds(const PlanarMap& m) {
  auto v = static_cast<long>(m.vertex_count());
  auto e = static_cast<long>(m.edge_count());
  auto f = static_cast<long>(m.face_orbits().size());
  return v - e + f == 2;
}

std::string tree_text(const DegreeTree& dt) { return dt.to_string(); }

using Check = std::function<Outcome(const Corpus&)>;

std::vector<std::pair<std::string, Check>> all_checks() {
  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("count.families", [](const Corpus& c) {
    std::ostringstream detail;
    for (std::size_t n = 1; n <= c.n_max; ++n) {
      BigInt formula = count_formula(n + 1);
      std::size_t maps = c.maps[n].size();
      std::size_t trees = c.trees[n].size();
      std::size_t intervals = c.intervals[n + 1].size();
      if (BigInt(maps) != formula || BigInt(trees) != formula || BigInt(intervals) != formula) {
        std::ostringstream os;
        os << "n=" << n << " maps=" << maps << " trees=" << trees << " intervals=" << intervals
           << " formula=" << formula;
        return fail(os.str());
      }
      detail << (n > 1 ? "," : "counts=") << maps;
    }
    return Outcome{true, detail.str()};
  });

  checks.emplace_back("dyck.nesting", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.paths) {
      for (const auto& p : level) {
        std::vector<std::size_t> up_pos;
        for (std::size_t pos = 1; pos <= p.length(); ++pos) {
          if (p.step(pos) == 'u') up_pos.push_back(pos);
        }
        for (std::size_t i = 1; i <= p.size(); ++i) {
          for (std::size_t j = i + 1; j <= p.size(); ++j) {
            std::size_t mi = match_index(p, i);
            std::size_t mj = match_index(p, j);
            if (up_pos[j - 1] < mi && mj > mi) return fail("crossing pairs in " + p.word());
          }
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("dyck.tamari_partial_order", [](const Corpus& c) {
    std::size_t checked = 0;
    for (std::size_t n = 0; n < c.paths.size() && n <= 6; ++n) {
      const auto& ps = c.paths[n];
      std::vector<BracketVector> v;
      for (const auto& p : ps) v.push_back(bracket_vector(p));
      std::size_t k = v.size();
      std::vector<char> leq(k * k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = tamari_leq(v[a], v[b]);
      }
      for (std::size_t a = 0; a < k; ++a) {
        if (!leq[a * k + a]) return fail("not reflexive at " + ps[a].word());
        for (std::size_t b = 0; b < k; ++b) {
          if (a != b && leq[a * k + b] && leq[b * k + a]) return fail("not antisymmetric");
          if (!leq[a * k + b]) continue;
          for (std::size_t d = 0; d < k; ++d) {
            if (leq[b * k + d] && !leq[a * k + d]) return fail("not transitive");
          }
        }
      }
      checked += k;
    }
    return pass(checked);
  });

  checks.emplace_back("dyck.no_type_pair_10", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.intervals) {
      for (const auto& interval : level) {
        auto lower = type_word(interval.lower());
        auto upper = type_word(interval.upper());
        for (std::size_t i = 0; i < lower.size(); ++i) {
          if (lower[i] == '1' && upper[i] == '0') return fail("pair (1,0) in " + interval.to_string());
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("dyck.rising_contacts_root_degree", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.paths) {
      for (const auto& p : level) {
        if (rising_contacts(p) != dyck_to_plane_tree(p).children(0).size()) return fail(p.word());
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("dyck.plane_tree_roundtrip", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.paths) {
      for (const auto& p : level) {
        auto t = dyck_to_plane_tree(p);
        if (t.node_count() != p.size() + 1 || plane_tree_to_dyck(t) != p) return fail(p.word());
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("tree.label_formula", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        const auto& t = dt.tree();
        auto labels = node_labels(dt);
        for (NodeId v = 0; v < t.node_count(); ++v) {
          std::int64_t sum = 0;
          for (NodeId x = v + 1; x <= t.subtree_last(v); ++x) sum += static_cast<std::int64_t>(dt.edge_label(x));
          if (labels[v] != static_cast<std::int64_t>(t.subtree_size(v)) - sum) {
            return fail("descendant formula fails on " + tree_text(dt));
          }
          if (labels[v] < 0 || (labels[v] == 0) != t.is_leaf(v)) return fail("sign fails on " + tree_text(dt));
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("tree.stats_partition", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        auto s = tree_stats(dt);
        if (s.lnode + s.znode + s.pnode != dt.node_count()) return fail(tree_text(dt));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("tree.node_label_roundtrip", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        if (edge_labels_from_node_labels(dt.tree(), node_labels(dt)) != dt) return fail(tree_text(dt));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("map.valid_euler_even_faces", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        if (auto v = validate(m); !v) return fail(v.message + ": " + canonical_code(m));
        if (!euler_holds(m)) return fail("Euler: " + canonical_code(m));
        for (const auto& f : m.face_orbits()) {
          if (f.size() % 2 != 0) return fail("odd face: " + canonical_code(m));
        }
        auto s = map_stats(m);
        if (m.edge_count() > 0 && s.black + s.white + s.face != m.edge_count() + 2) return fail("stats Euler");
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("map.trace_euler", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        Trace forward;
        Trace backward;
        auto dt = map_to_tree(m, &forward);
        tree_to_map(dt, &backward);
        for (const auto* trace : {&forward, &backward}) {
          for (const auto& step : *trace) {
            if (!euler_holds(step.snapshot)) return fail("intermediate map of " + canonical_code(m));
            ++checked;
          }
        }
      }
    }
    return pass(checked);
  });

  checks.emplace_back("map.bridge_three_way", [](const Corpus& c) {
    std::size_t checked = 0;
    for (std::size_t n = 0; n < c.maps.size() && n <= 5; ++n) {
      for (const auto& m : c.maps[n]) {
        auto faces = m.face_orbits();
        std::vector<std::size_t> face_id(2 * m.edge_slots());
        for (std::size_t f = 0; f < faces.size(); ++f) {
          for (Dart d : faces[f]) face_id[d] = f;
        }
        for (EdgeId e : m.edges()) {
          bool by_faces = face_id[2 * e] == face_id[2 * e + 1];
          bool by_search = !connected_without(m, e);
          if (m.is_bridge(e) != by_faces || by_faces != by_search) return fail(canonical_code(m));
          ++checked;
        }
      }
    }
    return pass(checked);
  });

  checks.emplace_back("map.hypermap_roundtrip", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        auto h = to_hypermap(m);
        auto back = from_hypermap(h);
        if (to_hypermap(back) != h || canonical_code(back) != canonical_code(m)) return fail(canonical_code(m));
        if (parse_hypermap(format_hypermap(h)) != h) return fail("text roundtrip: " + canonical_code(m));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("map.outdeg_cycle", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        auto h = to_hypermap(m);
        std::size_t length = 0;
        if (h.n > 0) {
          std::size_t e = h.root;
          do {
            e = h.sigma[h.alpha[e]];
            ++length;
          } while (e != h.root);
        }
        if (length != map_stats(m).outdeg) return fail(canonical_code(m));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.roundtrip_map_tree_map", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        if (canonical_code(tree_to_map(map_to_tree(m))) != canonical_code(m)) return fail(canonical_code(m));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.roundtrip_tree_map_tree", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        if (map_to_tree(tree_to_map(dt)) != dt) return fail(tree_text(dt));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.roundtrip_interval_tree_interval", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.intervals) {
      for (const auto& interval : level) {
        if (tree_to_interval(interval_to_tree(interval)) != interval) return fail(interval.to_string());
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.roundtrip_tree_interval_tree", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        if (interval_to_tree(tree_to_interval(dt)) != dt) return fail(tree_text(dt));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.map_tree_statistics", [](const Corpus& c) {
    std::size_t checked = 0;
    for (std::size_t n = 1; n < c.maps.size(); ++n) {
      for (const auto& m : c.maps[n]) {
        auto dt = map_to_tree(m);
        if (!validate(dt) || dt.size() != n) return fail("invalid tree from " + canonical_code(m));
        auto ms = map_stats(m);
        auto ts = tree_stats(dt);
        if (ms.white != ts.lnode || ms.black != ts.znode || ms.face != 1 + ts.pnode || ms.outdeg != ts.rlabel) {
          return fail(canonical_code(m));
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.statistics", [](const Corpus& c) {
    std::size_t checked = 0;
    for (std::size_t n = 1; n < c.maps.size(); ++n) {
      for (const auto& m : c.maps[n]) {
        auto ms = map_stats(m);
        auto is = interval_stats(map_to_interval(m));
        if (ms.white != is.c00 || ms.black != is.c01 || ms.face != 1 + is.c11 || ms.outdeg + 1 != is.rcont) {
          return fail(canonical_code(m));
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.statistics_edgeless_exception", [](const Corpus&) {
    auto m = PlanarMap::edgeless();
    auto ms = map_stats(m);
    auto is = interval_stats(map_to_interval(m));
    bool expected = ms.white != is.c00 && ms.black != is.c01 && ms.face == 1 + is.c11 && ms.outdeg + 1 == is.rcont;
    std::ostringstream os;
    os << "map(white,black,face,outdeg)=(" << ms.white << ',' << ms.black << ',' << ms.face << ',' << ms.outdeg
       << ") interval(c00,c01,c11,rcont)=(" << is.c00 << ',' << is.c01 << ',' << is.c11 << ',' << is.rcont << ')';
    return Outcome{expected, os.str()};
  });

  checks.emplace_back("bij.working_shape", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        Trace trace;
        map_to_tree(m, &trace);
        for (const auto& step : trace) {
          if (step.kind != StepKind::prepare && step.kind != StepKind::backtrack) continue;
          if (auto v = check_working_shape(step); !v) return fail(v.message + ": " + canonical_code(m));
          ++checked;
        }
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.trace_reversal", [](const Corpus& c) {
    std::size_t checked = 0;
    auto inverse = [](StepKind k) {
      switch (k) {
        case StepKind::a1: return StepKind::a1p;
        case StepKind::a2: return StepKind::a2p;
        default: return StepKind::a3p;
      }
    };
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        Trace forward;
        Trace backward;
        tree_to_map(map_to_tree(m, &forward), &backward);
        std::vector<StepKind> expected;
        for (const auto& step : forward) {
          if (step.kind == StepKind::a1 || step.kind == StepKind::a2 || step.kind == StepKind::a3) {
            expected.push_back(inverse(step.kind));
          }
        }
        std::reverse(expected.begin(), expected.end());
        std::vector<StepKind> actual;
        for (const auto& step : backward) actual.push_back(step.kind);
        if (actual != expected) return fail(canonical_code(m));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.certificate_location", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        const auto& t = dt.tree();
        auto cert = certificates(dt);
        std::size_t total = 0;
        for (NodeId v = 0; v < t.node_count(); ++v) {
          NodeId w = cert.certificate[v];
          total += cert.multiplicity[v];
          if (w == v) continue;
          if (t.is_leaf(v)) return fail(tree_text(dt));
          NodeId first = t.children(v).front();
          if (!t.is_ancestor_or_self(first, w) || w == t.subtree_last(first)) return fail(tree_text(dt));
        }
        if (total != t.node_count()) return fail("multiplicities " + tree_text(dt));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.certificate_parenthesis", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        auto cert = certificates(dt).certificate;
        std::size_t k = cert.size();
        for (NodeId v = 0; v < k; ++v) {
          for (NodeId vp = v + 1; vp < k; ++vp) {
            NodeId w = cert[v];
            NodeId wp = cert[vp];
            if (vp < w && w < wp) return fail(tree_text(dt));
            if (vp != wp && w == vp) return fail(tree_text(dt));
          }
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.label_rising_contacts", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        auto interval = tree_to_interval(dt);
        for (NodeId v = 0; v < dt.node_count(); ++v) {
          if (dt.tree().is_leaf(v)) continue;
          if (rising_contacts(factor_between(interval.lower(), v + 1)) != dt.leftmost_label(v)) {
            return fail(tree_text(dt));
          }
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.upper_bracket_subtree_size", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.trees) {
      for (const auto& dt : level) {
        auto vq = bracket_vector(tree_to_interval(dt).upper());
        for (NodeId v = 0; v < dt.node_count(); ++v) {
          if (vq[v] != dt.tree().subtree_size(v)) return fail(tree_text(dt));
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.single_face_zero_labels", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        if (map_stats(m).face != 1) continue;
        auto labels = map_to_tree(m).edge_labels();
        if (std::any_of(labels.begin(), labels.end(), [](std::size_t x) { return x != 0; })) {
          return fail(canonical_code(m));
        }
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("bij.face_degree_multiset", [](const Corpus& c) {
    std::size_t checked = 0;
    for (const auto& level : c.maps) {
      for (const auto& m : level) {
        std::multiset<std::size_t> faces;
        auto outer = m.outer_face();
        for (const auto& f : m.face_orbits()) {
          if (!outer.empty() && std::find(f.begin(), f.end(), outer.front()) != f.end()) continue;
          if (outer.empty()) continue;
          faces.insert(f.size() / 2);
        }
        auto dt = map_to_tree(m);
        std::multiset<std::size_t> labels;
        for (std::size_t x : dt.edge_labels()) {
          if (x != 0) labels.insert(x);
        }
        auto lower = tree_to_interval(dt).lower();
        std::multiset<std::size_t> contacts;
        for (std::size_t i = 1; i <= lower.size(); ++i) {
          if (auto r = rising_contacts(factor_between(lower, i)); r != 0) contacts.insert(r);
        }
        if (faces != labels || labels != contacts) return fail(canonical_code(m));
        ++checked;
      }
    }
    return pass(checked);
  });

  checks.emplace_back("gf.identity", [](const Corpus& c) {
    GfTable maps;
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      for (const auto& m : c.maps[n]) {
        auto s = map_stats(m);
        maps.add({n, s.outdeg, s.black, s.white, s.face});
      }
    }
    GfTable intervals;
    for (std::size_t n = 1; n <= c.n_max + 1; ++n) {
      for (const auto& interval : c.intervals[n]) {
        auto s = interval_stats(interval);
        intervals.add({n, s.rcont - 1, s.c00, s.c01, s.c11});
      }
    }
    auto lhs = maps.shift_t(1);
    auto rhs = intervals.times_w();
    if (lhs != rhs) return fail("coefficient tables differ");
    return Outcome{true, "terms=" + std::to_string(lhs.coefficients().size())};
  });

  // w times the interval series from t^2 on; the t^1 term comes from the
  // edgeless map and is checked separately.
  auto weighted_intervals = [](const Corpus& c) {
    GfTable t;
    for (std::size_t n = 2; n <= c.n_max + 1; ++n) {
      for (const auto& interval : c.intervals[n]) {
        auto s = interval_stats(interval);
        t.add({n, s.rcont - 1, s.c00, s.c01, s.c11 + 1});
      }
    }
    return t;
  };
  static const std::array<std::array<std::size_t, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  checks.emplace_back("gf.symmetry_uvw", [weighted_intervals](const Corpus& c) {
    auto table = weighted_intervals(c).at_x_equal_one();
    for (const auto& p : perms) {
      if (table.permuted(p) != table) return fail("not symmetric under one permutation");
    }
    return Outcome{true, "permutations=6 terms=" + std::to_string(table.coefficients().size())};
  });

  checks.emplace_back("gf.symmetry_t1_exception", [](const Corpus& c) {
    GfTable t1;
    for (const auto& interval : c.intervals[1]) {
      auto s = interval_stats(interval);
      t1.add({1, s.rcont - 1, s.c00, s.c01, s.c11 + 1});
    }
    GfTable expected;
    expected.add({1, 0, 1, 0, 1});
    if (t1 != expected) return fail("t^1 term is not u*w");
    if (t1.permuted({1, 0, 2}) == t1) return fail("t^1 term unexpectedly symmetric");
    return Outcome{true, "t^1 term is u*w"};
  });

  checks.emplace_back("gf.symmetry_uv_with_x", [weighted_intervals](const Corpus& c) {
    auto table = weighted_intervals(c);
    if (table.permuted({1, 0, 2}) != table) return fail("u<->v swap changes the x-refined series");
    return Outcome{true, "terms=" + std::to_string(table.coefficients().size())};
  });

  checks.emplace_back("gf.symmetry_with_x_breaks", [weighted_intervals](const Corpus& c) {
    auto table = weighted_intervals(c);
    std::size_t broken = 0;
    for (const auto& p : perms) {
      bool swaps_uv_only = p == std::array<std::size_t, 3>{0, 1, 2} || p == std::array<std::size_t, 3>{1, 0, 2};
      if (!swaps_uv_only && table.permuted(p) != table) ++broken;
    }
    if (c.n_max + 1 < 3) return Outcome{true, "vacuous below t^3"};
    if (broken != 4) return fail("expected the four permutations moving w to break, got " + std::to_string(broken));
    return Outcome{true, "broken=4"};
  });

  checks.emplace_back("oracle.equivalence", [](const Corpus& c) {
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      std::set<std::string> oracle;
      for (const auto& m : c.maps[n]) oracle.insert(canonical_code(m));
      std::set<std::string> image;
      for (const auto& dt : c.trees[n]) image.insert(canonical_code(tree_to_map(dt)));
      if (oracle != image) return fail("n=" + std::to_string(n));
      checked += oracle.size();
    }
    return pass(checked);
  });

  return checks;
}

}  // namespace

VerifyReport verify_suite(std::size_t n_max) {
  Corpus corpus;
  corpus.n_max = n_max;
  corpus.maps.resize(n_max + 1);
  corpus.trees.resize(n_max + 1);
  corpus.intervals.resize(n_max + 2);
  corpus.paths.resize(n_max + 2);
  {
    std::vector<std::future<void>> jobs;
    for (std::size_t n = 0; n <= n_max; ++n) {
      jobs.push_back(std::async(std::launch::async, [&corpus, n] { corpus.maps[n] = enum_maps_oracle(n); }));
      jobs.push_back(std::async(std::launch::async, [&corpus, n] { corpus.trees[n] = enum_degree_trees(n); }));
    }
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
      jobs.push_back(std::async(std::launch::async, [&corpus, n] {
        corpus.intervals[n] = enum_new_intervals(n);
        corpus.paths[n] = enum_dyck(n);
      }));
    }
    for (auto& job : jobs) job.get();
  }

  auto checks = all_checks();
  std::vector<std::future<CheckResult>> running;
  for (auto& [id, check] : checks) {
    running.push_back(std::async(std::launch::async, [&corpus, id = id, check = check] {
      try {
        auto outcome = check(corpus);
        return CheckResult{id, outcome.ok, outcome.detail};
      } catch (const std::exception& e) {
        return CheckResult{id, false, std::string("exception: ") + e.what()};
      }
    }));
  }
  VerifyReport report;
  for (auto& r : running) report.checks.push_back(r.get());
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace tamari
