// Prints one PASS/FAIL line per acceptance criterion. Usage:
//   acceptance <path-to-tamari-atlas>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tamari/bijections.hpp"
#include "tamari/enumeration.hpp"

using namespace tamari;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  std::vector<std::vector<PlanarMap>> maps;    // 0..6 edges
  std::vector<std::vector<DegreeTree>> trees;  // 0..7
  std::vector<std::vector<NewInterval>> intervals;  // 0..7
};

Verdict counting(const Corpus& c) {
  const std::array<std::uint64_t, 6> expected{1, 3, 12, 56, 288, 1584};
  std::ostringstream os;
  for (std::size_t n = 2; n <= 7; ++n) {
    std::uint64_t want = expected[n - 2];
    bool ok = c.intervals[n].size() == want && count_formula(n) == want && oracle::interval_count(n) == want &&
              c.trees[n - 1].size() == want && c.maps[n - 1].size() == want;
    if (!ok) return {false, "mismatch at n=" + std::to_string(n)};
    os << (n > 2 ? "," : "") << want;
  }
  return {true, "|I_n| = |T_n-1| = |M_n-1| = formula for n=2..7: " + os.str()};
}

Verdict roundtrips(const Corpus& c) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& dt : c.trees[n]) {
      if (map_to_tree(tree_to_map(dt)) != dt) return {false, "map_to_tree o tree_to_map at " + dt.to_string()};
      if (interval_to_tree(tree_to_interval(dt)) != dt) return {false, "interval_to_tree o tree_to_interval at " + dt.to_string()};
      count += 2;
    }
    for (const auto& m : c.maps[n]) {
      if (canonical_code(tree_to_map(map_to_tree(m))) != canonical_code(m)) return {false, canonical_code(m)};
      ++count;
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& i : c.intervals[n]) {
      if (tree_to_interval(interval_to_tree(i)) != i) return {false, i.to_string()};
      ++count;
    }
  }
  return {true, std::to_string(count) + " round trips, zero failures"};
}

Verdict statistics(const Corpus& c) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : c.maps[n]) {
      auto ms = map_stats(m);
      auto is = interval_stats(map_to_interval(m));
      if (ms.white != is.c00 || ms.black != is.c01 || ms.face != 1 + is.c11 || ms.outdeg + 1 != is.rcont) {
        return {false, canonical_code(m)};
      }
      ++count;
    }
  }
  auto ms = map_stats(PlanarMap::edgeless());
  auto is = interval_stats(map_to_interval(PlanarMap::edgeless()));
  bool exception = ms == MapStats{1, 0, 1, 0} && is == IntervalStats{1, 0, 0, 1} && ms.white != is.c00 &&
                   ms.black != is.c01 && ms.face == 1 + is.c11 && ms.outdeg + 1 == is.rcont;
  if (!exception) return {false, "edgeless map does not fail exactly as recorded"};
  return {true, std::to_string(count) + " maps with 1..5 edges; edgeless map fails white=c00 and black=c01 only, as recorded"};
}

// Returns pass=false because the full claim does not hold; see detail.
// `expected` is set when every part that can hold does hold and the
// failure is exactly the documented one.
Verdict generating_functions(const Corpus& c, bool& expected) {
  GfTable maps;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& m : c.maps[n]) {
      auto s = map_stats(m);
      maps.add({n, s.outdeg, s.black, s.white, s.face});
    }
  }
  GfTable intervals;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& i : c.intervals[n]) {
      auto s = interval_stats(i);
      intervals.add({n, s.rcont - 1, s.c00, s.c01, s.c11});
    }
  }
  auto wf = intervals.times_w();
  bool identity = maps.shift_t(1) == wf;

  const std::array<std::array<std::size_t, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  GfTable from2;
  GfTable t1;
  for (const auto& [k, v] : wf.coefficients()) (k[0] >= 2 ? from2 : t1).add(k, v);
  std::size_t full_ok = 0;
  std::size_t flat_ok = 0;
  std::size_t from2_flat_ok = 0;
  std::size_t from2_x_ok = 0;
  for (const auto& p : perms) {
    full_ok += wf.permuted(p) == wf;
    flat_ok += wf.at_x_equal_one().permuted(p) == wf.at_x_equal_one();
    from2_flat_ok += from2.at_x_equal_one().permuted(p) == from2.at_x_equal_one();
    from2_x_ok += from2.permuted(p) == from2;
  }
  GfTable uw;
  uw.add({1, 0, 1, 0, 1});
  expected = identity && from2_flat_ok == 6 && from2_x_ok == 2 && from2.permuted({1, 0, 2}) == from2 && t1 == uw;

  std::ostringstream os;
  os << "t*F_M = w*F_I through t^7: " << (identity ? "exact" : "MISMATCH")
     << "; w*F_I invariant under " << full_ok << "/6 permutations (" << flat_ok << "/6 at x=1)"
     << "; from t^2 on: " << from2_flat_ok << "/6 at x=1, " << from2_x_ok
     << "/6 with x; the t^1 term is u*w (edgeless map), and with x only u<->v survives";
  return {identity && full_ok == 6, os.str()};
}

Verdict oracle_equivalence(const Corpus& c) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::string> a;
    std::set<std::string> b;
    for (const auto& m : c.maps[n]) a.insert(canonical_code(m));
    for (const auto& dt : c.trees[n]) b.insert(canonical_code(tree_to_map(dt)));
    if (a != b) return {false, "sets differ at n=" + std::to_string(n)};
    count += a.size();
  }
  return {true, std::to_string(count) + " maps, canonical-code sets equal for n=0..5"};
}

Verdict structural_invariants(const Corpus& c) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& dt : c.trees[n]) {
      const auto& t = dt.tree();
      auto labels = node_labels(dt);
      for (NodeId v = 0; v < t.node_count(); ++v) {
        std::int64_t sum = 0;
        for (NodeId x = v + 1; x <= t.subtree_last(v); ++x) sum += static_cast<std::int64_t>(dt.edge_label(x));
        if (labels[v] != static_cast<std::int64_t>(t.subtree_size(v)) - sum) return {false, "label formula " + dt.to_string()};
        if (labels[v] < 0 || (labels[v] == 0) != t.is_leaf(v)) return {false, "label sign " + dt.to_string()};
      }
      ++count;
    }
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& dt : c.trees[n]) {
      const auto& t = dt.tree();
      auto cert = certificates(dt).certificate;
      auto interval = tree_to_interval(dt);
      auto vq = oracle::bracket(interval.upper().word());
      for (NodeId v = 0; v < t.node_count(); ++v) {
        NodeId w = cert[v];
        if (w != v) {
          NodeId first = t.children(v).front();
          if (!t.is_ancestor_or_self(first, w) || w == t.subtree_last(first)) return {false, "certificate location " + dt.to_string()};
        }
        for (NodeId vp = v + 1; vp < t.node_count(); ++vp) {
          if ((vp < w && w < cert[vp]) || (vp != cert[vp] && w == vp)) return {false, "certificate nesting " + dt.to_string()};
        }
        if (vq[v] != t.subtree_size(v)) return {false, "upper bracket " + dt.to_string()};
        if (!t.is_leaf(v) && rising_contacts(factor_between(interval.lower(), v + 1)) != dt.leftmost_label(v)) {
          return {false, "rising contacts " + dt.to_string()};
        }
      }
      count += 4;
    }
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& m : c.maps[n]) {
      Trace trace;
      map_to_tree(m, &trace);
      for (const auto& step : trace) {
        if (step.kind != StepKind::prepare && step.kind != StepKind::backtrack) continue;
        if (auto v = check_working_shape(step); !v) return {false, "working shape: " + v.message};
        ++count;
      }
    }
  }
  return {true, std::to_string(count) + " checks over labels, certificates, traces, rising contacts and upper brackets"};
}

Verdict multisets(const Corpus& c) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& m : c.maps[n]) {
      std::multiset<std::size_t> faces;
      auto outer = m.outer_face();
      for (const auto& f : m.face_orbits()) {
        if (!outer.empty() && std::find(f.begin(), f.end(), outer.front()) == f.end()) faces.insert(f.size() / 2);
      }
      auto dt = map_to_tree(m);
      std::multiset<std::size_t> labels;
      for (auto x : dt.edge_labels()) {
        if (x) labels.insert(x);
      }
      auto lower = tree_to_interval(dt).lower();
      std::multiset<std::size_t> contacts;
      for (std::size_t i = 1; i <= lower.size(); ++i) {
        if (auto r = rising_contacts(factor_between(lower, i))) contacts.insert(r);
      }
      if (faces != labels || labels != contacts) return {false, canonical_code(m)};
      ++count;
    }
  }
  return {true, std::to_string(count) + " maps"};
}

Verdict single_face(const Corpus& c) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& m : c.maps[n]) {
      if (map_stats(m).face != 1) continue;
      auto labels = map_to_tree(m).edge_labels();
      if (std::any_of(labels.begin(), labels.end(), [](std::size_t x) { return x != 0; })) return {false, canonical_code(m)};
      ++count;
    }
  }
  return {count == 197, std::to_string(count) + " plane trees, all labels zero"};
}

std::string run_binary(const std::string& binary, const std::string& args, const std::string& input) {
  auto path = std::filesystem::temp_directory_path() / "tamari_acceptance_input.txt";
  std::ofstream(path) << input;
  std::string command = "\"" + binary + "\" " + args + " --input \"" + path.string() + "\"";
  std::string out;
  if (FILE* pipe = popen(command.c_str(), "r")) {
    char buffer[256];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    if (pclose(pipe) != 0) out += "<nonzero exit>";
  }
  std::filesystem::remove(path);
  return out;
}

Verdict cli(const std::string& binary) {
  const std::map<std::string, std::string> text{{"map", "n=2\nsigma=(1 2)\nalpha=(1 2)\nroot=1\n"},
                                                {"tree", "(1:(0:()))\n"},
                                                {"interval", "uuddud;uuuddd\n"}};
  std::size_t ok = 0;
  std::string failed;
  for (const auto& [from, input] : text) {
    for (const auto& [to, expected] : text) {
      if (from == to) continue;
      auto got = run_binary(binary, "convert --from " + from + " --to " + to, input);
      if (got == expected) {
        ++ok;
      } else {
        failed += " " + from + "->" + to;
      }
    }
  }
  if (ok != 6) return {false, "failed:" + failed};
  return {true, "double edge, (1:(0:())) and uuddud;uuuddd convert byte-exactly in all 6 directions"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-tamari-atlas>\n";
    return 1;
  }
  Corpus c;
  for (std::size_t n = 0; n <= 6; ++n) c.maps.push_back(enum_maps_oracle(n));
  for (std::size_t n = 0; n <= 7; ++n) {
    c.trees.push_back(enum_degree_trees(n));
    c.intervals.push_back(enum_new_intervals(n));
  }

  bool documented_failure = false;
  std::vector<std::pair<std::string, Verdict>> rows;
  rows.emplace_back("counting", counting(c));
  rows.emplace_back("roundtrips", roundtrips(c));
  rows.emplace_back("statistics", statistics(c));
  rows.emplace_back("gf-symmetry", generating_functions(c, documented_failure));
  rows.emplace_back("oracle-equivalence", oracle_equivalence(c));
  rows.emplace_back("structural-invariants", structural_invariants(c));
  rows.emplace_back("face-multisets", multisets(c));
  rows.emplace_back("single-face", single_face(c));
  rows.emplace_back("cli", cli(argv[1]));

  bool all_ok = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& [name, v] = rows[k];
    std::cout << (v.pass ? "PASS " : "FAIL ") << k + 1 << ' ' << name << ": " << v.detail << '\n';
    // Criterion 4 cannot hold as stated; it must fail in exactly the known way.
    bool accepted = k == 3 ? (!v.pass && documented_failure) : v.pass;
    all_ok = all_ok && accepted;
  }
  return all_ok ? 0 : 1;
}
