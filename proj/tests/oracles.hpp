#pragma once

// Brute-force reference implementations used to cross-check the library.
// They deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tamari/planar_map.hpp"

namespace oracle {

inline bool is_dyck_word(const std::string& w) {
  long h = 0;
  for (char c : w) {
    h += c == 'u' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

// Every u/d word of length 2n that is a Dyck word, found by scanning all 4^n
// binary strings.
inline std::vector<std::string> dyck_words(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
    std::string w;
    for (std::size_t k = 0; k < 2 * n; ++k) w += (bits >> (2 * n - 1 - k)) & 1 ? 'u' : 'd';
    if (is_dyck_word(w)) out.push_back(w);
  }
  return out;
}

// Heights before each step; the match of an up step at p is the first later
// step ending at the height the up step started from.
inline std::vector<std::size_t> bracket(const std::string& w) {
  std::vector<long> before(w.size());
  long h = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    before[k] = h;
    h += w[k] == 'u' ? 1 : -1;
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] != 'u') continue;
    std::size_t q = p + 1;
    while (!(w[q] == 'd' && before[q] == before[p] + 1)) ++q;
    out.push_back((q - p - 1) / 2);
  }
  return out;
}

inline bool new_interval(const std::string& p, const std::string& q) {
  auto vp = bracket(p);
  auto vq = bracket(q);
  std::size_t n = vp.size();
  if (n == 0 || vq[0] != n - 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (vp[i] > vq[i]) return false;
    if (vq[i] > 0 && i + 1 < n && vp[i] > vq[i + 1]) return false;
  }
  return true;
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    row[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) row[a][b] = row[a - 1][b - 1] + row[a - 1][b];
  }
  return row[n][k];
}

// 3 * 2^(n-2) * binom(2n-2, n-1) / (n (n+1)), for n >= 2.
inline std::uint64_t interval_count(std::size_t n) {
  return 3 * (std::uint64_t{1} << (n - 2)) * binomial(2 * n - 2, n - 1) / (n * (n + 1));
}

inline std::size_t cycles(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

// Rooted bipartite planar maps with n >= 1 edges, counted as labeled
// permutation pairs divided by the (n-1)! relabelings fixing the root edge.
inline std::uint64_t map_count(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::uint64_t labeled = 0;
  do {
    std::vector<std::size_t> a(n);
    std::iota(a.begin(), a.end(), 0);
    do {
      std::vector<std::size_t> sa(n);
      for (std::size_t e = 0; e < n; ++e) sa[e] = s[a[e]];
      if (cycles(s) + cycles(a) + cycles(sa) != n + 2) continue;
      std::vector<bool> seen(n);
      std::vector<std::size_t> stack{0};
      seen[0] = true;
      std::size_t reach = 1;
      while (!stack.empty()) {
        auto e = stack.back();
        stack.pop_back();
        for (auto f : {s[e], a[e]}) {
          if (!seen[f]) {
            seen[f] = true;
            ++reach;
            stack.push_back(f);
          }
        }
      }
      if (reach == n) ++labeled;
    } while (std::next_permutation(a.begin(), a.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k < n; ++k) fact *= k;
  return labeled / fact;
}

// Plane tree given by children lists (node 0 is the root), read off a Dyck
// word without going through the library.
struct Tree {
  std::vector<std::vector<std::size_t>> kids;
};

inline Tree tree_of(const std::string& w) {
  Tree t;
  t.kids.emplace_back();
  std::vector<std::size_t> path{0};
  for (char c : w) {
    if (c == 'u') {
      t.kids.emplace_back();
      t.kids[path.back()].push_back(t.kids.size() - 1);
      path.push_back(t.kids.size() - 1);
    } else {
      path.pop_back();
    }
  }
  return t;
}

// Number of degree trees with n edges: every plane tree, every choice of
// leftmost labels in [0, n], kept when the definition's conditions hold.
inline std::uint64_t degree_tree_count(std::size_t n) {
  std::uint64_t total = 0;
  for (const auto& w : dyck_words(n)) {
    Tree t = tree_of(w);
    std::vector<std::size_t> internal;
    for (std::size_t v = 0; v < t.kids.size(); ++v) {
      if (!t.kids[v].empty()) internal.push_back(v);
    }
    std::vector<std::size_t> a(internal.size(), 0);
    while (true) {
      std::vector<long> label(t.kids.size(), 0);
      bool ok = true;
      for (std::size_t k = internal.size(); k-- > 0;) {
        std::size_t v = internal[k];
        long sum = 0;
        for (auto c : t.kids[v]) sum += label[c];
        if (static_cast<long>(a[k]) > label[t.kids[v].front()]) ok = false;
        label[v] = static_cast<long>(t.kids[v].size()) - static_cast<long>(a[k]) + sum;
      }
      if (ok) ++total;
      std::size_t k = 0;
      while (k < a.size() && a[k] == n) a[k++] = 0;
      if (k == a.size()) break;
      ++a[k];
    }
  }
  return total;
}

// Small hand-built maps. Edge e has darts 2e (black end) and 2e+1.
inline tamari::PlanarMap single_edge() {
  using tamari::Color;
  return tamari::PlanarMap::from_rotations({Color::black, Color::white}, {{0}, {1}}, 0);
}

inline tamari::PlanarMap double_edge() {
  using tamari::Color;
  return tamari::PlanarMap::from_rotations({Color::black, Color::white}, {{0, 2}, {1, 3}}, 0);
}

// b - w - b rooted at an end.
inline tamari::PlanarMap path_bwb() {
  using tamari::Color;
  return tamari::PlanarMap::from_rotations({Color::black, Color::white, Color::black}, {{0}, {1, 3}, {2}}, 0);
}

}  // namespace oracle
