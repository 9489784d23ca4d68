#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tamari/degree_tree.hpp"
#include "tamari/dyck.hpp"
#include "tamari/planar_map.hpp"

namespace tamari {

using BigInt = boost::multiprecision::cpp_int;

// Lexicographic with 'd' < 'u'.
std::vector<DyckPath> enum_dyck(std::size_t n);
// All new intervals of size n >= 1, ordered by (lower, upper).
std::vector<NewInterval> enum_new_intervals(std::size_t n);
// Plane trees in the order of their Dyck words, then all valid labelings.
std::vector<DegreeTree> enum_degree_trees(std::size_t n);
// Every rooted bipartite planar map with n edges, built from permutation
// pairs with the root on edge 1 and deduplicated. Ordered by canonical code.
std::vector<PlanarMap> enum_maps_oracle(std::size_t n);

// Number of new intervals of size n; throws Error for n < 2.
BigInt count_formula(std::size_t n);

enum class Family { intervals, maps };

// Coefficients of t^n x^i u^j v^k w^l, keyed by (n, i, j, k, l).
class GfTable {
 public:
  using Key = std::array<std::size_t, 5>;

  void add(const Key& key, const BigInt& count = 1);
  const std::map<Key, BigInt>& coefficients() const { return coeffs_; }
  BigInt at(const Key& key) const;

  GfTable shift_t(std::size_t by) const;
  GfTable times_w() const;
  // Renames (u, v, w): the exponent of variable p becomes the exponent of
  // variable perm[p].
  GfTable permuted(const std::array<std::size_t, 3>& perm) const;
  GfTable at_x_equal_one() const;
  GfTable truncated(std::size_t max_n) const;

  // Sorted lines "n i j k l count".
  std::string dump() const;

  friend bool operator==(const GfTable&, const GfTable&) = default;

 private:
  std::map<Key, BigInt> coeffs_;
};

// Intervals of size 1..max_n, or maps with 0..max_n edges.
GfTable gf_table(Family family, std::size_t max_n);

struct CheckResult {
  std::string id;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  // One line per check: "PASS|FAIL <id> <detail>".
  std::string text() const;
};

// Runs every invariant check with maps and trees up to n_max edges and
// intervals up to size n_max + 1. Checks run concurrently; the report is
// sorted by check id.
VerifyReport verify_suite(std::size_t n_max);

}  // namespace tamari
