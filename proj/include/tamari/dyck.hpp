#pragma once

#include <cstddef>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/plane_tree.hpp"

namespace tamari {

// Balanced word over {u, d}. Step positions and up-step indices are 1-based
// in the public interface.
class DyckPath {
 public:
  DyckPath() = default;

  // Throws Error unless `word` is a Dyck word over {u, d}.
  static DyckPath parse(std::string_view word);

  std::size_t size() const { return word_.size() / 2; }
  std::size_t length() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  const std::string& word() const { return word_; }

  // Step at 1-based position pos.
  char step(std::size_t pos) const { return word_.at(pos - 1); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::string word) : word_(std::move(word)) {}
  std::string word_;
};

// Entry i-1 holds V_P(i), the size of the factor enclosed by the i-th up step.
using BracketVector = std::vector<std::size_t>;

// Position (1-based) of the down step matching the i-th up step.
std::size_t match_index(const DyckPath& p, std::size_t i);
BracketVector bracket_vector(const DyckPath& p);
// Factor strictly between the i-th up step and its match.
DyckPath factor_between(const DyckPath& p, std::size_t i);

// Pointwise bracket-vector comparison. Throws on size mismatch.
bool tamari_leq(const DyckPath& lower, const DyckPath& upper);
bool tamari_leq(const BracketVector& lower, const BracketVector& upper);

// Letter i is '1' iff the i-th up step is immediately followed by an up step.
std::string type_word(const DyckPath& p);
std::size_t rising_contacts(const DyckPath& p);

// New-interval predicate. The upper path must enclose everything in its first
// up step (V_Q(1) = n - 1), and V_P(i) <= V_Q(i+1) wherever V_Q(i) > 0.
bool is_new_interval(const DyckPath& lower, const DyckPath& upper);
bool is_new_interval(const BracketVector& lower, const BracketVector& upper);

// Depth-evolution encoding: u descends to the next child, d climbs back.
PlaneTree dyck_to_plane_tree(const DyckPath& p);
DyckPath plane_tree_to_dyck(const PlaneTree& t);

class NewInterval {
 public:
  // Throws Error unless [lower, upper] is a new interval of size >= 1.
  NewInterval(DyckPath lower, DyckPath upper);

  // Text form "<lower>;<upper>".
  static NewInterval parse(std::string_view text);
  std::string to_string() const;

  const DyckPath& lower() const { return lower_; }
  const DyckPath& upper() const { return upper_; }
  std::size_t size() const { return lower_.size(); }

  friend bool operator==(const NewInterval&, const NewInterval&) = default;
  friend auto operator<=>(const NewInterval&, const NewInterval&) = default;

 private:
  DyckPath lower_;
  DyckPath upper_;
};

struct IntervalStats {
  std::size_t c00 = 0;
  std::size_t c01 = 0;
  std::size_t c11 = 0;
  std::size_t rcont = 0;

  friend bool operator==(const IntervalStats&, const IntervalStats&) = default;
};

IntervalStats interval_stats(const NewInterval& interval);
// Raw-pair form; throws Error if some index has type pair (1, 0).
IntervalStats interval_stats(const DyckPath& lower, const DyckPath& upper);

}  // namespace tamari
