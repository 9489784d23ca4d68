#include "tamari/dyck.hpp"

#include <string>

#include "tamari/error.hpp"

namespace tamari {

namespace {

// For each up step (0-based index) the 0-based position of its matching down.
std::vector<std::size_t> matches(const std::string& w) {
  std::vector<std::size_t> match;
  std::vector<std::size_t> open;  // up-step indices awaiting a match
  match.reserve(w.size() / 2);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == 'u') {
      open.push_back(match.size());
      match.push_back(0);
    } else {
      match[open.back()] = pos;
      open.pop_back();
    }
  }
  return match;
}

// 0-based position of the i-th (1-based) up step.
std::size_t up_position(const std::string& w, std::size_t i) {
  std::size_t seen = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == 'u' && ++seen == i) return pos;
  }
  throw Error("up-step index out of range");
}

void check_index(const DyckPath& p, std::size_t i) {
  if (i < 1 || i > p.size()) {
    throw Error("up-step index " + std::to_string(i) + " out of range 1.." +
                std::to_string(p.size()));
  }
}

}  // namespace

DyckPath DyckPath::parse(std::string_view word) {
  long height = 0;
  for (char c : word) {
    if (c == 'u') {
      ++height;
    } else if (c == 'd') {
      if (--height < 0) throw Error("dyck word '" + std::string(word) + "' falls below the axis");
    } else {
      throw Error("dyck word '" + std::string(word) + "' has a letter outside {u, d}");
    }
  }
  if (height != 0) throw Error("dyck word '" + std::string(word) + "' does not return to the axis");
  return DyckPath(std::string(word));
}

std::size_t match_index(const DyckPath& p, std::size_t i) {
  check_index(p, i);
  return matches(p.word())[i - 1] + 1;
}

BracketVector bracket_vector(const DyckPath& p) {
  const auto& w = p.word();
  auto match = matches(w);
  BracketVector v(match.size());
  std::size_t up = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] != 'u') continue;
    v[up] = (match[up] - pos - 1) / 2;
    ++up;
  }
  return v;
}

DyckPath factor_between(const DyckPath& p, std::size_t i) {
  check_index(p, i);
  const auto& w = p.word();
  std::size_t start = up_position(w, i);
  std::size_t end = matches(w)[i - 1];
  return DyckPath::parse(std::string_view(w).substr(start + 1, end - start - 1));
}

bool tamari_leq(const BracketVector& lower, const BracketVector& upper) {
  if (lower.size() != upper.size()) throw Error("tamari_leq: size mismatch");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) return false;
  }
  return true;
}

bool tamari_leq(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) throw Error("tamari_leq: size mismatch");
  return tamari_leq(bracket_vector(lower), bracket_vector(upper));
}

std::string type_word(const DyckPath& p) {
  if (p.empty()) throw Error("type_word: empty path");
  const auto& w = p.word();
  std::string out;
  out.reserve(p.size());
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == 'u') out.push_back(pos + 1 < w.size() && w[pos + 1] == 'u' ? '1' : '0');
  }
  return out;
}

std::size_t rising_contacts(const DyckPath& p) {
  std::size_t count = 0;
  long height = 0;
  for (char c : p.word()) {
    if (c == 'u') {
      if (height == 0) ++count;
      ++height;
    } else {
      --height;
    }
  }
  return count;
}

bool is_new_interval(const BracketVector& lower, const BracketVector& upper) {
  if (lower.size() != upper.size()) throw Error("is_new_interval: size mismatch");
  const std::size_t n = upper.size();
  if (n == 0) return false;
  if (upper[0] != n - 1) return false;
  if (!tamari_leq(lower, upper)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (upper[i] > 0 && lower[i] > upper[i + 1]) return false;
  }
  return true;
}

bool is_new_interval(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) throw Error("is_new_interval: size mismatch");
  return is_new_interval(bracket_vector(lower), bracket_vector(upper));
}

PlaneTree dyck_to_plane_tree(const DyckPath& p) {
  std::vector<std::vector<std::size_t>> children(1);
  std::vector<std::size_t> path{0};
  for (char c : p.word()) {
    if (c == 'u') {
      std::size_t node = children.size();
      children.emplace_back();
      children[path.back()].push_back(node);
      path.push_back(node);
    } else {
      path.pop_back();
    }
  }
  return PlaneTree::from_children(children, 0);
}

DyckPath plane_tree_to_dyck(const PlaneTree& t) {
  std::string w;
  w.reserve(2 * t.size());
  // Preorder numbering makes the depth profile recoverable from parents alone.
  for (NodeId v = 1; v < t.node_count(); ++v) {
    NodeId prev = v - 1;
    // Climb from the previous node up to the parent of v.
    while (prev != t.parent(v)) {
      w.push_back('d');
      prev = t.parent(prev);
    }
    w.push_back('u');
  }
  for (std::size_t d = t.node_count() > 1 ? t.depth(t.node_count() - 1) : 0; d > 0; --d) {
    w.push_back('d');
  }
  return DyckPath::parse(w);
}

NewInterval::NewInterval(DyckPath lower, DyckPath upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) throw Error("new interval: paths of different sizes");
  if (lower_.empty()) throw Error("new interval: size must be at least 1");
  if (!is_new_interval(lower_, upper_)) {
    throw Error("not a new interval: " + lower_.word() + ";" + upper_.word());
  }
}

NewInterval NewInterval::parse(std::string_view text) {
  auto sep = text.find(';');
  if (sep == std::string_view::npos) throw Error("interval text must be '<lower>;<upper>'");
  return NewInterval(DyckPath::parse(text.substr(0, sep)), DyckPath::parse(text.substr(sep + 1)));
}

std::string NewInterval::to_string() const { return lower_.word() + ";" + upper_.word(); }

IntervalStats interval_stats(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) throw Error("interval_stats: size mismatch");
  IntervalStats s;
  auto tl = type_word(lower);
  auto tu = type_word(upper);
  for (std::size_t i = 0; i < tl.size(); ++i) {
    if (tl[i] == '0' && tu[i] == '0') {
      ++s.c00;
    } else if (tl[i] == '0') {
      ++s.c01;
    } else if (tu[i] == '1') {
      ++s.c11;
    } else {
      throw Error("interval_stats: type pair (1,0) at index " + std::to_string(i + 1));
    }
  }
  s.rcont = rising_contacts(lower);
  return s;
}

IntervalStats interval_stats(const NewInterval& interval) {
  return interval_stats(interval.lower(), interval.upper());
}

}  // namespace tamari
