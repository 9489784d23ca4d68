#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/error.hpp"

namespace tamari {

enum class Color : std::uint8_t { black, white };
// Working-structure tag used while a bijection runs: edges still belonging to
// the map versus edges already moved into the tree under construction.
enum class EdgeTag : std::uint8_t { map, tree };

// Edge e owns darts 2e and 2e+1, so the mate of a dart flips its low bit.
using Dart = std::int32_t;
using EdgeId = std::int32_t;
using VertexId = std::int32_t;

inline constexpr Dart no_dart = -1;
inline constexpr VertexId no_vertex = -1;

constexpr Dart mate(Dart d) { return d ^ 1; }
constexpr EdgeId edge_of(Dart d) { return d >> 1; }

// A corner is named by the dart that follows it clockwise around its vertex.
// The only corner of an isolated vertex has next == no_dart.
struct Corner {
  VertexId vertex = no_vertex;
  Dart next = no_dart;
};

// Half-edge representation of a (possibly transiently non-bipartite) plane map.
//
// next_cw gives the clockwise successor of a dart around its vertex. Faces are
// the orbits of face_next(d) = next_cw(mate(d)) acting on corners; one step
// of that walk moves clockwise along the boundary of the outer face. The root
// is the corner preceding root_dart() around root_vertex().
//
// Surgery leaves dead slots behind instead of renumbering; compacted()
// renumbers edges and vertices densely.
class PlanarMap {
 public:
  PlanarMap() = default;

  // One black vertex, no edges.
  static PlanarMap edgeless();

  // rotations[v] lists the darts around vertex v in clockwise order. Darts must
  // be exactly 0 .. 2E-1, each appearing once. root must be a dart, or
  // no_dart when there are no edges (then root_vertex is vertex 0).
  static PlanarMap from_rotations(const std::vector<Color>& colors,
                                  const std::vector<std::vector<Dart>>& rotations, Dart root);

  VertexId add_vertex(Color color);
  void set_color(VertexId v, Color color) { vertices_.at(v).color = color; }

  // Inserts a new edge whose first dart enters corner a and second dart enters
  // corner b. Requires a and b on a common face, or on different components.
  EdgeId add_edge(Corner a, Corner b, EdgeTag tag = EdgeTag::map, int label = 0);
  void delete_edge(EdgeId e);
  // Merges the endpoint of dart 2e+1 into the endpoint of dart 2e, splicing
  // its rotation in place of the removed dart. Returns the surviving vertex.
  VertexId contract_edge(EdgeId e);
  // Moves the clockwise arc first..last of v's rotation onto a new vertex of
  // the same color. The two vertices are left unjoined.
  VertexId split_vertex(VertexId v, Dart first, Dart last);

  Dart next_cw(Dart d) const { return next_.at(d); }
  Dart prev_cw(Dart d) const { return prev_.at(d); }
  Dart face_next(Dart d) const { return next_.at(mate(d)); }
  VertexId vertex(Dart d) const { return vertex_.at(d); }

  Color color(VertexId v) const { return vertices_.at(v).color; }
  bool vertex_alive(VertexId v) const { return vertices_.at(v).alive; }
  bool edge_alive(EdgeId e) const { return vertex_.at(2 * e) != no_vertex; }
  std::size_t degree(VertexId v) const;
  // Darts around v in clockwise order, starting from `start` when given.
  std::vector<Dart> rotation(VertexId v, Dart start = no_dart) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  // Slot bounds, including dead entries.
  std::size_t vertex_slots() const { return vertices_.size(); }
  std::size_t edge_slots() const { return tag_.size(); }

  EdgeTag tag(EdgeId e) const { return tag_.at(e); }
  void set_tag(EdgeId e, EdgeTag t) { tag_.at(e) = t; }
  int label(EdgeId e) const { return label_.at(e); }
  void set_label(EdgeId e, int value) { label_.at(e) = value; }

  Dart root_dart() const { return root_dart_; }
  VertexId root_vertex() const;
  void set_root(Dart d);

  // Corner orbits. An isolated vertex contributes one face with no corners.
  std::vector<std::vector<Dart>> face_orbits() const;
  std::vector<Dart> face_of(Dart corner) const;
  // The face containing the root corner; empty for the edgeless map.
  std::vector<Dart> outer_face() const;
  Dart corner_walk_cw(Dart corner, std::size_t steps) const;
  bool is_bridge(EdgeId e) const;

  PlanarMap compacted() const;

 private:
  struct VertexRecord {
    Color color = Color::black;
    bool alive = true;
    Dart dart = no_dart;  // any dart at the vertex; no_dart when isolated
  };

  void insert_before(Dart d, Corner c);
  void unlink(Dart d);
  void check_dart(Dart d) const;

  std::vector<Dart> next_;
  std::vector<Dart> prev_;
  std::vector<VertexId> vertex_;
  std::vector<EdgeTag> tag_;
  std::vector<int> label_;
  std::vector<VertexRecord> vertices_;
  Dart root_dart_ = no_dart;
  VertexId root_vertex_ = no_vertex;
};

// Bipartite, connected, genus 0, black root vertex.
Validation validate(const PlanarMap& m);

struct MapStats {
  std::size_t black = 0;
  std::size_t white = 0;
  std::size_t face = 0;
  std::size_t outdeg = 0;

  friend bool operator==(const MapStats&, const MapStats&) = default;
};

MapStats map_stats(const PlanarMap& m);

// Permutation-pair encoding on edges 1..n (stored 0-based): sigma rotates
// edges clockwise around black vertices, alpha around white vertices, and
// faces are the cycles of e -> sigma(alpha(e)).
struct HypermapCode {
  std::size_t n = 0;
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> alpha;
  std::size_t root = 0;  // 0-based edge whose black corner is the root corner

  friend bool operator==(const HypermapCode&, const HypermapCode&) = default;
};

Validation validate(const HypermapCode& h);
std::size_t count_cycles(const std::vector<std::size_t>& perm);

// Edges are numbered breadth-first from the root edge following sigma then
// alpha, so isomorphic rooted maps produce identical codes.
HypermapCode to_hypermap(const PlanarMap& m);
PlanarMap from_hypermap(const HypermapCode& h);

// Text form: lines n=, sigma=, alpha=, root= (just n=0 for the edgeless map).
std::string format_hypermap(const HypermapCode& h);
HypermapCode parse_hypermap(std::string_view text);

// Single-line canonical string; equal iff the rooted maps are isomorphic.
std::string canonical_code(const PlanarMap& m);

// Single-line dump of a working map with tags and labels, for traces.
std::string format_working_map(const PlanarMap& m);

std::string to_dot(const PlanarMap& m, VertexId highlight = no_vertex);

}  // namespace tamari
