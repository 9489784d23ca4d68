#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tamari/degree_tree.hpp"
#include "tamari/dyck.hpp"
#include "tamari/error.hpp"
#include "tamari/planar_map.hpp"

namespace tamari {

// a1..a3 are the advance cases of map_to_tree; a1p..a3p their counterparts
// in tree_to_map.
enum class StepKind { a1, a2, a3, a1p, a2p, a3p, prepare, backtrack };

std::string_view to_string(StepKind kind);

// Snapshot of the tagged working map after one step. current and pending are
// only meaningful for map_to_tree; pending is no_dart once nothing is left.
struct TraceStep {
  StepKind kind = StepKind::prepare;
  PlanarMap snapshot;
  VertexId current = no_vertex;
  Dart pending = no_dart;
};

using Trace = std::vector<TraceStep>;

DegreeTree map_to_tree(const PlanarMap& m, Trace* trace = nullptr);
PlanarMap tree_to_map(const DegreeTree& dt, Trace* trace = nullptr);

// Checks the shape a working map must have after every prepare step of
// map_to_tree: the tree edges form a tree, every map component hangs from a
// single distinct vertex of the leftmost branch, the current vertex is the
// deepest of those, and pending opens the block of map darts there.
Validation check_working_shape(const TraceStep& step);

struct CertificateAssignment {
  std::vector<NodeId> certificate;
  std::vector<std::size_t> multiplicity;
};

CertificateAssignment certificates(const DegreeTree& dt);

NewInterval tree_to_interval(const DegreeTree& dt);
DegreeTree interval_to_tree(const NewInterval& interval);

NewInterval map_to_interval(const PlanarMap& m);
PlanarMap interval_to_map(const NewInterval& interval);

}  // namespace tamari
