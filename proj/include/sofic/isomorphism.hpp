#pragma once

#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

struct Isomorphism {
  bool isomorphic = false;
  std::vector<VertexId> vertex_map;  // vertex of the first graph -> vertex of the second
};

// Label-preserving isomorphism, labels matched by symbol name. Colour
// refinement followed by backtracking; intended for graphs with at most a
// few hundred vertices.
Isomorphism graphs_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2);

}  // namespace sofic
