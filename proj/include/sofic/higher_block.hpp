#pragma once

#include "sofic/block_code.hpp"
#include "sofic/labeled_graph.hpp"

namespace sofic {

// n-block recoding of a labeled graph. Vertices are the paths with n-1
// edges, edges the paths with n edges, labeled by a composite symbol for the
// label word. The codes act on edge shifts (alphabets = edge names) and on
// label shifts.
struct HigherBlock {
  LabeledGraph graph;
  SlidingBlockCode phi;      // X_G -> X_G^[n], edge i -> path starting at i
  SlidingBlockCode phi_inv;  // first edge of the path
  SlidingBlockCode psi;      // label shift -> composite labels
  SlidingBlockCode psi_inv;  // first symbol of the composite
};

HigherBlock higher_block(const LabeledGraph& g, std::size_t n);

}  // namespace sofic
