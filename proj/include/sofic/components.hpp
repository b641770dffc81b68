#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

inline constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);

// Maximal strongly connected subgraphs that carry at least one edge. A vertex
// on no cycle belongs to no component.
struct ComponentInfo {
  std::vector<std::vector<VertexId>> components;  // ordered by smallest member
  std::vector<bool> is_source;
  // Common cardinality of the subset vertices of each component; empty when
  // the graph was not given as a subset graph or cardinalities differ.
  std::vector<std::optional<std::size_t>> multiplicity;
  std::vector<std::size_t> component_of;  // per vertex, kNoComponent if none

  std::size_t size() const { return components.size(); }
  // Component containing both endpoints of e, or kNoComponent.
  std::size_t component_of_edge(const LabeledGraph& g, EdgeId e) const;
  std::vector<std::size_t> source_components() const;
};

ComponentInfo components_and_sources(const LabeledGraph& g);
// Same, with `sets[v]` the subset carried by vertex v, so that M(C) is filled.
ComponentInfo components_and_sources(const LabeledGraph& g, std::span<const VertexSet> sets);

// True when every vertex can be reached from a vertex of a source component.
bool reachable_from_sources(const LabeledGraph& g, const ComponentInfo& info);

}  // namespace sofic
