#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sofic/labeled_graph.hpp"

namespace sofic {

// Graphs shipped with the library (data/fixtures, embedded at build time).
std::vector<std::string> fixture_names();
std::string_view fixture_text(std::string_view name);
LabeledGraph fixture_graph(std::string_view name);

// Deterministic essential right-resolving graph with at most `max_vertices`
// vertices and `max_symbols` symbols. Every seed gives a graph with at least
// two vertices when max_vertices allows it.
LabeledGraph random_right_resolving(std::uint64_t seed, std::size_t max_vertices = 6, std::size_t max_symbols = 4);
std::vector<LabeledGraph> random_fixtures(std::size_t count, std::uint64_t seed);

}  // namespace sofic
