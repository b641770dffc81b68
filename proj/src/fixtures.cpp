#include "sofic/fixtures.hpp"

#include <random>

#include "sofic/error.hpp"
#include "sofic/io.hpp"

namespace sofic {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::embedded_fixtures()) names.emplace_back(name);
  return names;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& [n, text] : detail::embedded_fixtures()) {
    if (n == name) return text;
  }
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

LabeledGraph fixture_graph(std::string_view name) { return parse_graph(fixture_text(name), name); }

LabeledGraph random_right_resolving(std::uint64_t seed, std::size_t max_vertices, std::size_t max_symbols) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (;;) {
    const std::size_t n = max_vertices < 2 ? 1 : 2 + rng() % (max_vertices - 1);
    const std::size_t k = 1 + rng() % max_symbols;
    std::vector<std::string> symbols, names;
    for (std::size_t a = 0; a < k; ++a) symbols.push_back(std::to_string(a));
    for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
      for (SymbolId a = 0; a < k; ++a) {
        if (rng() % 2) edges.push_back({v, a, static_cast<VertexId>(rng() % n)});
      }
    }
    try {
      LabeledGraph g = essentialize(LabeledGraph(Alphabet(symbols), names, edges));
      if (g.vertex_count() >= std::min<std::size_t>(2, n)) return g;
    } catch (const EmptyShift&) {
    }
  }
}

std::vector<LabeledGraph> random_fixtures(std::size_t count, std::uint64_t seed) {
  std::vector<LabeledGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_right_resolving(seed + i));
  return out;
}

}  // namespace sofic
