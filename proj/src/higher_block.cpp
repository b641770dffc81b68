#include "sofic/higher_block.hpp"

#include <algorithm>

#include "sofic/error.hpp"
#include "sofic/language.hpp"

namespace sofic {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

HigherBlock higher_block(const LabeledGraph& g, std::size_t n) {
  if (n < 2) throw InvalidInput("higher_block: block length must be at least 2");
  const Alphabet& labels = g.alphabet();
  const bool compact = std::all_of(labels.symbols().begin(), labels.symbols().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  auto composite_name = [&](const Word& w) {
    std::vector<std::string> parts;
    for (SymbolId s : w) parts.push_back(labels.name(s));
    return join(parts, compact ? "" : ".");
  };
  auto path_name = [&](std::span<const EdgeId> p) {
    std::vector<std::string> parts;
    for (EdgeId e : p) parts.push_back(g.edge_name(e));
    return join(parts, "|");
  };

  const std::vector<Path> vertex_paths = paths_of_length(g, n - 1);
  const std::vector<Path> edge_paths = paths_of_length(g, n);
  std::map<Path, VertexId> vertex_of;
  std::vector<std::string> vertex_names;
  for (const Path& p : vertex_paths) {
    vertex_of.emplace(p, static_cast<VertexId>(vertex_names.size()));
    vertex_names.push_back(path_name(p));
  }

  std::map<Word, SymbolId> composite_of;
  for (const Path& p : edge_paths) composite_of.emplace(path_label(g, p), 0);
  std::vector<std::string> composite_names;
  std::vector<SymbolId> composite_first;
  for (auto& [w, id] : composite_of) {
    id = static_cast<SymbolId>(composite_names.size());
    composite_names.push_back(composite_name(w));
    composite_first.push_back(w.front());
  }
  // Single-character symbols can make distinct words collide as names.
  {
    std::vector<std::string> sorted = composite_names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("higher_block: composite symbol names collide");
    }
  }

  std::vector<Edge> edges;
  std::map<Path, EdgeId> edge_of;
  for (const Path& p : edge_paths) {
    const VertexId s = vertex_of.at(Path(p.begin(), p.end() - 1));
    const VertexId t = vertex_of.at(Path(p.begin() + 1, p.end()));
    edge_of.emplace(p, static_cast<EdgeId>(edges.size()));
    edges.push_back({s, composite_of.at(path_label(g, p)), t});
  }

  HigherBlock hb{LabeledGraph(Alphabet(composite_names), vertex_names, edges), {}, {}, {}, {}};
  const std::size_t r = n - 1;
  const Alphabet g_edges(g.edge_names());
  const Alphabet h_edges(hb.graph.edge_names());

  std::vector<EdgeId> first_edge(edge_paths.size());
  for (const auto& [p, e] : edge_of) first_edge[e] = p.front();

  hb.phi = SlidingBlockCode(g_edges, h_edges, r, [edge_of, r](std::span<const SymbolId> b) -> std::optional<SymbolId> {
    auto it = edge_of.find(Path(b.begin() + static_cast<std::ptrdiff_t>(r), b.end()));
    if (it == edge_of.end()) return std::nullopt;
    return it->second;
  });
  hb.phi_inv = SlidingBlockCode(h_edges, g_edges, 0, [first_edge](std::span<const SymbolId> b) -> std::optional<SymbolId> {
    if (b[0] >= first_edge.size()) return std::nullopt;
    return first_edge[b[0]];
  });
  hb.psi = SlidingBlockCode(labels, hb.graph.alphabet(), r,
                            [composite_of, r](std::span<const SymbolId> b) -> std::optional<SymbolId> {
                              auto it = composite_of.find(Word(b.begin() + static_cast<std::ptrdiff_t>(r), b.end()));
                              if (it == composite_of.end()) return std::nullopt;
                              return it->second;
                            });
  hb.psi_inv = SlidingBlockCode(hb.graph.alphabet(), labels, 0,
                                [composite_first](std::span<const SymbolId> b) -> std::optional<SymbolId> {
                                  if (b[0] >= composite_first.size()) return std::nullopt;
                                  return composite_first[b[0]];
                                });
  return hb;
}

}  // namespace sofic
