#pragma once

// Small helpers and brute-force reference computations shared by the unit
// tests. Nothing here calls the library's set algorithms.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sofic/labeled_graph.hpp"

namespace test {

using sofic::LabeledGraph;

inline LabeledGraph make_graph(std::vector<std::string> alphabet, std::vector<std::string> vertices,
                               std::vector<std::array<std::string, 3>> edges) {
  sofic::GraphDescription d;
  d.alphabet = std::move(alphabet);
  d.vertices = std::move(vertices);
  for (auto& [f, l, t] : edges) d.edges.push_back({f, l, t});
  return sofic::validate_graph(d);
}

// Vertex sets as sorted vectors of indices.
using Members = std::vector<unsigned>;

inline Members step(const LabeledGraph& g, const Members& from, unsigned a) {
  std::set<unsigned> out;
  for (const auto& e : g.edges()) {
    if (e.label == a && std::find(from.begin(), from.end(), e.source) != from.end()) out.insert(e.target);
  }
  return {out.begin(), out.end()};
}

inline Members step(const LabeledGraph& g, Members from, const std::vector<unsigned>& word) {
  for (unsigned a : word) from = step(g, from, a);
  return from;
}

inline Members all_of(const LabeledGraph& g) {
  Members m;
  for (unsigned v = 0; v < g.vertex_count(); ++v) m.push_back(v);
  return m;
}

inline Members members_of(sofic::VertexSet s) {
  Members m;
  s.for_each([&](unsigned v) { m.push_back(v); });
  return m;
}

inline sofic::VertexSet to_set(const Members& m) {
  sofic::VertexSet s;
  for (unsigned v : m) s.insert(v);
  return s;
}

// Every word over the alphabet with length 1..n (not only the language).
inline std::vector<std::vector<unsigned>> all_words(std::size_t symbols, std::size_t n) {
  std::vector<std::vector<unsigned>> out, layer = {{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& w : layer) {
      for (unsigned a = 0; a < symbols; ++a) {
        auto u = w;
        u.push_back(a);
        next.push_back(u);
        out.push_back(u);
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Primitive words that are least among their rotations.
inline bool is_lyndon(const std::vector<unsigned>& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::vector<unsigned> rot(w.begin() + k, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + k);
    if (!(w < rot)) return false;
  }
  return true;
}

inline std::vector<unsigned> rotate(const std::vector<unsigned>& w, std::size_t k) {
  std::vector<unsigned> rot(w.begin() + k, w.end());
  rot.insert(rot.end(), w.begin(), w.begin() + k);
  return rot;
}

// Vertices of a right-resolving graph lying on a cycle labeled by a power of
// w (phase 0): follow w from v at most n times and see whether v recurs.
inline std::size_t periodic_cycle_vertices(const LabeledGraph& g, const std::vector<unsigned>& w) {
  std::size_t count = 0;
  for (unsigned v = 0; v < g.vertex_count(); ++v) {
    Members at = {v};
    for (std::size_t k = 0; k < g.vertex_count() && !at.empty(); ++k) {
      at = step(g, at, w);
      if (at == Members{v}) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace test
