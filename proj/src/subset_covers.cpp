#include "sofic/subset_covers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "sofic/error.hpp"
#include "sofic/followers.hpp"

namespace sofic {

SetGraph::SetGraph(const LabeledGraph& base, std::vector<VertexSet> sets, std::vector<Edge> edges)
    : sets_(std::move(sets)) {
  std::vector<std::string> names;
  names.reserve(sets_.size());
  for (VertexId v = 0; v < sets_.size(); ++v) {
    index_.emplace(sets_[v], v);
    names.push_back(base.set_name(sets_[v]));
  }
  graph_ = LabeledGraph(base.alphabet(), std::move(names), std::move(edges));
}

std::optional<VertexId> SetGraph::find(VertexSet s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SetGraph build_set_graph(const LabeledGraph& base, std::vector<VertexSet> sets, std::string_view what) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::unordered_map<VertexSet, VertexId, VertexSetHash> index;
  for (VertexId v = 0; v < sets.size(); ++v) {
    if (sets[v].empty()) throw ConstructionError(std::string(what) + ": empty vertex set");
    index.emplace(sets[v], v);
  }
  std::vector<Edge> edges;
  for (VertexId v = 0; v < sets.size(); ++v) {
    for (SymbolId a = 0; a < base.alphabet().size(); ++a) {
      const VertexSet target = base.step(sets[v], a);
      if (target.empty()) continue;
      auto it = index.find(target);
      if (it == index.end()) {
        throw ConstructionError(std::string(what) + ": not hereditary, " + base.set_name(sets[v]) + " -" +
                                base.alphabet().name(a) + "-> " + base.set_name(target) + " leaves the vertex set");
      }
      edges.push_back({v, a, it->second});
    }
  }
  return SetGraph(base, std::move(sets), std::move(edges));
}

SetGraph subset_construction(const LabeledGraph& g, SubsetMode mode) {
  require_set_capacity(g, "subset_construction");
  std::vector<VertexSet> sets;
  if (mode == SubsetMode::full) {
    if (g.vertex_count() > kFullModeCap) {
      throw LimitExceeded("subset_construction: full mode supports at most " + std::to_string(kFullModeCap) +
                              " base vertices",
                          g.vertex_count());
    }
    const std::uint64_t count = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t bits = 1; bits < count; ++bits) sets.emplace_back(bits);
  } else {
    std::unordered_set<VertexSet, VertexSetHash> seen{g.all_vertices()};
    std::vector<VertexSet> queue{g.all_vertices()};
    while (!queue.empty()) {
      const VertexSet d = queue.back();
      queue.pop_back();
      sets.push_back(d);
      for (SymbolId a = 0; a < g.alphabet().size(); ++a) {
        const VertexSet t = g.step(d, a);
        if (!t.empty() && seen.insert(t).second) queue.push_back(t);
      }
    }
  }
  return build_set_graph(g, std::move(sets), "subset_construction");
}

StableCore stable_core(const LabeledGraph& g, std::size_t budget) {
  require_set_capacity(g, "stable_core");
  const TransitionMonoid monoid = TransitionMonoid::build(g, budget);
  // ran(e*m) for every idempotent e of the semigroup and every m of the
  // monoid; the first witness found for a set is kept.
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  std::vector<VertexSet> sets;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> first;
  for (std::size_t e : monoid.semigroup_idempotents()) {
    const VertexSet range = monoid.element(e).range();
    if (range.empty()) continue;
    for (std::size_t m = 0; m < monoid.size(); ++m) {
      const VertexSet d = monoid.element(m).image(range);
      if (d.empty()) continue;
      if (first.emplace(d, origin.size()).second) {
        origin.emplace_back(e, m);
        sets.push_back(d);
      }
    }
  }
  if (sets.empty()) throw EmptyShift("stable_core: no left-infinite labeled path");

  StableCore result;
  result.base = g;
  result.core = build_set_graph(g, sets, "stable_core");
  result.witnesses.resize(sets.size());
  for (const auto& [d, i] : first) {
    const auto v = *result.core.find(d);
    result.witnesses[v] = {monoid.nonempty_word(origin[i].first), monoid.word(origin[i].second)};
  }
  result.monoid_size = monoid.size();
  result.monoid_depth = monoid.max_word_length();
  return result;
}

std::vector<VertexSet> stable_core_oracle(const LabeledGraph& g, std::size_t bound) {
  if (bound < 1) throw InvalidInput("stable_core_oracle: tail bound must be at least 1");
  require_set_capacity(g, "stable_core_oracle");
  // Sets reached by ...uuu for every u up to the bound. The sequence of
  // ranges of R_u^k is decreasing, so it stabilizes. Words acting alike on
  // every single vertex give the same set, and so do their extensions, so
  // only the first word of each action is extended.
  std::unordered_set<VertexSet, VertexSetHash> tails;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Word> layer = {Word{}};
  for (std::size_t len = 1; len <= bound && !layer.empty(); ++len) {
    std::vector<Word> next_layer;
    for (const Word& w : layer) {
      for (SymbolId a = 0; a < g.alphabet().size(); ++a) {
        Word u = w;
        u.push_back(a);
        std::vector<std::uint64_t> action;
        bool alive = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          const VertexSet img = g.step(VertexSet::singleton(v), u);
          alive = alive || !img.empty();
          action.push_back(img.bits());
        }
        if (!alive || !seen.insert(action).second) continue;
        VertexSet t = g.all_vertices();
        while (true) {
          const VertexSet next = g.step(t, u);
          if (next == t) break;
          t = next;
        }
        if (!t.empty()) tails.insert(t);
        next_layer.push_back(std::move(u));
      }
    }
    layer = std::move(next_layer);
  }
  // Step every tail set by all words of length <= bound.
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> depth;
  std::vector<VertexSet> frontier;
  for (VertexSet t : tails) {
    depth.emplace(t, 0);
    frontier.push_back(t);
  }
  for (std::size_t d = 1; d <= bound && !frontier.empty(); ++d) {
    std::vector<VertexSet> next;
    for (VertexSet s : frontier) {
      for (SymbolId a = 0; a < g.alphabet().size(); ++a) {
        const VertexSet t = g.step(s, a);
        if (!t.empty() && depth.emplace(t, d).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<VertexSet> out;
  for (const auto& [s, d] : depth) out.push_back(s);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

CoverBundle merged_graph(const LabeledGraph& h) {
  const FollowerPartition partition = follower_partition(h);
  CoverBundle bundle;
  bundle.classes = partition.classes;
  bundle.vertex_map.assign(partition.class_of.begin(), partition.class_of.end());
  std::vector<std::string> names;
  for (const auto& cls : partition.classes) names.push_back(h.vertex_name(cls.front()));

  std::map<Edge, EdgeId> edge_ids;
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    const Edge merged{static_cast<VertexId>(bundle.vertex_map[e.source]), e.label,
                      static_cast<VertexId>(bundle.vertex_map[e.target])};
    auto [it, inserted] = edge_ids.emplace(merged, static_cast<EdgeId>(edges.size()));
    if (inserted) edges.push_back(merged);
    bundle.edge_map.push_back(it->second);
  }
  bundle.cover = LabeledGraph(h.alphabet(), std::move(names), std::move(edges));
  return bundle;
}

FutureCover future_cover(const LabeledGraph& g, std::size_t budget) {
  FutureCover fc;
  fc.past = stable_core(g, budget);
  fc.merge = merged_graph(fc.past.graph());
  return fc;
}

ExtendedFutureCover extended_future_cover(const LabeledGraph& g, std::size_t budget) {
  ExtendedFutureCover ext;
  ext.future = future_cover(g, budget);
  ext.extended = stable_core(ext.future.cover(), budget);
  ext.merge = merged_graph(ext.extended.graph());
  ext.to_future = graphs_isomorphic(ext.merge.cover, ext.future.cover());
  if (!ext.to_future.isomorphic) {
    throw ConstructionError("extended_future_cover: merged extended cover is not isomorphic to the future cover");
  }
  return ext;
}

VertexSet periodic_past_set(const LabeledGraph& g, std::span<const SymbolId> period) {
  return omega_power(BoolRelation::for_word(g, period)).range();
}

namespace {

Word rotation(const Word& w, std::size_t k) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(k + i) % w.size()]);
  return out;
}

}  // namespace

PeriodicRay alpha_on_periodic(const StableCore& core, const PeriodicWord& p) {
  const LabeledGraph& g = core.base;
  const std::size_t t = p.period();
  std::vector<VertexSet> past(t);
  for (std::size_t k = 0; k < t; ++k) {
    past[k] = periodic_past_set(g, rotation(p.word, k));
    if (past[k].empty()) {
      throw InvalidInput("alpha: periodic point " + format_periodic(g.alphabet(), p) + " is not realizable");
    }
  }
  PeriodicRay ray;
  for (std::size_t k = 0; k < t; ++k) {
    auto v = core.core.find(past[k]);
    if (!v) throw ConstructionError("alpha: past set " + g.set_name(past[k]) + " is not a stable-core vertex");
    const VertexSet next = g.step(past[k], p.word[k]);
    if (next != past[(k + 1) % t]) {
      throw ConstructionError("alpha: past sets of " + format_periodic(g.alphabet(), p) +
                              " do not follow the subset transitions");
    }
    auto e = core.graph().find_edge(*v, p.word[k]);
    if (!e) throw ConstructionError("alpha: missing stable-core edge");
    ray.vertices.push_back(*v);
    ray.edges.push_back(*e);
  }
  return ray;
}

PeriodicRay alpha_in_future_cover(const LabeledGraph& cover, const PeriodicWord& p) {
  require_right_resolving(cover, "alpha_in_future_cover");
  const std::size_t t = p.period();
  PeriodicRay ray;
  for (std::size_t k = 0; k < t; ++k) {
    const VertexSet past = periodic_past_set(cover, rotation(p.word, k));
    const std::vector<VertexId> members = past.members();
    std::optional<VertexId> top;
    for (VertexId u : members) {
      if (std::all_of(members.begin(), members.end(), [&](VertexId v) { return follower_contains(cover, v, u); })) {
        top = u;
        break;
      }
    }
    if (!top) {
      throw ConstructionError("alpha_in_future_cover: no vertex carries the future set of " +
                              format_periodic(cover.alphabet(), p));
    }
    ray.vertices.push_back(*top);
  }
  for (std::size_t k = 0; k < t; ++k) {
    auto e = cover.find_edge(ray.vertices[k], p.word[k]);
    if (!e || cover.edge(*e).target != ray.vertices[(k + 1) % t]) {
      throw ConstructionError("alpha_in_future_cover: future-set vertices are not joined by the labels");
    }
    ray.edges.push_back(*e);
  }
  return ray;
}

RegularityReport check_regular(const LabeledGraph& h, std::size_t budget) {
  require_right_resolving(h, "check_regular");
  const StableCore core = stable_core(h, budget);
  RegularityReport report;
  report.witness.assign(h.vertex_count(), std::nullopt);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    for (VertexSet d : core.core.sets()) {
      if (!d.contains(v)) continue;
      bool dominated = true;
      d.for_each([&](VertexId u) { dominated = dominated && follower_contains(h, u, v); });
      if (dominated) {
        report.witness[v] = d;
        break;
      }
    }
    if (!report.witness[v]) {
      report.regular = false;
      report.failing.push_back(v);
    }
  }
  return report;
}

}  // namespace sofic
