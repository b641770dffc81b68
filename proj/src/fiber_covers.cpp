#include "sofic/fiber_covers.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sofic/error.hpp"

namespace sofic {

VertexSet strict_step(const LabeledGraph& g, VertexSet from, SymbolId a) {
  if (from.empty() || !from.subset_of(g.emitters(a))) return VertexSet();
  return g.step(from, a);
}

std::optional<MultiEdge> multi_edge(const LabeledGraph& g, VertexSet from, SymbolId a) {
  if (from.empty() || !from.subset_of(g.emitters(a))) return std::nullopt;
  MultiEdge m;
  m.label = a;
  m.source = from;
  from.for_each([&](VertexId v) {
    for (EdgeId e : g.out_edges(v, a)) {
      m.members.push_back(e);
      m.target.insert(g.edge(e).target);
    }
  });
  std::sort(m.members.begin(), m.members.end(), [&](EdgeId x, EdgeId y) {
    return std::pair(g.edge(x).source, g.edge(x).target) < std::pair(g.edge(y).source, g.edge(y).target);
  });
  return m;
}

std::string_view to_string(SeedOrigin origin) {
  switch (origin) {
    case SeedOrigin::tails:
      return "tails";
    case SeedOrigin::periodic:
      return "periodic";
    case SeedOrigin::closure:
      return "closure";
  }
  return "closure";
}

FiberGraph::FiberGraph(const LabeledGraph& base, std::vector<VertexSet> sets) : base_(base) {
  require_right_resolving(base, "G''");
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
  std::vector<std::string> names;
  for (VertexId v = 0; v < sets_.size(); ++v) {
    index_.emplace(sets_[v], v);
    names.push_back(base.set_name(sets_[v]));
  }
  std::vector<Edge> edges;
  for (VertexId v = 0; v < sets_.size(); ++v) {
    for (SymbolId a = 0; a < base.alphabet().size(); ++a) {
      auto m = multi_edge(base, sets_[v], a);
      if (!m) continue;
      auto t = index_.find(m->target);
      if (t == index_.end()) {
        throw ConstructionError("G'': vertex set is not forward closed at " + base.set_name(sets_[v]));
      }
      edges.push_back({v, a, t->second});
      multi_.push_back(std::move(*m));
    }
  }
  graph_ = LabeledGraph(base.alphabet(), std::move(names), std::move(edges));
}

std::optional<VertexId> FiberGraph::find(VertexSet s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> FiberGraph::find_edge(const MultiEdge& m) const {
  auto v = find(m.source);
  if (!v) return std::nullopt;
  auto e = graph_.find_edge(*v, m.label);
  if (!e || multi_[*e] != m) return std::nullopt;
  return e;
}

FiberGraph g_double_prime_full(const LabeledGraph& g) {
  require_right_resolving(g, "G''");
  if (g.vertex_count() > kFullModeCap) {
    throw LimitExceeded("G'': full mode supports at most " + std::to_string(kFullModeCap) + " base vertices",
                        g.vertex_count());
  }
  std::vector<VertexSet> sets;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.vertex_count()); ++bits) sets.emplace_back(bits);
  return FiberGraph(g, std::move(sets));
}

namespace {

std::vector<VertexSet> forward_closure(const LabeledGraph& g, const std::vector<VertexSet>& seeds) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> queue;
  for (VertexSet s : seeds) {
    if (s.empty()) throw InvalidInput("G'': empty seed set");
    if (seen.insert(s).second) queue.push_back(s);
  }
  std::vector<VertexSet> out;
  while (!queue.empty()) {
    const VertexSet f = queue.back();
    queue.pop_back();
    out.push_back(f);
    for (SymbolId a = 0; a < g.alphabet().size(); ++a) {
      const VertexSet t = strict_step(g, f, a);
      if (!t.empty() && seen.insert(t).second) queue.push_back(t);
    }
  }
  return out;
}

Word rotation(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(k + i) % w.size()]);
  return out;
}

}  // namespace

FiberGraph g_double_prime_seeded(const LabeledGraph& g, const std::vector<VertexSet>& seeds) {
  require_right_resolving(g, "G''");
  require_set_capacity(g, "G''");
  if (seeds.empty()) throw InvalidInput("G'': no seeds given");
  return FiberGraph(g, forward_closure(g, seeds));
}

std::vector<VertexSet> co_stable_sets(const LabeledGraph& g, std::size_t budget) {
  return stable_core(transpose(g), budget).core.sets();
}

FiberData fiber_sets_on_periodic(const LabeledGraph& g, const PeriodicWord& p) {
  require_set_capacity(g, "fiber sets");
  FiberData data;
  data.point = p;
  for (std::size_t k = 0; k < p.period(); ++k) {
    const BoolRelation e = omega_power(BoolRelation::for_word(g, rotation(p.word, k)));
    data.past.push_back(e.range());
    data.future.push_back(e.domain());
    data.fiber.push_back(e.range() & e.domain());
    if (data.fiber.back().empty()) {
      throw InvalidInput("fiber: periodic point " + format_periodic(g.alphabet(), p) + " is not realizable");
    }
  }
  return data;
}

std::vector<MultiEdge> beta_on_periodic(const LabeledGraph& g, const PeriodicWord& p) {
  require_right_resolving(g, "beta");
  const FiberData data = fiber_sets_on_periodic(g, p);
  const std::size_t t = p.period();
  std::vector<MultiEdge> out;
  for (std::size_t k = 0; k < t; ++k) {
    auto m = multi_edge(g, data.fiber[k], p.word[k]);
    if (!m || m->target != data.fiber[(k + 1) % t]) {
      throw ConstructionError("beta: fiber sets of " + format_periodic(g.alphabet(), p) +
                              " do not form a G'' path at phase " + std::to_string(k));
    }
    out.push_back(std::move(*m));
  }
  return out;
}

std::string to_string(const FiberCount& c) { return c.infinite ? "infinite" : std::to_string(c.count); }

FiberCount fiber_count_periodic(const LabeledGraph& g, const PeriodicWord& p) {
  const std::size_t n = g.vertex_count();
  const std::size_t t = p.period();
  const std::size_t total = n * t;
  auto id = [&](VertexId v, std::size_t k) { return k * n + v; };
  std::vector<std::vector<std::size_t>> succ(total), pred(total);
  for (std::size_t k = 0; k < t; ++k) {
    for (VertexId v = 0; v < n; ++v) {
      for (EdgeId e : g.out_edges(v, p.word[k])) {
        succ[id(v, k)].push_back(id(g.edge(e).target, (k + 1) % t));
        pred[id(g.edge(e).target, (k + 1) % t)].push_back(id(v, k));
      }
    }
  }
  // Trim to vertices with both a past and a future in the product.
  std::vector<bool> alive(total, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < total; ++x) {
      if (!alive[x]) continue;
      const bool has_out = std::any_of(succ[x].begin(), succ[x].end(), [&](std::size_t y) { return alive[y]; });
      const bool has_in = std::any_of(pred[x].begin(), pred[x].end(), [&](std::size_t y) { return alive[y]; });
      if (!has_out || !has_in) {
        alive[x] = false;
        changed = true;
      }
    }
  }
  FiberCount result;
  bool any = false;
  for (std::size_t x = 0; x < total; ++x) {
    if (!alive[x]) continue;
    any = true;
    const auto live_out = std::count_if(succ[x].begin(), succ[x].end(), [&](std::size_t y) { return alive[y]; });
    const auto live_in = std::count_if(pred[x].begin(), pred[x].end(), [&](std::size_t y) { return alive[y]; });
    if (live_out > 1 || live_in > 1) result.infinite = true;
    if (x < n) ++result.count;
  }
  if (!any) throw InvalidInput("fiber count: periodic point " + format_periodic(g.alphabet(), p) + " is not realizable");
  if (result.infinite) result.count = 0;
  return result;
}

GPrime g_prime(const LabeledGraph& g, std::size_t period_bound, std::size_t tail_bound, std::size_t budget) {
  require_right_resolving(g, "G'");
  require_set_capacity(g, "G'");
  GPrime result;

  // Fiber sets at the cut of points ...uuu.w1 | w2.vvv: a past set
  // intersected with a future set. Bounded tails come from the word oracle,
  // the exact census from the monoid.
  auto intersections = [](const std::vector<VertexSet>& past, const std::vector<VertexSet>& future) {
    std::set<std::uint64_t> out;
    for (VertexSet d : past) {
      for (VertexSet e : future) {
        const VertexSet f = d & e;
        if (!f.empty()) out.insert(f.bits());
      }
    }
    return out;
  };
  const LabeledGraph reversed = transpose(g);
  const std::vector<VertexSet> past = stable_core_oracle(g, tail_bound);
  const std::vector<VertexSet> future = stable_core_oracle(reversed, tail_bound);
  const std::set<std::uint64_t> tail_seeds = intersections(past, future);
  const std::set<std::uint64_t> exact_seeds =
      intersections(stable_core(g, budget).core.sets(), co_stable_sets(g, budget));

  std::set<std::uint64_t> periodic_seeds;
  for (const PeriodicWord& p : periodic_points(g, period_bound)) {
    for (VertexSet f : fiber_sets_on_periodic(g, p).fiber) periodic_seeds.insert(f.bits());
  }

  result.census.past_sets = past.size();
  result.census.future_sets = future.size();
  result.census.tail_seeds = tail_seeds.size();
  result.census.periodic_seeds = periodic_seeds.size();
  result.census.exact_seeds = exact_seeds.size();
  result.census.bounded_covers_exact =
      std::includes(tail_seeds.begin(), tail_seeds.end(), exact_seeds.begin(), exact_seeds.end());

  std::vector<VertexSet> seeds;
  for (auto bits : tail_seeds) seeds.emplace_back(bits);
  for (auto bits : periodic_seeds) seeds.emplace_back(bits);
  result.graph = g_double_prime_seeded(g, seeds);
  for (VertexSet s : result.graph.sets()) {
    if (tail_seeds.count(s.bits())) {
      result.origin.push_back(SeedOrigin::tails);
    } else if (periodic_seeds.count(s.bits())) {
      result.origin.push_back(SeedOrigin::periodic);
    } else {
      result.origin.push_back(SeedOrigin::closure);
    }
  }
  return result;
}

DominatedPath maximal_dominated_path(const StableCore& core, std::span<const EdgeId> gamma) {
  const LabeledGraph& g = core.base;
  const LabeledGraph& h = core.graph();
  require_right_resolving(g, "maximal_dominated_path");
  if (gamma.empty() || !is_path(h, gamma)) throw InvalidInput("maximal_dominated_path: not a stable-core path");
  const Word label = path_label(h, gamma);

  // Members of s(gamma) that can read the whole label.
  VertexSet start;
  core.core.set(h.edge(gamma.front()).source).for_each([&](VertexId v) {
    if (!g.step(VertexSet::singleton(v), label).empty()) start.insert(v);
  });
  if (start.empty()) throw ConstructionError("maximal_dominated_path: no source vertex follows the label");

  DominatedPath path;
  path.vertices.push_back(start);
  for (SymbolId a : label) {
    auto m = multi_edge(g, path.vertices.back(), a);
    if (!m) throw ConstructionError("maximal_dominated_path: dominated path is not a G'' path");
    path.vertices.push_back(m->target);
    path.edges.push_back(std::move(*m));
  }
  const VertexSet end = core.core.set(h.edge(gamma.back()).target);
  if (path.vertices.back() != end) {
    throw ConstructionError("maximal_dominated_path: terminal set differs from the target of the stable-core path");
  }
  // From the last cardinality change of gamma on, the dominated path runs
  // through the same sets.
  std::size_t stable_from = gamma.size();
  const std::size_t last = core.core.set(h.edge(gamma.back()).target).size();
  while (stable_from > 0 && core.core.set(h.edge(gamma[stable_from - 1]).target).size() == last) --stable_from;
  for (std::size_t j = stable_from; j < gamma.size(); ++j) {
    if (path.vertices[j + 1] != core.core.set(h.edge(gamma[j]).target)) {
      throw ConstructionError("maximal_dominated_path: dominated path leaves gamma on its stable stretch");
    }
  }
  return path;
}

}  // namespace sofic
