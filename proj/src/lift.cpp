#include "sofic/lift.hpp"

#include <map>

#include "sofic/error.hpp"
#include "sofic/language.hpp"

namespace sofic {

namespace {

// Longest path of the stable core in which every component stretch has at
// most `cap` edges. States are (edge, length of the current stretch).
std::size_t longest_capped_path(const StableCore& core, const ComponentInfo& info, std::size_t cap) {
  const LabeledGraph& g = core.graph();
  const std::size_t width = cap + 1;
  std::vector<std::size_t> memo(g.edge_count() * width, 0);
  std::vector<std::uint8_t> state(g.edge_count() * width, 0);  // 0 new, 1 active, 2 done

  std::function<std::size_t(EdgeId, std::size_t)> longest = [&](EdgeId e, std::size_t run) -> std::size_t {
    const std::size_t key = e * width + run;
    if (state[key] == 2) return memo[key];
    if (state[key] == 1) throw ConstructionError("lift: stable core has a cycle outside its components");
    state[key] = 1;
    std::size_t best = 1;
    const std::size_t c = info.component_of_edge(g, e);
    for (EdgeId f : g.out_edges(g.edge(e).target)) {
      const std::size_t cf = info.component_of_edge(g, f);
      std::size_t next = 0;
      if (cf != kNoComponent) next = (cf == c) ? run + 1 : 1;
      if (next > cap) continue;
      best = std::max(best, 1 + longest(f, next));
    }
    state[key] = 2;
    memo[key] = best;
    return best;
  };

  std::size_t best = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::size_t run = info.component_of_edge(g, e) == kNoComponent ? 0 : 1;
    best = std::max(best, longest(e, run));
  }
  return best;
}

// Saturating count of paths with `length` edges.
std::size_t count_paths(const LabeledGraph& g, std::size_t length, std::size_t cap) {
  std::vector<std::size_t> ending(g.vertex_count(), 1);
  std::size_t total = 0;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<std::size_t> next(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) next[e.target] = std::min(cap, next[e.target] + ending[e.source]);
    ending = std::move(next);
  }
  for (std::size_t c : ending) total = std::min(cap, total + c);
  return total;
}

}  // namespace

LiftedConjugacy::LiftedConjugacy(std::shared_ptr<const LiftSetup> setup) : setup_(std::move(setup)) {
  longest_short_ = longest_capped_path(setup_->g_core(), setup_->g_components(), 8 * kappa());
  radius_ = longest_short_ + kappa();
}

EdgeId LiftedConjugacy::evaluate(std::span<const EdgeId> block) const {
  const std::size_t d = radius_;
  if (block.size() != 2 * d + 1) throw InvalidInput("lift: block length differs from 2D+1");
  const std::size_t kappa = this->kappa();
  const auto runs = component_intervals(setup_->g_core(), setup_->g_components(), block);
  const std::size_t c = d;

  std::vector<const ComponentInterval*> long_runs;
  for (const ComponentInterval& r : runs) {
    if (r.length() < long_run()) continue;
    if (r.begin + kappa <= c && c + kappa <= r.end) return phi_double_prime_on_core(*setup_, block, c - kappa, c + kappa)[0];
    long_runs.push_back(&r);
  }
  // Consecutive long stretches around the centre.
  const ComponentInterval* right = nullptr;
  const ComponentInterval* left = nullptr;
  for (const ComponentInterval* r : long_runs) {
    if (r->begin + kappa > c) {
      right = r;
      break;
    }
    left = r;
  }
  if (!left || !right) throw ConstructionError("lift: block has no long component stretch on both sides of its centre");
  const std::size_t i = left->end - 7 * kappa;
  const Path q = fill_gap(*setup_, block, i, left->end, right->begin, right->begin + 7 * kappa);
  return q[c - (i + kappa)];
}

Path LiftedConjugacy::apply(std::span<const EdgeId> window) const {
  const std::size_t len = 2 * radius_ + 1;
  if (window.size() < len) throw InvalidInput("lift: window shorter than 2D+1");
  Path out;
  for (std::size_t p = 0; p + len <= window.size(); ++p) out.push_back(evaluate(window.subspan(p, len)));
  return out;
}

Path LiftedConjugacy::apply_periodic(std::span<const EdgeId> cycle) const {
  if (cycle.empty()) throw InvalidInput("lift: empty cycle");
  const std::size_t t = cycle.size();
  const std::size_t d = radius_;
  Path unrolled;
  for (std::size_t p = 0; p < t + 2 * d; ++p) unrolled.push_back(cycle[(p + t * (d / t + 1) - d) % t]);
  return apply(unrolled);
}

SlidingBlockCode LiftedConjugacy::code() const {
  const LiftedConjugacy self = *this;
  const LabeledGraph& g = setup_->g_core().graph();
  auto rule = [self, &g](std::span<const SymbolId> block) -> std::optional<SymbolId> {
    if (!is_path(g, block)) return std::nullopt;
    return self.evaluate(block);
  };
  return SlidingBlockCode(Alphabet(g.edge_names()), Alphabet(setup_->h_core().graph().edge_names()), radius_, rule);
}

SlidingBlockCode LiftedConjugacy::tabulate(std::size_t limit) const {
  const LabeledGraph& g = setup_->g_core().graph();
  const std::size_t len = 2 * radius_ + 1;
  const std::size_t count = count_paths(g, len, limit + 1);
  if (count > limit) {
    throw LimitExceeded("lift: table of phi~ has more than " + std::to_string(limit) + " blocks of length " +
                            std::to_string(len),
                        count);
  }
  std::map<Block, SymbolId> table;
  for_each_path(g, len, [&](const Path& p) { table.emplace(p, evaluate(p)); });
  return SlidingBlockCode(Alphabet(g.edge_names()), Alphabet(setup_->h_core().graph().edge_names()), radius_,
                          std::move(table));
}

LiftedConjugacy lift_conjugacy(const ConjugacySquare& square, std::size_t budget) {
  return LiftedConjugacy(std::make_shared<const LiftSetup>(square, budget));
}

InducedFutureConjugacy::InducedFutureConjugacy(const LiftedConjugacy& lift)
    : lift_(lift),
      g_merge_(merged_graph(lift.setup().g_core().graph())),
      h_merge_(merged_graph(lift.setup().h_core().graph())) {}

InducedImage InducedFutureConjugacy::apply(std::span<const EdgeId> xi) const {
  const LabeledGraph& k = g_merge_.cover;
  const LabeledGraph& core = lift_.setup().g_core().graph();
  if (xi.empty() || !is_path(k, xi)) throw InvalidInput("psi_K: not a future-cover path");
  const Word label = path_label(k, xi);
  InducedImage result;
  for (VertexId u : g_merge_.classes[k.edge(xi.front()).source]) {
    Path x;
    VertexId at = u;
    for (SymbolId a : label) {
      auto e = core.find_edge(at, a);
      if (!e) break;
      x.push_back(*e);
      at = core.edge(*e).target;
    }
    if (x.size() != label.size()) continue;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (g_merge_.edge_map[x[p]] != xi[p]) throw ConstructionError("psi_K: preimage does not project onto the window");
    }
    ++result.preimages;
    Path image;
    for (EdgeId e : lift_.apply(x)) image.push_back(h_merge_.edge_map[e]);
    if (!result.image) {
      result.image = std::move(image);
    } else if (*result.image != image) {
      result.well_defined = false;
    }
  }
  if (result.preimages == 0) throw ConstructionError("psi_K: window has no stable-core preimage");
  return result;
}

}  // namespace sofic
