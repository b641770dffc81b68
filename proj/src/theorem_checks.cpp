#include "sofic/theorem_checks.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sofic/error.hpp"
#include "sofic/followers.hpp"
#include "sofic/isomorphism.hpp"

namespace sofic {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  void fail(const std::string& what) { expect(false, what); }
  CheckResult done(std::string summary = {}) {
    if (result_.passed && result_.detail.empty()) result_.detail = std::move(summary);
    return result_;
  }

 private:
  CheckResult result_;
};

Word central(std::span<const SymbolId> w, std::size_t cut) {
  if (w.size() < 2 * cut) return {};
  return Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end() - static_cast<std::ptrdiff_t>(cut));
}

std::size_t count_paths(const LabeledGraph& g, std::size_t length, std::size_t cap) {
  std::vector<std::size_t> ending(g.vertex_count(), 1);
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<std::size_t> next(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) next[e.target] = std::min(cap, next[e.target] + ending[e.source]);
    ending = std::move(next);
  }
  std::size_t total = 0;
  for (std::size_t c : ending) total = std::min(cap, total + c);
  return total;
}

// Edges of g inside component c.
std::vector<EdgeId> component_edges(const LabeledGraph& g, const ComponentInfo& info, std::size_t c) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (info.component_of_edge(g, e) == c) out.push_back(e);
  }
  return out;
}

// Pairs of equally labeled edges from the two edge lists that lie on a
// bi-infinite path of the pair graph.
std::vector<std::pair<EdgeId, EdgeId>> surviving_pairs(const LabeledGraph& g, const std::vector<EdgeId>& a,
                                                       const std::vector<EdgeId>& b) {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (EdgeId e : a) {
    for (EdgeId f : b) {
      if (g.edge(e).label == g.edge(f).label) pairs.emplace_back(e, f);
    }
  }
  std::vector<bool> alive(pairs.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!alive[i]) continue;
      const auto [e, f] = pairs[i];
      bool has_next = false, has_prev = false;
      for (std::size_t j = 0; j < pairs.size() && !(has_next && has_prev); ++j) {
        if (!alive[j]) continue;
        const auto [e2, f2] = pairs[j];
        if (g.edge(e).target == g.edge(e2).source && g.edge(f).target == g.edge(f2).source) has_next = true;
        if (g.edge(e2).target == g.edge(e).source && g.edge(f2).target == g.edge(f).source) has_prev = true;
      }
      if (!has_next || !has_prev) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (alive[i]) out.push_back(pairs[i]);
  }
  return out;
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_oracle_equivalence(const LabeledGraph& g) {
  Recorder r("stable core = word oracle");
  const StableCore core = stable_core(g);
  const std::size_t bound = std::max<std::size_t>(1, core.monoid_depth);
  const std::vector<VertexSet> oracle = stable_core_oracle(g, bound);
  r.expect(oracle == core.core.sets(), "stable sets differ from the oracle at bound " + std::to_string(bound) + " (" +
                                           std::to_string(core.core.sets().size()) + " vs " +
                                           std::to_string(oracle.size()) + ")");
  return r.done(std::to_string(oracle.size()) + " sets, bound " + std::to_string(bound));
}

CheckResult check_cover_regularity(const LabeledGraph& g) {
  Recorder r("covers right-resolving and regular");
  const FutureCover fc = future_cover(g);
  r.expect(check_right_resolving(fc.past.graph()).right_resolving, "stable core is not right-resolving");
  const RegularityReport core_regular = check_regular(fc.past.graph());
  r.expect(core_regular.regular, "stable core is not regular at " +
                                     (core_regular.failing.empty()
                                          ? std::string("?")
                                          : fc.past.graph().vertex_name(core_regular.failing.front())));
  r.expect(check_right_resolving(fc.cover()).right_resolving, "future cover is not right-resolving");
  r.expect(is_follower_separated(fc.cover()), "future cover is not follower-separated");
  r.expect(check_regular(fc.cover()).regular, "future cover is not regular");
  return r.done();
}

CheckResult check_idempotence(const LabeledGraph& g) {
  Recorder r("future cover idempotent");
  const FutureCover once = future_cover(g);
  const FutureCover twice = future_cover(once.cover());
  r.expect(graphs_isomorphic(twice.cover(), once.cover()).isomorphic, "future cover of the future cover differs");
  return r.done();
}

CheckResult check_follower_language(const LabeledGraph& g, std::size_t length) {
  Recorder r("follower words of stable sets");
  const StableCore core = stable_core(g);
  for (VertexId v = 0; v < core.graph().vertex_count(); ++v) {
    r.expect(follower_words(core.graph(), VertexSet::singleton(v), length) ==
                 follower_words(g, core.core.set(v), length),
             "follower words differ at " + core.graph().vertex_name(v));
  }
  return r.done();
}

std::vector<CheckResult> check_periodic_identities(const LabeledGraph& g, std::size_t max_period,
                                                   std::size_t tail_bound) {
  Recorder beta("beta = alpha on periodic points");
  Recorder natural("f o alpha_G = alpha_Y");
  Recorder fibers("fiber count = M(C)");
  Recorder in_gprime("component edges in G'");

  const FutureCover fc = future_cover(g);
  const StableCore& core = fc.past;
  const ComponentInfo info = components_and_sources(core.graph(), core.core.sets());
  for (const PeriodicWord& p : periodic_points(g, max_period)) {
    const std::string name = format_periodic(g.alphabet(), p);
    const PeriodicRay alpha = alpha_on_periodic(core, p);
    const FiberData fiber = fiber_sets_on_periodic(g, p);
    bool same = true;
    for (std::size_t k = 0; k < p.period(); ++k) same = same && fiber.fiber[k] == core.core.set(alpha.vertices[k]);
    beta.expect(same, name + ": fiber sets differ from past sets");
    try {
      beta_on_periodic(g, p);
    } catch (const Error& e) {
      beta.fail(name + ": " + e.what());
    }

    const PeriodicRay alpha_y = alpha_in_future_cover(fc.cover(), p);
    bool commutes = true;
    for (std::size_t k = 0; k < p.period(); ++k) {
      commutes = commutes && fc.merge.vertex_map[alpha.vertices[k]] == alpha_y.vertices[k] &&
                 fc.merge.edge_map[alpha.edges[k]] == alpha_y.edges[k];
    }
    natural.expect(commutes, name + ": factor map does not carry alpha_G to alpha_Y");

    const std::size_t c = info.component_of[alpha.vertices.front()];
    if (c == kNoComponent) {
      fibers.fail(name + ": alpha ray outside every component");
      continue;
    }
    if (!info.is_source[c]) continue;
    const FiberCount count = fiber_count_periodic(g, p);
    fibers.expect(!count.infinite && info.multiplicity[c] && count.count == *info.multiplicity[c],
                  name + ": fiber count " + to_string(count) + " differs from M(C)");
  }

  const GPrime gp = g_prime(g, max_period, tail_bound);
  for (EdgeId e = 0; e < core.graph().edge_count(); ++e) {
    if (info.component_of_edge(core.graph(), e) == kNoComponent) continue;
    const Edge& ed = core.graph().edge(e);
    auto v = gp.graph.find(core.core.set(ed.source));
    auto f = v ? gp.graph.graph().find_edge(*v, ed.label) : std::nullopt;
    in_gprime.expect(f && gp.graph.set(gp.graph.graph().edge(*f).target) == core.core.set(ed.target),
                     core.graph().edge_name(e) + " is not an edge of G'");
  }
  return {beta.done(), natural.done(), in_gprime.done(), fibers.done()};
}

CheckResult check_source_injectivity(const LabeledGraph& g) {
  Recorder r("source components: labeling injective, languages disjoint");
  const StableCore core = stable_core(g);
  const LabeledGraph& h = core.graph();
  const ComponentInfo info = components_and_sources(h, core.core.sets());
  const auto sources = info.source_components();
  for (std::size_t c : sources) {
    const auto edges = component_edges(h, info, c);
    for (const auto& [e, f] : surviving_pairs(h, edges, edges)) {
      r.expect(e == f, "two paths in a source component share a label (" + h.edge_name(e) + ", " + h.edge_name(f) + ")");
    }
    for (std::size_t d : sources) {
      if (d <= c) continue;
      r.expect(surviving_pairs(h, edges, component_edges(h, info, d)).empty(),
               "two source components share a bi-infinite label");
    }
  }
  return r.done(std::to_string(sources.size()) + " source components");
}

std::vector<Path> sample_core_windows(const StableCore& core, const ComponentInfo& info, std::size_t length,
                                      std::size_t samples, std::uint64_t seed, std::size_t exhaustive_limit,
                                      bool& exhaustive) {
  const LabeledGraph& g = core.graph();
  exhaustive = count_paths(g, length, exhaustive_limit + 1) <= exhaustive_limit;
  if (exhaustive) return paths_of_length(g, length);

  std::mt19937_64 rng(seed);
  std::set<Path> windows;
  const std::size_t biases[] = {0, 500, 900, 980};  // per mille
  for (std::size_t bias : biases) {
    for (std::size_t s = 0; s < samples; ++s) {
      Path w;
      VertexId at = static_cast<VertexId>(rng() % g.vertex_count());
      while (w.size() < length) {
        auto out = g.out_edges(at);
        std::vector<EdgeId> choices(out.begin(), out.end());
        const std::size_t c = info.component_of[at];
        if (c != kNoComponent && rng() % 1000 < bias) {
          std::vector<EdgeId> staying;
          for (EdgeId e : choices) {
            if (info.component_of_edge(g, e) == c) staying.push_back(e);
          }
          if (!staying.empty()) choices = std::move(staying);
        }
        const EdgeId e = choices[rng() % choices.size()];
        w.push_back(e);
        at = g.edge(e).target;
      }
      windows.insert(std::move(w));
    }
  }
  return {windows.begin(), windows.end()};
}

TheoremReport verify_main_theorem(const LiftedConjugacy& lift, const TheoremBounds& bounds) {
  const LiftSetup& setup = lift.setup();
  const ConjugacySquare& s = setup.square();
  const StableCore& g_core = setup.g_core();
  const StableCore& h_core = setup.h_core();
  const std::size_t d = lift.radius();

  TheoremReport report;
  report.kappa = setup.kappa();
  report.radius = d;
  report.window_length = bounds.window_length ? bounds.window_length : 2 * d + 9;
  if (report.window_length < 2 * d + 1) throw InvalidInput("verify: window length below 2D+1");
  const std::vector<Path> windows = sample_core_windows(g_core, setup.g_components(), report.window_length,
                                                        bounds.samples, bounds.seed, 20000, report.exhaustive);
  report.windows = windows.size();

  Recorder labels("(i) L_H o phi~ = psi o L_G");
  Recorder induced("(ii) psi_K o f_G = f_H o phi~ (well defined)");
  Recorder alpha("(iii) phi~ o alpha_G = alpha_H o psi");
  Recorder extends("(iv) phi~ = phi'' on component windows");
  Recorder bijective("phi~ bijective on periodic points");

  const InducedFutureConjugacy psi_k(lift);
  for (const Path& x : windows) {
    const std::string where = "window of " + std::to_string(x.size()) + " edges starting " +
                              g_core.graph().edge_name(x.front());
    try {
      const Path y = lift.apply(x);
      labels.expect(is_path(h_core.graph(), y), where + ": image is not a stable-core path");
      const Word via_psi = central(apply_code(s.psi, path_label(g_core.graph(), x)), d - s.psi.radius());
      labels.expect(path_label(h_core.graph(), y) == via_psi, where + ": labels do not commute");

      Path xi;
      for (EdgeId e : x) xi.push_back(psi_k.g_merge().edge_map[e]);
      const InducedImage img = psi_k.apply(xi);
      induced.expect(img.well_defined && img.image && is_path(psi_k.h_merge().cover, *img.image),
                     where + ": induced future-cover map is not well defined");

      const auto runs = component_intervals(g_core, setup.g_components(), x);
      if (runs.size() == 1 && runs.front().length() == x.size()) {
        const Path direct = phi_double_prime_on_core(setup, x, 0, x.size() - 1);
        extends.expect(central(direct, d - setup.kappa()) == y, where + ": differs from phi''");
      }
    } catch (const Error& e) {
      labels.fail(where + ": " + e.what());
    }
  }

  // Component windows proper: long walks around each periodic alpha ray.
  const auto points = periodic_points(s.g, bounds.max_period);
  report.periodic_points = points.size();
  for (const PeriodicWord& p : points) {
    const std::string name = format_periodic(s.g.alphabet(), p);
    try {
      const PeriodicRay ray_g = alpha_on_periodic(g_core, p);
      const Path image = lift.apply_periodic(ray_g.edges);
      const Word q = apply_code_periodic(s.psi, p.word);
      const PeriodicRay ray_h = alpha_on_periodic(h_core, PeriodicWord{q});
      alpha.expect(image == ray_h.edges, name + ": phi~(alpha_G(p)) differs from alpha_H(psi(p))");

      Path unrolled;
      for (std::size_t i = 0; i < report.window_length; ++i) unrolled.push_back(ray_g.edges[i % p.period()]);
      const Path direct = central(phi_double_prime_on_core(setup, unrolled, 0, unrolled.size() - 1), d - setup.kappa());
      extends.expect(direct == lift.apply(unrolled), name + ": phi~ differs from phi'' on the alpha ray");
    } catch (const Error& e) {
      alpha.fail(name + ": " + e.what());
    }
  }

  // Periodic points of the stable cores themselves.
  try {
    const auto g_cycles = periodic_points(edge_shift_presentation(g_core.graph()), bounds.max_period);
    const auto h_cycles = periodic_points(edge_shift_presentation(h_core.graph()), bounds.max_period);
    std::set<PeriodicWord> images;
    for (const PeriodicWord& c : g_cycles) {
      const PeriodicWord img = make_periodic(lift.apply_periodic(c.word));
      bijective.expect(img.period() == c.period(), "period changes on a cycle of length " + std::to_string(c.period()));
      bijective.expect(images.insert(img).second, "two periodic points share an image");
    }
    bijective.expect(images == std::set<PeriodicWord>(h_cycles.begin(), h_cycles.end()),
                     "images differ from the periodic points of the target core");
  } catch (const Error& e) {
    bijective.fail(e.what());
  }

  report.checks = {labels.done(), induced.done(), alpha.done(), extends.done(), bijective.done()};
  return report;
}

CheckResult check_round_trip(const LiftedConjugacy& forward, const LiftedConjugacy& backward,
                             const std::vector<Path>& windows) {
  Recorder r("inverse lift undoes phi~");
  const std::size_t cut = forward.radius() + backward.radius();
  for (const Path& x : windows) {
    if (x.size() < 2 * cut + 1) continue;
    try {
      r.expect(backward.apply(forward.apply(x)) == central(x, cut), "round trip changes a window");
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  return r.done();
}

}  // namespace sofic
