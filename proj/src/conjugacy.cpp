#include "sofic/conjugacy.hpp"

#include <algorithm>

#include "sofic/error.hpp"
#include "sofic/higher_block.hpp"
#include "sofic/language.hpp"

namespace sofic {

namespace {

std::string path_text(const LabeledGraph& g, std::span<const EdgeId> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ' ';
    out += g.edge_name(path[i]);
  }
  return out;
}

// Drops `cut` entries from both ends.
Word central(std::span<const SymbolId> w, std::size_t cut) {
  if (w.size() < 2 * cut) return {};
  return Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end() - static_cast<std::ptrdiff_t>(cut));
}

}  // namespace

ConjugacySquare make_square(LabeledGraph g, LabeledGraph h, const SlidingBlockCode& phi,
                            const SlidingBlockCode& phi_inv, const SlidingBlockCode& psi,
                            const SlidingBlockCode& psi_inv) {
  require_right_resolving(g, "conjugacy square (G)");
  require_right_resolving(h, "conjugacy square (H)");
  if (!is_essential(g) || !is_essential(h)) throw InvalidInput("conjugacy square: graphs must be essential");
  const Alphabet g_edges(g.edge_names());
  const Alphabet h_edges(h.edge_names());
  ConjugacySquare s{g, h, reindex(phi, g_edges, h_edges), reindex(phi_inv, h_edges, g_edges),
                    reindex(psi, g.alphabet(), h.alphabet()), reindex(psi_inv, h.alphabet(), g.alphabet())};
  return s;
}

ConjugacySquare identity_square(const LabeledGraph& g) {
  const Alphabet edges(g.edge_names());
  return make_square(g, g, identity_code(edges), identity_code(edges), identity_code(g.alphabet()),
                     identity_code(g.alphabet()));
}

ConjugacySquare renaming_square(const LabeledGraph& g, const std::vector<std::string>& new_names) {
  const LabeledGraph h = rename_vertices(g, new_names);
  std::map<std::string, std::string> forward, backward;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    forward[g.edge_name(e)] = h.edge_name(e);
    backward[h.edge_name(e)] = g.edge_name(e);
  }
  const Alphabet g_edges(g.edge_names()), h_edges(h.edge_names());
  return make_square(g, h, relabeling_code(g_edges, h_edges, forward), relabeling_code(h_edges, g_edges, backward),
                     identity_code(g.alphabet()), identity_code(h.alphabet()));
}

ConjugacySquare higher_block_square(const LabeledGraph& g, std::size_t n) {
  HigherBlock hb = higher_block(g, n);
  return make_square(g, hb.graph, hb.phi, hb.phi_inv, hb.psi, hb.psi_inv);
}

ConjugacySquare inverse_square(const ConjugacySquare& s) {
  return ConjugacySquare{s.h, s.g, s.phi_inv, s.phi, s.psi_inv, s.psi};
}

std::size_t common_radius(const ConjugacySquare& s) {
  return std::max({std::size_t{1}, s.phi.radius(), s.phi_inv.radius(), s.psi.radius(), s.psi_inv.radius()});
}

SquareReport verify_square(const ConjugacySquare& s, std::size_t window_length, std::size_t max_period,
                           std::size_t max_failures) {
  SquareReport report;
  auto fail = [&](std::string check, std::string detail) {
    if (report.failures.size() < max_failures) report.failures.push_back({std::move(check), std::move(detail)});
  };
  const std::size_t r_phi = s.phi.radius(), r_phi_inv = s.phi_inv.radius();
  const std::size_t r_psi = s.psi.radius(), r_psi_inv = s.psi_inv.radius();
  const std::size_t needed = 2 * std::max(r_phi + r_phi_inv, r_psi + r_psi_inv) + 1;
  if (window_length < needed) {
    fail("window length", "windows of " + std::to_string(window_length) + " edges are too short for radii; need " +
                              std::to_string(needed));
    return report;
  }

  // Forward direction on windows of X_G.
  auto check_g_window = [&](const Path& x) {
    ++report.windows;
    const std::string where = "window " + path_text(s.g, x);
    try {
      const Word image = apply_code(s.phi, x);
      if (!is_path(s.h, image)) {
        fail("phi maps paths to paths", where);
        return;
      }
      const Word labels = path_label(s.g, x);
      const Word via_h = central(path_label(s.h, image), std::max(r_phi, r_psi) - r_phi);
      const Word via_psi = central(apply_code(s.psi, labels), std::max(r_phi, r_psi) - r_psi);
      if (via_h != via_psi) fail("L_H o phi = psi o L_G", where);
      if (central(apply_code(s.phi_inv, image), 0) != central(x, r_phi + r_phi_inv)) {
        fail("phi_inv o phi = id", where);
      }
      if (apply_code(s.psi_inv, apply_code(s.psi, labels)) != central(labels, r_psi + r_psi_inv)) {
        fail("psi_inv o psi = id", where);
      }
    } catch (const InvalidInput& e) {
      fail("codes defined", where + ": " + e.what());
    }
  };
  auto check_h_window = [&](const Path& z) {
    ++report.windows;
    const std::string where = "window " + path_text(s.h, z);
    try {
      const Word back = apply_code(s.phi_inv, z);
      if (!is_path(s.g, back)) {
        fail("phi_inv maps paths to paths", where);
        return;
      }
      if (apply_code(s.phi, back) != central(z, r_phi + r_phi_inv)) fail("phi o phi_inv = id", where);
      const Word labels = path_label(s.h, z);
      if (apply_code(s.psi, apply_code(s.psi_inv, labels)) != central(labels, r_psi + r_psi_inv)) {
        fail("psi o psi_inv = id", where);
      }
    } catch (const InvalidInput& e) {
      fail("codes defined", where + ": " + e.what());
    }
  };
  for_each_path(s.g, window_length, check_g_window);
  for_each_path(s.h, window_length, check_h_window);

  // Periodic points of the edge shifts, with the codes applied periodically.
  auto check_periodic = [&](const LabeledGraph& from, const LabeledGraph& to, const SlidingBlockCode& fwd,
                            const SlidingBlockCode& back, const SlidingBlockCode& label_fwd, bool commute) {
    for (const PeriodicWord& cycle : periodic_points(edge_shift_presentation(from), max_period)) {
      ++report.periodic_points;
      const std::string where = "cycle (" + path_text(from, cycle.word) + ")";
      try {
        const Word image = apply_code_periodic(fwd, cycle.word);
        Word closed = image;
        closed.push_back(image.front());
        if (!is_path(to, closed)) {
          fail("periodic image is a cycle", where);
          continue;
        }
        if (apply_code_periodic(back, image) != cycle.word) fail("periodic inverse", where);
        if (commute && path_label(to, image) != apply_code_periodic(label_fwd, path_label(from, cycle.word))) {
          fail("periodic L_H o phi = psi o L_G", where);
        }
      } catch (const InvalidInput& e) {
        fail("codes defined", where + ": " + e.what());
      }
    }
  };
  check_periodic(s.g, s.h, s.phi, s.phi_inv, s.psi, true);
  check_periodic(s.h, s.g, s.phi_inv, s.phi, s.psi_inv, false);
  return report;
}

LiftSetup::LiftSetup(ConjugacySquare square, std::size_t budget)
    : square_(std::move(square)),
      kappa_(common_radius(square_)),
      g_core_(stable_core(square_.g, budget)),
      h_core_(stable_core(square_.h, budget)) {
  g_components_ = components_and_sources(g_core_.graph(), g_core_.core.sets());
  h_components_ = components_and_sources(h_core_.graph(), h_core_.core.sets());
}

std::vector<MultiEdge> phi_double_prime_on_path(const LiftSetup& setup, const std::vector<MultiEdge>& eta) {
  const ConjugacySquare& s = setup.square();
  const std::size_t kappa = setup.kappa();
  const std::size_t n = eta.size();
  if (n <= 2 * kappa) {
    throw InvalidInput("phi'': path of length " + std::to_string(n) + " is too short for window radius " +
                       std::to_string(kappa));
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (eta[k].target != eta[k + 1].source) throw InvalidInput("phi'': multi-edges do not form a path");
  }
  // Member paths, one per start vertex.
  std::vector<Path> members;
  eta.front().source.for_each([&](VertexId v) {
    Path p;
    VertexId at = v;
    for (const MultiEdge& m : eta) {
      auto it = std::find_if(m.members.begin(), m.members.end(), [&](EdgeId e) { return s.g.edge(e).source == at; });
      if (it == m.members.end()) throw InvalidInput("phi'': member vertex without an outgoing member edge");
      p.push_back(*it);
      at = s.g.edge(*it).target;
    }
    members.push_back(std::move(p));
  });

  std::vector<Path> images;
  for (const Path& p : members) images.push_back(central(apply_code(s.phi, p), kappa - s.phi.radius()));
  std::vector<MultiEdge> out;
  for (std::size_t k = 0; k < n - 2 * kappa; ++k) {
    VertexSet source;
    std::vector<EdgeId> edges;
    const SymbolId label = s.h.edge(images.front()[k]).label;
    for (const Path& img : images) {
      const Edge& e = s.h.edge(img[k]);
      if (e.label != label) throw ConstructionError("phi'': member images carry different labels");
      source.insert(e.source);
      edges.push_back(img[k]);
    }
    auto m = multi_edge(s.h, source, label);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<EdgeId> expected = m ? m->members : std::vector<EdgeId>{};
    std::sort(expected.begin(), expected.end());
    if (!m || expected != edges) throw ConstructionError("phi'': images do not assemble into an H'' edge");
    out.push_back(std::move(*m));
  }
  return out;
}

std::vector<ComponentInterval> component_intervals(const StableCore& core, const ComponentInfo& info,
                                                   std::span<const EdgeId> window) {
  const LabeledGraph& g = core.graph();
  std::vector<ComponentInterval> out;
  for (std::size_t p = 0; p < window.size(); ++p) {
    const std::size_t c = info.component_of_edge(g, window[p]);
    if (c == kNoComponent) continue;
    if (!out.empty() && out.back().component == c && out.back().end + 1 == p) {
      out.back().end = p;
    } else {
      out.push_back({p, p, c, true});
    }
  }
  for (ComponentInterval& iv : out) {
    const std::size_t m = core.core.set(g.edge(window[iv.begin]).source).size();
    for (std::size_t p = iv.begin; p <= iv.end; ++p) {
      if (core.core.set(g.edge(window[p]).source).size() != m || core.core.set(g.edge(window[p]).target).size() != m) {
        iv.homogeneous = false;
      }
    }
    if (!iv.homogeneous) throw ConstructionError("component interval is not homogeneous");
  }
  return out;
}

std::vector<MultiEdge> core_path_as_fiber_path(const StableCore& core, std::span<const EdgeId> path) {
  std::vector<MultiEdge> out;
  for (EdgeId e : path) {
    const Edge& ed = core.graph().edge(e);
    auto m = multi_edge(core.base, core.core.set(ed.source), ed.label);
    if (!m || m->target != core.core.set(ed.target)) {
      throw ConstructionError("stable-core edge " + core.graph().edge_name(e) + " is not a G'' edge");
    }
    out.push_back(std::move(*m));
  }
  return out;
}

Path fiber_path_as_core_path(const StableCore& core, const std::vector<MultiEdge>& path) {
  Path out;
  for (const MultiEdge& m : path) {
    auto v = core.core.find(m.source);
    if (!v) throw ConstructionError("H'' edge source " + core.base.set_name(m.source) + " is not a stable set");
    auto e = core.graph().find_edge(*v, m.label);
    if (!e || core.core.set(core.graph().edge(*e).target) != m.target) {
      throw ConstructionError("H'' edge does not match a stable-core edge");
    }
    out.push_back(*e);
  }
  return out;
}

Path phi_double_prime_on_core(const LiftSetup& setup, std::span<const EdgeId> x, std::size_t i, std::size_t j) {
  const auto stretch = x.subspan(i, j - i + 1);
  return fiber_path_as_core_path(setup.h_core(),
                                 phi_double_prime_on_path(setup, core_path_as_fiber_path(setup.g_core(), stretch)));
}

Path fill_gap(const LiftSetup& setup, std::span<const EdgeId> x, std::size_t i, std::size_t j, std::size_t k,
              std::size_t l) {
  const std::size_t kappa = setup.kappa();
  if (!(i <= j && j <= k && k <= l && l < x.size())) throw InvalidInput("fill_gap: intervals out of order");
  if (j - i <= 4 * kappa || l - k <= 2 * kappa) throw InvalidInput("fill_gap: intervals too short for the radius");
  if (!is_path(setup.g_core().graph(), x)) throw InvalidInput("fill_gap: window is not a stable-core path");
  const auto runs = component_intervals(setup.g_core(), setup.g_components(), x);
  auto inside_run = [&](std::size_t a, std::size_t b) {
    return std::any_of(runs.begin(), runs.end(), [&](const ComponentInterval& r) { return r.begin <= a && b <= r.end; });
  };
  if (!inside_run(i, j) || !inside_run(k, l)) throw InvalidInput("fill_gap: intervals are not component intervals");

  const ConjugacySquare& s = setup.square();
  const Path left = phi_double_prime_on_core(setup, x, i, j);
  const Path right = phi_double_prime_on_core(setup, x, k, l);
  const LabeledGraph& target = setup.h_core().graph();

  Word labels = path_label(setup.g_core().graph(), x.subspan(i, l - i + 1));
  labels = central(apply_code(s.psi, labels), kappa - s.psi.radius());  // positions i+kappa..l-kappa

  Path q;
  VertexId at = target.edge(left.front()).source;
  for (std::size_t m = 0; m < labels.size(); ++m) {
    auto e = target.find_edge(at, labels[m]);
    if (!e) {
      throw LabelPathDied("fill_gap: label path dies at position " + std::to_string(i + kappa + m) + " (vertex " +
                          target.vertex_name(at) + ", label " + s.h.alphabet().name(labels[m]) + ")");
    }
    q.push_back(*e);
    at = target.edge(*e).target;
  }
  if (!std::equal(left.begin(), left.end(), q.begin())) {
    throw ConstructionError("fill_gap: connecting path disagrees with phi'' on the left interval");
  }
  if (!std::equal(right.begin(), right.end(), q.begin() + static_cast<std::ptrdiff_t>(k - i))) {
    throw ConstructionError("fill_gap: connecting path disagrees with phi'' on the right interval");
  }
  return q;
}

}  // namespace sofic
