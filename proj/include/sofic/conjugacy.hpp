#pragma once

#include <string>
#include <vector>

#include "sofic/block_code.hpp"
#include "sofic/components.hpp"
#include "sofic/fiber_covers.hpp"
#include "sofic/subset_covers.hpp"

namespace sofic {

// Commuting square of conjugacies
//
//   X_G --phi--> X_H
//    |            |
//   L_G          L_H
//    v            v
//    Y  --psi-->  Z
//
// phi and phi_inv act on edge ids (alphabets = edge names of g and h, in
// edge order); psi and psi_inv on the label alphabets.
struct ConjugacySquare {
  LabeledGraph g;
  LabeledGraph h;
  SlidingBlockCode phi;
  SlidingBlockCode phi_inv;
  SlidingBlockCode psi;
  SlidingBlockCode psi_inv;
};

// Reindexes the codes by symbol name onto the edge and label alphabets of g
// and h. Both graphs must be essential and right-resolving.
ConjugacySquare make_square(LabeledGraph g, LabeledGraph h, const SlidingBlockCode& phi,
                            const SlidingBlockCode& phi_inv, const SlidingBlockCode& psi,
                            const SlidingBlockCode& psi_inv);

ConjugacySquare identity_square(const LabeledGraph& g);
// g against a copy with renamed vertices; psi is the identity.
ConjugacySquare renaming_square(const LabeledGraph& g, const std::vector<std::string>& new_names);
ConjugacySquare higher_block_square(const LabeledGraph& g, std::size_t n);
ConjugacySquare inverse_square(const ConjugacySquare& s);

// Common window radius of the four codes, at least 1.
std::size_t common_radius(const ConjugacySquare& s);

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct SquareReport {
  std::size_t windows = 0;
  std::size_t periodic_points = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Checks L_H(phi(x)) = psi(L_G(x)), that phi maps paths to paths, and the
// four inverse identities, on every path window with `window_length` edges
// and every periodic point of period <= max_period.
SquareReport verify_square(const ConjugacySquare& s, std::size_t window_length, std::size_t max_period,
                           std::size_t max_failures = 16);

// Stable cores of both sides and the component structure needed by the
// lifting construction.
class LiftSetup {
 public:
  explicit LiftSetup(ConjugacySquare square, std::size_t budget = kDefaultMonoidBudget);

  const ConjugacySquare& square() const { return square_; }
  std::size_t kappa() const { return kappa_; }
  const StableCore& g_core() const { return g_core_; }
  const StableCore& h_core() const { return h_core_; }
  const ComponentInfo& g_components() const { return g_components_; }
  const ComponentInfo& h_components() const { return h_components_; }

 private:
  ConjugacySquare square_;
  std::size_t kappa_ = 1;
  StableCore g_core_;
  StableCore h_core_;
  ComponentInfo g_components_;
  ComponentInfo h_components_;
};

// phi'' on a G'' path given by its multi-edges over window positions
// 0..n-1: the member paths are mapped by phi and reassembled into H''
// multi-edges over positions kappa..n-1-kappa.
std::vector<MultiEdge> phi_double_prime_on_path(const LiftSetup& setup, const std::vector<MultiEdge>& eta);

// Maximal runs of consecutive stable-core edges inside one component.
struct ComponentInterval {
  std::size_t begin = 0;  // first edge position
  std::size_t end = 0;    // last edge position (inclusive)
  std::size_t component = 0;
  bool homogeneous = true;

  std::size_t length() const { return end - begin + 1; }
};

std::vector<ComponentInterval> component_intervals(const StableCore& core, const ComponentInfo& info,
                                                   std::span<const EdgeId> window);

// A stable-core path lying in one component, read as the G'' path of its
// multi-edges. Throws ConstructionError when a step is not homogeneous.
std::vector<MultiEdge> core_path_as_fiber_path(const StableCore& core, std::span<const EdgeId> path);

// H'' multi-edges whose source sets are stable, read as stable-core edges.
Path fiber_path_as_core_path(const StableCore& core, const std::vector<MultiEdge>& path);

// phi'' of the component stretch x[i..j] as stable-core edges of H, over
// positions i+kappa..j-kappa.
Path phi_double_prime_on_core(const LiftSetup& setup, std::span<const EdgeId> x, std::size_t i, std::size_t j);

// The path q of H's stable core over positions i+kappa..l-kappa of x that
// starts where phi''(x[i..j]) starts and carries psi(L(x)). Throws
// LabelPathDied when the labels cannot be followed.
Path fill_gap(const LiftSetup& setup, std::span<const EdgeId> x, std::size_t i, std::size_t j, std::size_t k,
              std::size_t l);

}  // namespace sofic
