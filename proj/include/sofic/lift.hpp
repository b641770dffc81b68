#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sofic/conjugacy.hpp"

namespace sofic {

// The sliding block code between the stable cores of G and H that extends
// phi'' on component stretches and fills the gaps between long component
// stretches by following psi-labels. Input and output symbols are stable-core
// edge ids.
class LiftedConjugacy {
 public:
  explicit LiftedConjugacy(std::shared_ptr<const LiftSetup> setup);

  const LiftSetup& setup() const { return *setup_; }
  std::size_t kappa() const { return setup_->kappa(); }
  // Block radius D: every window of D - kappa + 1 edges contains a
  // component stretch longer than 8 kappa.
  std::size_t radius() const { return radius_; }
  // Longest stable-core path whose component stretches all have at most
  // 8 kappa edges.
  std::size_t longest_short_path() const { return longest_short_; }
  std::size_t long_run() const { return 8 * kappa() + 1; }

  // Image of the centre edge of a block of 2D+1 stable-core edges.
  EdgeId evaluate(std::span<const EdgeId> block) const;
  // Image over positions D..n-1-D of a stable-core window.
  Path apply(std::span<const EdgeId> window) const;
  // Image of a periodic stable-core path (one period, phase preserved).
  Path apply_periodic(std::span<const EdgeId> cycle) const;

  // As a SlidingBlockCode over the edge names of the two stable cores.
  SlidingBlockCode code() const;
  // Table of the code on all stable-core blocks; LimitExceeded beyond
  // `limit` blocks.
  SlidingBlockCode tabulate(std::size_t limit) const;

 private:
  std::shared_ptr<const LiftSetup> setup_;
  std::size_t longest_short_ = 0;
  std::size_t radius_ = 0;
};

LiftedConjugacy lift_conjugacy(const ConjugacySquare& square, std::size_t budget = kDefaultMonoidBudget);

// psi_K on future-cover windows: the image under the factor map of phi~
// applied to every stable-core window above xi.
struct InducedImage {
  std::optional<Path> image;       // future-cover path of H over positions D..n-1-D
  std::size_t preimages = 0;
  bool well_defined = true;
};

class InducedFutureConjugacy {
 public:
  explicit InducedFutureConjugacy(const LiftedConjugacy& lift);

  const CoverBundle& g_merge() const { return g_merge_; }
  const CoverBundle& h_merge() const { return h_merge_; }
  InducedImage apply(std::span<const EdgeId> xi) const;

 private:
  const LiftedConjugacy& lift_;
  CoverBundle g_merge_;
  CoverBundle h_merge_;
};

}  // namespace sofic
