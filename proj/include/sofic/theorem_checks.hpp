#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sofic/lift.hpp"

namespace sofic {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
};

bool all_passed(const std::vector<CheckResult>& checks);

// Property checks on a single essential presentation.

// Stable sets from the monoid against the word oracle with the bound set to
// the monoid's longest shortest word.
CheckResult check_oracle_equivalence(const LabeledGraph& g);
// Stable core and future cover are right-resolving and regular; the future
// cover is follower-separated.
CheckResult check_cover_regularity(const LabeledGraph& g);
// The future cover of the future cover is isomorphic to it.
CheckResult check_idempotence(const LabeledGraph& g);
// Follower words of every stable set in the stable core equal the union of
// the follower words of its members, up to `length`.
CheckResult check_follower_language(const LabeledGraph& g, std::size_t length);
// For periodic points of period <= max_period: beta = alpha, f o alpha_G =
// alpha_Y, component edges lie in G', and fiber count = M(C) on source
// components. Requires a right-resolving g.
std::vector<CheckResult> check_periodic_identities(const LabeledGraph& g, std::size_t max_period,
                                                   std::size_t tail_bound);
// L restricted to each source component is injective and distinct source
// components carry disjoint languages (exact, via product graphs).
CheckResult check_source_injectivity(const LabeledGraph& g);

// Bounded verification of the lifting theorem.
struct TheoremBounds {
  std::size_t max_period = 4;
  std::size_t window_length = 0;  // 0: 2D+9
  std::size_t samples = 400;      // random windows per bias level
  std::uint64_t seed = 1;
};

struct TheoremReport {
  std::size_t kappa = 0;
  std::size_t radius = 0;
  std::size_t window_length = 0;
  std::size_t windows = 0;
  std::size_t periodic_points = 0;
  bool exhaustive = false;
  std::vector<CheckResult> checks;

  bool passed() const { return all_passed(checks); }
};

// Stable-core windows used by the checks: all paths when there are at most
// `exhaustive_limit`, otherwise seeded random walks with several levels of
// bias towards staying inside a component.
std::vector<Path> sample_core_windows(const StableCore& core, const ComponentInfo& info, std::size_t length,
                                      std::size_t samples, std::uint64_t seed, std::size_t exhaustive_limit,
                                      bool& exhaustive);

TheoremReport verify_main_theorem(const LiftedConjugacy& lift, const TheoremBounds& bounds);

// phi~ of the inverse square undoes phi~ on the given windows.
CheckResult check_round_trip(const LiftedConjugacy& forward, const LiftedConjugacy& backward,
                             const std::vector<Path>& windows);

}  // namespace sofic
