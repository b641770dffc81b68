#include "doctest.h"
#include "sofic/error.hpp"
#include "sofic/fixtures.hpp"
#include "sofic/lift.hpp"
#include "sofic/theorem_checks.hpp"
#include "support.hpp"

using namespace sofic;

namespace {

Path middle(const Path& p, std::size_t cut) { return Path(p.begin() + cut, p.end() - cut); }

EdgeId core_edge(const StableCore& core, const std::string& from, const std::string& label) {
  const LabeledGraph& h = core.graph();
  return *h.find_edge(*h.find_vertex(from), *h.alphabet().find(label));
}

Path repeat_edges(std::initializer_list<EdgeId> cycle, std::size_t times) {
  Path out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), cycle.begin(), cycle.end());
  return out;
}

ConjugacySquare corrupted_identity(const LabeledGraph& a) {
  ConjugacySquare s = identity_square(a);
  s.psi = relabeling_code(a.alphabet(), a.alphabet(), {{"0", "0"}, {"1", "1"}, {"2", "3"}, {"3", "3"}});
  return s;
}

}  // namespace

TEST_CASE("block radius of the lift") {
  const auto a = lift_conjugacy(identity_square(fixture_graph("example_a")));
  CHECK(a.kappa() == 1);
  // Longest path with all component stretches of at most 8 edges: three
  // stretches in the three components joined by two connecting edges.
  CHECK(a.longest_short_path() == 8 + 1 + 8 + 1 + 8);
  CHECK(a.radius() == 27);
  CHECK(a.long_run() == 9);
  const auto b = lift_conjugacy(higher_block_square(fixture_graph("example_b"), 2));
  CHECK(b.radius() == 18);
}

TEST_CASE("component intervals of a stable-core window") {
  const auto a = fixture_graph("example_a");
  const LiftSetup setup(identity_square(a));
  const StableCore& core = setup.g_core();
  const EdgeId loop = core_edge(core, "{a,b,c}", "0");
  const EdgeId down = core_edge(core, "{a,b,c}", "2");
  const EdgeId ac = core_edge(core, "{a,c}", "0");
  const EdgeId bc = core_edge(core, "{b,c}", "1");
  Path x = repeat_edges({loop}, 3);
  x.push_back(down);
  const Path tail = repeat_edges({ac, bc}, 2);
  x.insert(x.end(), tail.begin(), tail.end());
  const auto runs = component_intervals(core, setup.g_components(), x);
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].begin == 0);
  CHECK(runs[0].end == 2);
  CHECK(runs[1].begin == 4);
  CHECK(runs[1].end == 7);
  CHECK(runs[1].length() == 4);
  CHECK(runs[0].component != runs[1].component);
}

TEST_CASE("gap filling follows the psi labels") {
  const auto a = fixture_graph("example_a");
  const LiftSetup setup(identity_square(a));
  const StableCore& core = setup.g_core();
  Path x = repeat_edges({core_edge(core, "{a,b,c}", "0")}, 6);
  x.push_back(core_edge(core, "{a,b,c}", "2"));
  const Path tail = repeat_edges({core_edge(core, "{a,c}", "1"), core_edge(core, "{b,c}", "0")}, 3);
  x.insert(x.end(), tail.begin(), tail.end());
  // I = [0,5], J = [7,12]; the identity gap fill is x itself.
  const Path q = fill_gap(setup, x, 0, 5, 7, 12);
  CHECK(q == Path(x.begin() + 1, x.begin() + 12));
  CHECK_THROWS_AS(fill_gap(setup, x, 0, 2, 7, 12), InvalidInput);
  CHECK_THROWS_AS(fill_gap(setup, x, 0, 6, 7, 12), InvalidInput);
}

TEST_CASE("a corrupted psi kills the label path") {
  const auto a = fixture_graph("example_a");
  const LiftSetup setup(corrupted_identity(a));
  const Path x = repeat_edges({core_edge(setup.g_core(), "{a}", "2")}, 10);
  // psi sends 2 to 3 and {a} emits no 3.
  CHECK_THROWS_AS(fill_gap(setup, x, 0, 5, 5, 9), LabelPathDied);
}

TEST_CASE("lift of the identity and of a renaming is the identity on edges") {
  const auto a = fixture_graph("example_a");
  for (const auto& square : {identity_square(a), renaming_square(a, {"x", "y", "z"})}) {
    const auto lift = lift_conjugacy(square);
    const StableCore& core = lift.setup().g_core();
    bool exhaustive = false;
    const auto windows =
        sample_core_windows(core, lift.setup().g_components(), 2 * lift.radius() + 5, 40, 3, 1000, exhaustive);
    REQUIRE_FALSE(windows.empty());
    for (const Path& w : windows) {
      const Path image = lift.apply(w);
      // Vertex indices agree, so the renamed core has the same edge ids.
      CHECK(image == middle(w, lift.radius()));
    }
    const StableCore& h = lift.setup().h_core();
    if (square.h.vertex_name(0) == "x") CHECK(h.graph().edge_name(core_edge(h, "{x,y,z}", "0")) == "{x,y,z}-0->{x,y,z}");
  }
}

TEST_CASE("periodic images keep the phase") {
  const auto a = fixture_graph("example_a");
  const auto lift = lift_conjugacy(identity_square(a));
  const StableCore& core = lift.setup().g_core();
  const Path cycle = {core_edge(core, "{a,c}", "0"), core_edge(core, "{b,c}", "1")};
  CHECK(lift.apply_periodic(cycle) == cycle);
}

TEST_CASE("the main theorem holds on bounded windows") {
  const auto a = fixture_graph("example_a");
  TheoremBounds bounds;
  bounds.samples = 60;
  bounds.max_period = 3;
  const TheoremReport id = verify_main_theorem(lift_conjugacy(identity_square(a)), bounds);
  CHECK(id.passed());
  CHECK(id.radius == 27);
  CHECK(id.window_length == 2 * 27 + 9);
  CHECK(id.checks.size() == 5);
  const TheoremReport hb = verify_main_theorem(lift_conjugacy(higher_block_square(fixture_graph("example_b"), 2)), bounds);
  CHECK(hb.passed());
  for (const auto& c : hb.checks) {
    CAPTURE(c.name);
    CHECK(c.cases > 0);
  }
}

TEST_CASE("the inverse lift undoes the lift") {
  const auto b = fixture_graph("example_b");
  const auto square = higher_block_square(b, 2);
  const auto forward = lift_conjugacy(square);
  const auto backward = lift_conjugacy(inverse_square(square));
  bool exhaustive = false;
  const std::size_t length = 2 * (forward.radius() + backward.radius()) + 3;
  const auto windows =
      sample_core_windows(forward.setup().g_core(), forward.setup().g_components(), length, 40, 5, 1000, exhaustive);
  const CheckResult r = check_round_trip(forward, backward, windows);
  CHECK(r.passed);
  CHECK(r.cases == windows.size());
}

TEST_CASE("tabulating the lift respects the limit") {
  const auto lift = lift_conjugacy(identity_square(fixture_graph("example_a")));
  CHECK_THROWS_AS(lift.tabulate(100), LimitExceeded);
}

TEST_CASE("the induced future-cover map is well defined") {
  const auto b = fixture_graph("example_b");
  const auto lift = lift_conjugacy(higher_block_square(b, 2));
  const InducedFutureConjugacy induced(lift);
  const LabeledGraph& k = induced.g_merge().cover;
  CHECK(graphs_isomorphic(k, b).isomorphic);
  // Future-cover windows read from the stable core through the factor map.
  bool exhaustive = false;
  const auto windows = sample_core_windows(lift.setup().g_core(), lift.setup().g_components(),
                                           2 * lift.radius() + 3, 30, 9, 1000, exhaustive);
  for (const Path& w : windows) {
    Path xi;
    for (EdgeId e : w) xi.push_back(induced.g_merge().edge_map[e]);
    const InducedImage img = induced.apply(xi);
    CHECK(img.well_defined);
    CHECK(img.preimages >= 1);
    REQUIRE(img.image.has_value());
    CHECK(img.image->size() == 3);
    CHECK(is_path(induced.h_merge().cover, *img.image));
  }
}
