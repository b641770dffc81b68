#include <random>

#include "doctest.h"
#include "sofic/components.hpp"
#include "sofic/error.hpp"
#include "sofic/fixtures.hpp"
#include "sofic/followers.hpp"
#include "sofic/isomorphism.hpp"
#include "sofic/language.hpp"
#include "sofic/relation.hpp"
#include "support.hpp"

using namespace sofic;

TEST_CASE("graph validation reports the first bad entry") {
  GraphDescription d;
  d.alphabet = {"0", "1"};
  d.vertices = {"a", "b"};
  d.edges = {{"a", "0", "b"}, {"b", "1", "c"}};
  try {
    validate_graph(d);
    FAIL("accepted an unknown vertex");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("edges[1].to") != std::string::npos);
  }
  d.edges = {{"a", "0", "b"}, {"a", "0", "b"}};
  CHECK_THROWS_AS(validate_graph(d), InvalidInput);
  d.edges = {{"a", "2", "b"}};
  CHECK_THROWS_AS(validate_graph(d), InvalidInput);
  d.vertices = {"a", "a"};
  CHECK_THROWS_AS(validate_graph(d), InvalidInput);
}

TEST_CASE("edges with the same source and label to distinct targets are allowed but flagged") {
  const auto g = test::make_graph({"0"}, {"a", "b"}, {{"a", "0", "a"}, {"a", "0", "b"}, {"b", "0", "a"}});
  const auto rr = check_right_resolving(g);
  CHECK_FALSE(rr.right_resolving);
  REQUIRE(rr.conflicts.size() == 1);
  CHECK(rr.conflicts[0].first == 0);
  CHECK_THROWS_AS(require_right_resolving(g, "test"), NotRightResolving);
}

TEST_CASE("essentialize strips sources and sinks") {
  const auto g = test::make_graph({"0"}, {"s", "a", "t"}, {{"s", "0", "a"}, {"a", "0", "a"}, {"a", "0", "t"}});
  CHECK_FALSE(is_essential(g));
  const auto e = essentialize(g);
  CHECK(e.vertex_count() == 1);
  CHECK(e.vertex_name(0) == "a");
  CHECK(e.edge_count() == 1);
  const auto dag = test::make_graph({"0"}, {"a", "b"}, {{"a", "0", "b"}});
  CHECK_THROWS_AS(essentialize(dag), EmptyShift);
}

TEST_CASE("vertex sets order by size, then by members") {
  const VertexSet a = VertexSet::singleton(0), b = VertexSet::singleton(1), c = VertexSet::singleton(2);
  std::vector<VertexSet> sets = {a | b | c, b | c, a | c, c, a | b, b, a};
  std::sort(sets.begin(), sets.end(), canonical_less);
  CHECK(sets == std::vector<VertexSet>{a, b, c, a | b, a | c, b | c, a | b | c});
  const auto g = fixture_graph("example_a");
  CHECK(g.set_name(a | c) == "{a,c}");
}

TEST_CASE("transpose and edge-shift presentation") {
  const auto g = fixture_graph("example_a");
  const auto t = transpose(g);
  REQUIRE(t.edge_count() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(t.edge(e).source == g.edge(e).target);
    CHECK(t.edge(e).target == g.edge(e).source);
  }
  const auto es = edge_shift_presentation(g);
  CHECK(es.alphabet().size() == g.edge_count());
  CHECK(es.alphabet().name(0) == g.edge_name(0));
  CHECK(g.edge_name(0) == "a-2->a");
  CHECK(check_right_resolving(es).right_resolving);
}

TEST_CASE("relation composition reads the first factor first") {
  const auto g = fixture_graph("example_a");
  const auto& A = g.alphabet();
  const Word w = parse_word(A, "2 3");
  const auto r = BoolRelation::for_symbol(g, *A.find("2")) * BoolRelation::for_symbol(g, *A.find("3"));
  CHECK(r == BoolRelation::for_word(g, w));
  // b -2-> c -3-> b is the only path labeled 23.
  CHECK(r.domain() == VertexSet::singleton(1));
  CHECK(r.range() == VertexSet::singleton(1));
}

TEST_CASE("omega power is the idempotent power, checked against repeated squaring") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    BoolRelation m(n);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (rng() % 3 == 0) m.set(u, v);
      }
    }
    const BoolRelation e = omega_power(m);
    CHECK(e * e == e);
    // m^(n! * big) is idempotent and a power of m; idempotent powers are unique.
    BoolRelation p = m;
    for (int k = 0; k < 10; ++k) p = p * p;  // m^(2^10)
    BoolRelation q = p;
    for (std::size_t k = 1; k < 60; ++k) q = q * p;  // m^(60 * 2^10), 60 divisible by 1..6 cycle lengths
    CHECK(q == e);
  }
}

TEST_CASE("transition monoid matches brute-force word enumeration") {
  for (const char* name : {"example_a", "example_b", "even_shift", "pq"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    const auto monoid = TransitionMonoid::build(g);
    // Distinct relations of all words up to a generous length.
    std::set<std::vector<std::uint64_t>> seen;
    seen.insert([&] {
      std::vector<std::uint64_t> id;
      for (VertexId v = 0; v < g.vertex_count(); ++v) id.push_back(std::uint64_t{1} << v);
      return id;
    }());
    for (const auto& w : test::all_words(g.alphabet().size(), 8)) {
      std::vector<std::uint64_t> rows;
      for (VertexId v = 0; v < g.vertex_count(); ++v) rows.push_back(test::to_set(test::step(g, {v}, w)).bits());
      seen.insert(rows);
    }
    CHECK(monoid.size() == seen.size());
    CHECK(monoid.element(0) == BoolRelation::identity(g.vertex_count()));
    for (std::size_t i = 0; i < monoid.size(); ++i) CHECK(BoolRelation::for_word(g, monoid.word(i)) == monoid.element(i));
  }
  CHECK_THROWS_AS(TransitionMonoid::build(fixture_graph("example_a"), 4), LimitExceeded);
}

TEST_CASE("components and sources agree with reachability") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const auto g = random_right_resolving(seed);
    const std::size_t n = g.vertex_count();
    // Reachability by Floyd-Warshall style closure.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) reach[e.source][e.target] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    const auto info = components_and_sources(g);
    for (VertexId u = 0; u < n; ++u) {
      CHECK((info.component_of[u] != kNoComponent) == reach[u][u]);
      for (VertexId v = 0; v < n; ++v) {
        if (!reach[u][u] || !reach[v][v]) continue;
        CHECK((info.component_of[u] == info.component_of[v]) == (reach[u][v] && reach[v][u]));
      }
    }
    for (std::size_t c = 0; c < info.size(); ++c) {
      const VertexId rep = info.components[c].front();
      bool entered = false;
      for (VertexId u = 0; u < n; ++u) {
        if (info.component_of[u] != c && reach[u][rep]) entered = true;
      }
      CHECK(info.is_source[c] == !entered);
    }
  }
}

TEST_CASE("follower partition agrees with follower words") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    const auto g = random_right_resolving(seed);
    const auto p = follower_partition(g);
    // Equivalent states of a partial deterministic automaton with n states
    // are separated by a word of length at most n.
    const std::size_t len = g.vertex_count() + 1;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const bool same = follower_words(g, VertexSet::singleton(u), len) == follower_words(g, VertexSet::singleton(v), len);
        CHECK((p.class_of[u] == p.class_of[v]) == same);
        const auto fu = follower_words(g, VertexSet::singleton(u), len);
        const auto fv = follower_words(g, VertexSet::singleton(v), len);
        CHECK(follower_contains(g, u, v) == std::includes(fv.begin(), fv.end(), fu.begin(), fu.end()));
      }
    }
  }
}

TEST_CASE("isomorphism finds relabelings and rejects label changes") {
  std::mt19937 rng(3);
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    const auto g = random_right_resolving(seed);
    std::vector<VertexId> perm(g.vertex_count());
    for (VertexId v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(g.vertex_count());
    std::vector<Edge> edges;
    for (VertexId v = 0; v < perm.size(); ++v) names[perm[v]] = "w" + std::to_string(v);
    for (const Edge& e : g.edges()) edges.push_back({perm[e.source], e.label, perm[e.target]});
    std::reverse(edges.begin(), edges.end());
    const LabeledGraph h(g.alphabet(), names, edges);
    const auto iso = graphs_isomorphic(g, h);
    REQUIRE(iso.isomorphic);
    for (const Edge& e : g.edges()) CHECK(h.find_edge(iso.vertex_map[e.source], e.label, iso.vertex_map[e.target]));
  }
  const auto b = fixture_graph("example_b");
  const auto changed = test::make_graph({"0", "1", "2"}, {"a", "b"},
                                        {{"a", "1", "a"}, {"a", "2", "a"}, {"a", "0", "b"}, {"b", "2", "a"}, {"b", "2", "b"}});
  CHECK_FALSE(graphs_isomorphic(b, changed).isomorphic);
}

TEST_CASE("periodic points are the Lyndon words with a cycle in the relation") {
  for (const char* name : {"example_a", "example_b", "even_shift", "pq"}) {
    CAPTURE(name);
    const auto g = fixture_graph(name);
    std::set<Word> expected;
    for (const auto& w : test::all_words(g.alphabet().size(), 5)) {
      if (test::is_lyndon(w) && !omega_power(BoolRelation::for_word(g, w)).empty()) expected.insert(w);
    }
    std::set<Word> found;
    for (const auto& p : periodic_points(g, 5)) found.insert(p.word);
    CHECK(found == expected);
  }
}

TEST_CASE("periodic words are stored primitive and least") {
  const auto g = fixture_graph("example_a");
  const auto p = make_periodic(parse_word(g.alphabet(), "1 0 1 0"));
  CHECK(p.word == parse_word(g.alphabet(), "0 1"));
  CHECK(format_periodic(g.alphabet(), p) == "(01)^inf");
  CHECK(format_periodic(g.alphabet(), make_periodic(parse_word(g.alphabet(), "000"))) == "0^inf");
  CHECK_THROWS_AS(parse_word(g.alphabet(), "7"), InvalidInput);
}

TEST_CASE("language words are readable along paths") {
  const auto g = fixture_graph("even_shift");
  // Even shift: 1 0 1 is forbidden, 1 0 0 1 allowed.
  CHECK_FALSE(in_language(g, parse_word(g.alphabet(), "101")));
  CHECK(in_language(g, parse_word(g.alphabet(), "1001")));
  // Of the eight words of length 3 only 101 is missing.
  CHECK(words_of_length(g, 3).size() == 7);
  // 1-1->1 twice, 1-1->1-0->2, 1-0->2-0->1, 2-0->1-1->1, 2-0->1-0->2.
  CHECK(paths_of_length(g, 2).size() == 5);
}
