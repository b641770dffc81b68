#include "doctest.h"
#include "sofic/conjugacy.hpp"
#include "sofic/error.hpp"
#include "sofic/fixtures.hpp"
#include "sofic/higher_block.hpp"
#include "sofic/io.hpp"
#include "support.hpp"

using namespace sofic;

namespace {

// Radius-1 code on {0,1}: output the sum of the block mod 2.
SlidingBlockCode parity_code() {
  const Alphabet bits({"0", "1"});
  std::map<Block, SymbolId> table;
  for (const auto& w : test::all_words(2, 3)) {
    if (w.size() == 3) table[w] = (w[0] + w[1] + w[2]) % 2;
  }
  return SlidingBlockCode(bits, bits, 1, table);
}

}  // namespace

TEST_CASE("applying a block code shrinks the window by the radius") {
  const auto code = parity_code();
  const Word x = {0, 1, 1, 0, 1};
  // Blocks 011, 110, 101.
  CHECK(apply_code(code, x) == Word{0, 0, 0});
  CHECK(apply_code(code, Word{1, 0, 0, 0}) == Word{1, 0});
  CHECK_THROWS_AS(apply_code(code, Word{1, 0}), InvalidInput);
  // (011)^inf: blocks at phases 0,1,2 are 101, 011, 110.
  CHECK(apply_code_periodic(code, Word{0, 1, 1}) == Word{0, 0, 0});
  CHECK(apply_code_periodic(code, Word{1}) == Word{1});
}

TEST_CASE("identity, relabeling and composition") {
  const Alphabet a({"x", "y", "z"});
  const Alphabet b({"p", "q", "r"});
  const Word w = {2, 0, 1, 1};
  CHECK(apply_code(identity_code(a), w) == w);
  const auto rel = relabeling_code(a, b, {{"x", "q"}, {"y", "r"}, {"z", "p"}});
  CHECK(apply_code(rel, w) == Word{0, 1, 2, 2});
  const auto back = relabeling_code(b, a, {{"q", "x"}, {"r", "y"}, {"p", "z"}});
  CHECK(apply_code(compose(rel, back), w) == w);
  CHECK_THROWS_AS(relabeling_code(a, b, {{"x", "s"}}), InvalidInput);

  // Radii add: parity after parity has radius 2.
  const auto p = parity_code();
  const auto pp = compose(p, p);
  CHECK(pp.radius() == 2);
  const Word x = {0, 1, 1, 0, 1, 0, 0};
  CHECK(apply_code(pp, x) == apply_code(p, apply_code(p, x)));
}

TEST_CASE("reindexing keeps the map on names") {
  const Alphabet a({"x", "y"});
  const Alphabet swapped({"y", "x"});
  const auto code = relabeling_code(a, a, {{"x", "y"}, {"y", "x"}});
  const auto re = reindex(code, swapped, swapped);
  // In the swapped alphabet x has id 1 and maps to y (id 0).
  CHECK(re(Word{1}) == 0);
  CHECK(re(Word{0}) == 1);
  CHECK_THROWS_AS(reindex(code, Alphabet({"x", "w"}), a), InvalidInput);
}

TEST_CASE("tables, unmapped blocks and tabulation") {
  const Alphabet bits({"0", "1"});
  const SlidingBlockCode partial(bits, bits, 1, std::map<Block, SymbolId>{{{0, 0, 0}, 0}, {{0, 0, 1}, 1}});
  CHECK(partial.tabulated());
  CHECK(partial.lookup(Word{0, 0, 1}) == SymbolId{1});
  CHECK_FALSE(partial.lookup(Word{1, 1, 1}).has_value());
  try {
    (void)partial(Word{1, 1, 1});
    FAIL("unmapped block accepted");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("[1 1 1]") != std::string::npos);
  }
  CHECK_THROWS_AS(SlidingBlockCode(bits, bits, 1, std::map<Block, SymbolId>{{{0, 0}, 0}}), InvalidInput);

  // The even shift has seven 3-blocks; the partial table maps two of them.
  const auto even = fixture_graph("even_shift");
  const auto remapped = reindex(partial, even.alphabet(), even.alphabet());
  CHECK(unmapped_blocks(remapped, even).size() == 5);
  const auto t = tabulate(parity_code(), {{0, 1, 1}, {1, 1, 1}});
  CHECK(t.table().size() == 2);
  CHECK(t.table().at({1, 1, 1}) == 1);
}

TEST_CASE("higher block presentation of Example-B") {
  const auto b = fixture_graph("example_b");
  const HigherBlock hb = higher_block(b, 2);
  CHECK(hb.graph.vertex_count() == b.edge_count());
  // Two-edge paths: each edge continues with every edge leaving its target.
  std::size_t two_paths = 0;
  for (const Edge& e : b.edges()) {
    for (const Edge& f : b.edges()) two_paths += f.source == e.target;
  }
  CHECK(two_paths == 13);
  CHECK(hb.graph.edge_count() == two_paths);
  CHECK(check_right_resolving(hb.graph).right_resolving);
  // Composite labels are the two-letter words of the shift.
  CHECK(hb.graph.alphabet().size() == words_of_length(b, 2).size());
  // phi then phi_inv is the identity on edge windows.
  for (const Path& p : paths_of_length(b, 5)) {
    const Path image = apply_code(hb.phi, p);
    CHECK(is_path(hb.graph, image));
    CHECK(apply_code(hb.phi_inv, image) == Path(p.begin() + 1, p.end() - 1));
  }
  CHECK_THROWS_AS(higher_block(b, 1), InvalidInput);
}

TEST_CASE("verify_square accepts conjugacies and catches a corrupted psi") {
  const auto a = fixture_graph("example_a");
  const ConjugacySquare id = identity_square(a);
  CHECK(verify_square(id, 6, 4).passed());
  CHECK(verify_square(renaming_square(a, {"x", "y", "z"}), 6, 4).passed());
  CHECK(verify_square(higher_block_square(fixture_graph("example_b"), 2), 6, 4).passed());

  ConjugacySquare bad = id;
  bad.psi = relabeling_code(a.alphabet(), a.alphabet(), {{"0", "0"}, {"1", "1"}, {"2", "3"}, {"3", "3"}});
  const SquareReport r = verify_square(bad, 6, 4);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.windows > 0);
  CHECK(r.periodic_points > 0);
}

TEST_CASE("squares need right-resolving essential graphs") {
  const auto nrr = test::make_graph({"0"}, {"a", "b"}, {{"a", "0", "a"}, {"a", "0", "b"}, {"b", "0", "a"}});
  const auto id_edges = identity_code(Alphabet(nrr.edge_names()));
  const auto id_labels = identity_code(nrr.alphabet());
  CHECK_THROWS_AS(make_square(nrr, nrr, id_edges, id_edges, id_labels, id_labels), NotRightResolving);
  const auto inv = inverse_square(identity_square(fixture_graph("example_b")));
  CHECK(verify_square(inv, 5, 3).passed());
  CHECK(common_radius(identity_square(fixture_graph("example_b"))) == 1);
  CHECK(common_radius(higher_block_square(fixture_graph("example_b"), 3)) == 2);
}

TEST_CASE("code files") {
  const Json good = Json::parse(R"({"format":1,"window_radius":0,"input_alphabet":["x","y"],
    "output_alphabet":["p"],"rules":[{"block":["x"],"out":"p"},{"block":["y"],"out":"p"}]})");
  const auto code = code_from_json(good);
  CHECK(code.radius() == 0);
  CHECK(code(Word{1}) == 0);
  CHECK(code_to_json(code) == good);

  Json bad = good;
  bad["rules"][0]["block"] = {"x", "y"};
  try {
    (void)code_from_json(bad, "code.json");
    FAIL("accepted a block of the wrong length");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).rfind("code.json: ", 0) == 0);
  }
  bad = good;
  bad["rules"][1]["out"] = "q";
  CHECK_THROWS_AS(code_from_json(bad), InvalidInput);
}
