#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msd/construct.hpp"
#include "msd/io.hpp"
#include "oracles.hpp"

using namespace msd;

TEST_CASE("design grammar") {
  DesignInstance d =
      parse_design("MSD 1\nQ 2 2 4\nT 1\nK 2\nB 1:1 3:1\nB 2:1 3:2\n");
  CHECK(d.alphabet() == MixedAlphabet({2, 2, 4}));
  CHECK(d.t() == 1);
  CHECK(d.k() == 2);
  CHECK(d.blocks() ==
        std::vector<Block>{Block({{1, 1}, {3, 1}}), Block({{2, 1}, {3, 2}})});

  // comments and blank lines are ignored
  DesignInstance d2 = parse_design(
      "# produced by hand\nMSD 1\nQ 2 2\n\nT 1\nK 1\n# a block\nB 1:1\n");
  CHECK(d2.blocks().size() == 1);
}

TEST_CASE("design render is canonical and round-trips") {
  DesignInstance d = from_rt(pt_base_catalog(6, 3));
  std::string text = render_design(d);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4 + 11);
  DesignInstance back = parse_design(text);
  CHECK(back == d);
  CHECK(render_design(back) == text);
}

TEST_CASE("design parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(
      parse_design("MSD 1\nQ 2 2\nT 1\nK 2\nB 1:2\n"),
      "line 5: symbol 2 >= radix 2", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_design("MSD 1\nQ 2 2\nT 1\nK 2\nB 1:1 1:1\n"),
      "line 5: duplicate coordinate 1 in block", ParseError);
  CHECK_THROWS_AS(parse_design("MSD 2\nQ 2 2\nT 1\nK 1\n"), ParseError);
  CHECK_THROWS_AS(parse_design("MSD 1\nQ 2 2\nT 1\nK 1\nB 1:x\n"), ParseError);
  CHECK_THROWS_AS(parse_design("MSD 1\nT 1\nK 1\n"), ParseError);
  CHECK_THROWS_AS(parse_design("MSD 1\nQ 2 2\nT 1\nK 1\nZ\n"), ParseError);
  try {
    parse_design("MSD 1\nQ 2 2\nT 1\nK 2\nB 3:1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("round-trip identity on randomized designs") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    DesignInstance d = oracles::random_design(rng);
    CHECK(parse_design(render_design(d)) == d);
  }
}

TEST_CASE("optional distance line survives the round trip") {
  DesignInstance d = trivial_kk(MixedAlphabet({2, 2, 2}), 3);
  std::string text = render_design(d, 3);
  DesignFile file = parse_design_file(text);
  CHECK(file.declared_d == 3);
  CHECK(file.design == d);
}

TEST_CASE("pairs-triples format round-trips") {
  for (auto [n, r] : {std::pair{6, 3}, {12, 5}}) {
    PairsTriplesDesign d = pt_base_catalog(n, r);
    PairsTriplesDesign back = parse_pt(render_pt(d));
    CHECK(back.n == d.n);
    CHECK(back.triples == d.triples);
    CHECK(back.factors == d.factors);
  }
  PairsTriplesDesign doubled = pt_double(pt_base_catalog(6, 3));
  PairsTriplesDesign back = parse_pt(render_pt(doubled));
  CHECK(back.factors == doubled.factors);

  CHECK_THROWS_AS(parse_pt("PTD 1\nN 6\nR 1\nF 2 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pt("PTD 1\nN 6\nT 0 1\n"), ParseError);
}

TEST_CASE("orthogonal array format round-trips") {
  OrthogonalArray oa = mols_oa(4, 4);
  OrthogonalArray back = parse_oa(render_oa(oa));
  CHECK(back.k == oa.k);
  CHECK(back.n == oa.n);
  CHECK(back.rows == oa.rows);

  CHECK_THROWS_AS(parse_oa("OA 1\nK 2\nN 3\n0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_oa("OA 1\nK 2\nN 3\n0 0 2\n0 1 1\n1 0 1\n1 1 0\n"),
                  ParseError);
}

TEST_CASE("format sniffing") {
  CHECK(sniff_format("MSD 1\n") == FileKind::Design);
  CHECK(sniff_format("# hi\nPTD 1\n") == FileKind::PairsTriples);
  CHECK(sniff_format("OA 1\n") == FileKind::OrthogonalArray);
  CHECK(sniff_format("what\n") == FileKind::Unknown);
  CHECK(sniff_format("") == FileKind::Unknown);
}

TEST_CASE("alphabet shorthand") {
  CHECK(parse_alphabet_spec("2 2 4") == MixedAlphabet({2, 2, 4}));
  CHECK(parse_alphabet_spec("2x8 4") ==
        MixedAlphabet({2, 2, 2, 2, 2, 2, 2, 2, 4}));
  CHECK(parse_alphabet_spec("3x2 2x2") == MixedAlphabet({3, 3, 2, 2}));
  CHECK_THROWS_AS(parse_alphabet_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_alphabet_spec("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_alphabet_spec("2xx"), std::invalid_argument);
}
