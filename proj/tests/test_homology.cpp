#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kht/golden.hpp"
#include "kht/homology.hpp"
#include "kht/notation.hpp"
#include "support/random_diagrams.hpp"

using namespace kht;

static TangleDiagram base(const std::string& key) {
  return parse_diagram(golden_base_diagrams().at(key));
}

TEST_CASE("betti tables of the smallest diagrams") {
  BettiTable loop = compute_betti(parse_diagram("O\n"));
  CHECK(loop.dims == decltype(loop.dims){{{0, 1}, 1}, {{0, -1}, 1}});
  BettiTable arc = compute_betti(parse_diagram("A p q\n"));
  CHECK(arc.dims == decltype(arc.dims){{{0, -1}, 1}});
  BettiTable one = compute_betti(base("x1p"));
  CHECK(one.dims == decltype(one.dims){{{0, -1}, 1}, {{1, 0}, 1}});
}

TEST_CASE("clasp homology matches the classification") {
  BettiTable b = compute_betti(base("t2_3_pp"));
  CHECK(b.dims == decltype(b.dims){{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}});
  CHECK(poincare_polynomial(b) == LaurentPoly2::parse("1 + xy + x^2y^3"));
}

TEST_CASE("trefoil homology") {
  BettiTable b = compute_betti(base("t3_1_mmm"));
  CHECK(poincare_polynomial(b) ==
        LaurentPoly2::parse("x^-3y^-9 + x^-2y^-5 + y^-3 + y^-1"));
}

TEST_CASE("zero differential means homology equals the chain space") {
  // path of arcs: every saddle reconnects two arcs
  BettiTable b = compute_betti(base("arc4_mmm"));
  CHECK(b.total() == 8);
  CHECK(poincare_polynomial(b) ==
        LaurentPoly2::parse("x^-3y^-10 + 3x^-2y^-9 + 3x^-1y^-8 + y^-7"));
}

TEST_CASE("jones specialization") {
  CHECK(jones_specialization(
            LaurentPoly2::parse("x^-3y^-9 + x^-2y^-5 + y^-3 + y^-1")) ==
        LaurentPoly2::parse("-y^-9 + y^-5 + y^-3 + y^-1"));
  CHECK(jones_specialization(LaurentPoly2::parse("1 + xy")) ==
        LaurentPoly2::parse("1 - y"));
  CHECK(jones_specialization(LaurentPoly2::parse("y + y^-1")) ==
        LaurentPoly2::parse("y + y^-1"));
}

TEST_CASE("graded euler state sum on the small examples") {
  CHECK(graded_euler_state_sum(parse_diagram("O\n")) ==
        LaurentPoly2::parse("y + y^-1"));
  CHECK(graded_euler_state_sum(base("x1p")) ==
        LaurentPoly2::parse("y^-1 - 1"));
  CHECK(graded_euler_state_sum(base("t3_1_mmm")) ==
        LaurentPoly2::parse("-y^-9 + y^-5 + y^-3 + y^-1"));
}

TEST_CASE("euler characteristic identity on the golden rows") {
  for (const GoldenEntry& e : golden_entries()) {
    TangleDiagram d = realize(e);
    BettiTable b = compute_betti(d);
    CHECK(jones_specialization(poincare_polynomial(b)) ==
          graded_euler_state_sum(d));
  }
}

TEST_CASE("euler characteristic identity on random diagrams, both fields") {
  testsupport::DiagramGen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    TangleDiagram d = gen.random_general(5);
    LaurentPoly2 euler = graded_euler_state_sum(d);
    for (Field f : {Field::Q, Field::GF2}) {
      BettiTable b = compute_betti(d, f);
      CHECK(jones_specialization(poincare_polynomial(b)) == euler);
    }
  }
}

TEST_CASE("poincare at x = y = 1 counts the total dimension") {
  testsupport::DiagramGen gen(42);
  for (int trial = 0; trial < 10; ++trial) {
    TangleDiagram d = gen.random_general(4);
    BettiTable b = compute_betti(d);
    CHECK(poincare_polynomial(b).evaluate_ones() == b.total());
  }
}

TEST_CASE("homological support is bounded by the crossing signs") {
  testsupport::DiagramGen gen(43);
  for (int trial = 0; trial < 15; ++trial) {
    TangleDiagram d = gen.random_general(5);
    BettiTable b = compute_betti(d);
    for (const auto& [kq, dim] : b.dims) {
      CHECK(dim > 0);
      CHECK(kq.first >= -b.n_minus);
      CHECK(kq.first <= b.n_plus);
    }
  }
}

TEST_CASE("mirroring flips both gradings") {
  // closed diagrams flip by (k,q) -> (-k,-q); boundary arcs each carry the
  // degree -1 generator on both sides, shifting the flip by -2 per arc
  testsupport::DiagramGen gen(44);
  for (int trial = 0; trial < 8; ++trial) {
    TangleDiagram d = gen.random_general(4);
    int shift = -d.boundary_count();  // 2 arcs x (-1) each... -2 per arc
    BettiTable b = compute_betti(d);
    BettiTable m = compute_betti(mirror(d));
    std::map<std::pair<int, int>, long long> flipped;
    for (const auto& [kq, dim] : b.dims)
      flipped[{-kq.first, -kq.second + shift}] = dim;
    CHECK(m.dims == flipped);
  }
  // the two trefoils are mirrors of each other, closed, so the plain flip
  BettiTable left = compute_betti(base("t3_1_mmm"));
  BettiTable right = compute_betti(mirror(base("t3_1_mmm")));
  for (const auto& [kq, dim] : left.dims)
    CHECK(right.dim(-kq.first, -kq.second) == dim);
}

TEST_CASE("GF2 homology is at least as large as rational homology") {
  // the trefoil has 2-torsion, so the GF2 table is strictly bigger
  BettiTable q = compute_betti(base("t3_1_mmm"), Field::Q);
  BettiTable f2 = compute_betti(base("t3_1_mmm"), Field::GF2);
  CHECK(f2.total() == q.total() + 2);
  testsupport::DiagramGen gen(45);
  for (int trial = 0; trial < 10; ++trial) {
    TangleDiagram d = gen.random_general(4);
    CHECK(compute_betti(d, Field::GF2).total() >=
          compute_betti(d, Field::Q).total());
  }
}
