#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kht/complex.hpp"
#include "kht/errors.hpp"
#include "kht/golden.hpp"
#include "kht/notation.hpp"
#include "support/random_diagrams.hpp"

using namespace kht;

static TangleDiagram base(const std::string& key) {
  return parse_diagram(golden_base_diagrams().at(key));
}

static std::map<std::pair<int, int>, long long> dims_of(
    const BigradedComplex<Rational>& cx) {
  std::map<std::pair<int, int>, long long> d;
  for (const auto& [key, block] : cx.blocks)
    if (block.dim() > 0) d[key] = block.dim();
  return d;
}

TEST_CASE("grading helpers") {
  CHECK(homological_degree(State{{0, 0, 0}}, 3) == -3);
  CHECK(homological_degree(State{{1, 1, 1, 1}}, 0) == 4);
  CHECK(homological_degree(State{{1, 0}}, 1) == 0);
  CHECK(quantum_degree(0, 1, 0, -2) == -1);
  CHECK(quantum_degree(1, 1, 0, -2) == 0);
  CHECK(quantum_degree(0, 0, 0, 0) == 0);
  CHECK(theta_of({kLabelOne, kLabelX}, 1) == -1);
}

TEST_CASE("complex of the crossing-free diagrams") {
  auto loop = build_complex<Rational>(parse_diagram("O\n"));
  CHECK(dims_of(loop) ==
        std::map<std::pair<int, int>, long long>{{{0, 1}, 1}, {{0, -1}, 1}});
  auto arc = build_complex<Rational>(parse_diagram("A p q\n"));
  CHECK(dims_of(arc) ==
        std::map<std::pair<int, int>, long long>{{{0, -1}, 1}});
  auto empty = build_complex<Rational>(TangleDiagram{});
  CHECK(dims_of(empty) ==
        std::map<std::pair<int, int>, long long>{{{0, 0}, 1}});
}

TEST_CASE("complex of the one-crossing tangle has zero differential") {
  auto cx = build_complex<Rational>(base("x1p"));
  CHECK(dims_of(cx) ==
        std::map<std::pair<int, int>, long long>{{{0, -1}, 1}, {{1, 0}, 1}});
  for (const auto& [key, block] : cx.blocks) CHECK(block.d.nonzeros() == 0);
}

TEST_CASE("apply_saddle implements the circle algebra") {
  TangleDiagram one = base("x1p");
  auto r0 = resolve(one, State{{0}});
  auto r1 = resolve(one, State{{1}});
  // two arcs reconnecting kill everything
  CHECK(apply_saddle(one, 0, r0, r1, {}).empty());

  TangleDiagram hopf = base("hopf_pp");
  auto h00 = resolve(hopf, State{{0, 0}});
  auto h10 = resolve(hopf, State{{1, 0}});
  auto terms = apply_saddle(hopf, 0, h00, h10, {kLabelOne, kLabelX});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].target_labels == std::vector<uint8_t>{kLabelX});
  CHECK(terms[0].coeff == 1);
  CHECK(apply_saddle(hopf, 0, h00, h10, {kLabelX, kLabelX}).empty());
  auto both_one = apply_saddle(hopf, 0, h00, h10, {kLabelOne, kLabelOne});
  REQUIRE(both_one.size() == 1);
  CHECK(both_one[0].target_labels == std::vector<uint8_t>{kLabelOne});

  // splitting: one -> one(x)X + X(x)one, X -> X(x)X
  auto h11 = resolve(hopf, State{{1, 1}});
  auto split = apply_saddle(hopf, 1, h10, h11, {kLabelOne});
  REQUIRE(split.size() == 2);
  CHECK(split[0].target_labels != split[1].target_labels);
  for (const auto& t : split) {
    CHECK(t.coeff == 1);
    int ones = 0, xs = 0;
    for (uint8_t l : t.target_labels) (l == kLabelOne ? ones : xs)++;
    CHECK(ones == 1);
    CHECK(xs == 1);
  }
  auto splitx = apply_saddle(hopf, 1, h10, h11, {kLabelX});
  REQUIRE(splitx.size() == 1);
  CHECK(splitx[0].target_labels == std::vector<uint8_t>{kLabelX, kLabelX});
}

TEST_CASE("the circle-arc saddles and the cube signs") {
  // arc threading a circle: merge one(x)w -> w, X(x)w -> 0, and on the other
  // side w -> w(x)X with the edge sign
  TangleDiagram d = base("t2_2_pp");
  auto cx = build_complex<Rational>(d);
  // d^{0,2}: (one) |-> w_(10) + w_(01)
  const auto& d02 = cx.blocks.at({0, 2}).d;
  CHECK(d02.rows() == 2);
  CHECK(d02.cols() == 1);
  CHECK(d02.get(0, 0) == Rational(1));
  CHECK(d02.get(1, 0) == Rational(1));
  // X(x)w dies: the (0,0) block maps to an empty block
  CHECK(cx.blocks.at({0, 0}).d.nonzeros() == 0);
  // d^{1,2} carries the sign (-1)^(ones before i)
  const auto& d12 = cx.blocks.at({1, 2}).d;
  CHECK(d12.rows() == 1);
  CHECK(d12.cols() == 2);
  CHECK(d12.get(0, 0) == Rational(1));    // state (0,1), flip bit 0
  CHECK(d12.get(0, 1) == Rational(-1));   // state (1,0), flip bit 1
}

TEST_CASE("homology of the one-crossing tangle from the complex") {
  // dims 2 spread over degrees 0 and 1, zero differential
  auto cx = build_complex<Rational>(base("x1p"));
  CHECK(cx.total_dim() == 2);
}

TEST_CASE("total dimension is the state sum of 2^circles") {
  testsupport::DiagramGen gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    TangleDiagram d = gen.random_general(5);
    long long expect = 0;
    int n = d.crossing_count();
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m)
      expect += 1LL << resolve(d, state_from_index(n, m)).circle_count;
    auto cx = build_complex<Rational>(d);
    CHECK(cx.total_dim() == expect);
  }
}

TEST_CASE("differentials square to zero and preserve the quantum degree") {
  testsupport::DiagramGen gen(32);
  for (int trial = 0; trial < 30; ++trial) {
    TangleDiagram d = gen.random_general(6);
    auto check_complex = [](const auto& cx) {
      for (const auto& [key, block] : cx.blocks) {
        auto up = cx.blocks.find({key.first + 1, key.second});
        if (up != cx.blocks.end()) {
          CHECK(compose_check(up->second.d, block.d));
        } else {
          CHECK(block.d.rows() == 0);
        }
        // basis gradings agree with the block key
        for (const auto& g : block.basis) {
          int k = homological_degree(g.state, cx.n_minus);
          CHECK(k == key.first);
          CHECK(quantum_degree(k, cx.n_plus, cx.n_minus, g.theta) == key.second);
        }
      }
    };
    check_complex(build_complex<Rational>(d));
    check_complex(build_complex<GF2>(d));
  }
}

TEST_CASE("disjoint unions multiply dimensions gradewise") {
  testsupport::DiagramGen gen(33);
  for (int trial = 0; trial < 10; ++trial) {
    TangleDiagram a = gen.random_general(3);
    TangleDiagram b = gen.random_general(2);
    auto ca = dims_of(build_complex<Rational>(a));
    auto cb = dims_of(build_complex<Rational>(b));
    auto cu = dims_of(build_complex<Rational>(disjoint_union(a, b)));
    std::map<std::pair<int, int>, long long> conv;
    for (const auto& [ka, da] : ca)
      for (const auto& [kb, db] : cb)
        conv[{ka.first + kb.first, ka.second + kb.second}] += da * db;
    CHECK(cu == conv);
  }
}

TEST_CASE("a pendant arc-arc crossing at index 0 splits the complex") {
  testsupport::DiagramGen gen(34);
  for (int trial = 0; trial < 12; ++trial) {
    TangleDiagram d = gen.random_general(3);
    // attach where the paper's construction does: next to the boundary
    int edge = -1;
    for (size_t e = 0; e < d.edges.size(); ++e)
      if (d.edges[e].tail.at_boundary() || d.edges[e].head.at_boundary())
        edge = static_cast<int>(e);
    if (edge < 0) continue;
    TangleDiagram t = attach_pendant_arc(d, edge, trial % 2, trial % 4 < 2 ? 1 : -1);
    auto cx = build_complex<Rational>(t);
    for (const auto& [key, block] : cx.blocks) {
      auto up = cx.blocks.find({key.first + 1, key.second});
      if (up == cx.blocks.end()) continue;
      for (int r = 0; r < block.d.rows(); ++r)
        for (const auto& [c, v] : block.d.row(r)) {
          uint8_t src_bit0 = block.basis[c].state.bits[0];
          uint8_t tgt_bit0 = up->second.basis[r].state.bits[0];
          CHECK(src_bit0 == tgt_bit0);
        }
    }
  }
}

TEST_CASE("virtual port data is rejected when the saddles cannot be planar") {
  // two closed strands crossing once: consistent orientations, no planar
  // embedding
  TangleDiagram virt = parse_diagram("X+ a b a b\n");
  CHECK_THROWS_AS(build_complex<Rational>(virt), GeometryError);
}

TEST_CASE("crossing cap") {
  testsupport::DiagramGen gen(35);
  TangleDiagram d = gen.random_general(4);
  CHECK_THROWS_AS(build_complex<Rational>(d, 3), CapError);
}

TEST_CASE("complex json dump lists blocks and triplets") {
  auto cx = build_complex<Rational>(base("x1p"));
  std::string js = complex_to_json(cx);
  CHECK(js.find("\"n_plus\": 1") != std::string::npos);
  CHECK(js.find("\"blocks\"") != std::string::npos);
  CHECK(js.find("\"dim\": 1") != std::string::npos);
}
