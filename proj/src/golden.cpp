#include "kht/golden.hpp"

#include <algorithm>

#include "kht/notation.hpp"

namespace kht {

const std::map<std::string, std::string>& golden_base_diagrams() {
  // Each base is one hand-drawn planar embedding; orientation variants come
  // from reverse_component and mirrors from mirror(), so the port data below
  // is the only geometry ever entered by hand.
  static const std::map<std::string, std::string> bases = {
      {"loop", "O\n"},
      {"arc", "A p q\n"},
      // one crossing between two arcs, right-handed
      {"x1p", "X+ a b c d\n"},
      // Hopf link, both crossings right-handed
      {"hopf_pp", "X+ a1 b1 a2 b2\nX+ b1 a1 b2 a2\n"},
      // arc threading a circle twice, alternating over/under
      {"t2_2_pp", "X+ e1 r2 e2 r1\nX+ r2 e3 r1 e2\n"},
      // clasp of two arcs
      {"t2_3_pp", "X+ a1 b2 a2 b1\nX+ b2 a3 b3 a2\n"},
      // middle arc crossed once by each of two outer arcs: outer arcs over,
      // outer arcs under, and one of each
      {"t2_4_pp", "X+ u1 v2 u2 v1\nX+ u2 w2 u3 w1\n"},
      {"t2_5_pp", "X+ v1 u2 v2 u1\nX+ w1 u3 w2 u2\n"},
      {"t2_6_pp", "X+ u1 v2 u2 v1\nX+ w1 u3 w2 u2\n"},
      // left-handed trefoil
      {"t3_1_mmm", "X- e1 e4 e2 e5\nX- e3 e6 e4 e1\nX- e5 e2 e6 e3\n"},
      // trefoil cut open into a single arc
      {"t3_2_mmm", "X- t2 e4 e2 e5\nX- e3 e6 e4 t1\nX- e5 e2 e6 e3\n"},
      // arc with a kink, second arc passing through the kink loop
      {"t3p3_ppp", "X+ e1 e5 e2 e4\nX+ f1 e3 f2 e2\nX+ e3 f3 e4 f2\n"},
      // two arcs crossing three times (open 2-braid)
      {"t3p4_mmm", "X- a1 b1 a2 b2\nX- b2 a2 b3 a3\nX- a3 b3 a4 b4\n"},
      // three pairwise-crossing arcs, triangle face cut by one 1-smoothing
      {"t3p5_mmm", "X- a1 b1 a2 b2\nX- a2 g1 a3 g2\nX- b2 g2 b3 g3\n"},
      // three pairwise-crossing arcs, triangle face coherently oriented
      {"t3_6_mmm", "X- f2 a1 f3 a2\nX- a2 g1 a3 g2\nX- g2 f1 g3 f2\n"},
      // path of four arcs and three crossings
      {"arc4_mmm", "X- a1 b1 a2 b2\nX- b2 d1 b3 d2\nX- d2 e1 d3 e2\n"},
  };
  return bases;
}

const std::vector<GoldenEntry>& golden_entries() {
  static const std::vector<GoldenEntry> rows = [] {
    std::vector<GoldenEntry> r;
    auto add = [&](int table, std::string type, std::string signs,
                   std::string poly, std::string base, bool mirrored,
                   std::vector<int> revs) -> GoldenEntry& {
      r.push_back(GoldenEntry{table, std::move(type), std::move(signs),
                              std::move(poly), std::move(base), mirrored,
                              std::move(revs), false, ""});
      return r.back();
    };

    // ----- table 1: tangles with at most two crossings -----
    add(1, "0_0", "", "y + y^-1", "loop", false, {});
    add(1, "0_1", "", "y^-1", "arc", false, {});
    add(1, "1_1", "+", "x + y^-1", "x1p", false, {});
    add(1, "1_1", "-", "y^-3 + x^-1y^-4", "x1p", false, {0});
    add(1, "2_1", "++", "1 + y^2 + x^2y^4 + x^2y^6", "hopf_pp", false, {});
    add(1, "2_1", "--", "1 + y^-2 + x^-2y^-4 + x^-2y^-6", "hopf_pp", false, {1});
    add(1, "2'_1", "++", "1 + y^2 + x^2y^4 + x^2y^6", "hopf_pp", true, {1});
    add(1, "2'_1", "--", "1 + y^-2 + x^-2y^-4 + x^-2y^-6", "hopf_pp", true, {});
    add(1, "2_2", "++", "1 + x^2y^4", "t2_2_pp", false, {});
    add(1, "2_2", "--", "y^-2 + x^-2y^-6", "t2_2_pp", false, {1});
    add(1, "2_3", "++", "1 + xy + x^2y^3", "t2_3_pp", false, {});
    add(1, "2_3", "--", "y^-3 + x^-1y^-5 + x^-2y^-6", "t2_3_pp", false, {1});
    add(1, "2'_3", "++", "x^2y^2 + xy + y^-1", "t2_3_pp", true, {1});
    add(1, "2'_3", "--", "x^-2y^-7 + x^-1y^-5 + y^-4", "t2_3_pp", true, {});
    for (const char* base : {"t2_4_pp", "t2_5_pp", "t2_6_pp"}) {
      std::string type = std::string("2_") + base[3];
      std::vector<int> flip_one, flip_both;
      if (base == std::string("t2_5_pp")) {
        flip_one = {2};
        flip_both = {0, 2};
      } else {
        flip_one = {2};
        flip_both = {1, 2};
      }
      add(1, type, "++", "x^2y + 2x + y^-1", base, false, {});
      GoldenEntry& flagged = add(1, type, "+-", "x^-1y^-4 + 2y^-3 + xy^-2",
                                 base, false, flip_one);
      flagged.suspected_typo = true;
      flagged.printed_polynomial = "xy^-2 + 2y^3 + x^-1y^-4";
      add(1, type, "--", "y^-5 + 2x^-1y^-6 + x^-2y^-7", base, false,
          flip_both);
    }

    // ----- table 2: tangles with three crossings -----
    add(2, "3_1", "---", "x^-3y^-9 + x^-2y^-5 + y^-3 + y^-1", "t3_1_mmm",
        false, {});
    add(2, "3'_1", "+++", "x^3y^9 + x^2y^5 + y^3 + y", "t3_1_mmm", true, {});
    add(2, "3_2", "---", "x^-3y^-9 + x^-2y^-7 + y^-3", "t3_2_mmm", false, {});
    add(2, "3'_2", "+++", "x^3y^7 + x^2y^5 + y", "t3_2_mmm", true, {});
    add(2, "3_3", "---",
        "x^-3y^-9 + x^-2y^-8 + x^-2y^-7 + x^-1y^-6 + y^-4", "t3p3_ppp", true,
        {});
    add(2, "3_3", "++-", "x^2y^2 + x + y^-1 + y^-2 + x^-1y^-3", "t3p3_ppp",
        true, {1});
    add(2, "3'_3", "+++", "x^3y^5 + x^2y^4 + x^2y^3 + xy^2 + 1", "t3p3_ppp",
        false, {});
    add(2, "3'_3", "--+", "x^-2y^-6 + x^-1y^-4 + y^-3 + y^-2 + xy^-1",
        "t3p3_ppp", false, {1});
    add(2, "3_4", "+++", "x^3y^6 + x^2y^4 + xy^2 + y", "t3p4_mmm", true, {});
    add(2, "3_4", "---", "x^-3y^-8 + x^-2y^-7 + x^-1y^-5 + y^-3", "t3p4_mmm",
        true, {1});
    add(2, "3'_4", "---", "x^-3y^-10 + x^-2y^-8 + x^-1y^-6 + y^-5",
        "t3p4_mmm", false, {});
    add(2, "3'_4", "+++", "x^3y^4 + x^2y^3 + xy + y^-1", "t3p4_mmm", false,
        {1});
    add(2, "3_5", "+++", "2x^2y^2 + 2xy + 1", "t3p5_mmm", true, {});
    add(2, "3_5", "+--", "x^-2y^-6 + 2x^-1y^-5 + 2y^-4", "t3p5_mmm", true,
        {0});
    add(2, "3'_5", "---", "2x^-2y^-8 + 2x^-1y^-7 + y^-6", "t3p5_mmm", false,
        {});
    add(2, "3'_5", "-++", "x^2 + 2xy^-1 + 2y^-2", "t3p5_mmm", false, {0});
    add(2, "3_6", "---", "x^-3y^-9 + 3x^-2y^-8 + 2x^-1y^-7 + y^-5",
        "t3_6_mmm", false, {});
    add(2, "3_6", "++-", "x^2y + 2xy^-1 + 3y^-2 + x^-1y^-3", "t3_6_mmm",
        false, {1});
    add(2, "3'_6", "+++", "x^3y^3 + 3x^2y^2 + 2xy + y^-1", "t3_6_mmm", true,
        {});
    add(2, "3'_6", "--+", "xy^-3 + 3y^-4 + 2x^-1y^-5 + x^-2y^-7", "t3_6_mmm",
        true, {1});
    add(2, "4arc", "+++", "y^-1 + 3x + 3x^2y + x^3y^2", "arc4_mmm", false,
        {0, 2});
    add(2, "4arc", "++-", "x^-1y^-4 + 3y^-3 + 3xy^-2 + x^2y^-1", "arc4_mmm",
        false, {1});
    add(2, "4arc", "+--", "x^-2y^-7 + 3x^-1y^-6 + 3y^-5 + xy^-4", "arc4_mmm",
        false, {0});
    add(2, "4arc", "---", "x^-3y^-10 + 3x^-2y^-9 + 3x^-1y^-8 + y^-7",
        "arc4_mmm", false, {});
    return r;
  }();
  return rows;
}

TangleDiagram realize(const GoldenEntry& e) {
  TangleDiagram d = parse_diagram(golden_base_diagrams().at(e.base));
  if (e.mirrored) d = mirror(d);
  for (int comp : e.reversed_components) d = reverse_component(d, comp);
  return d;
}

std::string sign_multiset(const TangleDiagram& d) {
  auto [plus, minus] = crossing_counts(d);
  return std::string(plus, '+') + std::string(minus, '-');
}

std::string fixture_filename(const GoldenEntry& e) {
  const std::string& type = e.type;
  // 2'_3 -> 2p3, 2_3 -> 2_3
  std::string flat;
  for (size_t i = 0; i < type.size(); ++i) {
    if (type[i] == '\'') {
      flat += 'p';
      if (i + 1 < type.size() && type[i + 1] == '_') ++i;
    } else {
      flat += type[i];
    }
  }
  std::string signs;
  for (char c : e.signs) signs += (c == '+') ? 'p' : 'm';
  std::string name = "t" + flat;
  if (!signs.empty()) name += "_" + signs;
  return name + ".tangle";
}

LaurentPoly2 golden_polynomial(const GoldenEntry& e) {
  return LaurentPoly2::parse(e.polynomial);
}

}  // namespace kht
