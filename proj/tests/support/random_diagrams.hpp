#pragma once

#include <random>
#include <string>

#include "kht/diagram.hpp"

namespace kht::testsupport {

// Local surgeries for building random diagrams. Each move edits one edge (or
// adds disjoint material), so everything generated is planar by
// construction.

inline std::string fresh_label(const TangleDiagram& d, const std::string& base) {
  auto taken = [&](const std::string& s) {
    for (const std::string& t : d.boundary)
      if (t == s) return true;
    return false;
  };
  std::string label = base;
  int k = 0;
  while (taken(label)) label = base + std::to_string(k++);
  return label;
}

inline void add_free_arc(TangleDiagram& d) {
  int b = d.boundary_count();
  d.boundary.push_back(fresh_label(d, "p" + std::to_string(b)));
  d.boundary.push_back(fresh_label(d, "q" + std::to_string(b)));
  d.edges.push_back(Edge{EndRef::boundary(b), EndRef::boundary(b + 1)});
}

/// Reidemeister-1 kink on an edge: one new crossing whose two strands both
/// belong to the host component.
inline void add_kink(TangleDiagram& d, int edge, bool positive) {
  const int c = d.crossing_count();
  const int e1 = edge;
  const int eL = static_cast<int>(d.edges.size());
  const int e2 = eL + 1;
  EndRef old_head = d.edges[e1].head;
  d.edges[e1].head = EndRef{c, 0};
  if (positive) {
    // X+ e1 e2 eL eL
    d.edges.push_back(Edge{EndRef{c, 2}, EndRef{c, 3}});  // eL
    d.edges.push_back(Edge{EndRef{c, 1}, old_head});      // e2
    d.crossings.push_back(Crossing{{e1, e2, eL, eL}, +1});
  } else {
    // X- e1 eL eL e2
    d.edges.push_back(Edge{EndRef{c, 2}, EndRef{c, 1}});  // eL
    d.edges.push_back(Edge{EndRef{c, 3}, old_head});      // e2
    d.crossings.push_back(Crossing{{e1, eL, eL, e2}, -1});
  }
  if (!old_head.at_boundary())
    d.crossings[old_head.crossing].ports[old_head.port] = e2;
}

/// Reidemeister-2 poke: a fresh arc dips across the edge and back, adding
/// one crossing of each sign.
inline void add_poke(TangleDiagram& d, int edge, bool arc_over) {
  const int c1 = d.crossing_count();
  const int c2 = c1 + 1;
  const int e1 = edge;
  const int e2 = static_cast<int>(d.edges.size());
  const int e3 = e2 + 1;
  const int f1 = e2 + 2;
  const int f2 = e2 + 3;
  const int f3 = e2 + 4;
  EndRef old_head = d.edges[e1].head;
  int b = d.boundary_count();
  d.boundary.push_back(fresh_label(d, "pk" + std::to_string(b)));
  d.boundary.push_back(fresh_label(d, "qk" + std::to_string(b)));
  if (arc_over) {
    // X- e1 f1 e2 f2 ; X+ e2 f3 e3 f2
    d.edges[e1].head = EndRef{c1, 0};
    d.edges.push_back(Edge{EndRef{c1, 2}, EndRef{c2, 0}});        // e2
    d.edges.push_back(Edge{EndRef{c2, 2}, old_head});             // e3
    d.edges.push_back(Edge{EndRef::boundary(b), EndRef{c1, 1}});  // f1
    d.edges.push_back(Edge{EndRef{c1, 3}, EndRef{c2, 3}});        // f2
    d.edges.push_back(Edge{EndRef{c2, 1}, EndRef::boundary(b + 1)});  // f3
    d.crossings.push_back(Crossing{{e1, f1, e2, f2}, -1});
    d.crossings.push_back(Crossing{{e2, f3, e3, f2}, +1});
  } else {
    // X+ f1 e2 f2 e1 ; X- f2 e2 f3 e3  (host strand passes over)
    d.edges[e1].head = EndRef{c1, 3};
    d.edges.push_back(Edge{EndRef{c1, 1}, EndRef{c2, 1}});        // e2
    d.edges.push_back(Edge{EndRef{c2, 3}, old_head});             // e3
    d.edges.push_back(Edge{EndRef::boundary(b), EndRef{c1, 0}});  // f1
    d.edges.push_back(Edge{EndRef{c1, 2}, EndRef{c2, 0}});        // f2
    d.edges.push_back(Edge{EndRef{c2, 2}, EndRef::boundary(b + 1)});  // f3
    d.crossings.push_back(Crossing{{f1, e2, f2, e1}, +1});
    d.crossings.push_back(Crossing{{f2, e2, f3, e3}, -1});
  }
  if (!old_head.at_boundary())
    d.crossings[old_head.crossing].ports[old_head.port] = e3;
}

/// A fresh circle encircling the edge: two crossings, circle passing over.
inline void add_encircle(TangleDiagram& d, int edge) {
  const int c1 = d.crossing_count();
  const int c2 = c1 + 1;
  const int e1 = edge;
  const int e2 = static_cast<int>(d.edges.size());
  const int e3 = e2 + 1;
  const int g1 = e2 + 2;
  const int g2 = e2 + 3;
  EndRef old_head = d.edges[e1].head;
  d.edges[e1].head = EndRef{c1, 0};
  // X- e1 g2 e2 g1 ; X+ e2 g2 e3 g1
  d.edges.push_back(Edge{EndRef{c1, 2}, EndRef{c2, 0}});  // e2
  d.edges.push_back(Edge{EndRef{c2, 2}, old_head});       // e3
  d.edges.push_back(Edge{EndRef{c1, 3}, EndRef{c2, 3}});  // g1
  d.edges.push_back(Edge{EndRef{c2, 1}, EndRef{c1, 1}});  // g2
  d.crossings.push_back(Crossing{{e1, g2, e2, g1}, -1});
  d.crossings.push_back(Crossing{{e2, g2, e3, g1}, +1});
  if (!old_head.at_boundary())
    d.crossings[old_head.crossing].ports[old_head.port] = e3;
}

/// An unknot diagram with one kink, the smallest circle with edges.
inline void add_kinked_unknot(TangleDiagram& d, bool positive) {
  const int c = d.crossing_count();
  const int y1 = static_cast<int>(d.edges.size());
  const int y2 = y1 + 1;
  if (positive) {
    // X+ y1 y1 y2 y2
    d.edges.push_back(Edge{EndRef{c, 1}, EndRef{c, 0}});
    d.edges.push_back(Edge{EndRef{c, 2}, EndRef{c, 3}});
    d.crossings.push_back(Crossing{{y1, y1, y2, y2}, +1});
  } else {
    // X- y1 y2 y2 y1
    d.edges.push_back(Edge{EndRef{c, 3}, EndRef{c, 0}});
    d.edges.push_back(Edge{EndRef{c, 2}, EndRef{c, 1}});
    d.crossings.push_back(Crossing{{y1, y2, y2, y1}, -1});
  }
}

class DiagramGen {
 public:
  explicit DiagramGen(uint64_t seed) : rng_(seed) {}

  /// Simple tangle without circles: free arcs joined by pendant arcs.
  TangleDiagram random_simple(int arcs) {
    TangleDiagram d;
    add_free_arc(d);
    for (int i = 1; i < arcs; ++i) {
      if (pick(4) == 0 || d.edges.empty()) {
        add_free_arc(d);
      } else {
        d = attach_pendant_arc(d, pick_edge(d), coin(), coin() ? +1 : -1);
      }
    }
    return d;
  }

  /// Arbitrary planar diagram with the requested number of crossings.
  TangleDiagram random_general(int crossings) {
    TangleDiagram d;
    if (coin())
      add_free_arc(d);
    else
      add_kinked_unknot(d, coin());
    while (d.crossing_count() < crossings) {
      int left = crossings - d.crossing_count();
      switch (pick(left >= 2 ? 6 : 4)) {
        case 0: {
          int edge = pick_arc_edge(d);
          if (edge < 0)
            add_kink(d, pick_edge(d), coin());
          else
            d = attach_pendant_arc(d, edge, coin(), coin() ? +1 : -1);
          break;
        }
        case 1:
          add_kink(d, pick_edge(d), coin());
          break;
        case 2:
          add_kinked_unknot(d, coin());
          break;
        case 3:
          if (pick(3) == 0) add_free_arc(d);
          if (d.free_loops == 0 && pick(3) == 0) d.free_loops++;
          break;
        case 4:
          add_poke(d, pick_edge(d), coin());
          break;
        case 5:
          add_encircle(d, pick_edge(d));
          break;
      }
    }
    return d;
  }

 private:
  std::mt19937_64 rng_;
  int pick(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng_);
  }
  bool coin() { return pick(2) == 0; }
  int pick_edge(const TangleDiagram& d) {
    return pick(static_cast<int>(d.edges.size()));
  }
  int pick_arc_edge(const TangleDiagram& d) {
    StrandComponents sc = strand_components(d);
    std::vector<int> arc_edges;
    for (size_t e = 0; e < d.edges.size(); ++e)
      if (!sc.is_circle[sc.comp_of_edge[e]])
        arc_edges.push_back(static_cast<int>(e));
    if (arc_edges.empty()) return -1;
    return arc_edges[pick(static_cast<int>(arc_edges.size()))];
  }
};

}  // namespace kht::testsupport
