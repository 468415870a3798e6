#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kht/diagram.hpp"

namespace kht {

/// A vertex of the state cube {0,1}^n: one smoothing choice per crossing.
struct State {
  std::vector<uint8_t> bits;

  int ell() const {
    int s = 0;
    for (uint8_t b : bits) s += b;
    return s;
  }
  bool operator==(const State&) const = default;
};

/// States are ordered lexicographically by their bit vector; index 0 is the
/// all-zero state and bit 0 is the most significant position.
State state_from_index(int n, uint64_t index);
uint64_t state_index(const State& s);

/// The diagram after smoothing every crossing. The 0-smoothing joins port
/// pairs (0,1) and (2,3) in the counterclockwise port order, the 1-smoothing
/// pairs (0,3) and (1,2).
struct ResolvedDiagram {
  int circle_count = 0;  // includes crossing-free loops
  /// Perfect matching induced on boundary points, pairs normalized and sorted.
  std::vector<std::pair<int, int>> arcs;
  /// Edge id -> resolved component, numbered by smallest member edge.
  std::vector<int> comp_of_edge;
  std::vector<bool> comp_is_circle;
  std::vector<int> comp_min_edge;
  /// Circle order: components that are circles by ascending component id,
  /// then one entry (-1) per crossing-free loop.
  std::vector<int> circle_comp;     // component id, -1 for free loops
  std::vector<int> circle_of_comp;  // component id -> circle index or -1
};

ResolvedDiagram resolve(const TangleDiagram& d, const State& s);

/// The elementary cobordism between a state and the state with one more
/// 1-bit, classified by the components the crossing touches.
/// ReconnectArcArc covers every arc reconnection that keeps the circle count
/// fixed: two distinct arcs trading ends, or one arc rewiring through a
/// crossing it passes twice.
enum class SaddleKind {
  MergeCircleCircle,
  SplitCircle,
  MergeCircleArc,
  SplitArcCircle,
  ReconnectArcArc,
};

std::string to_string(SaddleKind k);

/// Classifies the saddle from `s` to `s` with bit `i` set. Requires
/// s.bits[i] == 0. Throws GeometryError when the component counts before and
/// after are impossible for a planar diagram.
SaddleKind saddle_type(const TangleDiagram& d, const State& s, int i);

/// Same, reusing already-computed resolutions of the two states.
SaddleKind saddle_type(const TangleDiagram& d, int i, const ResolvedDiagram& src,
                       const ResolvedDiagram& tgt);

}  // namespace kht
