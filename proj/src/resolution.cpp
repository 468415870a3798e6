#include "kht/resolution.hpp"

#include <algorithm>

#include "internal.hpp"
#include "kht/errors.hpp"

namespace kht {

State state_from_index(int n, uint64_t index) {
  State s;
  s.bits.resize(n);
  for (int i = 0; i < n; ++i) s.bits[i] = (index >> (n - 1 - i)) & 1;
  return s;
}

uint64_t state_index(const State& s) {
  uint64_t m = 0;
  for (uint8_t b : s.bits) m = (m << 1) | b;
  return m;
}

ResolvedDiagram resolve(const TangleDiagram& d, const State& s) {
  if (static_cast<int>(s.bits.size()) != d.crossing_count())
    throw ValidationError("state has " + std::to_string(s.bits.size()) +
                          " bits for " + std::to_string(d.crossing_count()) +
                          " crossings");
  const int ne = static_cast<int>(d.edges.size());
  detail::DSU dsu(ne);
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& p = d.crossings[ci].ports;
    if (s.bits[ci] == 0) {
      dsu.unite(p[0], p[1]);
      dsu.unite(p[2], p[3]);
    } else {
      dsu.unite(p[0], p[3]);
      dsu.unite(p[1], p[2]);
    }
  }
  auto g = detail::group_by_min_edge(dsu, ne);

  ResolvedDiagram r;
  r.comp_of_edge = std::move(g.comp_of_edge);
  r.comp_min_edge = std::move(g.min_edge);
  r.comp_is_circle.assign(g.count, true);

  // Boundary points per component; each class is a path or a cycle, so a
  // component meets the boundary in 0 or 2 points.
  std::vector<std::vector<int>> ends(g.count);
  for (int b = 0; b < d.boundary_count(); ++b) {
    auto [eid, is_head] = d.boundary_end(b);
    int c = r.comp_of_edge[eid];
    r.comp_is_circle[c] = false;
    ends[c].push_back(b);
  }
  for (int c = 0; c < g.count; ++c) {
    if (r.comp_is_circle[c]) continue;
    if (ends[c].size() != 2)
      throw GeometryError("resolved component meets the boundary " +
                          std::to_string(ends[c].size()) + " times");
    r.arcs.emplace_back(std::min(ends[c][0], ends[c][1]),
                        std::max(ends[c][0], ends[c][1]));
  }
  std::sort(r.arcs.begin(), r.arcs.end());

  r.circle_of_comp.assign(g.count, -1);
  for (int c = 0; c < g.count; ++c) {
    if (r.comp_is_circle[c]) {
      r.circle_of_comp[c] = static_cast<int>(r.circle_comp.size());
      r.circle_comp.push_back(c);
    }
  }
  for (int i = 0; i < d.free_loops; ++i) r.circle_comp.push_back(-1);
  r.circle_count = static_cast<int>(r.circle_comp.size());
  return r;
}

std::string to_string(SaddleKind k) {
  switch (k) {
    case SaddleKind::MergeCircleCircle: return "merge circle-circle";
    case SaddleKind::SplitCircle: return "split circle";
    case SaddleKind::MergeCircleArc: return "merge circle-arc";
    case SaddleKind::SplitArcCircle: return "split arc-circle";
    case SaddleKind::ReconnectArcArc: return "reconnect arc-arc";
  }
  return "?";
}

SaddleKind saddle_type(const TangleDiagram& d, int i, const ResolvedDiagram& src,
                       const ResolvedDiagram& tgt) {
  const auto& p = d.crossings[i].ports;
  // In the source the crossing is 0-smoothed: the two local strands join
  // ports (0,1) and (2,3).
  int a = src.comp_of_edge[p[0]];
  int b = src.comp_of_edge[p[2]];
  const int delta = tgt.circle_count - src.circle_count;
  SaddleKind kind;
  int expected_delta;
  if (a != b) {
    bool ac = src.comp_is_circle[a], bc = src.comp_is_circle[b];
    if (ac && bc) {
      kind = SaddleKind::MergeCircleCircle;
      expected_delta = -1;
    } else if (!ac && !bc) {
      kind = SaddleKind::ReconnectArcArc;
      expected_delta = 0;
    } else {
      kind = SaddleKind::MergeCircleArc;
      expected_delta = -1;
    }
  } else if (src.comp_is_circle[a]) {
    kind = SaddleKind::SplitCircle;
    expected_delta = +1;
  } else if (delta == 1) {
    // an arc passing the crossing twice pinches off a circle
    kind = SaddleKind::SplitArcCircle;
    expected_delta = +1;
  } else {
    // an arc reconnecting with itself; no circle appears because the
    // external return path is an open arc and does not separate the plane
    kind = SaddleKind::ReconnectArcArc;
    expected_delta = 0;
  }
  if (delta != expected_delta)
    throw GeometryError(
        "saddle at crossing " + std::to_string(i) + " (" + to_string(kind) +
        ") changes the circle count by " + std::to_string(delta) +
        "; the port data cannot come from a planar diagram");
  return kind;
}

SaddleKind saddle_type(const TangleDiagram& d, const State& s, int i) {
  if (i < 0 || i >= d.crossing_count())
    throw ValidationError("crossing index out of range");
  if (s.bits[i] != 0)
    throw ValidationError("crossing " + std::to_string(i) +
                          " is already 1-smoothed");
  State t = s;
  t.bits[i] = 1;
  ResolvedDiagram src = resolve(d, s);
  ResolvedDiagram tgt = resolve(d, t);
  return saddle_type(d, i, src, tgt);
}

}  // namespace kht
