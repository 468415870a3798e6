#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kht {

/// A crossing of an oriented tangle diagram.
///
/// Ports are numbered counterclockwise starting from the incoming
/// under-strand edge, so port 0 is the under-strand entry and port 2 the
/// under-strand exit. The over-strand occupies ports 1 and 3; its direction
/// is encoded in the sign. A right-handed (+1) crossing has the over-strand
/// entering at port 3 and leaving at port 1; a left-handed (-1) crossing the
/// opposite. The sign is exactly what the right-hand rule yields for these
/// directions, so it is never stored inconsistently with the orientations.
struct Crossing {
  std::array<int, 4> ports{-1, -1, -1, -1};  // edge ids
  int sign = +1;

  int over_in_port() const { return sign > 0 ? 3 : 1; }
  int over_out_port() const { return sign > 0 ? 1 : 3; }
  bool operator==(const Crossing&) const = default;
};

/// One end of an edge: a crossing port, or a boundary point when
/// crossing < 0 (then `port` is the boundary-point index).
struct EndRef {
  int crossing = -1;
  int port = 0;
  bool at_boundary() const { return crossing < 0; }
  static EndRef boundary(int idx) { return EndRef{-1, idx}; }
  bool operator==(const EndRef&) const = default;
};

/// A directed edge fragment. `tail` is where the edge leaves, `head` where
/// it arrives. A crossing-free arc is an edge with both ends on the boundary.
struct Edge {
  EndRef tail;
  EndRef head;
  bool operator==(const Edge&) const = default;
};

/// An oriented planar tangle diagram. Crossing-free circles carry no port or
/// edge data and are stored as a count.
struct TangleDiagram {
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  std::vector<std::string> boundary;  // boundary-point labels, in order
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int boundary_count() const { return static_cast<int>(boundary.size()); }
  /// Number of crossing-free arcs (edges running boundary to boundary).
  int free_arcs() const;
  /// The edge end attached to boundary point `b`: (edge id, end-is-head).
  std::pair<int, bool> boundary_end(int b) const;

  bool operator==(const TangleDiagram&) const = default;
};

/// Checks all structural invariants; throws ValidationError on the first
/// violation. Every port carries exactly one edge end, every edge end sits on
/// the port or boundary point that references it, boundary labels are unique,
/// and the boundary has even size.
void validate(const TangleDiagram& d);

/// (right-handed count, left-handed count); the sum is crossings.size().
std::pair<int, int> crossing_counts(const TangleDiagram& d);

/// Connected components of the underlying curves, tracing strands straight
/// through crossings (no smoothing). Components are numbered by their
/// smallest edge id, with crossing-free loops appended at the end.
struct StrandComponents {
  int count = 0;
  std::vector<int> comp_of_edge;
  std::vector<bool> is_circle;
  std::vector<int> min_edge;  // representative edge per component, -1 for free loops
  /// Per crossing: components of the under strand and of the over strand.
  std::vector<std::pair<int, int>> crossing_strands;

  int arc_count() const;
};

StrandComponents strand_components(const TangleDiagram& d);

/// Mirror image: over and under strands swap at every crossing, so every
/// crossing sign flips and the 0/1 smoothings exchange roles.
TangleDiagram mirror(const TangleDiagram& d);

/// Reverses the orientation of one strand component. Crossings where the
/// component passes once flip sign; self-crossings keep theirs.
TangleDiagram reverse_component(const TangleDiagram& d, int comp);

/// Side-by-side union; labels of `b` are suffixed when they collide.
TangleDiagram disjoint_union(const TangleDiagram& a, const TangleDiagram& b);

/// Splits into diagram components (strand components glued by shared
/// crossings). Free loops come last, one diagram each.
std::vector<TangleDiagram> split_components(const TangleDiagram& d);

/// A tangle is simple when no arc has a self-crossing, no arc crosses a
/// circle, and the multigraph with one vertex per arc and one edge per
/// arc-arc crossing is a forest without parallel edges. Circles may cross
/// each other freely.
bool is_simple(const TangleDiagram& d);

/// Component id of an arc meeting at most one crossing, lowest id first;
/// empty when the diagram has no arcs. Guaranteed to succeed on a simple
/// tangle with at least one arc.
std::optional<int> find_leaf_arc(const TangleDiagram& d);

struct LeafRemoval {
  TangleDiagram rest;
  int removed_crossings = 0;  // 0 or 1
  int crossing_sign = 0;      // sign of the removed crossing, 0 if none
};

/// Deletes a leaf arc (an arc with at most one crossing). When the arc meets
/// a crossing, the other strand is spliced back together.
LeafRemoval remove_leaf_arc(const TangleDiagram& d, int comp);

/// Builds the diagram obtained by adding a pendant arc crossing the given
/// edge exactly once. The new crossing is inserted at index 0 and the new
/// arc's boundary points are appended. `over` selects whether the new arc
/// passes above or below the host strand, `sign` the handedness. The host
/// edge must lie on an arc component (a closed curve cannot be crossed just
/// once); the caller is responsible for picking an edge whose faces reach
/// the tangle boundary, which is automatic for boundary edges and for any
/// edge of a simple circle-free tangle.
TangleDiagram attach_pendant_arc(const TangleDiagram& d, int edge, bool over,
                                 int sign);

}  // namespace kht
