#include "kht/diagram.hpp"

#include <algorithm>
#include <set>

#include "internal.hpp"
#include "kht/errors.hpp"

namespace kht {

int TangleDiagram::free_arcs() const {
  int n = 0;
  for (const Edge& e : edges)
    if (e.tail.at_boundary() && e.head.at_boundary()) ++n;
  return n;
}

std::pair<int, bool> TangleDiagram::boundary_end(int b) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].tail == EndRef::boundary(b)) return {i, false};
    if (edges[i].head == EndRef::boundary(b)) return {i, true};
  }
  throw ValidationError("boundary point " + std::to_string(b) +
                        " has no incident edge");
}

namespace {

bool is_in_port(const Crossing& c, int p) {
  return p == 0 || p == c.over_in_port();
}

}  // namespace

void validate(const TangleDiagram& d) {
  const int ne = static_cast<int>(d.edges.size());
  const int nc = static_cast<int>(d.crossings.size());
  const int nb = static_cast<int>(d.boundary.size());

  if (d.free_loops < 0) throw ValidationError("negative free loop count");
  if (nb % 2 != 0) throw ValidationError("odd number of boundary points");

  std::set<std::string> labels;
  for (const std::string& s : d.boundary) {
    if (s.empty()) throw ValidationError("empty boundary label");
    if (!labels.insert(s).second)
      throw ValidationError("duplicate boundary label '" + s + "'");
  }

  for (const Crossing& c : d.crossings)
    if (c.sign != 1 && c.sign != -1)
      throw ValidationError("crossing sign must be +1 or -1");

  // Every port holds exactly one edge end, pointing back at it, with the
  // direction the port demands; every boundary point likewise.
  std::vector<int> boundary_refs(nb, 0);
  for (int ei = 0; ei < ne; ++ei) {
    const Edge& e = d.edges[ei];
    for (int side = 0; side < 2; ++side) {
      const EndRef& end = side == 0 ? e.tail : e.head;
      if (end.at_boundary()) {
        if (end.port < 0 || end.port >= nb)
          throw ValidationError("edge " + std::to_string(ei) +
                                " references missing boundary point");
        ++boundary_refs[end.port];
      } else {
        if (end.crossing < 0 || end.crossing >= nc || end.port < 0 ||
            end.port >= 4)
          throw ValidationError("edge " + std::to_string(ei) +
                                " references missing crossing port");
      }
    }
    if (e.tail == e.head)
      throw ValidationError("edge " + std::to_string(ei) +
                            " starts and ends at the same point");
  }
  for (int b = 0; b < nb; ++b)
    if (boundary_refs[b] != 1)
      throw ValidationError("boundary point '" + d.boundary[b] + "' has " +
                            std::to_string(boundary_refs[b]) +
                            " incident edge ends, expected 1");

  for (int ci = 0; ci < nc; ++ci) {
    const Crossing& c = d.crossings[ci];
    for (int p = 0; p < 4; ++p) {
      int eid = c.ports[p];
      if (eid < 0 || eid >= ne)
        throw ValidationError("crossing " + std::to_string(ci) + " port " +
                              std::to_string(p) + " has no edge");
      const Edge& e = d.edges[eid];
      EndRef here{ci, p};
      bool as_head = e.head == here;
      bool as_tail = e.tail == here;
      if (as_head == as_tail)
        throw ValidationError("crossing " + std::to_string(ci) + " port " +
                              std::to_string(p) +
                              " and edge " + std::to_string(eid) +
                              " disagree");
      // Orientation consistency: in-ports receive heads, out-ports tails.
      if (is_in_port(c, p) != as_head)
        throw ValidationError("orientation inconsistency at crossing " +
                              std::to_string(ci) + " port " +
                              std::to_string(p));
    }
  }
}

std::pair<int, int> crossing_counts(const TangleDiagram& d) {
  int plus = 0, minus = 0;
  for (const Crossing& c : d.crossings) (c.sign > 0 ? plus : minus)++;
  return {plus, minus};
}

int StrandComponents::arc_count() const {
  int n = 0;
  for (bool c : is_circle)
    if (!c) ++n;
  return n;
}

StrandComponents strand_components(const TangleDiagram& d) {
  const int ne = static_cast<int>(d.edges.size());
  detail::DSU dsu(ne);
  for (const Crossing& c : d.crossings) {
    dsu.unite(c.ports[0], c.ports[2]);  // under strand
    dsu.unite(c.ports[1], c.ports[3]);  // over strand
  }
  auto g = detail::group_by_min_edge(dsu, ne);

  StrandComponents sc;
  sc.count = g.count + d.free_loops;
  sc.comp_of_edge = std::move(g.comp_of_edge);
  sc.min_edge = std::move(g.min_edge);
  sc.is_circle.assign(g.count, true);
  for (const Edge& e : d.edges) {
    if (e.tail.at_boundary() || e.head.at_boundary())
      sc.is_circle[sc.comp_of_edge[&e - d.edges.data()]] = false;
  }
  for (int i = 0; i < d.free_loops; ++i) {
    sc.is_circle.push_back(true);
    sc.min_edge.push_back(-1);
  }
  sc.crossing_strands.reserve(d.crossings.size());
  for (const Crossing& c : d.crossings)
    sc.crossing_strands.emplace_back(sc.comp_of_edge[c.ports[0]],
                                     sc.comp_of_edge[c.ports[1]]);
  return sc;
}

TangleDiagram mirror(const TangleDiagram& d) {
  TangleDiagram m = d;
  // Per crossing, the old over-in port becomes the new under-in port; the
  // cyclic order in the plane is untouched.
  std::vector<int> shift(d.crossings.size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const Crossing& c = d.crossings[ci];
    int rot = c.sign > 0 ? 1 : 3;  // new port = (old port + rot) % 4
    shift[ci] = rot;
    Crossing& n = m.crossings[ci];
    for (int p = 0; p < 4; ++p) n.ports[(p + rot) % 4] = c.ports[p];
    n.sign = -c.sign;
  }
  for (Edge& e : m.edges) {
    if (!e.tail.at_boundary()) e.tail.port = (e.tail.port + shift[e.tail.crossing]) % 4;
    if (!e.head.at_boundary()) e.head.port = (e.head.port + shift[e.head.crossing]) % 4;
  }
  return m;
}

TangleDiagram reverse_component(const TangleDiagram& d, int comp) {
  StrandComponents sc = strand_components(d);
  if (comp < 0 || comp >= sc.count)
    throw ValidationError("no such component: " + std::to_string(comp));
  TangleDiagram r = d;
  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    if (sc.comp_of_edge[ei] == comp) std::swap(r.edges[ei].tail, r.edges[ei].head);
  }
  std::vector<int> shift(d.crossings.size(), 0);
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    auto [under, over] = sc.crossing_strands[ci];
    bool under_rev = under == comp;
    bool over_rev = over == comp;
    if (!under_rev && !over_rev) continue;
    const Crossing& c = d.crossings[ci];
    Crossing& n = r.crossings[ci];
    if (under_rev) {
      // the old under-out port becomes the new under-in port
      shift[ci] = 2;
      for (int p = 0; p < 4; ++p) n.ports[(p + 2) % 4] = c.ports[p];
    }
    if (under_rev != over_rev) n.sign = -c.sign;
  }
  for (Edge& e : r.edges) {
    if (!e.tail.at_boundary()) e.tail.port = (e.tail.port + shift[e.tail.crossing]) % 4;
    if (!e.head.at_boundary()) e.head.port = (e.head.port + shift[e.head.crossing]) % 4;
  }
  return r;
}

TangleDiagram disjoint_union(const TangleDiagram& a, const TangleDiagram& b) {
  TangleDiagram u = a;
  const int ce = static_cast<int>(a.edges.size());
  const int cc = static_cast<int>(a.crossings.size());
  const int cb = static_cast<int>(a.boundary.size());
  auto bump = [&](EndRef e) {
    if (e.at_boundary()) return EndRef::boundary(e.port + cb);
    return EndRef{e.crossing + cc, e.port};
  };
  for (const Crossing& c : b.crossings) {
    Crossing n = c;
    for (int p = 0; p < 4; ++p) n.ports[p] = c.ports[p] + ce;
    u.crossings.push_back(n);
  }
  for (const Edge& e : b.edges) u.edges.push_back(Edge{bump(e.tail), bump(e.head)});
  std::set<std::string> used(a.boundary.begin(), a.boundary.end());
  for (std::string label : b.boundary) {
    while (used.count(label)) label += "'";
    used.insert(label);
    u.boundary.push_back(label);
  }
  u.free_loops += b.free_loops;
  return u;
}

std::vector<TangleDiagram> split_components(const TangleDiagram& d) {
  StrandComponents sc = strand_components(d);
  const int strand_count = sc.count - d.free_loops;
  detail::DSU dsu(std::max(strand_count, 1));
  for (auto [u, o] : sc.crossing_strands) dsu.unite(u, o);

  // group index per strand component, ordered by smallest component id
  std::vector<int> group_of(strand_count, -1);
  int groups = 0;
  for (int c = 0; c < strand_count; ++c) {
    int r = dsu.find(c);
    if (group_of[r] < 0) group_of[r] = groups++;
    group_of[c] = group_of[r];
  }

  std::vector<TangleDiagram> parts(groups);
  std::vector<std::vector<int>> edge_map(groups,
                                         std::vector<int>(d.edges.size(), -1));
  std::vector<std::vector<int>> crossing_map(
      groups, std::vector<int>(d.crossings.size(), -1));
  std::vector<std::vector<int>> boundary_map(
      groups, std::vector<int>(d.boundary.size(), -1));

  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    int g = group_of[sc.comp_of_edge[ei]];
    edge_map[g][ei] = static_cast<int>(parts[g].edges.size());
    parts[g].edges.push_back(d.edges[ei]);
  }
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    int g = group_of[sc.comp_of_edge[d.crossings[ci].ports[0]]];
    crossing_map[g][ci] = static_cast<int>(parts[g].crossings.size());
    parts[g].crossings.push_back(d.crossings[ci]);
  }
  for (size_t b = 0; b < d.boundary.size(); ++b) {
    auto [eid, is_head] = d.boundary_end(static_cast<int>(b));
    int g = group_of[sc.comp_of_edge[eid]];
    boundary_map[g][b] = static_cast<int>(parts[g].boundary.size());
    parts[g].boundary.push_back(d.boundary[b]);
  }
  for (int g = 0; g < groups; ++g) {
    for (Crossing& c : parts[g].crossings)
      for (int p = 0; p < 4; ++p) c.ports[p] = edge_map[g][c.ports[p]];
    for (Edge& e : parts[g].edges) {
      for (EndRef* end : {&e.tail, &e.head}) {
        if (end->at_boundary())
          end->port = boundary_map[g][end->port];
        else
          end->crossing = crossing_map[g][end->crossing];
      }
    }
  }
  for (int i = 0; i < d.free_loops; ++i) {
    TangleDiagram loop;
    loop.free_loops = 1;
    parts.push_back(loop);
  }
  return parts;
}

bool is_simple(const TangleDiagram& d) {
  StrandComponents sc = strand_components(d);
  detail::DSU forest(sc.count);
  for (auto [u, o] : sc.crossing_strands) {
    if (u == o) {
      if (!sc.is_circle[u]) return false;  // arc self-crossing
      continue;                            // circles may knot freely
    }
    bool uc = sc.is_circle[u], oc = sc.is_circle[o];
    if (uc != oc) return false;  // arc crossing a circle
    if (uc) continue;            // circle-circle
    // one arc-arc crossing = one edge of the arc multigraph; any repeat or
    // cycle breaks the forest property
    if (!forest.unite(u, o)) return false;
  }
  return true;
}

std::optional<int> find_leaf_arc(const TangleDiagram& d) {
  StrandComponents sc = strand_components(d);
  std::vector<int> degree(sc.count, 0);
  for (auto [u, o] : sc.crossing_strands) {
    ++degree[u];
    ++degree[o];
  }
  for (int c = 0; c < sc.count; ++c)
    if (!sc.is_circle[c] && degree[c] <= 1) return c;
  return std::nullopt;
}

LeafRemoval remove_leaf_arc(const TangleDiagram& d, int comp) {
  StrandComponents sc = strand_components(d);
  if (comp < 0 || comp >= sc.count || sc.is_circle[comp])
    throw ValidationError("component " + std::to_string(comp) +
                          " is not an arc");
  std::vector<int> touching;
  for (size_t ci = 0; ci < sc.crossing_strands.size(); ++ci) {
    auto [u, o] = sc.crossing_strands[ci];
    if (u == comp || o == comp) touching.push_back(static_cast<int>(ci));
  }
  if (touching.size() > 1)
    throw ValidationError("arc " + std::to_string(comp) +
                          " meets more than one crossing");

  std::vector<bool> drop_edge(d.edges.size(), false);
  for (size_t ei = 0; ei < d.edges.size(); ++ei)
    if (sc.comp_of_edge[ei] == comp) drop_edge[ei] = true;

  LeafRemoval out;
  int removed_crossing = -1;
  int splice_into = -1, splice_away = -1;
  if (!touching.empty()) {
    removed_crossing = touching[0];
    const Crossing& c = d.crossings[removed_crossing];
    auto [u, o] = sc.crossing_strands[removed_crossing];
    if (u == comp && o == comp)
      throw ValidationError("arc has a self-crossing, cannot splice");
    // the surviving strand gets its two edge fragments merged
    int bin, bout;
    if (u == comp) {
      bin = c.ports[c.over_in_port()];
      bout = c.ports[c.over_out_port()];
    } else {
      bin = c.ports[0];
      bout = c.ports[2];
    }
    if (bin == bout)
      throw GeometryError("surviving strand closes through the crossing");
    splice_into = bin;
    splice_away = bout;
    drop_edge[splice_away] = true;
    out.removed_crossings = 1;
    out.crossing_sign = c.sign;
  }

  std::vector<bool> drop_boundary(d.boundary.size(), false);
  for (size_t b = 0; b < d.boundary.size(); ++b) {
    auto [eid, is_head] = d.boundary_end(static_cast<int>(b));
    if (sc.comp_of_edge[eid] == comp) drop_boundary[b] = true;
  }

  std::vector<int> edge_map(d.edges.size(), -1);
  std::vector<int> crossing_map(d.crossings.size(), -1);
  std::vector<int> boundary_map(d.boundary.size(), -1);
  TangleDiagram& r = out.rest;
  r.free_loops = d.free_loops;
  for (size_t ei = 0; ei < d.edges.size(); ++ei)
    if (!drop_edge[ei]) {
      edge_map[ei] = static_cast<int>(r.edges.size());
      r.edges.push_back(d.edges[ei]);
    }
  for (size_t ci = 0; ci < d.crossings.size(); ++ci)
    if (static_cast<int>(ci) != removed_crossing) {
      crossing_map[ci] = static_cast<int>(r.crossings.size());
      r.crossings.push_back(d.crossings[ci]);
    }
  for (size_t b = 0; b < d.boundary.size(); ++b)
    if (!drop_boundary[b]) {
      boundary_map[b] = static_cast<int>(r.boundary.size());
      r.boundary.push_back(d.boundary[b]);
    }

  if (splice_into >= 0) {
    // merged edge keeps splice_into's slot: tail of bin, head of bout
    r.edges[edge_map[splice_into]].head = d.edges[splice_away].head;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci)
      if (crossing_map[ci] >= 0)
        for (int p = 0; p < 4; ++p)
          if (r.crossings[crossing_map[ci]].ports[p] == splice_away)
            r.crossings[crossing_map[ci]].ports[p] = splice_into;
  }

  for (Crossing& c : r.crossings)
    for (int p = 0; p < 4; ++p) c.ports[p] = edge_map[c.ports[p]];
  for (Edge& e : r.edges) {
    for (EndRef* end : {&e.tail, &e.head}) {
      if (end->at_boundary())
        end->port = boundary_map[end->port];
      else
        end->crossing = crossing_map[end->crossing];
    }
  }
  return out;
}

TangleDiagram attach_pendant_arc(const TangleDiagram& d, int edge, bool over,
                                 int sign) {
  if (edge < 0 || edge >= static_cast<int>(d.edges.size()))
    throw ValidationError("no such edge: " + std::to_string(edge));
  if (sign != 1 && sign != -1)
    throw ValidationError("sign must be +1 or -1");
  {
    // A closed curve meets a properly embedded arc an even number of times,
    // so one new crossing can only sit on an arc component.
    StrandComponents sc = strand_components(d);
    if (sc.is_circle[sc.comp_of_edge[edge]])
      throw ValidationError(
          "pendant arc cannot cross a circle component exactly once");
  }

  TangleDiagram r = d;
  // the new crossing takes index 0
  for (Edge& e : r.edges) {
    if (!e.tail.at_boundary()) e.tail.crossing++;
    if (!e.head.at_boundary()) e.head.crossing++;
  }

  const int e1 = edge;
  const int e2 = static_cast<int>(r.edges.size());
  const int f1 = e2 + 1;
  const int f2 = e2 + 2;

  Crossing c;
  c.sign = sign;
  if (!over) {  // pendant passes under the host strand
    c.ports = sign > 0 ? std::array<int, 4>{f1, e2, f2, e1}
                       : std::array<int, 4>{f1, e1, f2, e2};
  } else {
    c.ports = sign > 0 ? std::array<int, 4>{e1, f2, e2, f1}
                       : std::array<int, 4>{e1, f1, e2, f2};
  }
  auto port_of = [&](int eid) {
    for (int p = 0; p < 4; ++p)
      if (c.ports[p] == eid) return p;
    return -1;
  };

  EndRef old_head = r.edges[e1].head;
  r.edges[e1].head = EndRef{0, port_of(e1)};
  r.edges.push_back(Edge{EndRef{0, port_of(e2)}, old_head});
  if (!old_head.at_boundary())
    r.crossings[old_head.crossing - 1].ports[old_head.port] = e2;

  auto fresh_label = [&](const std::string& base) {
    std::string label = base;
    int k = 0;
    auto taken = [&](const std::string& s) {
      for (const std::string& t : r.boundary)
        if (t == s) return true;
      return false;
    };
    while (taken(label)) label = base + std::to_string(k++);
    return label;
  };
  int bp = static_cast<int>(r.boundary.size());
  r.boundary.push_back(fresh_label("pn"));
  r.boundary.push_back(fresh_label("qn"));
  r.edges.push_back(Edge{EndRef::boundary(bp), EndRef{0, port_of(f1)}});
  r.edges.push_back(Edge{EndRef{0, port_of(f2)}, EndRef::boundary(bp + 1)});

  r.crossings.insert(r.crossings.begin(), c);
  return r;
}

}  // namespace kht
