#pragma once

#include <vector>

namespace kht::detail {

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

/// Numbers the classes of a DSU over edge ids in order of their smallest
/// member edge, so component ids are independent of union order.
struct EdgeGrouping {
  std::vector<int> comp_of_edge;
  std::vector<int> min_edge;  // per component
  int count = 0;
};

inline EdgeGrouping group_by_min_edge(DSU& dsu, int n_edges) {
  EdgeGrouping g;
  g.comp_of_edge.assign(n_edges, -1);
  std::vector<int> comp_of_root(n_edges, -1);
  for (int e = 0; e < n_edges; ++e) {
    int r = dsu.find(e);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = g.count++;
      g.min_edge.push_back(e);
    }
    g.comp_of_edge[e] = comp_of_root[r];
  }
  return g;
}

}  // namespace kht::detail
