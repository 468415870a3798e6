#include "kht/complex.hpp"

#include <json.hpp>

#include "kht/errors.hpp"

namespace kht {

int homological_degree(const State& s, int n_minus) {
  return s.ell() - n_minus;
}

int quantum_degree(int k, int n_plus, int n_minus, int theta) {
  return k + n_plus - n_minus + theta;
}

int theta_of(const std::vector<uint8_t>& circle_labels, int arc_count) {
  int t = -arc_count;
  for (uint8_t l : circle_labels) t += (l == kLabelOne) ? 1 : -1;
  return t;
}

namespace {

// Circle index in the target resolution for a source circle the saddle does
// not touch. Edge-based circles keep their edge set, so the representative
// edge finds them; crossing-free loops sit in the same position at the tail
// of the circle list on both sides.
int carried_circle(const ResolvedDiagram& src, const ResolvedDiagram& tgt,
                   int free_loops, int src_circle) {
  int src_edge_circles = src.circle_count - free_loops;
  int tgt_edge_circles = tgt.circle_count - free_loops;
  if (src_circle >= src_edge_circles)
    return tgt_edge_circles + (src_circle - src_edge_circles);
  int rep = src.comp_min_edge[src.circle_comp[src_circle]];
  int tcomp = tgt.comp_of_edge[rep];
  int tcircle = tgt.circle_of_comp[tcomp];
  if (tcircle < 0)
    throw GeometryError("carried circle lost its circle status across a saddle");
  return tcircle;
}

}  // namespace

std::vector<SaddleTerm> apply_saddle(const TangleDiagram& d, int i,
                                     const ResolvedDiagram& src,
                                     const ResolvedDiagram& tgt,
                                     const std::vector<uint8_t>& labels) {
  SaddleKind kind = saddle_type(d, i, src, tgt);
  if (kind == SaddleKind::ReconnectArcArc) return {};

  const int free_loops = d.free_loops;
  const auto& p = d.crossings[i].ports;
  const int comp_a = src.comp_of_edge[p[0]];
  const int comp_b = src.comp_of_edge[p[2]];
  const int tc = tgt.circle_count;
  const int src_edge_circles = src.circle_count - free_loops;
  const int tgt_edge_circles = tgt.circle_count - free_loops;

  // For every target circle, the source circle it carries over; -1 when the
  // target circle's material came from a source arc (split-off circles).
  std::vector<int> from(tc, -1);
  for (int k = 0; k < tc; ++k) {
    if (k >= tgt_edge_circles) {
      from[k] = src_edge_circles + (k - tgt_edge_circles);
      continue;
    }
    int rep = tgt.comp_min_edge[tgt.circle_comp[k]];
    int scomp = src.comp_of_edge[rep];
    from[k] = src.circle_of_comp[scomp];  // -1 when the source comp is an arc
  }

  auto carried_base = [&](const std::vector<int>& special) {
    std::vector<uint8_t> out(tc, kLabelOne);
    for (int k = 0; k < tc; ++k) {
      bool is_special = false;
      for (int s : special) is_special |= (k == s);
      if (is_special) continue;
      if (from[k] < 0)
        throw GeometryError("unmatched circle across a saddle");
      out[k] = labels[from[k]];
    }
    return out;
  };

  switch (kind) {
    case SaddleKind::MergeCircleCircle: {
      int ca = src.circle_of_comp[comp_a];
      int cb = src.circle_of_comp[comp_b];
      if (labels[ca] == kLabelX && labels[cb] == kLabelX) return {};
      uint8_t merged = (labels[ca] == kLabelOne && labels[cb] == kLabelOne)
                           ? kLabelOne
                           : kLabelX;
      // the merged circle is the one fed by either parent
      int km = -1;
      for (int k = 0; k < tc; ++k)
        if (from[k] == ca || from[k] == cb) km = k;
      if (km < 0) throw GeometryError("merged circle not found in target");
      auto out = carried_base({km});
      out[km] = merged;
      return {SaddleTerm{out, 1}};
    }
    case SaddleKind::MergeCircleArc: {
      int ci = src.comp_is_circle[comp_a] ? src.circle_of_comp[comp_a]
                                          : src.circle_of_comp[comp_b];
      if (labels[ci] == kLabelX) return {};
      return {SaddleTerm{carried_base({}), 1}};
    }
    case SaddleKind::SplitArcCircle: {
      int knew = -1;
      for (int k = 0; k < tc; ++k)
        if (from[k] < 0) knew = k;
      if (knew < 0) throw GeometryError("split-off circle not found in target");
      auto out = carried_base({knew});
      out[knew] = kLabelX;
      return {SaddleTerm{out, 1}};
    }
    case SaddleKind::SplitCircle: {
      int cs = src.circle_of_comp[comp_a];
      int k1 = -1, k2 = -1;
      for (int k = 0; k < tc; ++k) {
        if (from[k] == cs) (k1 < 0 ? k1 : k2) = k;
      }
      if (k1 < 0 || k2 < 0)
        throw GeometryError("split circle children not found in target");
      auto base = carried_base({k1, k2});
      if (labels[cs] == kLabelX) {
        base[k1] = kLabelX;
        base[k2] = kLabelX;
        return {SaddleTerm{base, 1}};
      }
      auto first = base, second = base;
      first[k1] = kLabelOne;
      first[k2] = kLabelX;
      second[k1] = kLabelX;
      second[k2] = kLabelOne;
      return {SaddleTerm{first, 1}, SaddleTerm{second, 1}};
    }
    case SaddleKind::ReconnectArcArc:
      break;
  }
  return {};
}

namespace detail_complex {

int match_uninvolved_circle(const ResolvedDiagram& src, const ResolvedDiagram& tgt,
                            int src_circle) {
  return carried_circle(src, tgt, 0, src_circle);
}

}  // namespace detail_complex

template <class F>
std::string complex_to_json(const BigradedComplex<F>& cx) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n_plus"] = cx.n_plus;
  j["n_minus"] = cx.n_minus;
  j["blocks"] = ordered_json::array();
  for (const auto& [key, block] : cx.blocks) {
    ordered_json jb;
    jb["k"] = key.first;
    jb["q"] = key.second;
    jb["dim"] = block.dim();
    ordered_json jd;
    jd["rows"] = block.d.rows();
    jd["cols"] = block.d.cols();
    jd["entries"] = ordered_json::array();
    for (int r = 0; r < block.d.rows(); ++r)
      for (const auto& [c, v] : block.d.row(r))
        jd["entries"].push_back(ordered_json::array({r, c, scalar_str(v)}));
    jb["differential"] = jd;
    j["blocks"].push_back(jb);
  }
  return j.dump(2);
}

template std::string complex_to_json<Rational>(const BigradedComplex<Rational>&);
template std::string complex_to_json<GF2>(const BigradedComplex<GF2>&);

}  // namespace kht
