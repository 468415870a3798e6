#include "kht/reduction.hpp"

#include "kht/errors.hpp"
#include "kht/notation.hpp"

namespace kht {

BigradingMultiset BigradingMultiset::single(int k, int q,
                                            unsigned long long mult) {
  BigradingMultiset m;
  if (mult > 0) m.terms_[{k, q}] = mult;
  return m;
}

BigradingMultiset BigradingMultiset::operator+(const BigradingMultiset& o) const {
  BigradingMultiset r = *this;
  for (const auto& [kq, m] : o.terms_) r.terms_[kq] += m;
  return r;
}

BigradingMultiset BigradingMultiset::operator*(const BigradingMultiset& o) const {
  BigradingMultiset r;
  for (const auto& [a, ma] : terms_)
    for (const auto& [b, mb] : o.terms_)
      r.terms_[{a.first + b.first, a.second + b.second}] += ma * mb;
  return r;
}

BigradingMultiset BigradingMultiset::pow(unsigned e) const {
  BigradingMultiset r = unit();
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

unsigned long long BigradingMultiset::multiplicity(int k, int q) const {
  auto it = terms_.find({k, q});
  return it == terms_.end() ? 0 : it->second;
}

unsigned long long BigradingMultiset::total() const {
  unsigned long long t = 0;
  for (const auto& [kq, m] : terms_) t += m;
  return t;
}

LaurentPoly2 BigradingMultiset::to_polynomial() const {
  LaurentPoly2 p;
  for (const auto& [kq, m] : terms_)
    p += LaurentPoly2::term(static_cast<long long>(m), kq.first, kq.second);
  return p;
}

std::string to_string(ReductionStepKind k) {
  switch (k) {
    case ReductionStepKind::FreeArc: return "free";
    case ReductionStepKind::RightCrossing: return "right";
    case ReductionStepKind::LeftCrossing: return "left";
  }
  return "?";
}

LaurentPoly2 arc_reduction_factor(ReductionStepKind k) {
  switch (k) {
    case ReductionStepKind::FreeArc:
      return LaurentPoly2::term(1, 0, -1);
    case ReductionStepKind::RightCrossing:
      return LaurentPoly2::term(1, 0, 0) + LaurentPoly2::term(1, 1, 1);
    case ReductionStepKind::LeftCrossing:
      return LaurentPoly2::term(1, -1, -3) + LaurentPoly2::term(1, 0, -2);
  }
  return {};
}

namespace {

void check_forest_bound(int arcs, int n_plus, int n_minus) {
  if (arcs < 0 || n_plus < 0 || n_minus < 0)
    throw ValidationError("arc and crossing counts must be nonnegative");
  int c = n_plus + n_minus;
  bool ok = (arcs == 0) ? (c == 0) : (c <= arcs - 1);
  if (!ok)
    throw ValidationError(
        std::to_string(c) + " crossings among " + std::to_string(arcs) +
        " arcs exceeds the forest bound; the tangle cannot be simple");
}

}  // namespace

LaurentPoly2 simple_poincare(int arcs, int n_plus, int n_minus) {
  check_forest_bound(arcs, n_plus, n_minus);
  LaurentPoly2 p = LaurentPoly2::term(1, 0, -arcs + n_plus + n_minus);
  p = p * arc_reduction_factor(ReductionStepKind::RightCrossing)
              .pow(static_cast<unsigned>(n_plus));
  p = p * arc_reduction_factor(ReductionStepKind::LeftCrossing)
              .pow(static_cast<unsigned>(n_minus));
  return p;
}

BigradingMultiset generator_expansion(int arcs, int n_plus, int n_minus) {
  check_forest_bound(arcs, n_plus, n_minus);
  BigradingMultiset m =
      BigradingMultiset::single(0, -1).pow(
          static_cast<unsigned>(arcs - n_plus - n_minus));
  BigradingMultiset right =
      BigradingMultiset::single(0, 0) + BigradingMultiset::single(1, 1);
  BigradingMultiset left =
      BigradingMultiset::single(-1, -3) + BigradingMultiset::single(0, -2);
  m = m * right.pow(static_cast<unsigned>(n_plus));
  m = m * left.pow(static_cast<unsigned>(n_minus));
  return m;
}

ReduceResult reduce(const TangleDiagram& d) {
  validate(d);
  if (d.free_loops > 0)
    throw ValidationError("reduce: diagram contains crossing-free loops; "
                          "split circle components off first");
  StrandComponents sc = strand_components(d);
  for (int c = 0; c < sc.count; ++c)
    if (sc.is_circle[c])
      throw ValidationError("reduce: diagram contains a circle component; "
                            "split circle components off first");
  if (!is_simple(d))
    throw ValidationError("reduce: diagram is not a simple tangle");

  ReduceResult out;
  out.polynomial = LaurentPoly2::one();
  TangleDiagram cur = d;
  while (strand_components(cur).arc_count() > 0) {
    auto leaf = find_leaf_arc(cur);
    if (!leaf)
      throw GeometryError("simple tangle without a leaf arc");  // unreachable
    LeafRemoval removal = remove_leaf_arc(cur, *leaf);
    ReductionStepKind kind;
    if (removal.removed_crossings == 0)
      kind = ReductionStepKind::FreeArc;
    else
      kind = removal.crossing_sign > 0 ? ReductionStepKind::RightCrossing
                                       : ReductionStepKind::LeftCrossing;
    LaurentPoly2 factor = arc_reduction_factor(kind);
    out.polynomial = out.polynomial * factor;
    out.trace.steps.push_back(ReductionStep{
        kind, *leaf, factor, serialize_diagram(removal.rest)});
    cur = std::move(removal.rest);
  }
  return out;
}

BettiTable predict_pendant_betti(const BettiTable& base, int sign) {
  BettiTable p;
  p.n_plus = base.n_plus + (sign > 0 ? 1 : 0);
  p.n_minus = base.n_minus + (sign > 0 ? 0 : 1);
  p.field = base.field;
  for (const auto& [kq, dim] : base.dims) {
    auto [k, q] = kq;
    if (sign > 0) {
      p.dims[{k, q}] += dim;
      p.dims[{k + 1, q + 1}] += dim;
    } else {
      p.dims[{k - 1, q - 3}] += dim;
      p.dims[{k, q - 2}] += dim;
    }
  }
  return p;
}

bool arc_reduction_theorem_check(const TangleDiagram& d, int edge, bool over,
                                 int sign, Field field) {
  if (edge < 0 || edge >= static_cast<int>(d.edges.size()))
    throw ValidationError("no such edge: " + std::to_string(edge));
  // The new arc is added below or above the tangle, so it crosses an
  // existing arc on its outermost segment, next to the boundary. Deeper
  // attachments are a different construction: the crossed edge can sit on a
  // circle of some resolution and the shift formulas no longer apply.
  if (!d.edges[edge].tail.at_boundary() && !d.edges[edge].head.at_boundary())
    throw ValidationError(
        "pendant attachment must cross a segment incident to the boundary");
  BettiTable base = compute_betti(d, field);
  TangleDiagram extended = attach_pendant_arc(d, edge, over, sign);
  BettiTable actual = compute_betti(extended, field);
  return actual.dims == predict_pendant_betti(base, sign).dims;
}

LaurentPoly2 poincare_by_parts(const TangleDiagram& d, Field field,
                               int max_crossings) {
  LaurentPoly2 p = LaurentPoly2::one();
  for (const TangleDiagram& part : split_components(d)) {
    StrandComponents sc = strand_components(part);
    bool circle_free = part.free_loops == 0;
    for (int c = 0; c < sc.count; ++c) circle_free &= !sc.is_circle[c];
    if (circle_free && is_simple(part))
      p = p * reduce(part).polynomial;
    else
      p = p * poincare_polynomial(compute_betti(part, field, max_crossings));
  }
  return p;
}

}  // namespace kht
