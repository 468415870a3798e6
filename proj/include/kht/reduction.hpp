#pragma once

#include <map>
#include <string>
#include <vector>

#include "kht/diagram.hpp"
#include "kht/homology.hpp"
#include "kht/laurent.hpp"

namespace kht {

/// Finite multiset of bigradings (k,q): an element of the group algebra over
/// Z x Z with nonnegative integer coefficients. The product convolves
/// supports under (k,q)*(k',q') = (k+k', q+q').
class BigradingMultiset {
 public:
  using Terms = std::map<std::pair<int, int>, unsigned long long>;

  BigradingMultiset() = default;
  static BigradingMultiset unit() { return single(0, 0, 1); }
  static BigradingMultiset single(int k, int q, unsigned long long mult = 1);

  BigradingMultiset operator+(const BigradingMultiset& o) const;
  BigradingMultiset operator*(const BigradingMultiset& o) const;
  BigradingMultiset pow(unsigned e) const;

  unsigned long long multiplicity(int k, int q) const;
  unsigned long long total() const;
  const Terms& terms() const { return terms_; }
  LaurentPoly2 to_polynomial() const;
  bool operator==(const BigradingMultiset&) const = default;

 private:
  Terms terms_;
};

enum class ReductionStepKind { FreeArc, RightCrossing, LeftCrossing };

std::string to_string(ReductionStepKind k);

/// The Poincare-polynomial factor contributed by removing one leaf arc:
///   free arc         ->  y^-1
///   right crossing   ->  1 + xy
///   left crossing    ->  x^-1 y^-3 + y^-2
LaurentPoly2 arc_reduction_factor(ReductionStepKind k);

/// Closed form for a simple circle-free tangle with N arcs:
///   y^(-N + n+ + n-) (1 + xy)^n+ (x^-1 y^-3 + y^-2)^n-.
/// Throws ValidationError when n+ + n- exceeds N-1 (the arc forest bound).
LaurentPoly2 simple_poincare(int arcs, int n_plus, int n_minus);

/// Homology generators of the same tangle as a bigrading multiset,
///   (0,-1)^(N-n+-n-) [(0,0)+(1,1)]^n+ [(-1,-3)+(0,-2)]^n-,
/// with 2^(n+ + n-) elements in total.
BigradingMultiset generator_expansion(int arcs, int n_plus, int n_minus);

struct ReductionStep {
  ReductionStepKind kind;
  int arc;  // component id within the residual diagram the step acted on
  LaurentPoly2 factor;
  std::string residual;  // serialized diagram after the step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReduceResult {
  ReductionTrace trace;
  LaurentPoly2 polynomial;
};

/// Iteratively removes the lowest-id leaf arc, multiplying the factors. The
/// diagram must be simple and contain no circle components (free loops
/// included); otherwise a ValidationError explains which precondition broke.
ReduceResult reduce(const TangleDiagram& d);

/// Brute-force check of the one-crossing arc reduction: attaches a pendant
/// arc to `edge` (over or under, with the chosen sign), computes both Betti
/// tables and compares dimensions against the predicted shifts
///   right: dim'(k,q) = dim(k,q) + dim(k-1,q-1)
///   left:  dim'(k,q) = dim(k+1,q+3) + dim(k,q+2)
/// at every bigrading. `edge` must be incident to the tangle boundary: the
/// added arc crosses below or above the tangle, i.e. on an outermost
/// segment of an existing arc.
bool arc_reduction_theorem_check(const TangleDiagram& d, int edge, bool over,
                                 int sign, Field field = Field::Q);

/// The predicted table for a diagram extended by one pendant crossing.
BettiTable predict_pendant_betti(const BettiTable& base, int sign);

/// Splits into connected parts, reduces the simple circle-free ones in
/// closed form, brute-forces the rest, and multiplies (homology of a
/// disjoint union is the tensor product of the parts).
LaurentPoly2 poincare_by_parts(const TangleDiagram& d, Field field = Field::Q,
                               int max_crossings = 16);

}  // namespace kht
