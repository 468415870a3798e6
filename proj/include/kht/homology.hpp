#pragma once

#include <map>
#include <string>
#include <utility>

#include "kht/complex.hpp"
#include "kht/laurent.hpp"

namespace kht {

/// Bigraded Betti numbers dim H^{k,q}.
struct BettiTable {
  std::map<std::pair<int, int>, long long> dims;  // only nonzero entries
  int n_plus = 0;
  int n_minus = 0;
  Field field = Field::Q;

  long long dim(int k, int q) const {
    auto it = dims.find({k, q});
    return it == dims.end() ? 0 : it->second;
  }
  long long total() const {
    long long t = 0;
    for (const auto& [kq, v] : dims) t += v;
    return t;
  }
  bool operator==(const BettiTable& o) const { return dims == o.dims; }
};

/// dim H^{k,q} = dim C^{k,q} - rank d^{k,q} - rank d^{k-1,q}. Verifies
/// d(next) * d == 0 on every block first and throws GeometryError otherwise.
template <class F>
BettiTable betti(const BigradedComplex<F>& cx);

/// Convenience: build the complex over the chosen field and take homology.
BettiTable compute_betti(const TangleDiagram& d, Field field = Field::Q,
                         int max_crossings = 16);

/// sum dim H^{k,q} x^k y^q.
LaurentPoly2 poincare_polynomial(const BettiTable& b);

/// x = -1; the result is the Jones polynomial of the tangle (in y).
LaurentPoly2 jones_specialization(const LaurentPoly2& p);

/// Independent oracle needing no linear algebra: the graded Euler
/// characteristic computed straight from the resolutions,
///   sum_s (-1)^(ell-n-) y^(k+n+-n-) (y+1/y)^circles (1/y)^arcs,  k = ell-n-.
/// Always equals jones_specialization of the Poincare polynomial.
LaurentPoly2 graded_euler_state_sum(const TangleDiagram& d,
                                    int max_crossings = 16);

// --- implementation ---

template <class F>
BettiTable betti(const BigradedComplex<F>& cx) {
  for (const auto& [key, block] : cx.blocks) {
    auto up = cx.blocks.find({key.first + 1, key.second});
    if (up != cx.blocks.end() && !compose_check(up->second.d, block.d))
      throw GeometryError("differential does not square to zero at (" +
                          std::to_string(key.first) + "," +
                          std::to_string(key.second) + ")");
  }
  BettiTable b;
  b.n_plus = cx.n_plus;
  b.n_minus = cx.n_minus;
  b.field = std::is_same_v<F, GF2> ? Field::GF2 : Field::Q;
  for (const auto& [key, block] : cx.blocks) {
    long long dim = block.dim();
    dim -= rank(block.d);
    auto down = cx.blocks.find({key.first - 1, key.second});
    if (down != cx.blocks.end()) dim -= rank(down->second.d);
    if (dim < 0)
      throw GeometryError("negative Betti number computed; complex corrupt");
    if (dim > 0) b.dims[key] = dim;
  }
  return b;
}

}  // namespace kht
