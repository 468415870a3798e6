#include "kht/homology.hpp"

#include "kht/errors.hpp"

namespace kht {

BettiTable compute_betti(const TangleDiagram& d, Field field,
                         int max_crossings) {
  if (field == Field::GF2)
    return betti(build_complex<GF2>(d, max_crossings));
  return betti(build_complex<Rational>(d, max_crossings));
}

LaurentPoly2 poincare_polynomial(const BettiTable& b) {
  LaurentPoly2 p;
  for (const auto& [kq, dim] : b.dims)
    p += LaurentPoly2::term(dim, kq.first, kq.second);
  return p;
}

LaurentPoly2 jones_specialization(const LaurentPoly2& p) {
  return p.substitute_x_minus_one();
}

LaurentPoly2 graded_euler_state_sum(const TangleDiagram& d, int max_crossings) {
  const int n = d.crossing_count();
  if (n > max_crossings)
    throw CapError("diagram has " + std::to_string(n) +
                   " crossings, cap is " + std::to_string(max_crossings));
  validate(d);
  auto [n_plus, n_minus] = crossing_counts(d);
  const LaurentPoly2 circle = LaurentPoly2::term(1, 0, 1) + LaurentPoly2::term(1, 0, -1);

  LaurentPoly2 total;
  for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
    State s = state_from_index(n, m);
    ResolvedDiagram r = resolve(d, s);
    int k = homological_degree(s, n_minus);
    long long sign = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
    LaurentPoly2 term = LaurentPoly2::term(sign, 0, k + n_plus - n_minus);
    term = term * circle.pow(r.circle_count);
    term = term * LaurentPoly2::term(1, 0, -1).pow(
                      static_cast<unsigned>(r.arcs.size()));
    total += term;
  }
  return total;
}

}  // namespace kht
