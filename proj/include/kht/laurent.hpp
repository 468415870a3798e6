#pragma once

#include <map>
#include <string>
#include <utility>

namespace kht {

/// Laurent polynomial in two variables with integer coefficients.
/// By convention x tracks the homological grading and y the quantum grading,
/// so a Poincare polynomial is sum dim H^{i,j} x^i y^j.
///
/// Terms are kept in a map ordered by (x exponent, y exponent); printing and
/// iteration are therefore deterministic.
class LaurentPoly2 {
 public:
  using Exponent = std::pair<int, int>;  // (x power, y power)
  using Terms = std::map<Exponent, long long>;

  LaurentPoly2() = default;

  static LaurentPoly2 term(long long coef, int xpow, int ypow);
  static LaurentPoly2 one() { return term(1, 0, 0); }

  /// Parses strings like "x^-3y^-9 + 2x^-2y^-5 + y^-3 + 1".
  /// Accepts '+'/'-' separated terms, optional integer coefficients and
  /// optional "^<int>" exponents on x and y. Throws ParseError.
  static LaurentPoly2 parse(const std::string& text);

  bool is_zero() const { return coef_.empty(); }
  long long coefficient(int xpow, int ypow) const;
  const Terms& terms() const { return coef_; }

  /// Sum of all coefficients, i.e. the value at x = y = 1.
  long long evaluate_ones() const;

  /// Substitutes x = -1, collapsing to a Laurent polynomial in y
  /// (returned with all x exponents zero).
  LaurentPoly2 substitute_x_minus_one() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 pow(unsigned e) const;
  bool operator==(const LaurentPoly2& o) const { return coef_ == o.coef_; }

  /// Canonical text form: terms ascending by (x exponent, y exponent),
  /// e.g. "x^-3y^-9 + x^-2y^-5 + y^-3 + y^-1".
  std::string str() const;

 private:
  Terms coef_;

  void insert(Exponent e, long long c);
};

}  // namespace kht
