#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kht {

/// Complex-wide coefficient field choice.
enum class Field { Q, GF2 };

inline std::string to_string(Field f) { return f == Field::Q ? "Q" : "GF2"; }

/// Exact rationals with arbitrary-precision integer parts. The backing type
/// keeps fractions reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// The two-element field.
struct GF2 {
  uint8_t v = 0;

  GF2() = default;
  explicit GF2(uint8_t x) : v(x & 1) {}

  GF2 operator+(GF2 o) const { return GF2(v ^ o.v); }
  GF2 operator-(GF2 o) const { return GF2(v ^ o.v); }
  GF2 operator-() const { return *this; }
  GF2 operator*(GF2 o) const { return GF2(v & o.v); }
  GF2 operator/(GF2 o) const { return GF2(v & o.v); }  // o must be 1
  GF2& operator+=(GF2 o) {
    v ^= o.v;
    return *this;
  }
  GF2& operator-=(GF2 o) {
    v ^= o.v;
    return *this;
  }
  bool operator==(const GF2&) const = default;
};

template <class F>
F scalar_from_int(long long x);

template <>
inline Rational scalar_from_int<Rational>(long long x) {
  return Rational(x);
}
template <>
inline GF2 scalar_from_int<GF2>(long long x) {
  return GF2(static_cast<uint8_t>(((x % 2) + 2) % 2));
}

template <class F>
bool scalar_is_zero(const F& x) {
  return x == F();
}

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const GF2& x) { return x.v ? "1" : "0"; }

}  // namespace kht
