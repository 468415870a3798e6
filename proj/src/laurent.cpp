#include "kht/laurent.hpp"

#include <cctype>
#include <cstdlib>

#include "kht/errors.hpp"

namespace kht {

void LaurentPoly2::insert(Exponent e, long long c) {
  if (c == 0) return;
  auto it = coef_.find(e);
  if (it == coef_.end()) {
    coef_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

LaurentPoly2 LaurentPoly2::term(long long coef, int xpow, int ypow) {
  LaurentPoly2 p;
  p.insert({xpow, ypow}, coef);
  return p;
}

long long LaurentPoly2::coefficient(int xpow, int ypow) const {
  auto it = coef_.find({xpow, ypow});
  return it == coef_.end() ? 0 : it->second;
}

long long LaurentPoly2::evaluate_ones() const {
  long long s = 0;
  for (const auto& [e, c] : coef_) s += c;
  return s;
}

LaurentPoly2 LaurentPoly2::substitute_x_minus_one() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : coef_) {
    // (-1)^i for any integer i, negative exponents included
    long long sign = (e.first % 2 == 0) ? 1 : -1;
    r.insert({0, e.second}, sign * c);
  }
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.coef_) insert(e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.coef_) insert(e, -c);
  return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r += o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r -= o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [e1, c1] : coef_)
    for (const auto& [e2, c2] : o.coef_)
      r.insert({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned e) const {
  LaurentPoly2 r = one();
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string LaurentPoly2::str() const {
  if (coef_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    const auto [i, j] = e;
    std::string vars;
    if (i != 0) {
      vars += "x";
      if (i != 1) vars += "^" + std::to_string(i);
    }
    if (j != 0) {
      vars += "y";
      if (j != 1) vars += "^" + std::to_string(j);
    }
    if (vars.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a);
      out += vars;
    }
  }
  return out;
}

namespace {

struct PolyScanner {
  const std::string& s;
  size_t pos = 0;

  explicit PolyScanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial: " + msg, 1, static_cast<int>(pos) + 1);
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) fail("expected integer");
    return std::strtoll(s.substr(start, pos - start).c_str(), nullptr, 10);
  }
};

}  // namespace

LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
  PolyScanner sc(text);
  LaurentPoly2 result;
  bool first = true;
  while (!sc.eof()) {
    long long sign = 1;
    if (!first || sc.peek() == '+' || sc.peek() == '-') {
      char c = sc.peek();
      if (c == '+') {
        sc.pos++;
      } else if (c == '-') {
        sc.pos++;
        sign = -1;
      } else if (!first) {
        sc.fail("expected '+' or '-' between terms");
      }
    }
    first = false;
    if (sc.eof()) sc.fail("dangling sign");

    long long coef = 1;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coef = sc.integer();
      saw_anything = true;
    }
    int xp = 0, yp = 0;
    if (!sc.eof() && sc.peek() == 'x') {
      sc.pos++;
      xp = 1;
      if (!sc.eof() && sc.peek() == '^') {
        sc.pos++;
        xp = static_cast<int>(sc.integer());
      }
      saw_anything = true;
    }
    if (!sc.eof() && sc.peek() == 'y') {
      sc.pos++;
      yp = 1;
      if (!sc.eof() && sc.peek() == '^') {
        sc.pos++;
        yp = static_cast<int>(sc.integer());
      }
      saw_anything = true;
    }
    if (!saw_anything) sc.fail("expected term");
    result.insert({xp, yp}, sign * coef);
  }
  return result;
}

}  // namespace kht
