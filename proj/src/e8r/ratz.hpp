#pragma once
// Rational functions in z with QScalar coefficients; denominator monic.
#include "e8r/qscalar.hpp"
#include <vector>

namespace e8r {

// dense polynomial in z, p[i] = coefficient of z^i, no trailing zeros
using ZPoly = std::vector<QScalar>;

ZPoly zp_trim(ZPoly p);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_scale(const ZPoly& a, const QScalar& c);
ZPoly zp_rem(ZPoly a, const ZPoly& b);
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b);
ZPoly zp_gcd(ZPoly a, ZPoly b);       // monic
ZPoly zp_derivative(const ZPoly& a);
QScalar zp_eval(const ZPoly& a, const QScalar& z0);
bool zp_is_zero(const ZPoly& a);
std::string zp_to_string(const ZPoly& a);

class RatZ {
 public:
  ZPoly num, den;  // reduced, den monic

  RatZ() : num(), den{QScalar(1)} {}
  RatZ(long c) : num(), den{QScalar(1)} { if (c) num = {QScalar(c)}; }
  RatZ(const QScalar& c) : num(), den{QScalar(1)} { if (!c.is_zero()) num = {c}; }
  RatZ(ZPoly n, ZPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  static RatZ z(int e = 1) { ZPoly n(e + 1); n[e] = QScalar(1); RatZ r; r.num = n; return r; }

  bool is_zero() const { return num.empty(); }
  bool is_one() const { return num.size() == 1 && num[0].is_one() && den.size() == 1; }
  int num_degree() const { return (int)num.size() - 1; }   // -1 for zero
  int den_degree() const { return (int)den.size() - 1; }

  RatZ operator-() const;
  RatZ operator+(const RatZ& o) const;
  RatZ operator-(const RatZ& o) const;
  RatZ operator*(const RatZ& o) const;
  RatZ operator/(const RatZ& o) const;
  RatZ inv() const;
  RatZ& operator+=(const RatZ& o) { *this = *this + o; return *this; }
  RatZ& operator-=(const RatZ& o) { *this = *this - o; return *this; }
  RatZ& operator*=(const RatZ& o) { *this = *this * o; return *this; }
  bool operator==(const RatZ& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatZ& o) const { return !(*this == o); }

  QScalar eval(const QScalar& z0) const;          // PoleAtPoint if den(z0)=0
  QScalar value_at_zero() const;                  // lim z->0, PoleAtPoint if diverges
  QScalar value_at_infinity() const;              // lim z->inf
  QScalar residue(const QScalar& z0) const;       // at a simple pole z0
  RatZ substitute(const RatZ& zexpr) const;       // z -> zexpr

  void reduce();

  std::string to_string() const;
  size_t hash() const;
};

}  // namespace e8r
