#include "e8r/ratz.hpp"
#include <sstream>

namespace e8r {

ZPoly zp_trim(ZPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

bool zp_is_zero(const ZPoly& a) { return a.empty(); }

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return zp_trim(std::move(r));
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return zp_trim(std::move(r));
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return zp_trim(std::move(r));
}

ZPoly zp_scale(const ZPoly& a, const QScalar& c) {
  if (c.is_zero()) return {};
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return zp_trim(std::move(r));
}

ZPoly zp_rem(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw std::runtime_error("ZPoly: remainder by zero");
  QScalar li = b.back().inv();
  while (a.size() >= b.size()) {
    QScalar c = a.back() * li;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    a = zp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::runtime_error("ZPoly: division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::runtime_error("ZPoly: inexact division");
  ZPoly rem = a, quo(a.size() - b.size() + 1);
  QScalar li = b.back().inv();
  for (int k = (int)quo.size() - 1; k >= 0; --k) {
    QScalar c = (k + b.size() - 1 < rem.size()) ? rem[k + b.size() - 1] * li : QScalar();
    quo[k] = c;
    if (!c.is_zero())
      for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
  }
  for (const auto& c : rem) if (!c.is_zero()) throw std::runtime_error("ZPoly: inexact division");
  return zp_trim(std::move(quo));
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
  a = zp_trim(std::move(a));
  b = zp_trim(std::move(b));
  while (!b.empty()) {
    ZPoly r = zp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  QScalar li = a.back().inv();
  for (auto& c : a) c = c * li;
  return a;
}

ZPoly zp_derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = QScalar((long)i) * a[i];
  return zp_trim(std::move(r));
}

QScalar zp_eval(const ZPoly& a, const QScalar& z0) {
  QScalar r;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * z0 + *it;
  return r;
}

std::string zp_to_string(const ZPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << a[i].to_string() << ")";
    if (i == 1) os << "*z";
    else if (i > 1) os << "*z^" << i;
    first = false;
  }
  return os.str();
}

void RatZ::reduce() {
  num = zp_trim(std::move(num));
  den = zp_trim(std::move(den));
  if (den.empty()) throw std::runtime_error("RatZ: zero denominator");
  if (num.empty()) { den = {QScalar(1)}; return; }
  if (den.size() > 1 || num.size() > 1) {
    ZPoly g = zp_gcd(num, den);
    if (g.size() > 1) {
      num = zp_divexact(num, g);
      den = zp_divexact(den, g);
    }
  }
  QScalar li = den.back().inv();
  if (!den.back().is_one()) {
    for (auto& c : den) c = c * li;
    for (auto& c : num) c = c * li;
  }
}

RatZ RatZ::operator-() const { RatZ r; r.num = zp_scale(num, QScalar(-1)); r.den = den; return r; }

RatZ RatZ::operator+(const RatZ& o) const {
  if (den == o.den) return RatZ(zp_add(num, o.num), den);
  return RatZ(zp_add(zp_mul(num, o.den), zp_mul(o.num, den)), zp_mul(den, o.den));
}

RatZ RatZ::operator-(const RatZ& o) const {
  if (den == o.den) return RatZ(zp_sub(num, o.num), den);
  return RatZ(zp_sub(zp_mul(num, o.den), zp_mul(o.num, den)), zp_mul(den, o.den));
}

RatZ RatZ::operator*(const RatZ& o) const {
  if (is_zero() || o.is_zero()) return RatZ();
  return RatZ(zp_mul(num, o.num), zp_mul(den, o.den));
}

RatZ RatZ::inv() const {
  if (is_zero()) throw std::runtime_error("RatZ: inverse of zero");
  return RatZ(den, num);
}

RatZ RatZ::operator/(const RatZ& o) const {
  if (o.is_zero()) throw std::runtime_error("RatZ: division by zero");
  if (is_zero()) return RatZ();
  return RatZ(zp_mul(num, o.den), zp_mul(den, o.num));
}

QScalar RatZ::eval(const QScalar& z0) const {
  QScalar d = zp_eval(den, z0);
  if (d.is_zero()) throw PoleAtPoint("RatZ eval: denominator vanishes");
  return zp_eval(num, z0) * d.inv();
}

QScalar RatZ::value_at_zero() const {
  if (is_zero()) return QScalar();
  size_t vn = 0, vd = 0;
  while (vn < num.size() && num[vn].is_zero()) ++vn;
  while (vd < den.size() && den[vd].is_zero()) ++vd;
  if (vn < vd) throw PoleAtPoint("RatZ: pole at z=0");
  if (vn > vd) return QScalar();
  return num[vn] * den[vd].inv();
}

QScalar RatZ::value_at_infinity() const {
  if (is_zero()) return QScalar();
  if (num.size() > den.size()) throw PoleAtPoint("RatZ: pole at z=inf");
  if (num.size() < den.size()) return QScalar();
  return num.back() * den.back().inv();
}

QScalar RatZ::residue(const QScalar& z0) const {
  // residue at a simple root z0 of den: num(z0) / den'(z0)
  if (!zp_eval(den, z0).is_zero()) return QScalar();
  QScalar dp = zp_eval(zp_derivative(den), z0);
  if (dp.is_zero()) throw std::runtime_error("RatZ: pole not simple");
  return zp_eval(num, z0) * dp.inv();
}

RatZ RatZ::substitute(const RatZ& zexpr) const {
  RatZ n, d;
  for (auto it = num.rbegin(); it != num.rend(); ++it) n = n * zexpr + RatZ(*it);
  for (auto it = den.rbegin(); it != den.rend(); ++it) d = d * zexpr + RatZ(*it);
  return n / d;
}

std::string RatZ::to_string() const {
  if (den.size() == 1 && den[0].is_one()) return zp_to_string(num);
  return "[" + zp_to_string(num) + "] / [" + zp_to_string(den) + "]";
}

size_t RatZ::hash() const {
  size_t h = 7;
  for (const auto& c : num) h = h * 1099511628211ull + c.hash();
  h = h * 31 + 17;
  for (const auto& c : den) h = h * 1099511628211ull + c.hash();
  return h;
}

}  // namespace e8r
