#include "e8r/ratq.hpp"
#include <sstream>

namespace e8r {

void RatQ::reduce() {
  if (den.is_zero()) throw std::runtime_error("RatQ: zero denominator");
  if (num.is_zero()) { den = Laurent::one(); return; }
  if (!den.is_one()) {
    Laurent g = Laurent::gcd(num, den);
    if (!g.is_one()) {
      num = num.divexact(g);
      den = den.divexact(g);
    }
    normalize_units();
  }
}

void RatQ::normalize_units() {
  if (den.is_zero()) throw std::runtime_error("RatQ: zero denominator");
  if (num.is_zero()) { den = Laurent::one(); return; }
  if (den.is_one()) return;
  // push q-powers of den into num
  if (den.lo() != 0) { num = num.shifted(-den.lo()); den = den.shifted(-den.lo()); }
  mpz_class cn = num.content(), cd = den.content(), g2;
  mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g2 > 1) { num = num.divided_by_int(g2); den = den.divided_by_int(g2); }
  if (sgn(den.lead()) < 0) { num = -num; den = -den; }
}

RatQ RatQ::operator-() const { RatQ r; r.num = -num; r.den = den; return r; }

RatQ RatQ::operator+(const RatQ& o) const {
  if (den.is_one() && o.den.is_one()) { RatQ r; r.num = num + o.num; return r; }
  if (den == o.den) return RatQ(num + o.num, den);
  return RatQ(num * o.den + o.num * den, den * o.den);
}

RatQ RatQ::operator-(const RatQ& o) const {
  if (den.is_one() && o.den.is_one()) { RatQ r; r.num = num - o.num; return r; }
  if (den == o.den) return RatQ(num - o.num, den);
  return RatQ(num * o.den - o.num * den, den * o.den);
}

RatQ RatQ::operator*(const RatQ& o) const {
  if (num.is_zero() || o.num.is_zero()) return RatQ();
  if (den.is_one() && o.den.is_one()) { RatQ r; r.num = num * o.num; return r; }
  // cross-reduce: inputs are reduced, so after cancelling each numerator
  // against the other denominator the product is reduced up to units
  Laurent n1 = num, d1 = den, n2 = o.num, d2 = o.den;
  if (!d2.is_one()) {
    Laurent g = Laurent::gcd(n1, d2);
    if (!g.is_one()) { n1 = n1.divexact(g); d2 = d2.divexact(g); }
  }
  if (!d1.is_one()) {
    Laurent g = Laurent::gcd(n2, d1);
    if (!g.is_one()) { n2 = n2.divexact(g); d1 = d1.divexact(g); }
  }
  RatQ r;
  r.num = n1 * n2;
  r.den = d1 * d2;
  r.normalize_units();
  return r;
}

RatQ RatQ::inv() const {
  if (num.is_zero()) throw std::runtime_error("RatQ: inverse of zero");
  RatQ r;
  r.num = den;
  r.den = num;
  r.normalize_units();
  return r;
}

RatQ RatQ::operator/(const RatQ& o) const {
  if (o.num.is_zero()) throw std::runtime_error("RatQ: division by zero");
  if (num.is_zero()) return RatQ();
  return *this * o.inv();
}

mpq_class RatQ::eval(const mpq_class& q0) const {
  if (num.is_zero()) return 0;
  mpq_class d = den.eval(q0);
  if (d == 0) throw PoleAtPoint("RatQ eval: denominator vanishes");
  return num.eval(q0) / d;
}

mpq_class RatQ::limit_q1() const {
  if (num.is_zero()) return 0;
  Laurent cn, cd;
  int vn = num.q1_valuation(&cn);
  int vd = den.q1_valuation(&cd);
  if (vn < vd) throw PoleAtPoint("RatQ limit at q=1 diverges");
  if (vn > vd) return 0;
  return mpq_class(cn.eval_at_one(), cd.eval_at_one());
}

std::string RatQ::to_string() const {
  if (den.is_one()) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

RatQ RatQ::parse(const std::string& s) {
  // forms: "expr" or "(expr)/(expr)"
  size_t a = s.find_first_not_of(" \t");
  if (a != std::string::npos && s[a] == '(') {
    // find matching ')'
    int depth = 0;
    size_t i = a;
    for (; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') { if (--depth == 0) break; }
    }
    size_t slash = s.find('/', i);
    if (slash != std::string::npos) {
      std::string ns = s.substr(a + 1, i - a - 1);
      std::string rest = s.substr(slash + 1);
      size_t b = rest.find('(');
      size_t e = rest.rfind(')');
      if (b == std::string::npos || e == std::string::npos)
        throw std::runtime_error("RatQ parse: bad denominator");
      RatQ r;
      r.num = Laurent::parse(ns);
      r.den = Laurent::parse(rest.substr(b + 1, e - b - 1));
      r.reduce();
      return r;
    }
  }
  return RatQ(Laurent::parse(s));
}

}  // namespace e8r
