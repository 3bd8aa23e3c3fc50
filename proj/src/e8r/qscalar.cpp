#include "e8r/qscalar.hpp"
#include <sstream>

namespace e8r {

const RatQ& QScalar::c0() {
  static const RatQ v = [] {
    Laurent d = Laurent::q() - Laurent::q(-1);
    RatQ r(d * d * Laurent::qnum(6) * Laurent::qnum(10) * Laurent::qnum(15));
    return r / RatQ::qnum(30);
  }();
  return v;
}

QScalar QScalar::operator*(const QScalar& o) const {
  if (b.is_zero()) {
    if (a.is_zero()) return QScalar();
    return QScalar(a * o.a, a * o.b);
  }
  if (o.b.is_zero()) return QScalar(a * o.a, b * o.a);
  return QScalar(a * o.a + b * o.b * c0(), a * o.b + b * o.a);
}

QScalar QScalar::inv() const {
  RatQ n = a * a - b * b * c0();
  if (n.is_zero()) throw std::runtime_error("QScalar: inverse of zero (or zero norm)");
  RatQ ni = n.inv();
  return QScalar(a * ni, -(b * ni));
}

QScalar QScalar::bar() const { return QScalar(a.bar(), b.bar()); }

std::string QScalar::to_string() const {
  if (b.is_zero()) return a.to_string();
  std::string bs = "(" + b.to_string() + ")*k";
  if (a.is_zero()) return bs;
  return a.to_string() + " + " + bs;
}

QScalar QScalar::parse(const std::string& s) {
  // forms: "A", "(B)*k", "A + (B)*k" with A, B in RatQ syntax
  size_t kpos = s.rfind("*k");
  if (kpos == std::string::npos) return QScalar(RatQ::parse(s));
  // B is the parenthesized group right before "*k"
  size_t close = s.rfind(')', kpos);
  if (close == std::string::npos) throw std::runtime_error("QScalar parse: bad k-part");
  int depth = 0;
  size_t open = close;
  for (;; --open) {
    if (s[open] == ')') ++depth;
    else if (s[open] == '(') { if (--depth == 0) break; }
    if (open == 0) break;
  }
  if (s[open] != '(') throw std::runtime_error("QScalar parse: bad k-part");
  RatQ b = RatQ::parse(s.substr(open + 1, close - open - 1));
  // A part: everything before, minus trailing " + "
  std::string apart = s.substr(0, open);
  size_t e = apart.find_last_not_of(" \t");
  RatQ a;
  if (e != std::string::npos) {
    if (apart[e] != '+') throw std::runtime_error("QScalar parse: expected '+'");
    a = RatQ::parse(apart.substr(0, e));
  }
  return QScalar(a, b);
}

}  // namespace e8r
