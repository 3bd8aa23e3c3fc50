#pragma once
// The coefficient field: Q(q) extended by k with k^2 = c0(q),
// c0 = (q - q^-1)^2 [6][10][15] / [30].
#include "e8r/ratq.hpp"

namespace e8r {

class QScalar {
 public:
  RatQ a, b;  // a + b*k

  QScalar() = default;
  QScalar(long c) : a(c) {}
  QScalar(const RatQ& a_) : a(a_) {}
  QScalar(const RatQ& a_, const RatQ& b_) : a(a_), b(b_) {}

  static const RatQ& c0();
  static QScalar kappa() { return QScalar(RatQ(0), RatQ(1)); }
  static QScalar qnum(int n) { return QScalar(RatQ::qnum(n)); }
  static QScalar q(int e = 1) { return QScalar(RatQ::q(e)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_one() const { return a.is_one() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  QScalar operator-() const { return QScalar(-a, -b); }
  QScalar operator+(const QScalar& o) const { return QScalar(a + o.a, b + o.b); }
  QScalar operator-(const QScalar& o) const { return QScalar(a - o.a, b - o.b); }
  QScalar operator*(const QScalar& o) const;
  QScalar inv() const;
  QScalar operator/(const QScalar& o) const { return *this * o.inv(); }
  QScalar& operator+=(const QScalar& o) { a += o.a; b += o.b; return *this; }
  QScalar& operator-=(const QScalar& o) { a -= o.a; b -= o.b; return *this; }
  QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }
  bool operator==(const QScalar& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  QScalar bar() const;  // q -> 1/q, k -> k (c0 is palindromic)

  std::string to_string() const;
  static QScalar parse(const std::string& s);
  size_t hash() const { return a.hash() * 131 + b.hash(); }
};

inline QScalar operator*(long c, const QScalar& x) { return QScalar(c) * x; }

class QAccum {
 public:
  void add(const QScalar& x) { a_.add(x.a); b_.add(x.b); }
  QScalar total() const { return QScalar(a_.total(), b_.total()); }
 private:
  RatAccum a_, b_;
};

}  // namespace e8r
