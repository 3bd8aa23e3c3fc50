#pragma once
// Rational functions in q: quotients of Laurent polynomials, kept reduced.
#include "e8r/laurent.hpp"

namespace e8r {

class RatQ {
 public:
  Laurent num;
  Laurent den;  // lo()=0, integer-content coprime with num's, lead > 0

  RatQ() : num(), den(Laurent::one()) {}
  RatQ(long c) : num(c), den(Laurent::one()) {}
  RatQ(const Laurent& n) : num(n), den(Laurent::one()) {}
  RatQ(const Laurent& n, const Laurent& d) : num(n), den(d) { reduce(); }

  static RatQ qnum(int n) { return RatQ(Laurent::qnum(n)); }
  static RatQ q(int e = 1) { return RatQ(Laurent::q(e)); }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }
  bool is_integer_poly() const { return den.is_one(); }

  RatQ operator-() const;
  RatQ operator+(const RatQ& o) const;
  RatQ operator-(const RatQ& o) const;
  RatQ operator*(const RatQ& o) const;
  RatQ operator/(const RatQ& o) const;
  RatQ inv() const;
  RatQ& operator+=(const RatQ& o) { *this = *this + o; return *this; }
  RatQ& operator-=(const RatQ& o) { *this = *this - o; return *this; }
  RatQ& operator*=(const RatQ& o) { *this = *this * o; return *this; }
  RatQ& operator/=(const RatQ& o) { *this = *this / o; return *this; }
  bool operator==(const RatQ& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatQ& o) const { return !(*this == o); }

  RatQ bar() const { return RatQ(num.reversed(), den.reversed()); }  // q -> 1/q
  bool palindromic() const { return *this == bar(); }

  mpq_class eval(const mpq_class& q0) const;  // PoleAtPoint on vanishing den
  // limit q -> 1 after cancelling (q-1) powers; PoleAtPoint if divergent
  mpq_class limit_q1() const;

  void reduce();
  // shift/content/sign normalization only; num and den must already be
  // coprime as polynomials
  void normalize_units();

  std::string to_string() const;
  static RatQ parse(const std::string& s);
  size_t hash() const { return num.hash() * 31 + den.hash(); }
};

// Sums many rationals cheaply: numerators are bucketed by denominator, so each
// add is a plain polynomial add and the gcd reduction runs once in total().
class RatAccum {
 public:
  void add(const RatQ& x) {
    if (x.num.is_zero()) return;
    for (auto& [d, n] : parts_)
      if (d == x.den) { n += x.num; return; }
    parts_.emplace_back(x.den, x.num);
  }
  RatQ total() const {
    RatQ s;
    for (const auto& [d, n] : parts_) s += RatQ(n, d);
    return s;
  }
 private:
  std::vector<std::pair<Laurent, Laurent>> parts_;  // (denominator, numerator sum)
};

}  // namespace e8r
