#pragma once
// Rational (Yangian) limit of the spectral R-matrix: substitute q = e^{eh/2},
// z = e^{ex} and let e -> 0. Coefficients become rational functions of x and
// hbar over Q(sqrt(30)); sqrt(30) enters through the limit of kappa.
#include "e8r/rmatrix.hpp"

namespace e8r {

// element of Q(sqrt(30))
struct Q30 {
  mpq_class a, b;  // a + b*sqrt(30)

  Q30() = default;
  Q30(long v) : a(v) {}
  Q30(const mpq_class& a_) : a(a_) {}
  Q30(const mpq_class& a_, const mpq_class& b_) : a(a_), b(b_) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  Q30 operator-() const { return {mpq_class(-a), mpq_class(-b)}; }
  Q30 operator+(const Q30& o) const { return {a + o.a, b + o.b}; }
  Q30 operator-(const Q30& o) const { return {a - o.a, b - o.b}; }
  Q30 operator*(const Q30& o) const {
    return {a * o.a + 30 * b * o.b, a * o.b + b * o.a};
  }
  Q30 inv() const;
  Q30 operator/(const Q30& o) const { return *this * o.inv(); }
  Q30& operator+=(const Q30& o) { a += o.a; b += o.b; return *this; }
  bool operator==(const Q30& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Q30& o) const { return !(*this == o); }
  std::string to_string() const;
};

// polynomial in x, coefficients of x^k ascending
using PolyX = std::vector<Q30>;

PolyX px_trim(PolyX p);
bool px_is_zero(const PolyX& p);
PolyX px_add(const PolyX& a, const PolyX& b);
PolyX px_sub(const PolyX& a, const PolyX& b);
PolyX px_mul(const PolyX& a, const PolyX& b);
PolyX px_scale(const PolyX& a, const Q30& c);
PolyX px_flip(const PolyX& a);  // x -> -x
// exact division; throws if the remainder is nonzero
PolyX px_divexact(const PolyX& a, const PolyX& b);
Q30 px_eval(const PolyX& a, const Q30& x0);
std::string px_to_string(const PolyX& a);

// rational function num/den in x; not kept reduced, compared by cross products
struct RatX {
  PolyX num, den;

  RatX() : den{Q30(1)} {}
  RatX(PolyX n, PolyX d) : num(px_trim(std::move(n))), den(px_trim(std::move(d))) {}

  bool is_zero() const { return num.empty(); }
  RatX operator-() const { return {px_scale(num, Q30(-1)), den}; }
  RatX operator+(const RatX& o) const;
  RatX operator*(const RatX& o) const;
  RatX flip() const { return {px_flip(num), px_flip(den)}; }  // x -> -x
  bool operator==(const RatX& o) const;
  bool operator!=(const RatX& o) const { return !(*this == o); }
  std::string to_string() const;
};

// truncated eps-expansions of scalars under q = e^{eh/2}, z = e^{ex}
class EpsExpander {
 public:
  explicit EpsExpander(const mpq_class& hbar);

  const mpq_class& hbar() const { return h_; }
  // leading term of the expansion as a rational function of x;
  // throws LimitDivergent if the eps-order of the whole is negative
  RatX limit(const RatZ& r) const;
  // value at eps^0, i.e. the q -> 1 limit (kappa-parts contribute through
  // their sqrt(30) leading behaviour)
  Q30 q1(const QScalar& s) const;

 private:
  mpq_class h_;
};

struct LimitDivergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RatLimit {
 public:
  RatLimit(const RMatrix& rm, const mpq_class& hbar);

  const std::array<RatX, 16>& coeffs() const { return c_; }
  // the printed rational R-matrix, indexed by the WRing basis
  static std::array<RatX, 16> printed(const mpq_class& hbar);

  // V-V block rewritten through the q=1 relation
  // square = 12(full + flat + cupcap) + 10(vertical + horizontal),
  // order: full, cupcap, vertical, horizontal, flat crossing
  std::array<RatX, 5> intermediate() const;
  static std::array<RatX, 5> printed_intermediate(const mpq_class& hbar);

  // unitarity R(x) R(-x) = 1 in the 16-dim algebra at its q=1 structure
  // constants; throws on failure
  void check_unitarity(const WRing& wr) const;

  // normalizing factor w(w-5h)(w-9h)/((w-h)(w-6h)(w-10h)) of the rational
  // comparison, as a function of w
  static RatX norm_factor(const mpq_class& hbar);

 private:
  mpq_class h_;
  std::array<RatX, 16> c_;
};

}  // namespace e8r
