#pragma once
// Laurent polynomials in q with arbitrary-precision integer coefficients.
#include <gmpxx.h>
#include <vector>
#include <utility>
#include <string>
#include <stdexcept>

namespace e8r {

struct PoleAtPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Laurent {
 public:
  // terms sorted by exponent ascending, no zero coefficients
  std::vector<std::pair<int, mpz_class>> t;

  Laurent() = default;
  explicit Laurent(long c) { if (c) t.emplace_back(0, mpz_class(c)); }
  explicit Laurent(const mpz_class& c) { if (c != 0) t.emplace_back(0, c); }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }
  static Laurent mono(const mpz_class& c, int e) {
    Laurent r; if (c != 0) r.t.emplace_back(e, c); return r;
  }
  static Laurent q(int e = 1) { return mono(1, e); }
  // [n] = (q^n - q^-n)/(q - q^-1)
  static Laurent qnum(int n);

  bool is_zero() const { return t.empty(); }
  bool is_one() const { return t.size() == 1 && t[0].first == 0 && t[0].second == 1; }
  int lo() const { return t.front().first; }   // requires nonzero
  int hi() const { return t.back().first; }
  int degree_span() const { return is_zero() ? 0 : hi() - lo(); }
  mpz_class coeff(int e) const;
  mpz_class lead() const { return t.back().second; }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
  Laurent& operator-=(const Laurent& o) { *this = *this - o; return *this; }
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  bool operator==(const Laurent& o) const { return t == o.t; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent shifted(int k) const;          // multiply by q^k
  Laurent reversed() const;              // q -> 1/q
  bool palindromic() const { return *this == reversed(); }

  mpz_class content() const;             // gcd of coefficients, >= 0
  Laurent scaled(const mpz_class& c) const;
  Laurent divided_by_int(const mpz_class& c) const;  // exact

  // exact polynomial division (ignoring q-power shifts); throws if not exact
  Laurent divexact(const Laurent& d) const;
  static Laurent gcd(const Laurent& a, const Laurent& b); // primitive, lead>0, lo()=0

  mpq_class eval(const mpq_class& q0) const;  // q0 != 0
  mpz_class eval_at_one() const;              // plain substitution q=1
  // number of factors (q-1); also returns the cofactor via out param
  int q1_valuation(Laurent* cofactor = nullptr) const;

  std::string to_string() const;
  static Laurent parse(const std::string& s);

  size_t hash() const;
};

}  // namespace e8r
