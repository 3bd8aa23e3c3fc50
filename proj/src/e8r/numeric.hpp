#pragma once
// Exact numeric evaluation at a rational q0: scalars land in the quadratic
// field Q(kappa0) with kappa0^2 = c0(q0), and the realized intertwiners on
// W tensor W become plain sparse matrices over that field.
#include "e8r/rmatrix.hpp"
#include <gmpxx.h>

namespace e8r {

// x + y * kappa0
struct QN {
  mpq_class x, y;
  QN() = default;
  QN(long c) : x(c) {}
  QN(mpq_class x_, mpq_class y_ = 0) : x(std::move(x_)), y(std::move(y_)) {}
  bool is_zero() const { return x == 0 && y == 0; }
  bool operator==(const QN& o) const { return x == o.x && y == o.y; }
  bool operator!=(const QN& o) const { return !(*this == o); }
  QN operator+(const QN& o) const { return QN(x + o.x, y + o.y); }
  QN operator-(const QN& o) const { return QN(x - o.x, y - o.y); }
  QN operator-() const { return QN(-x, -y); }
  QN& operator+=(const QN& o) { x += o.x; y += o.y; return *this; }
};

class NumField {
 public:
  explicit NumField(const mpq_class& q0);

  const mpq_class& q() const { return q_; }
  const mpq_class& c0() const { return c0_; }  // kappa0 squared

  QN mul(const QN& a, const QN& b) const {
    return QN(a.x * b.x + c0_ * a.y * b.y, a.x * b.y + a.y * b.x);
  }
  QN inv(const QN& a) const;
  QN pow(QN a, long e) const;

  QN eval(const QScalar& s) const;
  QN eval(const ZPoly& p, const QN& z0) const;
  QN eval(const RatZ& f, const QN& z0) const;

 private:
  mpq_class q_, c0_;
};

// sparse matrix over Q(kappa0), column major, rows sorted
struct NumOp {
  int rows = 0;
  std::vector<std::vector<std::pair<int, QN>>> cols;

  NumOp() = default;
  NumOp(int r, int c) : rows(r), cols(c) {}
  size_t nnz() const;
  std::map<int, QN> apply(const NumField& F, const std::map<int, QN>& v) const;
  NumOp compose(const NumField& F, const NumOp& B) const;  // this after B
};

// the 16 basis intertwiners on W tensor W, realized at q = q0
std::array<NumOp, 16> materialize_basis(const WRing& wr, const NumField& F);

// a 16-coefficient combination at spectral value z0, e.g. the R-matrix
NumOp materialize(const std::array<NumOp, 16>& basis, const NumField& F,
                  const Vec16& c, const QN& z0);

}  // namespace e8r
