#include "e8r/numeric.hpp"
#include <stdexcept>

namespace e8r {

NumField::NumField(const mpq_class& q0) : q_(q0) {
  if (q_ == 0 || q_ == 1 || q_ == -1)
    throw std::runtime_error("numeric: q0 must avoid 0 and +-1");
  c0_ = QScalar::c0().eval(q_);
}

QN NumField::inv(const QN& a) const {
  mpq_class n = a.x * a.x - c0_ * a.y * a.y;
  if (n == 0) throw std::runtime_error("numeric: division by zero");
  return QN(a.x / n, -a.y / n);
}

QN NumField::pow(QN a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  QN r(1);
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

QN NumField::eval(const QScalar& s) const {
  return QN(s.a.eval(q_), s.b.eval(q_));
}

QN NumField::eval(const ZPoly& p, const QN& z0) const {
  QN r;
  for (size_t k = p.size(); k-- > 0;) r = mul(r, z0) + eval(p[k]);
  return r;
}

QN NumField::eval(const RatZ& f, const QN& z0) const {
  QN d = eval(f.den, z0);
  if (d.is_zero()) throw std::runtime_error("numeric: pole at the sample point");
  return mul(eval(f.num, z0), inv(d));
}

size_t NumOp::nnz() const {
  size_t n = 0;
  for (const auto& c : cols) n += c.size();
  return n;
}

std::map<int, QN> NumOp::apply(const NumField& F, const std::map<int, QN>& v) const {
  std::map<int, QN> out;
  for (const auto& [c, val] : v)
    for (const auto& [r, e] : cols[c]) out[r] += F.mul(e, val);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

NumOp NumOp::compose(const NumField& F, const NumOp& B) const {
  NumOp r(rows, (int)B.cols.size());
  for (size_t c = 0; c < B.cols.size(); ++c) {
    std::map<int, QN> acc;
    for (const auto& [m, bv] : B.cols[c])
      for (const auto& [row, av] : cols[m]) acc[row] += F.mul(av, bv);
    auto& col = r.cols[c];
    for (auto& [row, v] : acc)
      if (!v.is_zero()) col.emplace_back(row, std::move(v));
  }
  return r;
}

std::array<NumOp, 16> materialize_basis(const WRing& wr, const NumField& F) {
  const int N = WRing::NN;
  std::array<NumOp, 16> b;
  for (int i = 0; i < 16; ++i) {
    if (i == WRing::SQUARE) continue;
    b[i] = NumOp(N, N);
    for (int c = 0; c < N; ++c) {
      WRing::Col col = wr.basis_apply(i, {{c, QScalar(1)}});
      auto& out = b[i].cols[c];
      out.reserve(col.size());
      for (const auto& [r, v] : col) {
        QN e = F.eval(v);
        if (!e.is_zero()) out.emplace_back(r, std::move(e));
      }
    }
  }
  b[WRing::SQUARE] = b[WRing::HORIZONTAL].compose(F, b[WRing::HORIZONTAL]);
  // the square rung is the horizontal rung twice; spot check the realization
  int checked = 0;
  for (int c : wr.probe_cols()) {
    if (checked == 3) break;
    WRing::Col col = wr.basis_apply(WRing::SQUARE, {{c, QScalar(1)}});
    std::map<int, QN> want;
    for (const auto& [r, v] : col) {
      QN e = F.eval(v);
      if (!e.is_zero()) want[r] = e;
    }
    std::map<int, QN> got(b[WRing::SQUARE].cols[c].begin(), b[WRing::SQUARE].cols[c].end());
    if (got != want) throw std::runtime_error("numeric: square realization mismatch");
    ++checked;
  }
  return b;
}

NumOp materialize(const std::array<NumOp, 16>& basis, const NumField& F,
                  const Vec16& c, const QN& z0) {
  const int N = (int)basis[0].cols.size();
  std::array<QN, 16> cv;
  for (int i = 0; i < 16; ++i)
    if (!c[i].is_zero()) cv[i] = F.eval(c[i], z0);
  NumOp r(basis[0].rows, N);
  for (int col = 0; col < N; ++col) {
    std::map<int, QN> acc;
    for (int i = 0; i < 16; ++i) {
      if (cv[i].is_zero()) continue;
      for (const auto& [row, v] : basis[i].cols[col]) acc[row] += F.mul(cv[i], v);
    }
    auto& out = r.cols[col];
    for (auto& [row, v] : acc)
      if (!v.is_zero()) out.emplace_back(row, std::move(v));
  }
  return r;
}

}  // namespace e8r
