#include "e8r/affinew.hpp"
#include <sstream>

namespace e8r {

AffineConstants AffineConstants::solve() {
  const CartanData& cd = root_system().cartan();
  QMat m(8, QVec(8));
  QVec rhs(8);
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) m[i - 1][j - 1] = QScalar::qnum(cd.C[i][j]);
    rhs[i - 1] = QScalar(i == 1 ? 1 : 0);
  }
  QVec x = qmat_solve(m, rhs);
  AffineConstants r;
  for (int j = 1; j <= 8; ++j) r.c[j] = x[j - 1];
  r.c[0] = QScalar::qnum(2) - r.c[1];
  return r;
}

AffineW::AffineW(const RepV& rv, const QScalar& kappa) : rv_(rv), kappa_(kappa) {
  if (kappa_.is_zero()) throw std::runtime_error("AffineW: kappa must be nonzero");
  c_ = AffineConstants::solve();
  build();
}

void AffineW::build() {
  const RootSystem& rs = rv_.rs();
  const Root a0 = rs.alpha0();
  const int ia0 = rs.index(a0), ina0 = rs.index(-a0);

  // finite-type generators act on the V-part; k fixes w, e and f kill it
  for (int i = 1; i <= 8; ++i) {
    for (char kind : {'e', 'f', 'k', 'K'}) {
      SparseOp op({dim}, {dim});
      const SparseOp& g = rv_.gen(kind, i);
      for (int c = 0; c < RepV::dim; ++c) op.cols[c] = g.cols[c];
      if (kind == 'k' || kind == 'K') op.cols[w_index].emplace_back(w_index, QScalar(1));
      (kind == 'e' ? e_ : kind == 'f' ? f_ : kind == 'k' ? k_ : kinv_)[i] = std::move(op);
    }
  }

  k_[0] = SparseOp({dim}, {dim});
  kinv_[0] = SparseOp({dim}, {dim});
  for (int c = 0; c < dim; ++c) {
    int pair = c < 240 ? rs.inner(a0, rs.roots()[c]) : 0;
    k_[0].cols[c].emplace_back(c, QScalar::q(pair));
    kinv_[0].cols[c].emplace_back(c, QScalar::q(-pair));
  }

  e_[0] = SparseOp({dim}, {dim});
  f_[0] = SparseOp({dim}, {dim});
  for (int bi = 0; bi < 240; ++bi) {
    const Root& b = rs.roots()[bi];
    if (bi == ina0) {  // beta + alpha_0 = 0
      auto& col = e_[0].cols[bi];
      for (int j = 1; j <= 8; ++j) col.emplace_back(rv_.u_index(j), -c_.c[j]);
      col.emplace_back(w_index, -c_.c[0] * kappa_.inv());
    } else if (int si = rs.index(b + a0); si >= 0) {
      e_[0].cols[bi].emplace_back(si, QScalar(rs.epsilon(a0, b)));
    }
    if (bi == ia0) {  // beta - alpha_0 = 0
      auto& col = f_[0].cols[bi];
      for (int j = 1; j <= 8; ++j) col.emplace_back(rv_.u_index(j), c_.c[j]);
      col.emplace_back(w_index, c_.c[0] * kappa_.inv());
    } else if (int si = rs.index(b - a0); si >= 0) {
      f_[0].cols[bi].emplace_back(si, QScalar(rs.epsilon(-a0, b)));
    }
  }
  for (int j = 1; j <= 8; ++j) {
    int c0j = rs.inner(a0, rs.simple(j));
    if (c0j == 0) continue;
    e_[0].cols[rv_.u_index(j)].emplace_back(ia0, -QScalar::qnum(c0j));
    f_[0].cols[rv_.u_index(j)].emplace_back(ina0, QScalar::qnum(c0j));
  }
  e_[0].cols[w_index].emplace_back(ia0, kappa_);
  f_[0].cols[w_index].emplace_back(ina0, -kappa_);
}

const SparseOp& AffineW::gen(char kind, int i) const {
  switch (kind) {
    case 'e': return e_[i];
    case 'f': return f_[i];
    case 'k': return k_[i];
    case 'K': return kinv_[i];
  }
  throw std::runtime_error("AffineW: unknown generator kind");
}

int AffineW::affine_cartan(int i, int j) const {
  const RootSystem& rs = rv_.rs();
  Root ai = i == 0 ? rs.alpha0() : rs.simple(i);
  Root aj = j == 0 ? rs.alpha0() : rs.simple(j);
  return rs.inner(ai, aj);
}

std::vector<std::string> AffineW::relation_report() const {
  std::vector<std::string> out;
  auto fail = [&out](const std::string& what, int i, int j) {
    std::ostringstream os;
    os << what << " fails at (" << i << "," << j << ")";
    out.push_back(os.str());
  };
  const QScalar qden = (QScalar::q(1) - QScalar::q(-1)).inv();
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      int a = affine_cartan(i, j);
      if (k_[i].compose(e_[j]).compose(kinv_[i]) != e_[j].scaled(QScalar::q(a)))
        fail("k e k^-1 weight relation", i, j);
      if (k_[i].compose(f_[j]).compose(kinv_[i]) != f_[j].scaled(QScalar::q(-a)))
        fail("k f k^-1 weight relation", i, j);
      SparseOp comm = e_[i].compose(f_[j]) - f_[j].compose(e_[i]);
      if (i == j) {
        if (comm != (k_[i] - kinv_[i]).scaled(qden)) fail("[e,f] Cartan relation", i, j);
      } else if (!comm.is_zero()) {
        fail("[e_i,f_j] = 0", i, j);
      }
      if (i == j) continue;
      if (a == 0) {
        if (e_[i].compose(e_[j]) != e_[j].compose(e_[i])) fail("e Serre (commuting)", i, j);
        if (f_[i].compose(f_[j]) != f_[j].compose(f_[i])) fail("f Serre (commuting)", i, j);
      } else {
        for (char kind : {'e', 'f'}) {
          const auto& x = kind == 'e' ? e_[i] : f_[i];
          const auto& y = kind == 'e' ? e_[j] : f_[j];
          SparseOp s = x.compose(x).compose(y) -
                       x.compose(y).compose(x).scaled(QScalar::qnum(2)) +
                       y.compose(x).compose(x);
          if (!s.is_zero()) fail(std::string(1, kind) + " Serre (adjacent)", i, j);
        }
      }
    }
  // the central element acts as the identity
  SparseOp z = SparseOp::identity({dim});
  const auto& marks = rv_.rs().cartan().marks;
  for (int i = 0; i <= 8; ++i)
    for (int m = 0; m < marks[i]; ++m) z = z.compose(k_[i]);
  if (z != SparseOp::identity({dim})) fail("central element", -1, -1);
  return out;
}

const AffineW& affine_w() {
  static const AffineW aw(rep_v());
  return aw;
}

}  // namespace e8r
