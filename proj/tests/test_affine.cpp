#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/affinew.hpp"

using namespace e8r;

namespace {
QScalar qn(int n) { return QScalar::qnum(n); }
}

TEST_CASE("affine constants solve to the closed forms") {
  AffineConstants ac = AffineConstants::solve();
  QScalar pre = qn(6) * qn(10) * qn(15) / (qn(2) * qn(3) * qn(5) * qn(30));
  QScalar list[8] = {qn(2) * qn(3) * qn(18) / (qn(6) * qn(9)),
                     qn(2) * qn(3) * qn(12) / (qn(4) * qn(6)),
                     qn(2) * qn(8) / qn(4),
                     qn(5),
                     qn(2) * qn(3),
                     qn(2) * qn(2),
                     qn(2),
                     qn(3)};
  for (int i = 1; i <= 8; ++i) CHECK(ac.c[i] == pre * list[i - 1]);
  CHECK(ac.c[0] == QScalar(QScalar::c0()));
  CHECK(ac.c[0] + ac.c[1] == qn(2));
  // row 5 of the defining system has zero right-hand side
  const CartanData& cd = root_system().cartan();
  QScalar s5;
  for (int j = 1; j <= 8; ++j) s5 += qn(cd.C[5][j]) * ac.c[j];
  CHECK(s5.is_zero());
  QScalar s1;
  for (int j = 1; j <= 8; ++j) s1 += qn(cd.C[1][j]) * ac.c[j];
  CHECK(s1.is_one());
}

TEST_CASE("affine generator actions") {
  const AffineW& aw = affine_w();
  const RepV& rv = aw.rep();
  const RootSystem& rs = rv.rs();
  const Root a0 = rs.alpha0();
  int ia0 = rs.index(a0), ina0 = rs.index(-a0);
  const QScalar kap = QScalar::kappa();

  // k_0 scales root vectors by the alpha_0 pairing and fixes u_j and w
  for (int bi : {0, 17, 100, ia0, ina0}) {
    CHECK(aw.gen('k', 0).entry(bi, bi) == QScalar::q(rs.inner(a0, rs.roots()[bi])));
  }
  CHECK(aw.gen('k', 0).entry(rv.u_index(3), rv.u_index(3)).is_one());
  CHECK(aw.gen('k', 0).entry(AffineW::w_index, AffineW::w_index).is_one());

  // e_0 w = kappa v_{alpha_0}, f_0 w = -kappa v_{-alpha_0}
  CHECK(aw.gen('e', 0).cols[AffineW::w_index] ==
        std::vector<std::pair<int, QScalar>>{{ia0, kap}});
  CHECK(aw.gen('f', 0).cols[AffineW::w_index] ==
        std::vector<std::pair<int, QScalar>>{{ina0, -kap}});

  // only u_1 couples to node 0
  CHECK(aw.gen('e', 0).entry(ia0, rv.u_index(1)).is_one());
  for (int j = 2; j <= 8; ++j) CHECK(aw.gen('e', 0).cols[rv.u_index(j)].empty());
  CHECK(aw.gen('f', 0).entry(ina0, rv.u_index(1)) == QScalar(-1));

  // the column at beta = -alpha_0 lands on the u's and w; kappa^2 = c_0
  const auto& col = aw.gen('e', 0).cols[ina0];
  REQUIRE(col.size() == 9);
  CHECK(col.back().first == AffineW::w_index);
  CHECK(col.back().second == -kap);
  for (int j = 1; j <= 8; ++j) {
    CHECK(col[j - 1].first == rv.u_index(j));
    CHECK(col[j - 1].second == -aw.constants().c[j]);
  }

  // z-degrees
  CHECK(AffineW::z_degree('e', 0) == 1);
  CHECK(AffineW::z_degree('f', 0) == -1);
  CHECK(AffineW::z_degree('k', 0) == 0);
  CHECK(AffineW::z_degree('e', 4) == 0);
}

TEST_CASE("restriction to the finite subalgebra is V plus trivial") {
  const AffineW& aw = affine_w();
  const RepV& rv = aw.rep();
  for (int i = 1; i <= 8; ++i)
    for (char kind : {'e', 'f', 'k', 'K'}) {
      const SparseOp& big = aw.gen(kind, i);
      const SparseOp& small = rv.gen(kind, i);
      for (int c = 0; c < RepV::dim; ++c) CHECK(big.cols[c] == small.cols[c]);
      if (kind == 'e' || kind == 'f') CHECK(big.cols[AffineW::w_index].empty());
      else CHECK(big.entry(AffineW::w_index, AffineW::w_index).is_one());
    }
}

TEST_CASE("affine defining relations hold") {
  auto report = affine_w().relation_report();
  for (const auto& r : report) MESSAGE(r);
  CHECK(report.empty());
}

TEST_CASE("changing kappa is a basis rescaling of w") {
  const AffineW& aw = affine_w();
  AffineW aw2(aw.rep(), QScalar(2) * QScalar::kappa());
  SparseOp d = SparseOp::identity({AffineW::dim});
  SparseOp dinv = d;
  d.cols[AffineW::w_index][0].second = QScalar(RatQ(Laurent::one(), Laurent(2)));
  dinv.cols[AffineW::w_index][0].second = QScalar(2);
  for (int i = 0; i <= 8; ++i)
    for (char kind : {'e', 'f', 'k', 'K'})
      CHECK(aw2.gen(kind, i) == d.compose(aw.gen(kind, i)).compose(dinv));
}
