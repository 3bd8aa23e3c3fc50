#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/rmatrix.hpp"

using namespace e8r;

TEST_CASE("derivation facts") {
  const DeriveInfo& di = r_matrix().info();
  CHECK(di.rank == 15);
  CHECK(di.equations > 0);
  CHECK(di.probes <= 8);
  // the certificate is a single monomial in z: outside the degeneration
  // points the intertwining system has a one-dimensional kernel
  REQUIRE(!di.certificate.empty());
  for (size_t k = 0; k + 1 < di.certificate.size(); ++k)
    CHECK(di.certificate[k].is_zero());
}

TEST_CASE("derived coefficients match the closed form") {
  const RMatrix& rm = r_matrix();
  Vec16 cf = RMatrix::closed_form();
  for (int i = 0; i < 16; ++i) {
    CAPTURE(i);
    CHECK(rm.coeffs()[i] == cf[i]);
  }
}

TEST_CASE("value at z=1 is the identity") {
  const RMatrix& rm = r_matrix();
  QVec16 at1 = rm.at(QScalar(1));
  QVec16 u = rm.ring().unit();
  for (int i = 0; i < 16; ++i) {
    CAPTURE(i);
    CHECK(at1[i] == u[i]);
  }
}

TEST_CASE("values at z=0 and z=infinity are the crossings") {
  const RMatrix& rm = r_matrix();
  const WRing& wr = rm.ring();
  for (bool infinity : {false, true}) {
    QVec16 expect = wr.lift(wr.diag().crossing(infinity));
    expect[WRing::SWAP_LR] += QScalar(1);
    expect[WRing::SWAP_RL] += QScalar(1);
    expect[WRing::EMPTY] += QScalar(1);
    QScalar pre = QScalar::q(infinity ? -2 : 2);
    for (int i = 0; i < 16; ++i) {
      CAPTURE(infinity);
      CAPTURE(i);
      QScalar v = infinity ? rm.coeffs()[i].value_at_infinity()
                           : rm.coeffs()[i].value_at_zero();
      CHECK(v == pre * expect[i]);
    }
  }
}

TEST_CASE("unitarity as rational functions") {
  const RMatrix& rm = r_matrix();
  const WRing& wr = rm.ring();
  RatZ zinv = RatZ::z(1).inv();
  Vec16 c = rm.coeffs(), ci;
  for (int i = 0; i < 16; ++i) ci[i] = c[i].substitute(zinv);
  Vec16 p = wr.mul(c, ci);
  QVec16 u = wr.unit();
  for (int i = 0; i < 16; ++i) {
    CAPTURE(i);
    CHECK(p[i] == RatZ(u[i]));
  }
}

TEST_CASE("clearing the poles leaves Laurent polynomials") {
  const RMatrix& rm = r_matrix();
  ZPoly num{QScalar(1)};
  for (int a : {2, 12, 20, 30}) num = zp_mul(num, ZPoly{QScalar(1), -QScalar::q(a)});
  ZPoly z2(3);
  z2[2] = QScalar(1);
  RatZ pref(num, z2);  // z^-2 (1-q^2 z)(1-q^12 z)(1-q^20 z)(1-q^30 z)
  for (int i = 0; i < 16; ++i) {
    CAPTURE(i);
    RatZ p = pref * rm.coeffs()[i];
    for (size_t k = 0; k + 1 < p.den.size(); ++k) CHECK(p.den[k].is_zero());
  }
}
