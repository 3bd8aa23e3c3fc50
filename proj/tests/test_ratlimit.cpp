#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/ratlimit.hpp"

using namespace e8r;

namespace {

RatX rx(PolyX n, PolyX d) { return RatX(std::move(n), std::move(d)); }

Q30 ratx_eval(const RatX& r, const Q30& x0) {
  return px_eval(r.num, x0) / px_eval(r.den, x0);
}

}  // namespace

TEST_CASE("scalar expansions") {
  EpsExpander ex(1);
  CHECK(ex.q1(QScalar::qnum(5)) == Q30(5));
  CHECK(ex.q1(QScalar::q(3)) == Q30(1));
  CHECK(ex.q1(QScalar::kappa()) == Q30(0));
  // kappa / (q - 1/q) -> sqrt(30) eps h / (eps h) = sqrt(30)
  QScalar qm = QScalar::q(1) - QScalar::q(-1);
  QScalar r = QScalar::kappa() / qm;
  CHECK(ex.q1(r) == Q30(mpq_class(0), mpq_class(1)));
  // and the same with hbar = 1/3: the ratio is scale free
  CHECK(EpsExpander(mpq_class(1, 3)).q1(r) == Q30(mpq_class(0), mpq_class(1)));

  // (q^2 z - 1)/(q^12 z - 1) -> (h + x)/(6h + x)
  ZPoly n = {QScalar(-1), QScalar::q(2)}, d = {QScalar(-1), QScalar::q(12)};
  RatX lim = ex.limit(RatZ(n, d));
  CHECK(lim == rx({Q30(1), Q30(1)}, {Q30(6), Q30(1)}));
}

TEST_CASE("printed rational coefficients from the trigonometric family") {
  const RMatrix& rm = r_matrix();
  for (mpq_class h : {mpq_class(1), mpq_class(1, 3)}) {
    RatLimit rl(rm, h);
    auto want = RatLimit::printed(h);
    for (int i = 0; i < 16; ++i) {
      CAPTURE(i);
      CHECK(rl.coeffs()[i] == want[i]);
    }
  }
}

TEST_CASE("rational R at x=0 is the identity") {
  RatLimit rl(r_matrix(), 1);
  for (int i = 0; i < 16; ++i) {
    Q30 v = ratx_eval(rl.coeffs()[i], Q30(0));
    bool isid = i == WRing::FULL || i == WRing::EMPTY || i == WRing::LEFTID ||
                i == WRing::RIGHTID;
    CHECK(v == (isid ? Q30(1) : Q30(0)));
  }
}

TEST_CASE("intermediate basis display") {
  RatLimit rl(r_matrix(), 1);
  auto got = rl.intermediate();
  auto want = RatLimit::printed_intermediate(1);
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(got[i] == want[i]);
  }
}

TEST_CASE("degenerate crossing at q=1") {
  const DiagAlg& da = diag_alg();
  EpsExpander ex(1);
  Vec5 over = da.crossing(false), under = da.crossing(true);
  std::array<Q30, 5> flat;
  for (int i = 0; i < 5; ++i) {
    flat[i] = ex.q1(over[i]);
    CHECK(flat[i] == ex.q1(under[i]));
  }
  // square = 12(full + flat + cupcap) + 10(vertical + horizontal)
  CHECK(flat[DiagAlg::FULL] == Q30(-1));
  CHECK(flat[DiagAlg::CUPCAP] == Q30(-1));
  CHECK(flat[DiagAlg::VERTICAL] == Q30(mpq_class(-5, 6)));
  CHECK(flat[DiagAlg::HORIZONTAL] == Q30(mpq_class(-5, 6)));
  CHECK(flat[DiagAlg::SQUARE] == Q30(mpq_class(1, 12)));

  // the flat crossing is an involution under the q=1 structure constants
  std::array<Q30, 5> sq{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (flat[i].is_zero() || flat[j].is_zero()) continue;
      const Vec5& t = da.table(i, j);
      for (int k = 0; k < 5; ++k) sq[k] += flat[i] * flat[j] * ex.q1(t[k]);
    }
  for (int k = 0; k < 5; ++k) CHECK(sq[k] == (k == DiagAlg::FULL ? Q30(1) : Q30(0)));
}

TEST_CASE("unitarity survives the limit") {
  RatLimit rl(r_matrix(), 1);
  CHECK_NOTHROW(rl.check_unitarity(w_ring()));
  RatLimit rl3(r_matrix(), mpq_class(2, 3));
  CHECK_NOTHROW(rl3.check_unitarity(w_ring()));
}

TEST_CASE("normalizing factor and vertex scale of the comparison") {
  mpq_class h(1);
  RatX f = RatLimit::norm_factor(h);
  CHECK(ratx_eval(f, Q30(0)) == Q30(0));
  CHECK(ratx_eval(f, Q30(5)) == Q30(0));
  CHECK(ratx_eval(f, Q30(9)) == Q30(0));
  for (long p : {1L, 6L, 10L}) CHECK(px_eval(f.den, Q30(p)) == Q30(0));

  // alpha = 1/(2 sqrt(15)) squares to the inverse of the q=1 vertex bubble
  EpsExpander ex(1);
  Q30 bubble = ex.q1(DiagAlg::bubble_value());
  CHECK(bubble == Q30(60));
  mpq_class alpha2(1, 4 * 15);  // (1/(2 sqrt 15))^2
  CHECK(alpha2 == 1 / bubble.a);
}
