#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/diagalg.hpp"

using namespace e8r;

namespace {
RatQ qn(int n) { return RatQ::qnum(n); }
RatQ poly(std::initializer_list<std::pair<int, long>> terms) {
  Laurent p;
  for (auto [e, c] : terms) p += Laurent::mono(c, e);
  return RatQ(p);
}
RatQ qq2() { auto d = RatQ::q(1) - RatQ::q(-1); return d * d; }
}  // namespace

TEST_CASE("relation constants are palindromic") {
  CHECK(DiagAlg::loop_value().a.palindromic());
  CHECK(DiagAlg::bubble_value().a.palindromic());
  CHECK(DiagAlg::triangle_value().a.palindromic());
  CHECK((qn(5) / (qn(6) * qn(10))).palindromic());  // crossing square coefficient
  CHECK(DiagAlg::loop_value().a.limit_q1() == 248);
  CHECK(DiagAlg::bubble_value().a.limit_q1() == 60);
  CHECK(DiagAlg::triangle_value().a.limit_q1() == 30);
}

TEST_CASE("loop, bubble and triangle reductions") {
  const DiagAlg& da = diag_alg();
  // closed loop: cup composed with cap
  QScalar loop;
  for (const auto& [r, v] : da.cap().cols[0]) {
    const auto& cc = da.cup().cols[r];
    if (!cc.empty()) loop += cc[0].second * v;
  }
  CHECK(loop == DiagAlg::loop_value());
  // bubble: y_down then y_up equals the bubble constant times the identity
  SparseOp bub = da.y_down().compose(da.y_up());
  CHECK(bub == SparseOp::identity({248}).scaled(DiagAlg::bubble_value()));
  CHECK(da.check_triangle());
  CHECK(da.check_tadpoles());
}

TEST_CASE("realized diagrams are intertwiners") {
  auto bad = diag_alg().check_intertwiners();
  for (const auto& s : bad) MESSAGE(s);
  CHECK(bad.empty());
}

TEST_CASE("multiplication table") {
  const DiagAlg& da = diag_alg();
  // commutative, unit acts trivially
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(da.table(i, j) == da.table(j, i));
      if (i == DiagAlg::FULL) CHECK(da.table(i, j) == da.basis_elem(j));
    }
  // directly reducible products
  Vec5 z{};
  CHECK(da.table(DiagAlg::CUPCAP, DiagAlg::CUPCAP) ==
        da.mul(Vec5{DiagAlg::loop_value()}, da.basis_elem(DiagAlg::CUPCAP)));
  CHECK(da.table(DiagAlg::VERTICAL, DiagAlg::VERTICAL) ==
        da.mul(Vec5{DiagAlg::bubble_value()}, da.basis_elem(DiagAlg::VERTICAL)));
  CHECK(da.table(DiagAlg::CUPCAP, DiagAlg::VERTICAL) == z);  // tadpole inside
  CHECK(da.table(DiagAlg::HORIZONTAL, DiagAlg::HORIZONTAL) ==
        da.basis_elem(DiagAlg::SQUARE));
  // solve_in_basis identifies the realized operators
  CHECK(da.solve_in_basis([&](const DiagAlg::Col& v) {
          return da.horizontal_op().apply(v);
        }) == da.basis_elem(DiagAlg::HORIZONTAL));
}

TEST_CASE("crossing relations") {
  const DiagAlg& da = diag_alg();
  Vec5 x = da.crossing(), xi = da.crossing(true);
  CHECK(x[DiagAlg::SQUARE] == QScalar(qn(5) / (qn(6) * qn(10))));
  CHECK(xi[DiagAlg::SQUARE] == x[DiagAlg::SQUARE]);
  for (int i = 0; i < 5; ++i) CHECK(xi[i].a == x[i].a.bar());
  CHECK(da.check_reidemeister_two());
  CHECK(da.check_reidemeister_one());

  // crossing squared, both chiralities
  for (int inv = 0; inv < 2; ++inv) {
    Vec5 a = inv ? xi : x, b = inv ? x : xi;
    RatQ c1 = poly({{-2, 1}, {10, -1}, {12, 1}});
    RatQ c2 = RatQ::q(35) * qq2() * qn(6) * qn(10) * qn(60) / (qn(20) * qn(30));
    RatQ c3 = RatQ::q(20) * (RatQ::q(1) - RatQ::q(-1)) * qn(5) * qn(30) / (qn(10) * qn(15));
    RatQ c4 = poly({{-2, 1}, {0, -1}, {12, 1}});
    if (inv) { c1 = c1.bar(); c2 = c2.bar(); c3 = c3.bar(); c4 = c4.bar(); }
    Vec5 rhs{};
    for (int k = 0; k < 5; ++k)
      rhs[k] = QScalar(c1) * da.unit()[k] + QScalar(c2) * da.basis_elem(DiagAlg::CUPCAP)[k] +
               QScalar(c3) * da.basis_elem(DiagAlg::VERTICAL)[k] + QScalar(c4) * a[k] -
               QScalar(inv ? RatQ::q(-10) : RatQ::q(10)) * b[k];
    CHECK(da.mul(a, a) == rhs);
  }
}

TEST_CASE("crossed rung product rule") {
  const DiagAlg& da = diag_alg();
  Vec5 x = da.crossing();
  QScalar cst((RatQ::q(1) - RatQ::q(-1)) * qn(6) * qn(10) * qn(15) / (qn(5) * qn(30)));
  Vec5 rhs{};
  for (int k = 0; k < 5; ++k)
    rhs[k] = QScalar::q(10) * da.basis_elem(DiagAlg::HORIZONTAL)[k] -
             QScalar::q(20) * da.basis_elem(DiagAlg::VERTICAL)[k] +
             cst * (QScalar::q(-5) * da.unit()[k] +
                    QScalar::q(35) * da.basis_elem(DiagAlg::CUPCAP)[k] +
                    QScalar::q(15) * x[k]);
  Vec5 h = da.basis_elem(DiagAlg::HORIZONTAL);
  CHECK(da.mul(x, h) == rhs);
  CHECK(da.mul(h, x) == rhs);  // mirror image
}

// the three-rung ladder, i.e. the product of the square and the horizontal rung
TEST_CASE("doublesquare expansion") {
  const DiagAlg& da = diag_alg();
  RatQ c_full = -qq2() * qn(6) * qn(6) * qn(10) * qn(10) * qn(10) * qn(15) * qn(15) * qn(15) *
                qn(18) * qn(32) / (qn(5) * qn(5) * qn(9) * qn(16) * qn(30) * qn(30) * qn(30));
  RatQ c_cupcap =
      poly({{32, 1}, {30, -1}, {28, 1}, {26, -1}, {22, 1}, {20, -1}, {18, 1}, {16, -1},
            {14, 1}, {12, -1}, {10, 1}, {6, -1}, {4, 1}, {2, -1}, {0, 1}}) *
      qn(2) * qn(6) * qn(10) * qn(10) * qn(10) * qn(12) * qn(15) * qn(15) * qn(15) * qn(18) *
      qn(32) /
      (RatQ::q(16) * qn(4) * qn(5) * qn(5) * qn(9) * qn(16) * qn(30) * qn(30) * qn(30));
  RatQ c_vertical =
      poly({{20, 1}, {18, 1}, {16, 1}, {12, 1}, {8, 1}, {4, 1}, {2, 1}, {0, 1}}) *
      poly({{24, 1}, {18, -1}, {16, 1}, {14, -1}, {12, 1}, {10, -1}, {8, 1}, {6, -1}, {0, 1}}) *
      poly({{36, 1}, {30, 1}, {26, -1}, {24, 1}, {20, -1}, {18, 1}, {16, -1}, {12, 1},
            {10, -1}, {6, 1}, {0, 1}}) *
      qn(6) * qn(6) * qn(10) * qn(10) * qn(15) * qn(15) /
      (RatQ::q(40) * qn(3) * qn(5) * qn(5) * qn(30) * qn(30));
  RatQ c_horizontal =
      -poly({{48, 1}, {46, -1}, {42, -1}, {40, 1}, {38, -1}, {36, -1}, {32, 1}, {30, 1},
             {28, -1}, {26, 1}, {24, -2}, {22, 1}, {20, -1}, {18, 1}, {16, 1}, {12, -1},
             {10, -1}, {8, 1}, {6, -1}, {2, -1}, {0, 1}}) *
      qn(6) * qn(6) * qn(10) * qn(10) * qn(15) * qn(15) /
      (RatQ::q(24) * qn(3) * qn(5) * qn(5) * qn(30) * qn(30));
  RatQ c_square =
      poly({{20, 1}, {18, 1}, {14, -1}, {12, -1}, {10, 1}, {8, -1}, {6, -1}, {2, 1}, {0, 1}}) *
      qn(6) * qn(10) * qn(10) * qn(15) / (RatQ::q(10) * qn(2) * qn(3) * qn(5) * qn(30));
  Vec5 expect{QScalar(c_full), QScalar(c_cupcap), QScalar(c_vertical), QScalar(c_horizontal),
              QScalar(c_square)};
  CHECK(da.table(DiagAlg::SQUARE, DiagAlg::HORIZONTAL) == expect);
}

TEST_CASE("idempotents") {
  const DiagAlg& da = diag_alg();
  const auto& P = da.idempotents();
  Vec5 sum{};
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) sum[k] += P[i][k];
  CHECK(sum == da.unit());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Vec5 pij = da.mul(P[i], P[j]);
      CHECK(pij == (i == j ? P[i] : Vec5{}));
    }
  // spectral expansions
  auto lam = DiagAlg::crossing_eigenvalues();
  auto expand = [&](const std::array<QScalar, 5>& ev) {
    Vec5 out{};
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) out[k] += ev[i] * P[i][k];
    return out;
  };
  CHECK(expand(lam) == da.crossing());
  std::array<QScalar, 5> lbar;
  for (int i = 0; i < 5; ++i) lbar[i] = QScalar(lam[i].a.bar());
  CHECK(expand(lbar) == da.crossing(true));
  CHECK(expand({DiagAlg::loop_value(), QScalar(), QScalar(), QScalar(), QScalar()}) ==
        da.basis_elem(DiagAlg::CUPCAP));
  CHECK(expand({QScalar(), DiagAlg::bubble_value(), QScalar(), QScalar(), QScalar()}) ==
        da.basis_elem(DiagAlg::VERTICAL));
  // printed expansion of the horizontal diagram, and its square
  std::array<QScalar, 5> h;
  h[0] = DiagAlg::bubble_value();
  h[1] = QScalar(qn(10) * qn(10) * qn(15) / qn(30) *
                 (qq2() * qn(7) * qn(12) / qn(4) +
                  qn(6) * qn(6) / (qn(2) * qn(2) * qn(3) * qn(5))));
  h[2] = QScalar(qn(6) * qn(10) * qn(15) * qn(32) / (qn(5) * qn(16) * qn(30)));
  h[3] = QScalar(-qn(10) * qn(15) * qn(18) / (qn(5) * qn(9) * qn(30)));
  h[4] = QScalar(qq2() * qn(6) * qn(10) * qn(15) / qn(30));
  CHECK(expand(h) == da.basis_elem(DiagAlg::HORIZONTAL));
  std::array<QScalar, 5> h2;
  for (int i = 0; i < 5; ++i) h2[i] = h[i] * h[i];
  CHECK(expand(h2) == da.basis_elem(DiagAlg::SQUARE));
  // traces at q -> 1 give the dimensions of the irreducible summands
  long dims[5] = {1, 248, 3875, 27000, 30380};
  for (int i = 0; i < 5; ++i) {
    QScalar t = da.trace(P[i]);
    CHECK(t.b.is_zero());
    CHECK(t.a.limit_q1() == dims[i]);
  }
}

TEST_CASE("crossing basis change round trip") {
  const DiagAlg& da = diag_alg();
  Vec5 samples[3] = {da.basis_elem(DiagAlg::HORIZONTAL), da.basis_elem(DiagAlg::SQUARE),
                     da.idempotents()[2]};
  for (const Vec5& v : samples) {
    CHECK(da.from_crossing_basis(da.to_crossing_basis(v)) == v);
    CHECK(da.to_crossing_basis(da.from_crossing_basis(v)) == v);
  }
  // the crossing itself has a one-hot expansion in its own basis
  Vec5 e = da.to_crossing_basis(da.crossing());
  CHECK(e == Vec5{QScalar(), QScalar(), QScalar(), QScalar(1), QScalar()});
}
