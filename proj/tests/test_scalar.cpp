#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/numeric.hpp"
#include <random>

using namespace e8r;

TEST_CASE("q-number basics") {
  CHECK(Laurent::qnum(1).is_one());
  CHECK(Laurent::qnum(2) == Laurent::q(1) + Laurent::q(-1));
  CHECK(Laurent::qnum(0).is_zero());
  CHECK(Laurent::qnum(-7) == -Laurent::qnum(7));
  // [m][n+1] - [m+1][n] = [m-n]
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; n <= 40; ++n)
      CHECK(Laurent::qnum(m) * Laurent::qnum(n + 1) - Laurent::qnum(m + 1) * Laurent::qnum(n)
            == Laurent::qnum(m - n));
}

TEST_CASE("limit q->1 of the loop value") {
  RatQ x = RatQ::qnum(20) * RatQ::qnum(24) * RatQ::qnum(31)
         / (RatQ::qnum(6) * RatQ::qnum(10));
  CHECK(x.limit_q1() == mpq_class(248));
  CHECK(mpq_class(20) * 24 * 31 / (6 * 10) == mpq_class(248));
  CHECK(x.palindromic());
}

TEST_CASE("Laurent arithmetic and division") {
  Laurent a = Laurent::parse("q^-2 - q^10 + q^12");
  CHECK(a.to_string() == "q^-2 - q^10 + q^12");
  CHECK(Laurent::parse(a.to_string()) == a);
  Laurent b = Laurent::qnum(6) * Laurent::qnum(15);
  CHECK(b.divexact(Laurent::qnum(6)) == Laurent::qnum(15));
  CHECK(Laurent::gcd(Laurent::qnum(12), Laurent::qnum(8)).degree_span()
        == Laurent::qnum(4).degree_span());
  Laurent c = Laurent::parse("-3*q^2 + 1");
  CHECK(Laurent::parse(c.to_string()) == c);
}

TEST_CASE("RatQ reduction, canonical form, round trip") {
  RatQ r(Laurent::qnum(12), Laurent::qnum(4));
  CHECK(r.is_integer_poly());  // [12]/[4] = q^8 - q^4... actually a polynomial
  RatQ s(Laurent::qnum(4), Laurent::qnum(12));
  RatQ t = s;
  t.reduce();
  CHECK(t == s);  // reduction idempotent
  CHECK((r * s).is_one());
  RatQ u = RatQ::parse(s.to_string());
  CHECK(u == s);
  CHECK(s.eval(2) == RatQ::qnum(4).eval(2) / RatQ::qnum(12).eval(2));
}

TEST_CASE("RatQ eval and [2] at q=2") {
  CHECK(RatQ::qnum(2).eval(2) == mpq_class(5, 2));
}

TEST_CASE("QScalar field") {
  QScalar k = QScalar::kappa();
  QScalar k2 = k * k;
  CHECK(k2.is_rational());
  CHECK(k2.a == QScalar::c0());
  CHECK((k.inv() * k).is_one());
  CHECK(k.inv() == QScalar(RatQ(0), RatQ(1) / QScalar::c0()));
  // ((q-q^-1)[10]/k)^2 = [10][30]/([6][15])
  QScalar x = QScalar(RatQ(Laurent::q() - Laurent::q(-1)) * RatQ::qnum(10)) / k;
  QScalar lhs = x * x;
  RatQ rhs = RatQ::qnum(10) * RatQ::qnum(30) / (RatQ::qnum(6) * RatQ::qnum(15));
  CHECK(lhs.is_rational());
  CHECK(lhs.a == rhs);
}

TEST_CASE("QScalar algebra on random triples") {
  std::mt19937_64 rng(12345);
  auto rnd = [&] {
    RatQ a(Laurent::mono((long)(rng() % 7) - 3, (int)(rng() % 5) - 2)
           + Laurent::mono((long)(rng() % 5), 0),
           Laurent::qnum(1 + rng() % 4));
    RatQ b(Laurent::mono((long)(rng() % 5) - 2, (int)(rng() % 3) - 1));
    return QScalar(a, b);
  };
  for (int it = 0; it < 50; ++it) {
    QScalar x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero() && !(x.a * x.a - x.b * x.b * QScalar::c0()).is_zero())
      CHECK((x.inv() * x).is_one());
  }
}

TEST_CASE("QScalar serialization round trip") {
  QScalar s(RatQ(Laurent::qnum(3), Laurent::qnum(5)), RatQ(Laurent::parse("q^-2 - q^10 + q^12")));
  CHECK(QScalar::parse(s.to_string()) == s);
  QScalar t(RatQ(Laurent::qnum(7)));
  CHECK(QScalar::parse(t.to_string()) == t);
  QScalar u(RatQ(0), RatQ(Laurent::qnum(2), Laurent::qnum(9)));
  CHECK(QScalar::parse(u.to_string()) == u);
}

TEST_CASE("RatZ arithmetic") {
  RatZ z = RatZ::z();
  RatZ one(1);
  RatZ f = (z - RatZ(QScalar::q(2))) / (one - RatZ(QScalar::q(2)) * z);
  RatZ g = f.substitute(one / z);
  CHECK((f * g).is_one());  // (1/z - q^2) = (1 - q^2 z)/z etc.
  // value checks
  CHECK(f.eval(QScalar(1)) == QScalar(1) * (QScalar(1) - QScalar::q(2)) * (QScalar(1) - QScalar::q(2)).inv());
  CHECK(f.value_at_zero() == -QScalar::q(2));
  CHECK(f.value_at_infinity() == -QScalar::q(-2));
  // residue of 1/(1-q^2 z) at z=q^-2 is -q^-2
  RatZ h = one / (one - RatZ(QScalar::q(2)) * z);
  CHECK(h.residue(QScalar::q(-2)) == -QScalar::q(-2));
  // reduction: (z^2-1)/(z-1) = z+1
  RatZ p = (z * z - one) / (z - one);
  CHECK(p.num_degree() == 1);
  CHECK(p.den_degree() == 0);
  CHECK(p == z + one);
}

TEST_CASE("eval_point homomorphism samples") {
  NumericField F(mpq_class(2));
  std::mt19937_64 rng(99);
  auto rnds = [&] {
    return QScalar(RatQ(Laurent::mono((long)(rng() % 9) - 4, (int)(rng() % 7) - 3)),
                   RatQ(Laurent::mono((long)(rng() % 3), 1)));
  };
  for (int it = 0; it < 100; ++it) {
    QScalar x = rnds(), y = rnds();
    CHECK(F.eval(x * y) == F.mul(F.eval(x), F.eval(y)));
    CHECK(F.eval(x + y) == F.add(F.eval(x), F.eval(y)));
  }
  // kappa*kappa evaluates to c0(q0)
  CHECK(F.eval(QScalar::kappa() * QScalar::kappa())
        == F.mul(F.eval(QScalar::kappa()), F.eval(QScalar::kappa())));
  // c0 at q0=2 matches unreduced substitution
  mpq_class q0 = 2, qi = mpq_class(1, 2);
  auto qn = [&](int n) -> mpq_class {
    mpq_class a = 1, b = 1;
    for (int i = 0; i < n; ++i) { a *= q0; b *= qi; }
    return mpq_class((a - b) / (q0 - qi));
  };
  mpq_class c0_direct = (q0 - qi) * (q0 - qi) * qn(6) * qn(10) * qn(15) / qn(30);
  CHECK(QScalar::c0().eval(2) == c0_direct);
}
