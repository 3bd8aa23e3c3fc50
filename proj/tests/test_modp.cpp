#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/modp.hpp"
#include "e8r/repv.hpp"

using namespace e8r;
using namespace e8r::modp;

namespace {

uint32_t mpq_mod(const mpq_class& x, const Fp& fp) {
  return fp.mul(fp.from_mpz(x.get_num()), fp.inv(fp.from_mpz(x.get_den())));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  uint32_t p = nth_prime(0);
  CHECK(p > (1u << 25));
  CHECK(p < (1u << 26));
  CHECK(nth_prime(1) != p);
  CHECK(nth_prime(3) < nth_prime(2));
  Fp fp(p);
  for (uint32_t a : {1u, 2u, 12345u, p - 1, p / 2}) {
    CHECK(fp.pow(a, p - 1) == 1);
    CHECK(fp.mul(a, fp.inv(a)) == 1);
  }
  CHECK(fp.from_long(-1) == p - 1);
  CHECK(fp.add(p - 1, 1) == 0);
  CHECK(fp.sub(0, 1) == p - 1);
}

TEST_CASE("extension field matches exact evaluation") {
  Fp fp(nth_prime(0));
  ExtField F(fp.p(), 3);
  // rational scalars reduce consistently
  for (const RatQ& x : {RatQ::qnum(30), RatQ::qnum(6) * RatQ::qnum(10) / RatQ::qnum(30),
                        RatQ::q(-7) - RatQ::q(12), QScalar::c0()}) {
    CHECK(F.eval(x) == mpq_mod(x.eval(mpq_class(3)), fp));
  }
  // kappa squares to c0
  Ext k{0, 1};
  Ext k2 = F.mul(k, k);
  CHECK(k2.a == F.c0());
  CHECK(k2.b == 0);
  // multiplicative inverses
  Ext x{12345, 678};
  Ext one = F.mul(x, F.inv(x));
  CHECK(one.a == 1);
  CHECK(one.b == 0);
}

TEST_CASE("matvec agrees with exact sparse application") {
  const RepV& rv = rep_v();
  SparseOp A = rv.gen('e', 1).compose(rv.gen('f', 2)) + rv.gen('k', 3).scaled(QScalar::kappa());
  ExtField F(nth_prime(0), 5);
  CsrExt M = to_csr(A, F);

  // identity block picks out evaluated columns
  BlockVec x(248, 3);
  for (int c = 0; c < 3; ++c) x.a[(size_t)(c + 40) * 3 + c] = 1;
  BlockVec y;
  matvec(M, x, y, F, Kernel::scalar);
  for (int c = 0; c < 3; ++c) {
    auto col = A.apply({{c + 40, QScalar(1)}});
    for (int r = 0; r < 248; ++r) {
      Ext want = col.count(r) ? F.eval(col.at(r)) : Ext{};
      CHECK(y.a[(size_t)r * 3 + c] == want.a);
      CHECK(y.b[(size_t)r * 3 + c] == want.b);
    }
  }
}

TEST_CASE("vector kernels are equivalent") {
  const RepV& rv = rep_v();
  SparseOp A = rv.gen('e', 4).compose(rv.gen('f', 4)).scaled(QScalar(1, RatQ(2)));
  ExtField F(nth_prime(1), 7);
  CsrExt M = to_csr(A, F);
  INFO("auto kernel resolves to ", kernel_name(Kernel::auto_select));
  for (int block : {1, 5, 8, 17, 248}) {
    BlockVec x = random_vec(248, block, F, 1000 + block);
    BlockVec ys, ya;
    matvec(M, x, ys, F, Kernel::scalar);
    if (avx2_available()) {
      matvec(M, x, ya, F, Kernel::avx2);
      CHECK(ys.a == ya.a);
      CHECK(ys.b == ya.b);
    }
    matvec(M, x, ya, F, Kernel::auto_select);
    CHECK(ys.a == ya.a);
    CHECK(ys.b == ya.b);
  }
}

TEST_CASE("block transpose exchanges index groups") {
  ExtField F(nth_prime(0), 2);
  BlockVec x = random_vec(6, 4, F, 99);
  BlockVec t = transposed(x);
  CHECK(t.dim == 4);
  CHECK(t.block == 6);
  for (int s = 0; s < 6; ++s)
    for (int j = 0; j < 4; ++j) {
      CHECK(t.a[(size_t)j * 6 + s] == x.a[(size_t)s * 4 + j]);
      CHECK(t.b[(size_t)j * 6 + s] == x.b[(size_t)s * 4 + j]);
    }
  BlockVec tt = transposed(t);
  CHECK(tt.a == x.a);
  CHECK(tt.b == x.b);
}
