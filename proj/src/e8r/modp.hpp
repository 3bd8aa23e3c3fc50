#pragma once
// Modular evaluation kernels: scalars specialized at q = q0 over F_p, the
// quadratic extension F_p[k]/(k^2 - c0(q0)), CSR matrices, and blocked
// matrix-vector products with a scalar reference kernel and an AVX2 variant
// selected at runtime.
//
// Primes are kept below 2^26 so that products of reduced values fit in 52
// bits and long runs of them accumulate in 64-bit lanes without overflow.
#include "e8r/sparseop.hpp"
#include <cstdint>
#include <vector>

namespace e8r::modp {

class Fp {
 public:
  explicit Fp(uint32_t p);
  uint32_t p() const { return p_; }
  uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a ? p_ - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const { return (uint32_t)((uint64_t)a * b % p_); }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;  // throws on zero
  uint32_t from_long(long v) const;
  uint32_t from_mpz(const mpz_class& v) const;

 private:
  uint32_t p_;
};

// deterministic sequence of primes in (2^25, 2^26), distinct by index
uint32_t nth_prime(int index);

// a + b*k with k^2 = c0
struct Ext {
  uint32_t a = 0, b = 0;
  bool operator==(const Ext& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a == 0 && b == 0; }
};

// the field F_p with c0(q0) adjoined; also evaluates exact scalars
class ExtField {
 public:
  ExtField(uint32_t p, uint32_t q0);  // throws if q0 degenerate (c0 pole or 0)
  const Fp& fp() const { return fp_; }
  uint32_t q0() const { return q0_; }
  uint32_t c0() const { return c0_; }

  Ext add(const Ext& x, const Ext& y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
  Ext sub(const Ext& x, const Ext& y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }
  Ext mul(const Ext& x, const Ext& y) const;
  Ext inv(const Ext& x) const;  // throws on zero or non-invertible

  uint32_t eval(const Laurent& x) const;
  uint32_t eval(const RatQ& x) const;  // PoleAtPoint if den vanishes mod p
  Ext eval(const QScalar& x) const;

 private:
  Fp fp_;
  uint32_t q0_, q0inv_, c0_;
};

// CSR over the extension; per entry stores (a, b, c0*b) so the kernels never
// multiply two unreduced products
struct CsrExt {
  int rows = 0, cols = 0;
  std::vector<int64_t> rowptr;
  std::vector<int32_t> colidx;
  std::vector<uint32_t> va, vb, vcb;
  size_t nnz() const { return colidx.size(); }
};

CsrExt to_csr(const SparseOp& op, const ExtField& F);

// block vectors: SoA pair of arrays xa, xb of length dim * block, the block
// index fastest; y = M x with y of length rows * block
struct BlockVec {
  std::vector<uint32_t> a, b;
  int dim = 0, block = 0;
  BlockVec() = default;
  BlockVec(int dim_, int block_)
      : a((size_t)dim_ * block_, 0), b((size_t)dim_ * block_, 0), dim(dim_), block(block_) {}
  bool is_zero() const;
};

enum class Kernel { auto_select, scalar, avx2 };

bool avx2_available();
const char* kernel_name(Kernel k);  // resolved name after auto-selection

void matvec(const CsrExt& m, const BlockVec& x, BlockVec& y, const ExtField& F,
            Kernel k = Kernel::auto_select);

// exchange the two index groups: x viewed as (rows x block) -> (block x rows)
BlockVec transposed(const BlockVec& x);

// deterministic pseudo-random block vector with entries in the extension
BlockVec random_vec(int dim, int block, const ExtField& F, uint64_t seed);

}  // namespace e8r::modp
