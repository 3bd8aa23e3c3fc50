#include "e8r/modp.hpp"
#include <cstring>
#include <stdexcept>
#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace e8r::modp {

Fp::Fp(uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 26)) throw std::runtime_error("Fp: prime out of range");
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint64_t r = 1, x = a % p_;
  while (e) {
    if (e & 1) r = r * x % p_;
    x = x * x % p_;
    e >>= 1;
  }
  return (uint32_t)r;
}

uint32_t Fp::inv(uint32_t a) const {
  if (a % p_ == 0) throw std::runtime_error("Fp: inverse of zero");
  return pow(a, p_ - 2);
}

uint32_t Fp::from_long(long v) const {
  long m = v % (long)p_;
  if (m < 0) m += p_;
  return (uint32_t)m;
}

uint32_t Fp::from_mpz(const mpz_class& v) const {
  mpz_class m = v % p_;
  if (m < 0) m += p_;
  return (uint32_t)m.get_ui();
}

uint32_t nth_prime(int index) {
  static std::vector<uint32_t> cache;
  mpz_class c;
  uint32_t cand = cache.empty() ? (1u << 26) - 1 : cache.back() - 2;
  while ((int)cache.size() <= index) {
    c = cand;
    if (mpz_probab_prime_p(c.get_mpz_t(), 32)) cache.push_back(cand);
    cand -= 2;
    if (cand < (1u << 25)) throw std::runtime_error("modp: prime pool exhausted");
  }
  return cache[index];
}

ExtField::ExtField(uint32_t p, uint32_t q0) : fp_(p), q0_(q0 % p) {
  if (q0_ == 0) throw std::runtime_error("ExtField: q0 is zero");
  q0inv_ = fp_.inv(q0_);
  c0_ = eval(QScalar::c0());
  if (c0_ == 0) throw std::runtime_error("ExtField: c0 vanishes at q0");
}

Ext ExtField::mul(const Ext& x, const Ext& y) const {
  uint32_t a = fp_.add(fp_.mul(x.a, y.a), fp_.mul(c0_, fp_.mul(x.b, y.b)));
  uint32_t b = fp_.add(fp_.mul(x.a, y.b), fp_.mul(x.b, y.a));
  return {a, b};
}

Ext ExtField::inv(const Ext& x) const {
  uint32_t n = fp_.sub(fp_.mul(x.a, x.a), fp_.mul(c0_, fp_.mul(x.b, x.b)));
  uint32_t ni = fp_.inv(n);
  return {fp_.mul(x.a, ni), fp_.mul(fp_.neg(x.b), ni)};
}

uint32_t ExtField::eval(const Laurent& x) const {
  uint32_t s = 0;
  for (const auto& [e, c] : x.t) {
    uint32_t pw = e >= 0 ? fp_.pow(q0_, e) : fp_.pow(q0inv_, -e);
    s = fp_.add(s, fp_.mul(fp_.from_mpz(c), pw));
  }
  return s;
}

uint32_t ExtField::eval(const RatQ& x) const {
  uint32_t n = eval(x.num);
  if (x.den.is_one()) return n;
  uint32_t d = eval(x.den);
  if (d == 0) throw PoleAtPoint("modp: denominator vanishes at q0");
  return fp_.mul(n, fp_.inv(d));
}

Ext ExtField::eval(const QScalar& x) const { return {eval(x.a), eval(x.b)}; }

CsrExt to_csr(const SparseOp& op, const ExtField& F) {
  CsrExt m;
  m.rows = op.cod_size();
  m.cols = op.dom_size();
  // evaluate column-wise, bucket by row
  std::vector<std::vector<std::pair<int32_t, Ext>>> byrow(m.rows);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : op.cols[c]) {
      Ext e = F.eval(v);
      if (!e.is_zero()) byrow[r].emplace_back(c, e);
    }
  m.rowptr.assign(m.rows + 1, 0);
  size_t n = 0;
  for (int r = 0; r < m.rows; ++r) n += byrow[r].size();
  m.colidx.reserve(n);
  m.va.reserve(n);
  m.vb.reserve(n);
  m.vcb.reserve(n);
  for (int r = 0; r < m.rows; ++r) {
    for (const auto& [c, e] : byrow[r]) {
      m.colidx.push_back(c);
      m.va.push_back(e.a);
      m.vb.push_back(e.b);
      m.vcb.push_back(F.fp().mul(F.c0(), e.b));
    }
    m.rowptr[r + 1] = (int64_t)m.colidx.size();
  }
  return m;
}

bool BlockVec::is_zero() const {
  for (uint32_t v : a)
    if (v) return false;
  for (uint32_t v : b)
    if (v) return false;
  return true;
}

namespace {

// accumulate one matrix entry (ea + eb*k) times the source block s into the
// 64-bit accumulators: acca += ea*xa + (c0*eb)*xb, accb += ea*xb + eb*xa
void accum_scalar(uint32_t ea, uint32_t eb, uint32_t ecb, const uint32_t* xa,
                  const uint32_t* xb, uint64_t* acca, uint64_t* accb, int block) {
  for (int j = 0; j < block; ++j) {
    acca[j] += (uint64_t)ea * xa[j] + (uint64_t)ecb * xb[j];
    accb[j] += (uint64_t)ea * xb[j] + (uint64_t)eb * xa[j];
  }
}

#if defined(__x86_64__)
__attribute__((target("avx2"))) void accum_avx2(uint32_t ea, uint32_t eb, uint32_t ecb,
                                                const uint32_t* xa, const uint32_t* xb,
                                                uint64_t* acca, uint64_t* accb, int block) {
  __m256i va = _mm256_set1_epi64x(ea), vb = _mm256_set1_epi64x(eb), vcb = _mm256_set1_epi64x(ecb);
  int j = 0;
  for (; j + 8 <= block; j += 8) {
    __m256i a8 = _mm256_loadu_si256((const __m256i*)(xa + j));
    __m256i b8 = _mm256_loadu_si256((const __m256i*)(xb + j));
    __m256i alo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(a8));
    __m256i ahi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(a8, 1));
    __m256i blo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(b8));
    __m256i bhi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(b8, 1));
    __m256i* pa0 = (__m256i*)(acca + j);
    __m256i* pa1 = (__m256i*)(acca + j + 4);
    __m256i* pb0 = (__m256i*)(accb + j);
    __m256i* pb1 = (__m256i*)(accb + j + 4);
    _mm256_storeu_si256(pa0, _mm256_add_epi64(_mm256_loadu_si256(pa0),
        _mm256_add_epi64(_mm256_mul_epu32(alo, va), _mm256_mul_epu32(blo, vcb))));
    _mm256_storeu_si256(pa1, _mm256_add_epi64(_mm256_loadu_si256(pa1),
        _mm256_add_epi64(_mm256_mul_epu32(ahi, va), _mm256_mul_epu32(bhi, vcb))));
    _mm256_storeu_si256(pb0, _mm256_add_epi64(_mm256_loadu_si256(pb0),
        _mm256_add_epi64(_mm256_mul_epu32(blo, va), _mm256_mul_epu32(alo, vb))));
    _mm256_storeu_si256(pb1, _mm256_add_epi64(_mm256_loadu_si256(pb1),
        _mm256_add_epi64(_mm256_mul_epu32(bhi, va), _mm256_mul_epu32(ahi, vb))));
  }
  if (j < block) accum_scalar(ea, eb, ecb, xa + j, xb + j, acca + j, accb + j, block - j);
}
#endif

using AccumFn = void (*)(uint32_t, uint32_t, uint32_t, const uint32_t*, const uint32_t*,
                         uint64_t*, uint64_t*, int);

AccumFn resolve(Kernel k) {
#if defined(__x86_64__)
  if (k == Kernel::avx2) {
    if (!avx2_available()) throw std::runtime_error("modp: AVX2 not available");
    return accum_avx2;
  }
  if (k == Kernel::auto_select && avx2_available()) return accum_avx2;
#else
  if (k == Kernel::avx2) throw std::runtime_error("modp: AVX2 not available");
#endif
  return accum_scalar;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const char* kernel_name(Kernel k) {
  if (k == Kernel::auto_select) k = avx2_available() ? Kernel::avx2 : Kernel::scalar;
  return k == Kernel::avx2 ? "avx2" : "scalar";
}

void matvec(const CsrExt& m, const BlockVec& x, BlockVec& y, const ExtField& F, Kernel k) {
  if (x.dim != m.cols) throw std::runtime_error("modp: matvec shape mismatch");
  const int block = x.block;
  const uint32_t p = F.fp().p();
  AccumFn fn = resolve(k);
  y = BlockVec(m.rows, block);
  std::vector<uint64_t> acca(block), accb(block);
  // products are < 2^52, so up to 1000 entries accumulate without overflow
  constexpr int kChunk = 1000;
  for (int r = 0; r < m.rows; ++r) {
    int64_t k0 = m.rowptr[r], k1 = m.rowptr[r + 1];
    if (k0 == k1) continue;
    std::memset(acca.data(), 0, block * sizeof(uint64_t));
    std::memset(accb.data(), 0, block * sizeof(uint64_t));
    int since = 0;
    for (int64_t t = k0; t < k1; ++t) {
      size_t off = (size_t)m.colidx[t] * block;
      fn(m.va[t], m.vb[t], m.vcb[t], x.a.data() + off, x.b.data() + off,
         acca.data(), accb.data(), block);
      if (++since == kChunk) {
        for (int j = 0; j < block; ++j) { acca[j] %= p; accb[j] %= p; }
        since = 0;
      }
    }
    size_t ro = (size_t)r * block;
    for (int j = 0; j < block; ++j) {
      y.a[ro + j] = (uint32_t)(acca[j] % p);
      y.b[ro + j] = (uint32_t)(accb[j] % p);
    }
  }
}

BlockVec transposed(const BlockVec& x) {
  BlockVec y(x.block, x.dim);
  for (int s = 0; s < x.dim; ++s)
    for (int j = 0; j < x.block; ++j) {
      y.a[(size_t)j * x.dim + s] = x.a[(size_t)s * x.block + j];
      y.b[(size_t)j * x.dim + s] = x.b[(size_t)s * x.block + j];
    }
  return y;
}

BlockVec random_vec(int dim, int block, const ExtField& F, uint64_t seed) {
  BlockVec v(dim, block);
  uint64_t s = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
  auto next = [&s]() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  uint32_t p = F.fp().p();
  for (size_t i = 0; i < v.a.size(); ++i) {
    v.a[i] = (uint32_t)(next() % p);
    v.b[i] = (uint32_t)(next() % p);
  }
  return v;
}

}  // namespace e8r::modp
