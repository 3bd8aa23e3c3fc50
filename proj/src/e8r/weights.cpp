#include "e8r/weights.hpp"
#include <stdexcept>

namespace e8r {

CharRing::CharRing(const RootSystem& rs) : rs_(rs) {
  for (const Root& r : rs.roots()) {
    if (RootSystem::height(r) > 0) posroots_.push_back(r);
    FWeight w;
    for (int i = 1; i <= 8; ++i) w[i - 1] = rs.pairing(i, r);
    wV_[w] += 1;
  }
  wV_[FWeight{}] += 8;
  wW_ = wV_;
  wW_[FWeight{}] += 1;
}

mpz_class CharRing::dim(const FWeight& lam) const {
  mpz_class num = 1, den = 1;
  for (const auto& b : posroots_) {
    long n = 0, d = 0;
    for (int i = 0; i < 8; ++i) {
      n += (long)(lam[i] + 1) * b[i];
      d += b[i];
    }
    num *= n;
    den *= d;
  }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::runtime_error("Weyl dimension not integral");
  return q;
}

int CharRing::dominantize(FWeight& x) const {
  const auto& C = rs_.cartan().C;
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < 8; ++i) {
      if (x[i] == 0) return 0;
      if (x[i] < 0) { neg = i; break; }
    }
    if (neg < 0) return sign;
    int c = x[neg];
    for (int j = 0; j < 8; ++j) x[j] -= c * C[neg + 1][j + 1];
    sign = -sign;
  }
}

Decomposition CharRing::tensor(const FWeight& lam,
                               const std::map<FWeight, long>& mweights) const {
  Decomposition out;
  for (const auto& [mu, mult] : mweights) {
    FWeight x;
    for (int i = 0; i < 8; ++i) x[i] = lam[i] + mu[i] + 1;  // + rho
    int s = dominantize(x);
    if (s == 0) continue;
    FWeight nu;
    for (int i = 0; i < 8; ++i) nu[i] = x[i] - 1;
    out[nu] += s * mult;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

Decomposition CharRing::tensor_decomp(const Decomposition& d,
                                      const std::map<FWeight, long>& mweights) const {
  Decomposition out;
  for (const auto& [lam, mult] : d) {
    Decomposition part = tensor(lam, mweights);
    for (const auto& [nu, m] : part) out[nu] += mult * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

mpz_class CharRing::endo_dim(const Decomposition& d) {
  mpz_class s = 0;
  for (const auto& [nu, m] : d) s += mpz_class(m) * m;
  return s;
}

mpz_class CharRing::total_dim(const Decomposition& d) const {
  mpz_class s = 0;
  for (const auto& [nu, m] : d) s += m * dim(nu);
  return s;
}

const CharRing& char_ring() {
  static const CharRing cr(root_system());
  return cr;
}

}  // namespace e8r
