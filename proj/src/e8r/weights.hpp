#pragma once
// Character-theory utilities: decomposition of tensor powers of the
// 248/249-dim modules into irreducibles (dominant-weight bookkeeping),
// and the Weyl dimension formula. Used as an independent oracle for the
// dimensions of intertwiner spaces.
#include "e8r/roots.hpp"
#include <gmpxx.h>
#include <map>

namespace e8r {

using FWeight = std::array<int, 8>;  // fundamental-weight coordinates

// multiset of irreducibles: dominant highest weight -> multiplicity
using Decomposition = std::map<FWeight, long>;

class CharRing {
 public:
  explicit CharRing(const RootSystem& rs);

  mpz_class dim(const FWeight& lam) const;  // Weyl dimension formula

  // decomposition of V_lam (x) M where M has the given weight multiset
  Decomposition tensor(const FWeight& lam,
                       const std::map<FWeight, long>& mweights) const;
  Decomposition tensor_decomp(const Decomposition& d,
                              const std::map<FWeight, long>& mweights) const;

  const std::map<FWeight, long>& weights_V() const { return wV_; }
  const std::map<FWeight, long>& weights_W() const { return wW_; }

  static mpz_class endo_dim(const Decomposition& d);  // sum of squared mults
  mpz_class total_dim(const Decomposition& d) const;

 private:
  const RootSystem& rs_;
  std::map<FWeight, long> wV_, wW_;
  std::vector<std::array<int, 8>> posroots_;  // simple-root coordinates

  // reflect x (= lam+mu+rho) to the dominant chamber; returns sign or 0
  int dominantize(FWeight& x) const;
};

const CharRing& char_ring();

}  // namespace e8r
