#pragma once
// The 249-dimensional family W_z: constants c_0..c_8, the affine generators
// e_0/f_0/k_0 alongside the embedded finite-type action, and relation checks
// for the full affine algebra. z-dependence lives in the grading: e_0 carries
// degree +1 and f_0 degree -1, so generators are stored at z = 1 and every
// relation is degree-homogeneous.
#include "e8r/densela.hpp"
#include "e8r/repv.hpp"

namespace e8r {

struct AffineConstants {
  std::array<QScalar, 9> c;  // c_0..c_8
  static AffineConstants solve();
};

class AffineW {
 public:
  static constexpr int dim = 249;
  static constexpr int w_index = 248;

  explicit AffineW(const RepV& rv, const QScalar& kappa = QScalar::kappa());

  const RepV& rep() const { return rv_; }
  const QScalar& kappa() const { return kappa_; }
  const AffineConstants& constants() const { return c_; }

  // kind: 'e','f','k','K'; i in 0..8
  const SparseOp& gen(char kind, int i) const;
  static int z_degree(char kind, int i) {
    return i == 0 ? (kind == 'e') - (kind == 'f') : 0;
  }

  // pairing <alpha_i, alpha_j> over the affine index set
  int affine_cartan(int i, int j) const;

  // all defining relations over indices 0..8, plus the central element
  // k_0 k_1^2 k_2^3 ... acting as the identity; empty if all pass
  std::vector<std::string> relation_report() const;

 private:
  const RepV& rv_;
  QScalar kappa_;
  AffineConstants c_;
  std::array<SparseOp, 9> e_, f_, k_, kinv_;

  void build();
};

const AffineW& affine_w();  // shared instance at kappa^2 = c_0

}  // namespace e8r
