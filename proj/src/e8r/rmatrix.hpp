#pragma once
// The spectral R-matrix on W_z tensor W_z', derived from scratch: the
// intertwining equations for the affine generators e_0 and f_0 cut the
// 16-dimensional space of finite-type intertwiners down to a line, and the
// highest-weight normalization fixes the scale. Coefficients are rational
// functions of the spectral ratio.
#include "e8r/wring.hpp"

namespace e8r {

struct DeriveInfo {
  int probes = 0;      // probe columns used
  int equations = 0;   // scalar equations harvested and verified
  int rank = 0;        // rank of the system over the rational function field
  ZPoly certificate;   // gcd of independent 15x15 minors after removing the
                       // degeneration factors q^{+-a} z - 1; a monomial in z
};

class RMatrix {
 public:
  explicit RMatrix(const WRing& wr);

  const WRing& ring() const { return wr_; }
  // coefficients over the basis, normalized to 1 on the highest weight vector;
  // the variable is the ratio of the two spectral parameters
  const Vec16& coeffs() const { return c_; }
  const DeriveInfo& info() const { return info_; }

  static Vec16 closed_form();          // independent closed-form expressions
  QVec16 at(const QScalar& z0) const;  // evaluate all coefficients

  // 90-degree rotation of the basis by the dashed cup and cap: entry [j] is
  // the expansion of the rotated j-th basis element. The counterclockwise
  // direction bends the first input up by the cup; the clockwise direction
  // bends the second input by the cap.
  std::array<QVec16, 16> rotation(bool clockwise = false) const;

 private:
  const WRing& wr_;
  Vec16 c_;
  DeriveInfo info_;
  void derive();
};

const RMatrix& r_matrix();

// sum of monomials in q and z, e.g. "q^58 z^2-q^56 z^2+2 q^14 z-1"
ZPoly parse_qz(const std::string& s);

}  // namespace e8r
