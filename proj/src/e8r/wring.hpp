#pragma once
// The 16-dimensional algebra of U_q(e8) intertwiners on W tensor W.
// Elements are coefficient vectors over the named basis; realized operators
// act column-wise through the diagram calculus on the V-part, and products
// are certified through probe columns exactly as in the V tensor V algebra.
#include "e8r/affinew.hpp"
#include "e8r/diagalg.hpp"
#include "e8r/ratz.hpp"
#include <functional>

namespace e8r {

using QVec16 = std::array<QScalar, 16>;
using Vec16 = std::array<RatZ, 16>;

class WRing {
 public:
  // first five act on the V-V block via the diagram calculus; the rest have
  // at least one trivial (w) leg
  enum Name {
    FULL = 0, CUPCAP, VERTICAL, HORIZONTAL, SQUARE,
    EMPTY,            // identity on w tensor w
    CUPE,             // V tensor V -> w tensor w through the bilinear form
    CAPE,             // w tensor w -> V tensor V
    LEFTID,           // identity on V tensor w
    RIGHTID,          // identity on w tensor V
    SWAP_LR,          // V tensor w -> w tensor V
    SWAP_RL,          // w tensor V -> V tensor w
    YD_L,             // V tensor V -> V tensor w through the trivalent vertex
    YD_R,             // V tensor V -> w tensor V
    YU_L,             // V tensor w -> V tensor V
    YU_R,             // w tensor V -> V tensor V
  };
  static constexpr int n = 16;
  static constexpr int NW = AffineW::dim;   // 249
  static constexpr int NN = NW * NW;        // 62001
  static const char* name(int i);

  using Col = std::map<int, QScalar>;

  explicit WRing(const AffineW& aw);

  const AffineW& affine() const { return aw_; }
  const DiagAlg& diag() const { return da_; }

  static int flat(int x, int y) { return x * NW + y; }

  Col basis_apply(int i, const Col& v) const;
  Col expr_apply(const QVec16& c, const Col& v) const;

  QVec16 unit() const;  // full + leftid + rightid + empty
  QVec16 basis_elem(int i) const;
  QVec16 lift(const Vec5& c) const;  // extend a V-V algebra element by zero
  int theta() const { return theta_; }
  const std::vector<std::pair<int, QScalar>>& cap_embed() const { return capcol_; }
  QVec16 mul(const QVec16& x, const QVec16& y) const;
  Vec16 mul(const Vec16& x, const Vec16& y) const;
  const QVec16& table(int i, int j) const { return table_[i][j]; }

  // express a column-action operator in the basis; throws if it does not lie
  // in the span on the probe set
  QVec16 solve_in_basis(const std::function<Col(const Col&)>& op) const;

  // multiplicity-space blocks in the channels
  // (trivial, omega1, omega7, 2omega1, omega2) with multiplicities 2,3,1,1,1
  struct Channels {
    QMat triv;              // 2x2
    QMat adj;               // 3x3
    std::array<QScalar, 3> scalars;  // omega7, 2omega1, omega2
  };
  Channels channel_blocks(const QVec16& c) const;
  static const std::array<long, 5>& channel_dims();  // {1,248,3875,27000,30380}
  long rank_of(const QVec16& c) const;  // Schur: sum of block ranks times dims
  QScalar trace_of(const QVec16& c) const;

  std::vector<std::string> check_intertwiners() const;  // vs generators 1..8
  const std::vector<int>& probe_cols() const { return probe_cols_; }

 private:
  const AffineW& aw_;
  const DiagAlg& da_;
  std::array<std::array<QVec16, 16>, 16> table_;
  std::vector<int> probe_cols_;
  std::vector<std::pair<int, int>> probe_pos_;
  QMat probe_mat_;
  std::vector<std::pair<int, QScalar>> capcol_;  // cap embedding on W flat
  int theta_ = -1;                               // index of the highest root

  void build_probes();
  void build_table();
};

const WRing& w_ring();

}  // namespace e8r
