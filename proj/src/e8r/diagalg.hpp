#pragma once
// The planar diagram calculus on V: cup/cap, trivalent vertices, the
// 5-dimensional algebra End(V tensor V)^{U_q(e8)}, the crossing, and the
// primitive idempotents.
//
// Heavy operators (crossing, square) are never materialized: every element of
// the algebra is a coefficient vector in the basis
//   {full, cupcap, vertical, horizontal, square}
// and products are resolved through exactly computed probe columns. This is
// rigorous because the five realized operators are exact intertwiners, the
// endomorphism space has dimension 5 (character computation), and products of
// intertwiners stay in the span.
#include "e8r/densela.hpp"
#include "e8r/repv.hpp"
#include <functional>

namespace e8r {

using Vec5 = std::array<QScalar, 5>;

enum class Diagram {
  id, cup, cap, tri, tri_inv, y_up, y_down,
  full, cupcap, vertical, horizontal, square, crossing, inv_crossing
};

class DiagAlg {
 public:
  static constexpr int FULL = 0, CUPCAP = 1, VERTICAL = 2, HORIZONTAL = 3, SQUARE = 4;
  using Col = std::map<int, QScalar>;

  explicit DiagAlg(const RepV& rv);

  const RepV& rep() const { return rv_; }

  // realized operators; tri is stored bottom-up (same shape as tri_inv but
  // with the unraised coefficients), square/crossing as coefficient vectors
  const SparseOp& cup() const { return cup_; }
  const SparseOp& cap() const { return cap_; }
  const SparseOp& y_up() const { return yup_; }
  const SparseOp& y_down() const { return ydown_; }
  const SparseOp& tri_inv() const { return tinv_; }
  const SparseOp& cupcap_op() const { return cupcap_; }
  const SparseOp& vertical_op() const { return vertical_; }
  const SparseOp& horizontal_op() const { return horizontal_; }
  const SparseOp& realize(Diagram d) const;

  // scalar constants of the defining relations
  static QScalar loop_value();      // closed loop
  static QScalar bubble_value();    // bubble on an edge
  static QScalar triangle_value();  // triangle reduction coefficient

  // abstract algebra elements
  Vec5 unit() const;
  Vec5 basis_elem(int i) const;
  Vec5 crossing(bool inverse = false) const;
  Vec5 mul(const Vec5& x, const Vec5& y) const;
  const Vec5& table(int i, int j) const { return table_[i][j]; }

  // idempotent order matches highest weights (0, w1, w7, 2w1, w2)
  const std::array<Vec5, 5>& idempotents() const { return idem_; }
  static std::array<QScalar, 5> crossing_eigenvalues();

  QScalar basis_trace(int i) const { return tr5_[i]; }
  QScalar trace(const Vec5& c) const;

  // change of basis to {full, cupcap, vertical, crossing, inv_crossing}
  Vec5 to_crossing_basis(const Vec5& c) const;
  Vec5 from_crossing_basis(const Vec5& c) const;

  // column action of an abstract element
  Col basis_apply(int i, const Col& v) const;
  Col expr_apply(const Vec5& c, const Col& v) const;
  // express a column-action operator in the 5-basis; throws if it does not
  // match on the probe set
  Vec5 solve_in_basis(const std::function<Col(const Col&)>& op) const;

  // relation checks
  std::vector<std::string> check_intertwiners() const;  // empty if all pass
  bool check_triangle() const;          // both mirror images
  bool check_tadpoles() const;
  bool check_reidemeister_one() const;  // all eight curl identities
  bool check_reidemeister_two() const;

  // contraction scalars used by the curl identities
  QScalar cup_through(const Vec5& c) const;  // cup . X = result * cup
  QScalar cap_through(const Vec5& c) const;  // X . cap = result * cap
  QScalar yup_through(const Vec5& c) const;  // X . y_up = result * y_up
  QScalar ydown_through(const Vec5& c) const;

 private:
  const RepV& rv_;
  SparseOp cup_, cap_, tri_, yup_, ydown_, tinv_, full_, cupcap_, vertical_, horizontal_;
  std::vector<std::vector<std::pair<int, QScalar>>> caprow_;  // cap coefficients by row
  std::array<std::array<Vec5, 5>, 5> table_;
  std::array<Vec5, 5> idem_;
  std::array<QScalar, 5> tr5_;
  // scalars: cup.H = ch_*cup, H.cap = hc_*cap, H.yup = hu_*yup, ydown.H = dh_*ydown
  QScalar ch_, hc_, hu_, dh_;
  std::vector<int> probe_cols_;
  std::vector<std::pair<int, int>> probe_pos_;  // (probe column slot, row)
  QMat probe_mat_;                              // |probe_pos_| x 5

  void build_cup_cap();
  void build_vertices();
  void build_endos();
  void build_probes();
  void build_table();
  void build_scalars();
  void build_idempotents();
  QScalar proportionality(const SparseOp& a, const SparseOp& b) const;  // a = r*b
};

const DiagAlg& diag_alg();

}  // namespace e8r
