#pragma once
// The 248-dimensional representation V: generator matrices, the invariant
// bilinear form B and trilinear form T, and the invariance checker.
#include "e8r/roots.hpp"
#include "e8r/sparseop.hpp"
#include <array>

namespace e8r {

// multilinear form on V^{tensor arity}: sparse entry map
struct FormTensor {
  int arity;  // 2 or 3
  std::map<std::array<int, 3>, QScalar> ent;  // unused slots = -1

  QScalar at(int i, int j, int k = -1) const {
    auto it = ent.find({i, j, k});
    return it == ent.end() ? QScalar() : it->second;
  }
  void set(int i, int j, int k, const QScalar& v) {
    if (!v.is_zero()) ent[{i, j, k}] = v;
  }
};

class RepV {
 public:
  static constexpr int dim = 248;

  explicit RepV(const RootSystem& rs);

  const RootSystem& rs() const { return rs_; }
  int u_index(int j) const { return 240 + j - 1; }  // j in 1..8
  // weight of basis vector (zero vector for u_j)
  const Root& weight(int idx) const { return weights_[idx]; }

  // generators; kind: 'e','f','k','K' (K = k inverse)
  const SparseOp& gen(char kind, int i) const;

  const FormTensor& form_B() const { return B_; }
  const FormTensor& form_T() const { return T_; }

  // value of T on a zero-sum root triple given by indices
  QScalar T_root(int bi, int ci, int di) const;

  // t composed with (per-site operators); sites given as row-major maps
  FormTensor form_compose(const FormTensor& t,
                          const std::vector<const SparseOp*>& site_ops) const;

  // invariance of a form under all e_i, f_i, k_i; returns list of violations
  std::vector<std::string> check_invariance(const FormTensor& t) const;

  // defining-relation checks for generators indexed 1..8 on V
  std::vector<std::string> serre_check() const;

 private:
  const RootSystem& rs_;
  std::vector<Root> weights_;
  std::array<SparseOp, 8> e_, f_, k_, kinv_;
  std::array<SparseOp, 8> eT_, fT_, kT_, kinvT_;  // transposes (row access)
  FormTensor B_, T_;

  void build_generators();
  void build_B();
  void build_T();
  const SparseOp& genT(char kind, int i) const;
};

const RepV& rep_v();

}  // namespace e8r
