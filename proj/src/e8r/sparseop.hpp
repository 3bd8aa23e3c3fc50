#pragma once
// Sparse linear maps between tensor products of finite-dimensional spaces,
// entries in QScalar. Column-major storage; flat indices are row-major over
// the factor list (leftmost factor slowest).
#include "e8r/qscalar.hpp"
#include <map>
#include <vector>

namespace e8r {

class SparseOp {
 public:
  std::vector<int> dom, cod;  // factor dimensions
  // cols[c] = sorted (row, value), no zero values
  std::vector<std::vector<std::pair<int, QScalar>>> cols;

  SparseOp() = default;
  SparseOp(std::vector<int> dom_, std::vector<int> cod_)
      : dom(std::move(dom_)), cod(std::move(cod_)), cols(size_of(dom)) {}

  static int size_of(const std::vector<int>& dims) {
    int s = 1;
    for (int d : dims) s *= d;
    return s;
  }
  int dom_size() const { return size_of(dom); }
  int cod_size() const { return size_of(cod); }

  static SparseOp identity(const std::vector<int>& dims);

  void add_to(int r, int c, const QScalar& v);  // accumulate, keeps order
  QScalar entry(int r, int c) const;

  SparseOp compose(const SparseOp& B) const;  // this after B
  SparseOp tensor(const SparseOp& B) const;
  SparseOp operator+(const SparseOp& o) const;
  SparseOp operator-(const SparseOp& o) const;
  SparseOp scaled(const QScalar& s) const;
  SparseOp transpose() const;
  bool operator==(const SparseOp& o) const { return dom == o.dom && cod == o.cod && cols == o.cols; }
  bool operator!=(const SparseOp& o) const { return !(*this == o); }
  bool is_zero() const;

  size_t nnz() const;
  // apply to a sparse column vector over the domain
  std::map<int, QScalar> apply(const std::map<int, QScalar>& v) const;

  // reinterpret factor structure (sizes must multiply to the same totals)
  SparseOp reshaped(std::vector<int> dom_, std::vector<int> cod_) const;
};

}  // namespace e8r
