#include "e8r/densela.hpp"
#include <stdexcept>

namespace e8r {

int qmat_rank(QMat m) {
  if (m.empty()) return 0;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) { p = r; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    QScalar inv = m[rank][c].inv();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      QScalar f = m[r][c] * inv;
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

QVec qmat_solve(QMat a, QVec b) {
  int rows = (int)a.size(), cols = rows ? (int)a[0].size() : 0;
  if ((int)b.size() != rows) throw std::runtime_error("qmat_solve: shape mismatch");
  std::vector<int> pivcol;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][c].is_zero()) { p = r; break; }
    if (p < 0) continue;
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    QScalar inv = a[rank][c].inv();
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      QScalar f = a[r][c] * inv;
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
      b[r] -= f * b[rank];
    }
    pivcol.push_back(c);
    ++rank;
  }
  if (rank != cols) throw std::runtime_error("qmat_solve: rank deficient");
  for (int r = rank; r < rows; ++r)
    if (!b[r].is_zero()) throw std::runtime_error("qmat_solve: inconsistent system");
  QVec x(cols);
  for (int r = 0; r < rank; ++r) x[pivcol[r]] = b[r] / a[r][pivcol[r]];
  return x;
}

QMat qmat_inverse(QMat a) {
  int n = (int)a.size();
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i) inv[i][i] = QScalar(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) { p = r; break; }
    if (p < 0) throw std::runtime_error("qmat_inverse: singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    QScalar d = a[c][c].inv();
    for (int k = 0; k < n; ++k) { a[c][k] *= d; inv[c][k] *= d; }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      QScalar f = a[r][c];
      for (int k = 0; k < n; ++k) { a[r][k] -= f * a[c][k]; inv[r][k] -= f * inv[c][k]; }
    }
  }
  return inv;
}

QScalar qmat_det(QMat a) {
  int n = (int)a.size();
  QScalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) { p = r; break; }
    if (p < 0) return QScalar();
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    QScalar inv = a[c][c].inv();
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      QScalar f = a[r][c] * inv;
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace e8r
