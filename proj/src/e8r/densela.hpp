#pragma once
// Small dense exact linear algebra over QScalar.
#include "e8r/qscalar.hpp"
#include <vector>

namespace e8r {

using QVec = std::vector<QScalar>;
using QMat = std::vector<QVec>;

int qmat_rank(QMat m);
// least-structure exact solve of A x = b; requires rank(A) == #cols and a
// consistent system (throws otherwise)
QVec qmat_solve(QMat a, QVec b);
QMat qmat_inverse(QMat a);
QScalar qmat_det(QMat a);

}  // namespace e8r
