#include "e8r/sparseop.hpp"
#include <algorithm>
#include <stdexcept>

namespace e8r {

SparseOp SparseOp::identity(const std::vector<int>& dims) {
  SparseOp r(dims, dims);
  for (int i = 0; i < r.dom_size(); ++i) r.cols[i].emplace_back(i, QScalar(1));
  return r;
}

void SparseOp::add_to(int r, int c, const QScalar& v) {
  if (v.is_zero()) return;
  auto& col = cols[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
      [](const std::pair<int, QScalar>& p, int x) { return p.first < x; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second.is_zero()) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

QScalar SparseOp::entry(int r, int c) const {
  const auto& col = cols[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
      [](const std::pair<int, QScalar>& p, int x) { return p.first < x; });
  if (it != col.end() && it->first == r) return it->second;
  return QScalar();
}

SparseOp SparseOp::compose(const SparseOp& B) const {
  if (B.cod_size() != dom_size()) throw std::runtime_error("SparseOp: compose shape mismatch");
  SparseOp R(B.dom, cod);
  std::map<int, QAccum> acc;
  for (int c = 0; c < B.dom_size(); ++c) {
    acc.clear();
    for (const auto& [k, bv] : B.cols[c])
      for (const auto& [r, av] : cols[k]) acc[r].add(av * bv);
    auto& col = R.cols[c];
    col.reserve(acc.size());
    for (auto& [r, s] : acc) {
      QScalar v = s.total();
      if (!v.is_zero()) col.emplace_back(r, std::move(v));
    }
  }
  return R;
}

SparseOp SparseOp::tensor(const SparseOp& B) const {
  std::vector<int> nd = dom, nc = cod;
  nd.insert(nd.end(), B.dom.begin(), B.dom.end());
  nc.insert(nc.end(), B.cod.begin(), B.cod.end());
  SparseOp R(nd, nc);
  int bd = B.dom_size(), bc = B.cod_size();
  for (int c1 = 0; c1 < dom_size(); ++c1)
    for (int c2 = 0; c2 < bd; ++c2) {
      auto& col = R.cols[c1 * bd + c2];
      col.reserve(cols[c1].size() * B.cols[c2].size());
      for (const auto& [r1, v1] : cols[c1])
        for (const auto& [r2, v2] : B.cols[c2])
          col.emplace_back(r1 * bc + r2, v1 * v2);
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  return R;
}

SparseOp SparseOp::operator+(const SparseOp& o) const {
  if (dom != o.dom || cod != o.cod) throw std::runtime_error("SparseOp: add shape mismatch");
  SparseOp R(dom, cod);
  for (int c = 0; c < dom_size(); ++c) {
    auto& col = R.cols[c];
    const auto& a = cols[c];
    const auto& b = o.cols[c];
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) col.push_back(a[i++]);
      else if (i == a.size() || b[j].first < a[i].first) col.push_back(b[j++]);
      else {
        QScalar v = a[i].second + b[j].second;
        if (!v.is_zero()) col.emplace_back(a[i].first, std::move(v));
        ++i; ++j;
      }
    }
  }
  return R;
}

SparseOp SparseOp::operator-(const SparseOp& o) const { return *this + o.scaled(QScalar(-1)); }

SparseOp SparseOp::scaled(const QScalar& s) const {
  SparseOp R(dom, cod);
  if (s.is_zero()) return R;
  for (int c = 0; c < dom_size(); ++c) {
    R.cols[c].reserve(cols[c].size());
    for (const auto& [r, v] : cols[c]) {
      QScalar w = v * s;
      if (!w.is_zero()) R.cols[c].emplace_back(r, std::move(w));
    }
  }
  return R;
}

SparseOp SparseOp::transpose() const {
  SparseOp R(cod, dom);
  for (int c = 0; c < dom_size(); ++c)
    for (const auto& [r, v] : cols[c]) R.cols[r].emplace_back(c, v);
  for (auto& col : R.cols)
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return R;
}

bool SparseOp::is_zero() const {
  for (const auto& col : cols)
    if (!col.empty()) return false;
  return true;
}

size_t SparseOp::nnz() const {
  size_t n = 0;
  for (const auto& col : cols) n += col.size();
  return n;
}

std::map<int, QScalar> SparseOp::apply(const std::map<int, QScalar>& v) const {
  std::map<int, QAccum> acc;
  for (const auto& [c, x] : v)
    for (const auto& [r, a] : cols[c]) acc[r].add(a * x);
  std::map<int, QScalar> out;
  for (auto& [r, s] : acc) {
    QScalar w = s.total();
    if (!w.is_zero()) out.emplace(r, std::move(w));
  }
  return out;
}

SparseOp SparseOp::reshaped(std::vector<int> dom_, std::vector<int> cod_) const {
  if (size_of(dom_) != dom_size() || size_of(cod_) != cod_size())
    throw std::runtime_error("SparseOp: reshape size mismatch");
  SparseOp R = *this;
  R.dom = std::move(dom_);
  R.cod = std::move(cod_);
  return R;
}

}  // namespace e8r
