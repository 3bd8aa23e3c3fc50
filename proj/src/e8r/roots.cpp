#include "e8r/roots.hpp"
#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace e8r {

CartanData::CartanData() {
  auto link = [&](int a, int b) { A[a][b] = A[b][a] = 1; };
  link(0, 1);
  for (int i = 1; i < 7; ++i) link(i, i + 1);
  link(5, 8);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) C[i][j] = (i == j ? 2 : 0) - A[i][j];
  // BFS distance to node 5
  dist5.fill(-1);
  dist5[5] = 0;
  std::vector<int> queue{5};
  for (size_t h = 0; h < queue.size(); ++h)
    for (int j = 0; j < 9; ++j)
      if (A[queue[h]][j] && dist5[j] < 0) {
        dist5[j] = dist5[queue[h]] + 1;
        queue.push_back(j);
      }
}

void RootSystem::build_roots() {
  std::set<Root> pos;
  for (int i = 1; i <= 8; ++i) pos.insert(simple(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Root> add;
    for (const Root& b : pos)
      for (int i = 1; i <= 8; ++i) {
        Root c = b + simple(i);
        if (inner(b, simple(i)) == -1 && !pos.count(c)) add.push_back(c);
      }
    for (const Root& c : add)
      if (pos.insert(c).second) grew = true;
  }
  roots_.clear();
  for (const Root& r : pos) {
    roots_.push_back(r);
    roots_.push_back(-r);
  }
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (size_t i = 0; i < roots_.size(); ++i) idx_[roots_[i]] = (int)i;
  highest_ = roots_.back();
}

int RootSystem::index(const Root& r) const {
  auto it = idx_.find(r);
  return it == idx_.end() ? -1 : it->second;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) s += a[i] * cd_.C[i + 1][j + 1] * b[j];
  return s;
}

int RootSystem::pairing(int i, const Root& v) const {
  int s = 0;
  for (int j = 0; j < 8; ++j) s += cd_.C[i][j + 1] * v[j];
  return s;
}

int RootSystem::epsilon(const Root& a, const Root& b) const {
  // edges i<j with C_ij = -1 among nodes 1..8
  // exponents are the coordinates of the arguments in the simple-root basis
  // (with the Cartan pairing instead, the stated cocycle identity fails)
  static const int edges[7][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 8}, {6, 7}};
  int par = 0;
  for (const auto& e : edges) par += a[e[0] - 1] * b[e[1] - 1];
  return (par % 2 == 0) ? 1 : -1;
}

void RootSystem::build_triples() {
  const int n = (int)roots_.size();
  // collect triples
  for (int bi = 0; bi < n; ++bi)
    for (int ci = 0; ci < n; ++ci) {
      int di = index(-(roots_[bi] + roots_[ci]));
      if (di >= 0) triples_.push_back({bi, ci, di, -1});
    }
  for (size_t t = 0; t < triples_.size(); ++t)
    triple_idx_[{triples_[t].b, triples_[t].c}] = (int)t;
  // longest path in the DAG of moves
  std::function<int(int)> ell = [&](int t) -> int {
    TripleZero& tr = triples_[t];
    if (tr.ell >= 0) return tr.ell;
    tr.ell = -2;  // in progress: cycle guard
    int best = 0;
    const Root &b = roots_[tr.b], &c = roots_[tr.c];
    for (int i = 1; i <= 8; ++i) {
      Root ai = simple(i);
      // (b+ai, c-ai, d), (b, c+ai, d-ai), (b+ai, c, d-ai)
      const Root succ[3][2] = {{b + ai, c - ai}, {b, c + ai}, {b + ai, c}};
      for (const auto& s : succ) {
        int i1 = index(s[0]), i2 = index(s[1]);
        if (i1 < 0 || i2 < 0) continue;
        if (!is_root(-(s[0] + s[1]))) continue;
        auto it = triple_idx_.find({i1, i2});
        if (it == triple_idx_.end()) continue;
        if (triples_[it->second].ell == -2)
          throw std::runtime_error("triple move relation has a cycle");
        best = std::max(best, 1 + ell(it->second));
      }
    }
    tr.ell = best;
    max_ell_ = std::max(max_ell_, best);
    return best;
  };
  for (size_t t = 0; t < triples_.size(); ++t) ell((int)t);
}

int RootSystem::triple_ell(int bi, int ci) const {
  auto it = triple_idx_.find({bi, ci});
  return it == triple_idx_.end() ? -1 : triples_[it->second].ell;
}

RootSystem::RootSystem() {
  build_roots();
  build_triples();
}

static std::string cache_text(const RootSystem& rs) {
  std::ostringstream os;
  os << "e8 roots " << rs.roots().size() << " triples " << rs.triples().size() << "\n";
  for (const Root& r : rs.roots()) {
    for (int x : r) os << x << " ";
    os << RootSystem::height(r) << "\n";
  }
  for (const auto& t : rs.triples()) {
    const Root sum = rs.roots()[t.b] + rs.roots()[t.c] + rs.roots()[t.d];
    (void)sum;
    const Root& b = rs.roots()[t.b];
    const Root& c = rs.roots()[t.c];
    for (int x : b) os << x << " ";
    for (int x : c) os << x << " ";
    os << RootSystem::height(b) + RootSystem::height(c) << " " << t.ell << "\n";
  }
  return os.str();
}

void RootSystem::write_cache(const std::string& path) const {
  std::ofstream f(path);
  f << cache_text(*this);
}

bool RootSystem::matches_cache(const std::string& path) const {
  std::ifstream f(path);
  if (!f) return false;
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str() == cache_text(*this);
}

const RootSystem& root_system() {
  static const RootSystem rs;
  return rs;
}

}  // namespace e8r
