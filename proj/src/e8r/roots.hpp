#pragma once
// E8 root system in the simple-root basis, with the sign cocycle and
// zero-sum triples carrying chain lengths.
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace e8r {

using Root = std::array<int, 8>;  // coordinates in alpha_1..alpha_8

inline Root operator+(const Root& a, const Root& b) {
  Root r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
  return r;
}
inline Root operator-(const Root& a) {
  Root r;
  for (int i = 0; i < 8; ++i) r[i] = -a[i];
  return r;
}
inline Root operator-(const Root& a, const Root& b) { return a + (-b); }

struct CartanData {
  // index set {0..8}; node 0 attached to node 1, node 8 attached to node 5
  int A[9][9] = {};
  int C[9][9] = {};
  std::array<int, 9> marks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
  std::array<int, 9> dist5;  // graph distance to node 5
  CartanData();
};

struct TripleZero {
  int b, c, d;  // root indices; roots sum to zero
  int ell;
};

class RootSystem {
 public:
  RootSystem();

  const CartanData& cartan() const { return cd_; }
  const std::vector<Root>& roots() const { return roots_; }  // canonical order
  int index(const Root& r) const;        // -1 if not a root
  bool is_root(const Root& r) const { return index(r) >= 0; }
  int neg_index(int i) const { return neg_; }

  static int height(const Root& r) {
    int s = 0;
    for (int x : r) s += x;
    return s;
  }
  int inner(const Root& a, const Root& b) const;
  // <alpha_i, v> for i in 1..8 (argument 0-based: i-1)
  int pairing(int i, const Root& v) const;
  int epsilon(const Root& a, const Root& b) const;  // +1 or -1

  Root simple(int i) const {  // i in 1..8
    Root r{};
    r[i - 1] = 1;
    return r;
  }
  const Root& highest() const { return highest_; }
  Root alpha0() const { return -highest_; }

  const std::vector<TripleZero>& triples() const { return triples_; }
  int triple_ell(int bi, int ci) const;  // -1 if (b,c) is not a triple
  int max_ell() const { return max_ell_; }

  void write_cache(const std::string& path) const;
  // returns false on mismatch/corruption
  bool matches_cache(const std::string& path) const;

 private:
  CartanData cd_;
  std::vector<Root> roots_;
  std::map<Root, int> idx_;
  Root highest_;
  int neg_ = 0;  // unused marker
  std::vector<TripleZero> triples_;
  std::map<std::pair<int, int>, int> triple_idx_;
  int max_ell_ = 0;

  void build_roots();
  void build_triples();
};

const RootSystem& root_system();  // shared singleton

}  // namespace e8r
