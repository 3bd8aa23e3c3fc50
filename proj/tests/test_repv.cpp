#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "e8r/repv.hpp"

using namespace e8r;

TEST_CASE("generator examples and weight grading") {
  const RepV& rv = rep_v();
  const RootSystem& rs = rv.rs();
  for (int i = 1; i <= 8; ++i) {
    int nb = rs.index(-rs.simple(i));
    CHECK(rv.gen('e', i).entry(rv.u_index(i), nb) == QScalar(1));
    CHECK(rv.gen('f', i).entry(rv.u_index(i), rs.index(rs.simple(i))) == QScalar(-1));
    for (int j = 1; j <= 8; ++j)
      CHECK(rv.gen('k', i).entry(rv.u_index(j), rv.u_index(j)) == QScalar(1));
    // weight shifts
    for (int c = 0; c < RepV::dim; ++c) {
      for (const auto& [r, v] : rv.gen('e', i).cols[c])
        CHECK(rv.weight(r) == rv.weight(c) + rs.simple(i));
      for (const auto& [r, v] : rv.gen('f', i).cols[c])
        CHECK(rv.weight(r) == rv.weight(c) - rs.simple(i));
      for (const auto& [r, v] : rv.gen('k', i).cols[c]) CHECK(r == c);
    }
  }
}

TEST_CASE("defining relations hold on V") {
  auto bad = rep_v().serre_check();
  for (const auto& s : bad) MESSAGE(s);
  CHECK(bad.empty());
}

TEST_CASE("bilinear form entries and invariance") {
  const RepV& rv = rep_v();
  const RootSystem& rs = rv.rs();
  int a1 = rs.index(rs.simple(1)), na1 = rs.index(-rs.simple(1));
  CHECK(rv.form_B().at(a1, na1) ==
        QScalar(RatQ(Laurent::mono(rs.epsilon(rs.simple(1), rs.simple(1)), 0))));
  for (int i = 1; i <= 8; ++i)
    CHECK(rv.form_B().at(rv.u_index(i), rv.u_index(i)) == QScalar::qnum(2));
  CHECK(rv.form_B().at(a1, a1).is_zero());
  auto bad = rv.check_invariance(rv.form_B());
  for (const auto& s : bad) MESSAGE(s);
  CHECK(bad.empty());
}

TEST_CASE("B is nondegenerate") {
  const RepV& rv = rep_v();
  const RootSystem& rs = rv.rs();
  // root block is an antidiagonal with unit-monomial entries: always full rank;
  // the u-block is the q-Cartan matrix, check its determinant is nonzero
  std::vector<std::vector<QScalar>> m(8, std::vector<QScalar>(8));
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) m[i - 1][j - 1] = rv.form_B().at(rv.u_index(i), rv.u_index(j));
  QScalar det(1);
  for (int c = 0; c < 8; ++c) {
    int p = -1;
    for (int r = c; r < 8; ++r)
      if (!m[r][c].is_zero()) { p = r; break; }
    REQUIRE(p >= 0);
    if (p != c) { std::swap(m[p], m[c]); det = -det; }
    det *= m[c][c];
    QScalar pi = m[c][c].inv();
    for (int r = c + 1; r < 8; ++r) {
      if (m[r][c].is_zero()) continue;
      QScalar f = m[r][c] * pi;
      for (int k = c; k < 8; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CHECK(!det.is_zero());
  (void)rs;
}

TEST_CASE("trilinear form printed patterns") {
  const RepV& rv = rep_v();
  const RootSystem& rs = rv.rs();
  const auto& d5 = rs.cartan().dist5;
  QScalar qq = QScalar::q(1) - QScalar::q(-1);
  CHECK(d5[5] == 0);
  CHECK(d5[8] == 1);
  // T(u_5, v_a5, v_{-a5}) = 2q
  int a5 = rs.index(rs.simple(5)), na5 = rs.index(-rs.simple(5));
  CHECK(rv.form_T().at(rv.u_index(5), a5, na5) == QScalar(2) * QScalar::q(1));
  for (int i = 1; i <= 8; ++i) {
    QScalar dfac = QScalar::q(d5[i]) + QScalar::q(-d5[i]);
    int ai = rs.index(rs.simple(i)), nai = rs.index(-rs.simple(i));
    int ui = rv.u_index(i);
    CHECK(rv.form_T().at(ui, ai, nai) == QScalar::q(1) * dfac);
    CHECK(rv.form_T().at(ui, nai, ai) == -QScalar::q(1) * dfac);
    CHECK(rv.form_T().at(ai, ui, nai) == -QScalar::q(-1) * dfac);
    CHECK(rv.form_T().at(ai, nai, ui) == QScalar::q(1) * dfac);
    CHECK(rv.form_T().at(nai, ui, ai) == QScalar::q(3) * dfac);
    CHECK(rv.form_T().at(nai, ai, ui) == -QScalar::q(1) * dfac);
    CHECK(rv.form_T().at(ui, ui, ui) == qq * QScalar::qnum(2) * dfac);
  }
  // u^3 with two equal indices: coefficient is -[d(k)] when k is farther from
  // node 5 than i, +[d(k)] when nearer ([0] = 0 when k is node 5 itself)
  CHECK(rv.form_T().at(rv.u_index(4), rv.u_index(4), rv.u_index(5)).is_zero());
  CHECK(rv.form_T().at(rv.u_index(5), rv.u_index(5), rv.u_index(4)) == -qq);
  CHECK(rv.form_T().at(rv.u_index(1), rv.u_index(1), rv.u_index(2)) == qq * QScalar::qnum(3));
}

TEST_CASE("chain length is graded along moves in the base region") {
  // invariance of T forces the chain length to drop by exactly one along
  // every move whose endpoints both have first root positive, last negative
  const RootSystem& rs = root_system();
  auto in_base = [&](const Root& b, const Root& c) {
    Root d{};
    for (int x = 0; x < 8; ++x) d[x] = -b[x] - c[x];
    return RootSystem::height(b) > 0 && RootSystem::height(d) < 0;
  };
  int edges = 0;
  for (const auto& t : rs.triples()) {
    const Root &b = rs.roots()[t.b], &c = rs.roots()[t.c];
    if (!in_base(b, c)) continue;
    for (int i = 1; i <= 8; ++i) {
      Root ai = rs.simple(i);
      const Root succ[3][2] = {{b + ai, c - ai}, {b, c + ai}, {b + ai, c}};
      for (const auto& s : succ) {
        int i1 = rs.index(s[0]), i2 = rs.index(s[1]);
        if (i1 < 0 || i2 < 0 || rs.triple_ell(i1, i2) < 0) continue;
        if (!in_base(s[0], s[1])) continue;
        CHECK(rs.triple_ell(i1, i2) == t.ell - 1);
        ++edges;
      }
    }
  }
  CHECK(edges == 12096);
  CHECK(rs.max_ell() == 44);
}

TEST_CASE("trilinear form root-entry exponent symmetry") {
  const RepV& rv = rep_v();
  // every pure root entry is a signed monomial; the exponent multiset is
  // mirror-symmetric about 3/2 and each exponent carries balanced signs
  std::map<int, std::pair<int, int>> dist;  // exponent -> (plus, minus)
  for (const auto& [k, v] : rv.form_T().ent) {
    if (k[0] >= 240 || k[1] >= 240 || k[2] >= 240) continue;
    REQUIRE(v.b.is_zero());
    REQUIRE(v.a.den.t.size() == 1);
    REQUIRE(v.a.num.t.size() == 1);
    int e = v.a.num.t[0].first - v.a.den.t[0].first;
    auto& d = dist[e];
    (v.a.num.t[0].second > 0 ? d.first : d.second) += 1;
  }
  int lo = dist.begin()->first, hi = dist.rbegin()->first;
  CHECK(lo == -41);
  CHECK(hi == 44);
  int total = 0;
  for (const auto& [e, d] : dist) {
    CHECK(d.first == d.second);
    auto it = dist.find(3 - e);
    REQUIRE(it != dist.end());
    CHECK(it->second == d);
    total += d.first + d.second;
  }
  CHECK(total == 13440);
}

TEST_CASE("trilinear form invariance") {
  const RepV& rv = rep_v();
  auto bad = rv.check_invariance(rv.form_T());
  for (const auto& s : bad) MESSAGE(s);
  CHECK(bad.empty());
  // zero form is invariant
  FormTensor z; z.arity = 3;
  CHECK(rv.check_invariance(z).empty());
}
