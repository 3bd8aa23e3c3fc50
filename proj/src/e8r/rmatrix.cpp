#include "e8r/rmatrix.hpp"
#include <cctype>
#include <stdexcept>

namespace e8r {

namespace {
constexpr int NW = 249;
constexpr int WI = 248;

RatQ qn(int n) { return RatQ::qnum(n); }

using Col = WRing::Col;
// one scalar equation: sum_i (m[i].first + u*m[i].second) c_i = 0
using EqRow = std::array<std::pair<QScalar, QScalar>, 16>;

void add_entry(Col& m, int r, const QScalar& v) {
  auto it = m.find(r);
  if (it == m.end()) m.emplace(r, v);
  else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

// (A tensor B) applied to a sparse column over W tensor W
Col tensor_apply(const SparseOp& a, const SparseOp& b, const Col& v) {
  Col out;
  for (const auto& [c, x] : v) {
    int c1 = c / NW, c2 = c % NW;
    for (const auto& [r1, v1] : a.cols[c1])
      for (const auto& [r2, v2] : b.cols[c2]) add_entry(out, r1 * NW + r2, v1 * v2 * x);
  }
  return out;
}

// numeric model of the coefficient field at a rational q with kappa adjoined
struct NK {
  mpq_class a, b;
  bool is_zero() const { return a == 0 && b == 0; }
};

struct NKField {
  mpq_class q0, c0;
  explicit NKField(const mpq_class& q) : q0(q), c0(QScalar::c0().eval(q)) {}
  NK eval(const QScalar& x) const { return {x.a.eval(q0), x.b.eval(q0)}; }
  NK mul(const NK& x, const NK& y) const {
    return {x.a * y.a + x.b * y.b * c0, x.a * y.b + x.b * y.a};
  }
  NK inv(const NK& x) const {
    mpq_class d = x.a * x.a - x.b * x.b * c0;
    if (d == 0) throw std::runtime_error("rmatrix: numeric field degenerate");
    return {x.a / d, -x.b / d};
  }
  NK sub(const NK& x, const NK& y) const { return {x.a - y.a, x.b - y.b}; }
};

// incremental numeric row reduction to pick independent equations
struct NumRref {
  const NKField& f;
  std::vector<std::array<NK, 16>> rows;
  std::vector<int> pivots;
  explicit NumRref(const NKField& fld) : f(fld) {}
  bool would_increase(std::array<NK, 16> r) {
    for (size_t k = 0; k < rows.size(); ++k) {
      const NK& lead = r[pivots[k]];
      if (lead.is_zero()) continue;
      NK fac = f.mul(lead, f.inv(rows[k][pivots[k]]));
      for (int j = 0; j < 16; ++j) r[j] = f.sub(r[j], f.mul(fac, rows[k][j]));
    }
    for (int j = 0; j < 16; ++j)
      if (!r[j].is_zero()) {
        rows.push_back(r);
        pivots.push_back(j);
        return true;
      }
    return false;
  }
};

ZPoly zfac(int a) {  // q^a z - 1
  return {QScalar(-1), QScalar::q(a)};
}

ZPoly zmono(int k) {
  ZPoly p(k + 1);
  p[k] = QScalar(1);
  return p;
}

RatZ make_rz(const QScalar& pre, ZPoly num, const std::vector<int>& dens) {
  ZPoly den{QScalar(1)};
  for (int a : dens) den = zp_mul(den, zfac(a));
  return RatZ(zp_scale(std::move(num), pre), std::move(den));
}
}  // namespace

ZPoly parse_qz(const std::string& s) {
  ZPoly out;
  size_t i = 0;
  auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  auto read_int = [&]() -> long {
    bool neg = false;
    if (s[i] == '-') { neg = true; ++i; }
    else if (s[i] == '+') ++i;
    long v = 0;
    if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
      throw std::runtime_error("parse_qz: expected integer");
    while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  };
  skip();
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+') { ++i; }
    else if (s[i] == '-') { sign = -1; ++i; }
    skip();
    long coeff = 1;
    if (std::isdigit((unsigned char)s[i])) coeff = read_int();
    skip();
    long qe = 0, zk = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      if (i < s.size() && s[i] == '^') { ++i; qe = read_int(); }
      else qe = 1;
      skip();
    }
    if (i < s.size() && s[i] == 'z') {
      ++i;
      if (i < s.size() && s[i] == '^') { ++i; zk = read_int(); }
      else zk = 1;
      skip();
    }
    if (zk < 0) throw std::runtime_error("parse_qz: negative z power");
    if ((size_t)zk >= out.size()) out.resize(zk + 1);
    out[zk] += QScalar(RatQ(Laurent::mono(sign * coeff, (int)qe)));
  }
  return zp_trim(std::move(out));
}

Vec16 RMatrix::closed_form() {
  QScalar kap = QScalar::kappa();
  Laurent lq = Laurent::mono(1, 2);
  lq += Laurent::mono(-1, 0);
  QScalar qm1 = QScalar(RatQ(lq));  // q^2-1
  auto qpow = [](int e) { return QScalar::q(e); };
  auto Q = [](const RatQ& r) { return QScalar(r); };
  Vec16 c;

  c[WRing::FULL] = make_rz(
      Q(qn(6) * qn(10) * qn(15) * qn(15) / (qn(3) * qn(5) * qn(30) * qn(30))) * qpow(-22),
      parse_qz("q^58 z^2-q^56 z^2-q^52 z^2+q^50 z^2-q^48 z^2+q^46 z+q^42 z^2-q^40 z+q^38 z"
               "-q^36-q^34 z^2+q^34 z-q^32 z+q^30+q^28 z^2-q^26 z+q^24 z-q^24-q^22 z^2"
               "+q^20 z-q^18 z+q^16+q^12 z-q^10+q^8-q^6-q^2+1"),
      {2, 12});

  c[WRing::CUPCAP] = make_rz(
      -Q(qn(6) * qn(10) * qn(15) * qn(15) / (qn(3) * qn(5) * qn(30) * qn(30))) * qpow(-10),
      zp_mul(zp_mul(zfac(0), zfac(10)),
             parse_qz("q^74 z^2-q^68 z^2+q^62 z^2-q^54 z^2-q^54 z+q^48 z^2+q^48 z-q^46 z^2"
                      "-q^46 z+q^44 z^2-q^42 z+q^40 z^2+q^40 z-q^38 z^2-q^36+q^34 z+q^34"
                      "-q^32 z+q^30-q^28 z-q^28+q^26 z+q^26-q^20 z-q^20+q^12-q^6+1")),
      {2, 12, 20, 30});

  c[WRing::VERTICAL] = make_rz(
      -Q(qn(15) / (qn(3) * qn(30))) * qpow(-14),
      zp_mul(zp_mul(zfac(0), zfac(10)),
             parse_qz("q^52 z+q^50 z+q^48 z+q^44 z-q^42 z-q^38 z+q^36 z-q^34 z-q^34-q^32"
                      "-q^30 z-q^30+q^28 z-q^24+q^22 z+q^22+q^20 z+q^18 z+q^18-q^16+q^14"
                      "+q^10-q^8-q^4-q^2-1")),
      {2, 12, 20});

  c[WRing::HORIZONTAL] = make_rz(
      -Q(qn(15) / (qn(3) * qn(30))) * qpow(-16),
      zp_mul(zfac(0),
             parse_qz("q^46 z+q^44 z+q^42 z+q^36 z-q^34 z-q^34-q^32-q^30 z-q^30+q^28 z"
                      "-q^26 z-q^26+q^24-q^22 z+q^20 z+q^20-q^18+q^16 z+q^16+q^14 z"
                      "+q^12 z+q^12-q^10-q^4-q^2-1")),
      {2, 12});

  c[WRing::SQUARE] = make_rz(Q(qn(5) / (qn(6) * qn(10))) * qpow(2),
                             zp_mul(zfac(0), zfac(10)), {2, 12});

  c[WRing::LEFTID] = make_rz(
      qm1 * qm1 * qm1 * Q(qn(6) * qn(10) * qn(15) / qn(30)) * qpow(-1),
      zp_mul(zmono(1), ZPoly{QScalar(1), qpow(30)}), {2, 12, 20});
  c[WRing::RIGHTID] = c[WRing::LEFTID];

  c[WRing::SWAP_LR] = make_rz(
      Q(qn(6) * qn(10) * qn(15) / (qn(2) * qn(3) * qn(5) * qn(30))) * qpow(-6),
      zp_mul(zfac(0),
             parse_qz("q^46 z^2+q^44 z^2-q^40 z^2-q^38 z^2-q^36 z^2-q^36 z-q^34 z+q^32 z^2"
                      "+q^30 z^2+q^30 z+q^16 z+q^16+q^14-q^12 z-q^10 z-q^10-q^8-q^6+q^2+1")),
      {2, 12, 20});
  c[WRing::SWAP_RL] = c[WRing::SWAP_LR];

  c[WRing::YD_L] = make_rz(
      kap.inv() * qm1 * qm1 * qm1 * Q(qn(6) * qn(10) * qn(15) / qn(30)) * qpow(14),
      zp_mul(zfac(0), zmono(1)), {2, 12, 20});
  c[WRing::YD_R] = c[WRing::YD_L];

  c[WRing::YU_L] = make_rz(kap * qm1 * qpow(16), zp_mul(zfac(0), zmono(1)), {2, 12, 20});
  c[WRing::YU_R] = c[WRing::YU_L];

  c[WRing::CUPE] = make_rz(
      -kap.inv() * kap.inv() * qm1 * qm1 * qm1 * qm1 * qm1 *
          Q(qn(6) * qn(6) * qn(10) * qn(10) * qn(15) * qn(15) / (qn(30) * qn(30))) * qpow(27),
      zp_mul(zp_mul(zfac(0), zmono(1)), ZPoly{QScalar(1), QScalar(1)}), {2, 12, 20, 30});

  c[WRing::CAPE] = make_rz(
      -kap * kap * qm1 * qpow(31),
      zp_mul(zp_mul(zfac(0), zmono(1)), ZPoly{QScalar(1), QScalar(1)}), {2, 12, 20, 30});

  c[WRing::EMPTY] = make_rz(
      Q(qn(6) * qn(10) * qn(15) / (qn(2) * qn(3) * qn(5) * qn(30))) * qpow(-8),
      parse_qz("q^80 z^2+q^78 z^4-q^78 z^3+q^76 z^4-q^76 z^3-q^76 z^2-q^74 z^2-q^72 z^4"
               "+q^72 z^3-q^70 z^4+q^70 z^3-q^68 z^4+q^68 z^2-q^66 z^3+2 q^66 z^2+q^64 z^4"
               "-q^64 z^3+q^64 z^2+q^62 z^4-q^62 z^2-q^60 z^2+q^48 z^2-q^48 z-q^46 z^3"
               "+2 q^46 z^2-q^46 z-q^44 z^3+q^44 z^2-q^42 z^2+q^42 z+q^40 z^3-2 q^40 z^2"
               "+q^40 z+q^38 z^3-q^38 z^2+q^36 z^2-q^36 z-q^34 z^3+2 q^34 z^2-q^34 z"
               "-q^32 z^3+q^32 z^2-q^20 z^2-q^18 z^2+q^18+q^16 z^2-q^16 z+q^16+2 q^14 z^2"
               "-q^14 z+q^12 z^2-q^12+q^10 z-q^10+q^8 z-q^8-q^6 z^2-q^4 z^2-q^4 z+q^4"
               "-q^2 z+q^2+z^2"),
      {2, 12, 20, 30});
  return c;
}

RMatrix::RMatrix(const WRing& wr) : wr_(wr) { derive(); }

void RMatrix::derive() {
  const AffineW& aw = wr_.affine();
  const SparseOp &e0 = aw.gen('e', 0), &f0 = aw.gen('f', 0);
  const SparseOp &k0 = aw.gen('k', 0), &K0 = aw.gen('K', 0);
  SparseOp one = SparseOp::identity({NW});
  const RootSystem& rs = aw.rep().rs();
  int th = wr_.theta();
  int a1 = rs.index(rs.simple(1)), na1 = rs.index(-rs.simple(1));

  std::vector<int> probes = {WRing::flat(th, th), WRing::flat(WI, WI),
                             WRing::flat(th, WI), WRing::flat(WI, th),
                             WRing::flat(a1, na1), WRing::flat(240, 240),
                             WRing::flat(a1, WI),  WRing::flat(na1, a1)};

  // harvest the scalar equations of one probe column: for x in {e_0, f_0},
  //   B_i . Delta(x) = Delta'(x) . B_i,  Delta(e_0) = e_0 x 1 + u k_0 x e_0,
  //   u Delta(f_0) = u f_0 x k_0^-1 + 1 x f_0 (cleared of 1/u)
  auto harvest = [&](int p, const std::function<void(const EqRow&)>& sink) {
    Col ep{{p, QScalar(1)}};
    std::array<Col, 16> bi;
    for (int i = 0; i < 16; ++i) bi[i] = wr_.basis_apply(i, ep);
    for (int fam = 0; fam < 2; ++fam) {
      // degree 0 and 1 parts of Delta(x) e_p and of Delta'(x) applied later
      Col d0 = fam == 0 ? tensor_apply(e0, one, ep) : tensor_apply(one, f0, ep);
      Col d1 = fam == 0 ? tensor_apply(k0, e0, ep) : tensor_apply(f0, K0, ep);
      std::map<int, EqRow> rows;
      auto acc = [&](int i, const Col& col, int deg, bool neg) {
        for (const auto& [r, v] : col) {
          auto& cell = rows[r][i];
          QScalar& slot = deg == 0 ? cell.first : cell.second;
          slot += neg ? -v : v;
        }
      };
      for (int i = 0; i < 16; ++i) {
        acc(i, wr_.basis_apply(i, d0), 0, false);
        acc(i, wr_.basis_apply(i, d1), 1, false);
        // Delta'(x): swap which term carries u
        acc(i, fam == 0 ? tensor_apply(k0, e0, bi[i]) : tensor_apply(f0, K0, bi[i]), 0, true);
        acc(i, fam == 0 ? tensor_apply(e0, one, bi[i]) : tensor_apply(one, f0, bi[i]), 1, true);
      }
      for (const auto& [r, row] : rows) sink(row);
    }
  };

  // pass 1: pick 15 independent rows, judged in a numeric model of the field
  NKField fld(mpq_class(7, 5));
  mpq_class u0(3, 2);
  NumRref rref(fld), rref2(fld);
  std::vector<EqRow> picked, second;
  auto to_num = [&](const EqRow& row) {
    std::array<NK, 16> nr;
    for (int i = 0; i < 16; ++i) {
      NK m0 = fld.eval(row[i].first), m1 = fld.eval(row[i].second);
      nr[i] = {m0.a + u0 * m1.a, m0.b + u0 * m1.b};
    }
    return nr;
  };
  int nprobes = 0, neq = 0;
  for (int p : probes) {
    ++nprobes;
    harvest(p, [&](const EqRow& row) {
      ++neq;
      if ((int)picked.size() < 15 && rref.would_increase(to_num(row)))
        picked.push_back(row);
      else if ((int)picked.size() == 15 && (int)second.size() < 15 &&
               rref2.would_increase(to_num(row)))
        second.push_back(row);
    });
    if ((int)picked.size() == 15 && (int)second.size() == 15) break;
  }
  if ((int)picked.size() != 15) throw std::runtime_error("rmatrix: system rank below 15");
  info_.probes = nprobes;

  if ((int)second.size() != 15)
    throw std::runtime_error("rmatrix: not enough equations for the certificate");

  // a row of the form v*(a + b u) carries a spurious degree-one content that
  // every minor would inherit; divide it out (u is never zero)
  auto strip_content = [](std::vector<EqRow>& rows) {
    for (auto& row : rows) {
      ZPoly g;
      for (int i = 0; i < 16; ++i) {
        ZPoly p;
        if (!row[i].first.is_zero()) p = {row[i].first};
        if (!row[i].second.is_zero()) {
          p.resize(2);
          p[1] = row[i].second;
        }
        p = zp_trim(std::move(p));
        if (!zp_is_zero(p)) g = zp_is_zero(g) ? p : zp_gcd(g, p);
        if (!zp_is_zero(g) && g.size() == 1) break;
      }
      if (g.size() != 2) continue;
      for (int i = 0; i < 16; ++i) {
        QScalar c = !row[i].second.is_zero() ? row[i].second / g[1]
                  : !g[0].is_zero()          ? row[i].first / g[0]
                                             : QScalar(0);
        if (row[i].first != c * g[0] || row[i].second != c * g[1])
          throw std::runtime_error("rmatrix: row content mismatch");
        row[i] = {c, QScalar(0)};
      }
    }
  };
  strip_content(picked);
  strip_content(second);

  // pass 2: exact kernel of the 15x16 system over the rational function field
  std::vector<std::array<RatZ, 16>> m(15);
  for (int r = 0; r < 15; ++r)
    for (int i = 0; i < 16; ++i) {
      RatZ v(picked[r][i].first);
      v += RatZ(picked[r][i].second) * RatZ::z(1);
      m[r][i] = v;
    }
  std::vector<int> pivots;
  std::vector<bool> used(16, false);
  for (int r = 0; r < 15; ++r) {
    int pc = -1;
    for (int j = 0; j < 16 && pc < 0; ++j)
      if (!used[j] && !m[r][j].is_zero()) pc = j;
    if (pc < 0) throw std::runtime_error("rmatrix: symbolic rank below 15");
    used[pc] = true;
    pivots.push_back(pc);
    for (int r2 = 0; r2 < 15; ++r2) {
      if (r2 == r || m[r2][pc].is_zero()) continue;
      RatZ fac = m[r2][pc] / m[r][pc];
      for (int j = 0; j < 16; ++j) m[r2][j] -= fac * m[r][j];
    }
  }
  info_.rank = 15;
  int freec = 0;
  while (used[freec]) ++freec;
  Vec16 ker;
  ker[freec] = RatZ(1);
  for (int r = 0; r < 15; ++r) ker[pivots[r]] = -(m[r][freec] / m[r][pivots[r]]);

  // certificate that the solution line is unique for every nonzero z: the
  // gcd of enough 15x15 minors must be a monomial. Bareiss on the polynomial
  // parts of the picked rows (each entry has degree <= 1).
  auto minor_det = [&](const std::vector<EqRow>& rows, int drop) {
    std::vector<std::vector<ZPoly>> a(15, std::vector<ZPoly>(15));
    for (int r = 0; r < 15; ++r) {
      int cc = 0;
      for (int i = 0; i < 16; ++i) {
        if (i == drop) continue;
        ZPoly p;
        if (!rows[r][i].first.is_zero()) p = {rows[r][i].first};
        if (!rows[r][i].second.is_zero()) {
          p.resize(2);
          p[1] = rows[r][i].second;
        }
        a[r][cc++] = zp_trim(std::move(p));
      }
    }
    ZPoly prev{QScalar(1)};
    for (int k = 0; k < 15; ++k) {
      if (zp_is_zero(a[k][k])) {
        int s = k + 1;
        while (s < 15 && zp_is_zero(a[s][k])) ++s;
        if (s == 15) return ZPoly{};
        std::swap(a[k], a[s]);
        for (int j = 0; j < 15; ++j) a[k][j] = zp_scale(a[k][j], QScalar(-1));
      }
      for (int r = k + 1; r < 15; ++r)
        for (int j = k + 1; j < 15; ++j) {
          ZPoly t = zp_sub(zp_mul(a[r][j], a[k][k]), zp_mul(a[r][k], a[k][j]));
          a[r][j] = zp_divexact(t, prev);
        }
      prev = a[k][k];
    }
    return a[14][14];
  };
  ZPoly cert;
  auto is_monomial = [](const ZPoly& p) {
    if (p.empty()) return false;
    for (size_t k = 0; k + 1 < p.size(); ++k)
      if (!p[k].is_zero()) return false;
    return true;
  };
  // intersecting the loci of two disjoint equation sets discards accidental
  // dependencies specific to either choice of rows
  for (const auto* rows : {&picked, &second})
    for (int drop = 0; drop < 16 && !is_monomial(cert); ++drop) {
      ZPoly d = minor_det(*rows, drop);
      if (zp_is_zero(d)) continue;
      cert = zp_is_zero(cert) ? zp_gcd(d, d) : zp_gcd(cert, d);
    }
  // at the degeneration points z = q^{-a} and z = q^{a} the intertwiner space
  // jumps and the rank legitimately drops, so the minors may share the
  // corresponding linear factors; anything else would signal a bad system
  for (int a : {2, 12, 20, 30}) {
    for (int s : {a, -a}) {
      ZPoly f = zfac(s);
      while (cert.size() > 1 && zp_is_zero(zp_rem(cert, f)))
        cert = zp_divexact(cert, f);
    }
  }
  if (!is_monomial(cert))
    throw std::runtime_error("rmatrix: minors share a nontrivial factor: " +
                             zp_to_string(cert));
  info_.certificate = cert;

  // pass 3: every harvested equation must vanish on the kernel line; clear
  // the least common denominator first so the check is purely polynomial
  ZPoly lcd{QScalar(1)};
  for (int i = 0; i < 16; ++i) {
    if (ker[i].is_zero()) continue;
    ZPoly g = zp_gcd(lcd, ker[i].den);
    lcd = zp_mul(lcd, zp_divexact(ker[i].den, g));
  }
  std::array<ZPoly, 16> nums;
  ZPoly cont;
  for (int i = 0; i < 16; ++i) {
    if (ker[i].is_zero()) continue;
    nums[i] = zp_mul(ker[i].num, zp_divexact(lcd, ker[i].den));
    cont = zp_is_zero(cont) ? nums[i] : zp_gcd(cont, nums[i]);
  }
  if (!zp_is_zero(cont) && cont.size() > 1)
    for (int i = 0; i < 16; ++i)
      if (!nums[i].empty()) nums[i] = zp_divexact(nums[i], cont);
  neq = 0;
  for (int p : probes) {
    harvest(p, [&](const EqRow& row) {
      ++neq;
      ZPoly s;
      for (int i = 0; i < 16; ++i) {
        if (nums[i].empty()) continue;
        ZPoly f;
        if (!row[i].first.is_zero()) f = {row[i].first};
        if (!row[i].second.is_zero()) {
          f.resize(2);
          f[1] = row[i].second;
        }
        if (!f.empty()) s = zp_add(s, zp_mul(zp_trim(std::move(f)), nums[i]));
      }
      if (!zp_is_zero(s)) throw std::runtime_error("rmatrix: kernel fails an equation");
    });
  }
  info_.equations = neq;

  // normalization on the highest weight vector: only the identity, the
  // horizontal rung and the square have a diagonal entry there
  const DiagAlg& da = wr_.diag();
  int t2 = th * 248 + th;
  QScalar hq = da.horizontal_op().entry(t2, t2);
  DiagAlg::Col hcol = da.horizontal_op().apply({{t2, QScalar(1)}});
  QScalar sq;
  for (const auto& [r, v] : hcol) sq += da.horizontal_op().entry(t2, r) * v;
  RatZ norm = ker[WRing::FULL] + RatZ(hq) * ker[WRing::HORIZONTAL] + RatZ(sq) * ker[WRing::SQUARE];
  if (norm.is_zero()) throw std::runtime_error("rmatrix: normalization vanishes");
  RatZ ninv = norm.inv();
  for (int i = 0; i < 16; ++i) c_[i] = ker[i] * ninv;
}

std::array<QVec16, 16> RMatrix::rotation(bool clockwise) const {
  const DiagAlg& da = wr_.diag();
  const SparseOp& H = da.horizontal_op();

  // dashed cup pairings by first and by second index; with kappa^2 = c0 the
  // empty-pair corrections of the dashed cup and cap are exactly 1
  std::vector<std::vector<std::pair<int, QScalar>>> cupby1(NW), cupby2(NW);
  const SparseOp& cup = da.cup();
  for (int c = 0; c < cup.dom_size(); ++c) {
    if (cup.cols[c].empty()) continue;
    const QScalar& v = cup.cols[c][0].second;
    cupby1[c / 248].emplace_back(c % 248, v);
    cupby2[c % 248].emplace_back(c / 248, v);
  }
  cupby1[WI].emplace_back(WI, QScalar(1));
  cupby2[WI].emplace_back(WI, QScalar(1));

  // dashed cap column
  std::vector<std::pair<int, QScalar>> mcol = wr_.cap_embed();
  mcol.emplace_back(WI * NW + WI, QScalar(1));

  auto column = [&](int j, int a, int b) -> Col {
    Col one{{WRing::flat(a, b), QScalar(1)}};
    if (j != WRing::SQUARE) return wr_.basis_apply(j, one);
    if (a == WI || b == WI) return {};
    Col h;  // V-flat column of the rung, converted to W-flat
    for (const auto& [r, v] : H.cols[a * 248 + b]) h.emplace((r / 248) * NW + r % 248, v);
    return wr_.basis_apply(WRing::HORIZONTAL, h);
  };

  std::array<QVec16, 16> rot;
  for (int j = 0; j < 16; ++j) {
    auto act = [&](const Col& in) {
      Col out;
      for (const auto& [p, w] : in) {
        int s1 = p / NW, s2 = p % NW;
        // ccw: the first input leg is bent up and paired with the first
        // output; cw: the second input leg is paired with the second output
        int eat = clockwise ? s2 : s1;
        int keep = clockwise ? s1 : s2;
        const auto& er = clockwise ? cupby2[eat] : cupby1[eat];
        if (er.empty()) continue;
        std::vector<QScalar> ev(NW);
        std::vector<char> em(NW, 0);
        for (const auto& [x, v] : er) {
          ev[x] = v;
          em[x] = 1;
        }
        for (const auto& [bc, mv] : mcol) {
          int m1 = bc / NW, m2 = bc % NW;
          Col cx = clockwise ? column(j, m2, keep) : column(j, keep, m1);
          for (const auto& [r, v] : cx) {
            int x = r / NW, y = r % NW;
            int e = clockwise ? y : x;  // leg eaten by the dashed cup
            int o = clockwise ? x : y;  // surviving output leg
            if (!em[e]) continue;
            int outp = clockwise ? m1 * NW + o : o * NW + m2;
            add_entry(out, outp, ev[e] * v * mv * w);
          }
        }
      }
      return out;
    };
    rot[j] = wr_.solve_in_basis(act);
  }
  return rot;
}

QVec16 RMatrix::at(const QScalar& z0) const {
  QVec16 out;
  for (int i = 0; i < 16; ++i) out[i] = c_[i].eval(z0);
  return out;
}

const RMatrix& r_matrix() {
  static RMatrix rm(w_ring());
  return rm;
}

}  // namespace e8r
