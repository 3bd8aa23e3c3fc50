#include "e8r/ratlimit.hpp"
#include <sstream>

namespace e8r {

Q30 Q30::inv() const {
  mpq_class n = a * a - 30 * b * b;
  if (n == 0) throw std::runtime_error("Q30: division by zero");
  return {a / n, -b / n};
}

std::string Q30::to_string() const {
  std::ostringstream os;
  if (b == 0) os << a;
  else if (a == 0) os << b << "*s30";
  else os << a << (b > 0 ? "+" : "") << b << "*s30";
  return os.str();
}

PolyX px_trim(PolyX p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

bool px_is_zero(const PolyX& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

PolyX px_add(const PolyX& a, const PolyX& b) {
  PolyX r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return px_trim(std::move(r));
}

PolyX px_sub(const PolyX& a, const PolyX& b) { return px_add(a, px_scale(b, Q30(-1))); }

PolyX px_mul(const PolyX& a, const PolyX& b) {
  if (a.empty() || b.empty()) return {};
  PolyX r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return px_trim(std::move(r));
}

PolyX px_scale(const PolyX& a, const Q30& c) {
  PolyX r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return px_trim(std::move(r));
}

PolyX px_flip(const PolyX& a) {
  PolyX r = a;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

PolyX px_divexact(const PolyX& a, const PolyX& b) {
  PolyX num = px_trim(a), den = px_trim(b);
  if (den.empty()) throw std::runtime_error("PolyX: division by zero");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::runtime_error("PolyX: inexact division");
  Q30 li = den.back().inv();
  PolyX q(num.size() - den.size() + 1);
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    Q30 c = num[k + den.size() - 1] * li;
    q[k] = c;
    for (size_t j = 0; j < den.size(); ++j)
      num[k + j] = num[k + j] - c * den[j];
  }
  if (!px_is_zero(num)) throw std::runtime_error("PolyX: inexact division");
  return px_trim(std::move(q));
}

Q30 px_eval(const PolyX& a, const Q30& x0) {
  Q30 r;
  for (size_t i = a.size(); i-- > 0;) r = r * x0 + a[i];
  return r;
}

std::string px_to_string(const PolyX& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << a[i].to_string() << ")";
    if (i == 1) os << " x";
    else if (i > 1) os << " x^" << i;
    first = false;
  }
  return os.str();
}

RatX RatX::operator+(const RatX& o) const {
  return {px_add(px_mul(num, o.den), px_mul(o.num, den)), px_mul(den, o.den)};
}

RatX RatX::operator*(const RatX& o) const {
  return {px_mul(num, o.num), px_mul(den, o.den)};
}

bool RatX::operator==(const RatX& o) const {
  return px_mul(num, o.den) == px_mul(o.num, den);
}

std::string RatX::to_string() const {
  return "(" + px_to_string(num) + ") / (" + px_to_string(den) + ")";
}

namespace {

// truncated Laurent series in eps with PolyX coefficients; when c is empty the
// series is known to vanish strictly below exponent lo
struct Ser {
  int lo = 0;
  std::vector<PolyX> c;
  int bound() const { return lo + (int)c.size(); }
};

Ser ser_trim(Ser s) {
  size_t k = 0;
  while (k < s.c.size() && px_is_zero(s.c[k])) ++k;
  s.lo += (int)k;
  s.c.erase(s.c.begin(), s.c.begin() + k);
  return s;
}

Ser ser_add(const Ser& a, const Ser& b) {
  int bound = std::min(a.bound(), b.bound());
  int lo = std::min(a.lo, b.lo);
  Ser r;
  if (bound <= lo) {
    r.lo = bound;
    return r;
  }
  r.lo = lo;
  r.c.assign(bound - lo, {});
  for (int i = 0; i < (int)a.c.size(); ++i)
    if (a.lo + i < bound) r.c[a.lo + i - lo] = px_add(r.c[a.lo + i - lo], a.c[i]);
  for (int i = 0; i < (int)b.c.size(); ++i)
    if (b.lo + i < bound) r.c[b.lo + i - lo] = px_add(r.c[b.lo + i - lo], b.c[i]);
  return ser_trim(std::move(r));
}

Ser ser_mul(const Ser& a, const Ser& b) {
  int bound = std::min(a.lo + b.bound(), b.lo + a.bound());
  Ser r;
  if (a.c.empty() || b.c.empty() || bound <= a.lo + b.lo) {
    r.lo = bound;
    return r;
  }
  r.lo = a.lo + b.lo;
  r.c.assign(bound - r.lo, {});
  for (int i = 0; i < (int)a.c.size(); ++i)
    for (int j = 0; j < (int)b.c.size(); ++j) {
      int e = a.lo + i + b.lo + j;
      if (e >= bound) break;
      r.c[e - r.lo] = px_add(r.c[e - r.lo], px_mul(a.c[i], b.c[j]));
    }
  return ser_trim(std::move(r));
}

Q30 ser_const(const Ser& s, size_t m) {
  if (m >= s.c.size()) return Q30(0);
  const PolyX& p = s.c[m];
  if (p.size() > 1) throw std::runtime_error("ratlimit: expected constant coefficient");
  return p.empty() ? Q30(0) : p[0];
}

// inverse of a series with constant coefficients
Ser ser_inv(const Ser& a) {
  if (a.c.empty()) throw std::runtime_error("ratlimit: inverting a vanishing series");
  Ser r;
  r.lo = -a.lo;
  size_t n = a.c.size();
  std::vector<Q30> t(n);
  Q30 c0 = ser_const(a, 0).inv();
  t[0] = c0;
  for (size_t m = 1; m < n; ++m) {
    Q30 s;
    for (size_t i = 1; i <= m; ++i) s += ser_const(a, i) * t[m - i];
    t[m] = -(c0 * s);
  }
  r.c.resize(n);
  for (size_t m = 0; m < n; ++m)
    if (!t[m].is_zero()) r.c[m] = {t[m]};
  return r;
}

// expansion of a Laurent polynomial in q under q = e^{eps h/2}
Ser ser_laurent(const Laurent& L, const mpq_class& h, int len) {
  Ser r;
  r.c.assign(len, {});
  for (const auto& [e, coef] : L.t) {
    mpq_class t(coef), step = mpq_class(e) * h / 2;
    for (int m = 0; m < len; ++m) {
      if (t != 0) {
        if (r.c[m].empty()) r.c[m].resize(1);
        r.c[m][0] += Q30(t);
      }
      t *= step;
      t /= (m + 1);
    }
  }
  return ser_trim(std::move(r));
}

Ser ser_ratq(const RatQ& x, const mpq_class& h, int len) {
  if (x.is_zero()) {
    Ser r;
    r.lo = len;
    return r;
  }
  Laurent ncof, dcof;
  int nv = x.num.q1_valuation(&ncof), dv = x.den.q1_valuation(&dcof);
  Ser n = ser_laurent(ncof, h, len), d = ser_laurent(dcof, h, len);
  n.lo += nv;
  d.lo += dv;
  return ser_mul(n, ser_inv(d));
}

// kappa = sqrt(c0(q)) with the branch kappa ~ +sqrt(30) h eps
Ser ser_kappa(const mpq_class& h, int len) {
  Ser s = ser_ratq(QScalar::c0(), h, len + 2);
  if (s.lo != 2) throw std::runtime_error("ratlimit: unexpected valuation of c0");
  std::vector<Q30> t(len);
  Q30 l0 = ser_const(s, 0);  // 30 h^2
  if (l0 != Q30(30 * h * h)) throw std::runtime_error("ratlimit: unexpected c0 leading term");
  t[0] = Q30(0, h);
  Q30 half = Q30(mpq_class(1, 2)) * t[0].inv();
  for (int m = 1; m < len; ++m) {
    Q30 acc = ser_const(s, m);
    for (int i = 1; i < m; ++i) acc = acc - t[i] * t[m - i];
    t[m] = half * acc;
  }
  Ser r;
  r.lo = 1;
  r.c.resize(len);
  for (int m = 0; m < len; ++m)
    if (!t[m].is_zero()) r.c[m] = {t[m]};
  return r;
}

Ser ser_qscalar(const QScalar& s, const mpq_class& h, int len) {
  Ser r = ser_ratq(s.a, h, len);
  if (!s.b.is_zero()) r = ser_add(r, ser_mul(ser_ratq(s.b, h, len), ser_kappa(h, len)));
  return r;
}

// e^{eps k x}
Ser ser_expx(long k, int len) {
  Ser r;
  r.c.resize(len);
  mpq_class t(1);
  for (int m = 0; m < len; ++m) {
    PolyX p(m + 1);
    p[m] = Q30(t);
    r.c[m] = std::move(p);
    t *= k;
    t /= (m + 1);
  }
  return r;
}

Ser ser_zpoly(const ZPoly& p, const mpq_class& h, int len) {
  Ser r;
  r.lo = len;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    r = ser_add(r, ser_mul(ser_qscalar(p[k], h, len), ser_expx((long)k, len)));
  }
  return r;
}

}  // namespace

EpsExpander::EpsExpander(const mpq_class& hbar) : h_(hbar) {
  if (h_ <= 0) throw std::runtime_error("ratlimit: hbar must be positive");
}

RatX EpsExpander::limit(const RatZ& r) const {
  if (r.is_zero()) return RatX();
  for (int len = 12; len <= 96; len *= 2) {
    Ser n = ser_zpoly(r.num, h_, len), d = ser_zpoly(r.den, h_, len);
    if (n.c.empty() || d.c.empty()) continue;
    if (n.lo < d.lo) throw LimitDivergent("ratlimit: coefficient diverges as eps -> 0");
    if (n.lo > d.lo) return RatX();
    return RatX(n.c[0], d.c[0]);
  }
  throw LimitDivergent("ratlimit: expansion order exhausted");
}

Q30 EpsExpander::q1(const QScalar& s) const {
  if (s.is_zero()) return Q30(0);
  Ser e = ser_qscalar(s, h_, 8);
  if (e.lo < 0) throw PoleAtPoint("ratlimit: scalar diverges at q=1");
  if (e.lo > 0 || e.c.empty()) return Q30(0);
  return ser_const(e, 0);
}

RatLimit::RatLimit(const RMatrix& rm, const mpq_class& hbar) : h_(hbar) {
  EpsExpander ex(hbar);
  for (int i = 0; i < 16; ++i) c_[i] = ex.limit(rm.coeffs()[i]);
}

namespace {

// a*h + b*x
PolyX lin(const mpq_class& h, long a, long b) {
  return px_trim({Q30(a * h), Q30(b)});
}

PolyX con(const mpq_class& v) { return px_trim({Q30(v)}); }

}  // namespace

std::array<RatX, 16> RatLimit::printed(const mpq_class& h) {
  std::array<RatX, 16> r;
  PolyX x = {Q30(0), Q30(1)};
  PolyX d1 = lin(h, 1, 1), d6 = lin(h, 6, 1), d10 = lin(h, 10, 1), d15 = lin(h, 15, 1);
  PolyX d16 = px_mul(d1, d6);
  PolyX d3 = px_mul(d16, d10);
  PolyX d4 = px_mul(d3, d15);
  PolyX x5 = px_mul(x, lin(h, 5, 1));
  mpq_class h3 = h * h * h;

  r[WRing::FULL] = RatX(lin(h, 1, -1), d1);
  r[WRing::CUPCAP] =
      RatX(px_scale(px_mul(px_mul(x5, lin(h, 9, 1)), lin(h, 16, 1)), Q30(-1)), d4);
  r[WRing::VERTICAL] =
      RatX(px_scale(px_mul(x5, lin(h, 44, 5)), Q30(-1)), px_scale(d3, Q30(6)));
  r[WRing::HORIZONTAL] =
      RatX(px_scale(px_mul(x, lin(h, 31, 5)), Q30(-1)), px_scale(d16, Q30(6)));
  r[WRing::SQUARE] = RatX(x5, px_scale(d16, Q30(12)));
  r[WRing::LEFTID] = RatX(con(60 * h3), d3);
  r[WRing::RIGHTID] = r[WRing::LEFTID];
  r[WRing::SWAP_LR] = RatX(px_mul(px_mul(x, lin(h, 4, 1)), lin(h, 11, 1)), d3);
  r[WRing::SWAP_RL] = r[WRing::SWAP_LR];
  RatX y(px_scale(x, Q30(mpq_class(0), h * h)), d3);  // sqrt(30) h^2 x
  r[WRing::YD_L] = r[WRing::YD_R] = r[WRing::YU_L] = r[WRing::YU_R] = y;
  r[WRing::CUPE] = RatX(px_scale(x, Q30(-60 * h3)), d4);
  r[WRing::CAPE] = r[WRing::CUPE];
  PolyX en = px_sub(px_scale(lin(h, 30, 1), Q30(60 * h3)),
                    px_mul(lin(h, 1, -1), px_mul(d6, px_mul(d10, d15))));
  r[WRing::EMPTY] = RatX(en, d4);
  return r;
}

std::array<RatX, 5> RatLimit::intermediate() const {
  RatX s = c_[WRing::SQUARE];
  RatX s12 = RatX(con(12), con(1)) * s, s10 = RatX(con(10), con(1)) * s;
  return {c_[WRing::FULL] + s12, c_[WRing::CUPCAP] + s12, c_[WRing::VERTICAL] + s10,
          c_[WRing::HORIZONTAL] + s10, s12};
}

std::array<RatX, 5> RatLimit::printed_intermediate(const mpq_class& h) {
  PolyX x = {Q30(0), Q30(1)};
  PolyX d1 = lin(h, 1, 1), d6 = lin(h, 6, 1), d10 = lin(h, 10, 1), d15 = lin(h, 15, 1);
  PolyX d16 = px_mul(d1, d6);
  PolyX d3 = px_mul(d16, d10);
  PolyX d4 = px_mul(d3, d15);
  PolyX x5 = px_mul(x, lin(h, 5, 1));
  mpq_class h2 = h * h;
  return {RatX(con(6 * h2), d16), RatX(px_scale(x5, Q30(6 * h2)), d4),
          RatX(px_scale(x5, Q30(h)), d3), RatX(px_scale(x, Q30(-h)), d16),
          RatX(x5, d16)};
}

void RatLimit::check_unitarity(const WRing& wr) const {
  EpsExpander ex(h_);
  PolyX d1 = lin(h_, 1, 1), d6 = lin(h_, 6, 1), d10 = lin(h_, 10, 1), d15 = lin(h_, 15, 1);
  PolyX D = px_mul(px_mul(d1, d6), px_mul(d10, d15));
  std::array<PolyX, 16> n, nf;
  for (int i = 0; i < 16; ++i) {
    n[i] = px_divexact(px_mul(c_[i].num, D), c_[i].den);
    nf[i] = px_flip(n[i]);
  }
  PolyX target = px_mul(D, px_flip(D));
  QVec16 u = wr.unit();
  for (int k = 0; k < 16; ++k) {
    PolyX acc;
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) {
        Q30 t = ex.q1(wr.table(i, j)[k]);
        if (t.is_zero()) continue;
        acc = px_add(acc, px_scale(px_mul(n[i], nf[j]), t));
      }
    Q30 uk = ex.q1(u[k]);
    PolyX want = px_scale(target, uk);
    if (acc != want)
      throw std::runtime_error("ratlimit: unitarity fails in the rational limit");
  }
}

RatX RatLimit::norm_factor(const mpq_class& h) {
  PolyX w = {Q30(0), Q30(1)};
  auto sh = [&](long a) { return px_trim(PolyX{Q30(-a * h), Q30(1)}); };  // w - a h
  return RatX(px_mul(w, px_mul(sh(5), sh(9))), px_mul(sh(1), px_mul(sh(6), sh(10))));
}

}  // namespace e8r
