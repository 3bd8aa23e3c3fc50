#include "e8r/laurent.hpp"
#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace e8r {

Laurent Laurent::qnum(int n) {
  if (n == 0) return zero();
  if (n < 0) return -qnum(-n);
  Laurent r;
  for (int e = 1 - n; e <= n - 1; e += 2) r.t.emplace_back(e, 1);
  return r;
}

mpz_class Laurent::coeff(int e) const {
  auto it = std::lower_bound(t.begin(), t.end(), e,
      [](const std::pair<int, mpz_class>& p, int x) { return p.first < x; });
  if (it != t.end() && it->first == e) return it->second;
  return 0;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& p : r.t) p.second = -p.second;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r;
  r.t.reserve(t.size() + o.t.size());
  size_t i = 0, j = 0;
  while (i < t.size() || j < o.t.size()) {
    if (j == o.t.size() || (i < t.size() && t[i].first < o.t[j].first)) {
      r.t.push_back(t[i++]);
    } else if (i == t.size() || o.t[j].first < t[i].first) {
      r.t.push_back(o.t[j++]);
    } else {
      mpz_class c = t[i].second + o.t[j].second;
      if (c != 0) r.t.emplace_back(t[i].first, c);
      ++i; ++j;
    }
  }
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return zero();
  int lo_ = lo() + o.lo(), hi_ = hi() + o.hi();
  std::vector<mpz_class> acc(hi_ - lo_ + 1);
  for (const auto& a : t)
    for (const auto& b : o.t)
      mpz_addmul(acc[a.first + b.first - lo_].get_mpz_t(),
                 a.second.get_mpz_t(), b.second.get_mpz_t());
  Laurent r;
  for (int e = lo_; e <= hi_; ++e)
    if (acc[e - lo_] != 0) r.t.emplace_back(e, std::move(acc[e - lo_]));
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& p : r.t) p.first += k;
  return r;
}

Laurent Laurent::reversed() const {
  Laurent r;
  r.t.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it) r.t.emplace_back(-it->first, it->second);
  return r;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& p : t) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.second.get_mpz_t()); if (g == 1) break; }
  return g;
}

Laurent Laurent::scaled(const mpz_class& c) const {
  if (c == 0) return zero();
  Laurent r = *this;
  for (auto& p : r.t) p.second *= c;
  return r;
}

Laurent Laurent::divided_by_int(const mpz_class& c) const {
  Laurent r = *this;
  for (auto& p : r.t) {
    mpz_class qq, rr;
    mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), p.second.get_mpz_t(), c.get_mpz_t());
    if (rr != 0) throw std::runtime_error("Laurent: inexact integer division");
    p.second = qq;
  }
  return r;
}

Laurent Laurent::divexact(const Laurent& d) const {
  if (d.is_zero()) throw std::runtime_error("Laurent: division by zero");
  if (is_zero()) return zero();
  // work with shifted copies so both start at exponent 0
  int shift = lo() - d.lo();
  Laurent num = shifted(-lo());
  Laurent den = d.shifted(-d.lo());
  int dn = num.hi(), dd = den.hi();
  if (dn < dd) throw std::runtime_error("Laurent: inexact division");
  std::vector<mpz_class> n(dn + 1), dv(dd + 1), quo(dn - dd + 1);
  for (auto& p : num.t) n[p.first] = p.second;
  for (auto& p : den.t) dv[p.first] = p.second;
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class qq, rr;
    mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), n[k + dd].get_mpz_t(), dv[dd].get_mpz_t());
    if (rr != 0) throw std::runtime_error("Laurent: inexact division");
    quo[k] = qq;
    if (qq != 0)
      for (int i = 0; i <= dd; ++i)
        mpz_submul(n[k + i].get_mpz_t(), qq.get_mpz_t(), dv[i].get_mpz_t());
  }
  for (const auto& c : n) if (c != 0) throw std::runtime_error("Laurent: inexact division");
  Laurent r;
  for (int e = 0; e < (int)quo.size(); ++e)
    if (quo[e] != 0) r.t.emplace_back(e + shift, quo[e]);
  return r;
}

static Laurent primitive_part(const Laurent& a) {
  if (a.is_zero()) return a;
  Laurent r = a.shifted(-a.lo());
  mpz_class c = r.content();
  if (sgn(r.lead()) < 0) c = -c;
  return r.divided_by_int(c);
}

namespace {

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * a % p;
    a = (unsigned __int128)a * a % p;
    e >>= 1;
  }
  return r;
}

uint64_t gcd_prime(int i) {
  static std::vector<uint64_t> cache;
  while ((int)cache.size() <= i) {
    mpz_class c = cache.empty() ? mpz_class(1) << 31 : mpz_class(cache.back());
    mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
    cache.push_back(c.get_ui());
  }
  return cache[i];
}

// dense coefficients of a lo()=0 polynomial reduced mod p
std::vector<uint64_t> reduce_mod(const Laurent& x, uint64_t p) {
  std::vector<uint64_t> v(x.hi() + 1, 0);
  for (const auto& [e, c] : x.t) {
    uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), p);
    v[e] = r;
  }
  return v;
}

void trim_mod(std::vector<uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Euclidean gcd of dense polynomials over F_p, result monic
std::vector<uint64_t> gcd_mod(std::vector<uint64_t> x, std::vector<uint64_t> y, uint64_t p) {
  trim_mod(x);
  trim_mod(y);
  while (!y.empty()) {
    uint64_t inv = mod_pow(y.back(), p - 2, p);
    for (int d = (int)x.size() - (int)y.size(); d >= 0 && !x.empty();
         d = (int)x.size() - (int)y.size()) {
      uint64_t f = (unsigned __int128)x.back() * inv % p;
      for (size_t i = 0; i < y.size(); ++i) {
        uint64_t s = (unsigned __int128)f * y[i] % p;
        uint64_t& t = x[i + d];
        t = t >= s ? t - s : t + p - s;
      }
      trim_mod(x);
    }
    std::swap(x, y);
  }
  if (!x.empty()) {
    uint64_t inv = mod_pow(x.back(), p - 2, p);
    for (auto& c : x) c = (unsigned __int128)c * inv % p;
  }
  return x;
}

}  // namespace

// modular gcd: combine monic gcd images mod 31-bit primes by CRT, scaled to
// the integer gcd of leading coefficients, and certify by trial division
Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  Laurent x = primitive_part(a), y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.t.size() == 1 || y.t.size() == 1) return one();  // monomial inputs
  mpz_class lcg;
  mpz_gcd(lcg.get_mpz_t(), x.lead().get_mpz_t(), y.lead().get_mpz_t());
  int deg = INT_MAX;
  std::vector<mpz_class> G;
  mpz_class M = 1;
  for (int pi = 0;; ++pi) {
    uint64_t p = gcd_prime(pi);
    if (mpz_fdiv_ui(x.lead().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(y.lead().get_mpz_t(), p) == 0)
      continue;
    std::vector<uint64_t> g = gcd_mod(reduce_mod(x, p), reduce_mod(y, p), p);
    if (g.size() <= 1) return one();
    int dg = (int)g.size() - 1;
    if (dg > deg) continue;  // unlucky prime
    uint64_t scale = mpz_fdiv_ui(lcg.get_mpz_t(), p);
    for (auto& c : g) c = (unsigned __int128)c * scale % p;
    if (dg < deg) {
      deg = dg;
      M = 1;
      G.assign(deg + 1, 0);
    }
    // CRT: adjust G to match g mod p while staying fixed mod M
    mpz_class mp(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), M.get_mpz_t(), mp.get_mpz_t());
    for (int i = 0; i <= deg; ++i) {
      uint64_t gi = mpz_fdiv_ui(G[i].get_mpz_t(), p);
      uint64_t diff = g[i] >= gi ? g[i] - gi : g[i] + p - gi;
      mpz_class add = mpz_class(static_cast<unsigned long>(
                          (unsigned __int128)diff * mpz_fdiv_ui(minv.get_mpz_t(), p) % p)) * M;
      G[i] += add;
    }
    M *= mp;
    // symmetric representatives, then certify by trial division
    Laurent cand;
    for (int i = 0; i <= deg; ++i) {
      mpz_class c = G[i] % M;
      if (c > M / 2) c -= M;
      if (c != 0) cand.t.emplace_back(i, c);
    }
    if (cand.is_zero()) continue;
    cand = primitive_part(cand);
    try {
      x.divexact(cand);
      y.divexact(cand);
      return cand;
    } catch (const std::runtime_error&) {
      continue;  // need more primes
    }
  }
}

mpq_class Laurent::eval(const mpq_class& q0) const {
  if (q0 == 0) throw PoleAtPoint("Laurent eval at q=0");
  if (is_zero()) return 0;
  // Horner over the shifted polynomial, then multiply by q0^lo
  mpq_class r = 0;
  int prev = hi();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    for (int k = 0; k < prev - it->first; ++k) r *= q0;
    r += it->second;
    prev = it->first;
  }
  mpq_class p = 1;
  int e = prev;  // = lo()
  mpq_class base;
  if (e >= 0) base = q0; else base = 1 / q0;
  for (int k = 0; k < std::abs(e); ++k) p *= base;
  return r * p;
}

mpz_class Laurent::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& p : t) s += p.second;
  return s;
}

int Laurent::q1_valuation(Laurent* cofactor) const {
  if (is_zero()) throw std::runtime_error("q1_valuation of zero");
  Laurent cur = shifted(-lo());
  int v = 0;
  while (cur.eval_at_one() == 0) {
    cur = cur.divexact(Laurent::q() - Laurent::one());
    ++v;
  }
  if (cofactor) *cofactor = cur.shifted(lo());
  return v;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : t) {
    mpz_class c = p.second;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (p.first == 0) os << c.get_str();
    else {
      if (c != 1) os << c.get_str() << "*";
      os << "q^" << p.first;
    }
    first = false;
  }
  return os.str();
}

Laurent Laurent::parse(const std::string& s) {
  Laurent r;
  size_t i = 0, n = s.size();
  auto skipws = [&] { while (i < n && std::isspace((unsigned char)s[i])) ++i; };
  skipws();
  bool any = false;
  while (i < n) {
    int sign = 1;
    skipws();
    if (i < n && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i; skipws();
    } else if (any) {
      throw std::runtime_error("Laurent parse: expected +/- at '" + s.substr(i) + "'");
    }
    mpz_class coef = 1;
    bool sawcoef = false;
    if (i < n && (std::isdigit((unsigned char)s[i]))) {
      size_t j = i;
      while (j < n && std::isdigit((unsigned char)s[j])) ++j;
      coef = mpz_class(s.substr(i, j - i));
      i = j; sawcoef = true;
      skipws();
      if (i < n && s[i] == '*') { ++i; skipws(); }
    }
    int expo = 0;
    if (i < n && s[i] == 'q') {
      ++i;
      expo = 1;
      if (i < n && s[i] == '^') {
        ++i;
        int es = 1;
        if (i < n && s[i] == '-') { es = -1; ++i; }
        else if (i < n && s[i] == '+') ++i;
        size_t j = i;
        while (j < n && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::runtime_error("Laurent parse: bad exponent");
        expo = es * std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!sawcoef) {
      throw std::runtime_error("Laurent parse: expected term at '" + s.substr(i) + "'");
    }
    r += mono(sign * coef, expo);
    any = true;
    skipws();
  }
  if (!any) throw std::runtime_error("Laurent parse: empty");
  return r;
}

size_t Laurent::hash() const {
  size_t h = 1469598103934665603ull;
  for (const auto& p : t) {
    h = (h ^ (size_t)p.first) * 1099511628211ull;
    h = (h ^ (size_t)mpz_fdiv_ui(p.second.get_mpz_t(), 1000000007)) * 1099511628211ull;
  }
  return h;
}

}  // namespace e8r
