#include "e8r/wring.hpp"
#include <stdexcept>

namespace e8r {

namespace {
constexpr int N = 248;   // dim V
constexpr int W = 248;   // index of w inside W
constexpr int NW = 249;

enum Sector { sVV = 0, sVW, sWV, sWW };

Sector dom_sector(int i) {
  switch (i) {
    case WRing::FULL: case WRing::CUPCAP: case WRing::VERTICAL:
    case WRing::HORIZONTAL: case WRing::SQUARE:
    case WRing::CUPE: case WRing::YD_L: case WRing::YD_R: return sVV;
    case WRing::LEFTID: case WRing::SWAP_LR: case WRing::YU_L: return sVW;
    case WRing::RIGHTID: case WRing::SWAP_RL: case WRing::YU_R: return sWV;
    default: return sWW;  // EMPTY, CAPE
  }
}

Sector cod_sector(int i) {
  switch (i) {
    case WRing::FULL: case WRing::CUPCAP: case WRing::VERTICAL:
    case WRing::HORIZONTAL: case WRing::SQUARE:
    case WRing::CAPE: case WRing::YU_L: case WRing::YU_R: return sVV;
    case WRing::LEFTID: case WRing::SWAP_RL: case WRing::YD_L: return sVW;
    case WRing::RIGHTID: case WRing::SWAP_LR: case WRing::YD_R: return sWV;
    default: return sWW;  // EMPTY, CUPE
  }
}

void add_entry(std::map<int, QScalar>& m, int r, const QScalar& v) {
  auto it = m.find(r);
  if (it == m.end()) m.emplace(r, v);
  else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}
}  // namespace

const char* WRing::name(int i) {
  static const char* names[n] = {
      "full", "cupcap", "vertical", "horizontal", "square",
      "empty", "cup_e", "cap_e", "left_id", "right_id",
      "swap_lr", "swap_rl", "y_down_l", "y_down_r", "y_up_l", "y_up_r"};
  return names[i];
}

WRing::WRing(const AffineW& aw) : aw_(aw), da_(diag_alg()) {
  const RootSystem& rs = aw_.rep().rs();
  theta_ = rs.index(rs.highest());
  for (const auto& [r, v] : da_.cap().cols[0])
    capcol_.emplace_back(flat(r / N, r % N), v);
  build_probes();
  build_table();
}

WRing::Col WRing::basis_apply(int i, const Col& v) const {
  // split the input by sector; only the part matching the domain acts
  DiagAlg::Col vv;
  Col out;
  switch (i) {
    case FULL: case CUPCAP: case VERTICAL: case HORIZONTAL: case SQUARE: {
      for (const auto& [c, x] : v) {
        int a = c / NW, b = c % NW;
        if (a < N && b < N) vv.emplace(a * N + b, x);
      }
      for (const auto& [r, x] : da_.basis_apply(i, vv)) out.emplace(flat(r / N, r % N), x);
      return out;
    }
    case EMPTY: {
      auto it = v.find(flat(W, W));
      if (it != v.end()) out.emplace(it->first, it->second);
      return out;
    }
    case CUPE: {
      QScalar s;
      for (const auto& [c, x] : v) {
        int a = c / NW, b = c % NW;
        if (a < N && b < N) {
          const auto& cc = da_.cup().cols[a * N + b];
          if (!cc.empty()) s += cc[0].second * x;
        }
      }
      if (!s.is_zero()) out.emplace(flat(W, W), s);
      return out;
    }
    case CAPE: {
      auto it = v.find(flat(W, W));
      if (it != v.end())
        for (const auto& [r, cv] : capcol_) out.emplace(r, cv * it->second);
      return out;
    }
    case LEFTID: case RIGHTID: {
      for (const auto& [c, x] : v) {
        int a = c / NW, b = c % NW;
        bool keep = i == LEFTID ? (a < N && b == W) : (a == W && b < N);
        if (keep) out.emplace(c, x);
      }
      return out;
    }
    case SWAP_LR: case SWAP_RL: {
      for (const auto& [c, x] : v) {
        int a = c / NW, b = c % NW;
        if (i == SWAP_LR && a < N && b == W) out.emplace(flat(W, a), x);
        if (i == SWAP_RL && a == W && b < N) out.emplace(flat(b, W), x);
      }
      return out;
    }
    case YD_L: case YD_R: {
      for (const auto& [c, x] : v) {
        int a = c / NW, b = c % NW;
        if (a < N && b < N) vv.emplace(a * N + b, x);
      }
      for (const auto& [m, x] : da_.y_down().apply(vv))
        out.emplace(i == YD_L ? flat(m, W) : flat(W, m), x);
      return out;
    }
    case YU_L: case YU_R: {
      std::map<int, QAccum> acc;
      for (const auto& [c, x] : v) {
        int a = c / NW, b = c % NW;
        int leg = i == YU_L ? (b == W && a < N ? a : -1) : (a == W && b < N ? b : -1);
        if (leg < 0) continue;
        for (const auto& [r, uv] : da_.y_up().cols[leg]) acc[flat(r / N, r % N)].add(uv * x);
      }
      for (auto& [r, s] : acc) {
        QScalar t = s.total();
        if (!t.is_zero()) out.emplace(r, std::move(t));
      }
      return out;
    }
  }
  throw std::runtime_error("wring: bad basis index");
}

WRing::Col WRing::expr_apply(const QVec16& c, const Col& v) const {
  Col out;
  for (int i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    for (const auto& [r, x] : basis_apply(i, v)) add_entry(out, r, c[i] * x);
  }
  return out;
}

QVec16 WRing::unit() const {
  QVec16 u{};
  u[FULL] = u[EMPTY] = u[LEFTID] = u[RIGHTID] = QScalar(1);
  return u;
}

QVec16 WRing::basis_elem(int i) const {
  QVec16 v{};
  v[i] = QScalar(1);
  return v;
}

QVec16 WRing::lift(const Vec5& c) const {
  QVec16 v{};
  for (int i = 0; i < 5; ++i) v[i] = c[i];
  return v;
}

void WRing::build_probes() {
  const RootSystem& rs = aw_.rep().rs();
  int a1 = rs.index(rs.simple(1)), na1 = rs.index(-rs.simple(1));
  int a2 = rs.index(rs.simple(2));
  std::vector<int> cand = {flat(a1, na1), flat(a1, a2),  flat(240, 240), flat(a1, 240),
                           flat(W, W),    flat(a1, W),   flat(W, a1),    flat(a1, a1),
                           flat(na1, a1), flat(theta_, W), flat(W, theta_)};
  std::vector<std::array<Col, n>> cols;
  for (int c : cand) {
    probe_cols_.push_back(c);
    Col e{{c, QScalar(1)}};
    std::array<Col, n> bc;
    for (int i = 0; i < n; ++i) bc[i] = basis_apply(i, e);
    cols.push_back(std::move(bc));
    probe_pos_.clear();
    probe_mat_.clear();
    for (size_t s = 0; s < cols.size(); ++s) {
      std::map<int, int> rows;
      for (int i = 0; i < n; ++i)
        for (const auto& [r, v] : cols[s][i]) rows.emplace(r, 0);
      for (const auto& [r, _] : rows) {
        probe_pos_.emplace_back((int)s, r);
        QVec row(n);
        for (int i = 0; i < n; ++i) {
          auto it = cols[s][i].find(r);
          if (it != cols[s][i].end()) row[i] = it->second;
        }
        probe_mat_.push_back(std::move(row));
      }
    }
    if (qmat_rank(probe_mat_) == n) return;
  }
  throw std::runtime_error("wring: probe columns do not separate the basis");
}

QVec16 WRing::solve_in_basis(const std::function<Col(const Col&)>& op) const {
  std::vector<Col> ocols;
  for (int c : probe_cols_) ocols.push_back(op(Col{{c, QScalar(1)}}));
  QVec b;
  b.reserve(probe_pos_.size());
  std::vector<Col> rem = ocols;
  for (const auto& [s, r] : probe_pos_) {
    auto it = rem[s].find(r);
    if (it == rem[s].end()) b.emplace_back();
    else {
      b.push_back(it->second);
      rem[s].erase(it);
    }
  }
  for (const auto& m : rem)
    if (!m.empty()) throw std::runtime_error("wring: operator leaves the basis span");
  QVec x = qmat_solve(probe_mat_, b);
  QVec16 out;
  for (int i = 0; i < n; ++i) out[i] = x[i];
  return out;
}

void WRing::build_table() {
  // scalars for contracting a V-V algebra element through each leg pattern
  std::array<QScalar, 5> cupT, capT, yupT, ydnT;
  for (int d = 0; d < 5; ++d) {
    Vec5 e = da_.basis_elem(d);
    cupT[d] = da_.cup_through(e);
    capT[d] = da_.cap_through(e);
    yupT[d] = da_.yup_through(e);
    ydnT[d] = da_.ydown_through(e);
  }
  QScalar loop = DiagAlg::loop_value(), bub = DiagAlg::bubble_value();
  auto sc = [&](const QScalar& v, int k) {
    QVec16 r{};
    r[k] = v;
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec16 t{};
      if (dom_sector(i) == cod_sector(j)) {
        if (i < 5 && j < 5) t = lift(da_.table(i, j));
        else if (i < 5 && j == CAPE) t = sc(capT[i], CAPE);
        else if (i < 5 && (j == YU_L || j == YU_R)) t = sc(yupT[i], j);
        else if (i == CUPE && j < 5) t = sc(cupT[j], CUPE);
        else if (i == CUPE && j == CAPE) t = sc(loop, EMPTY);
        else if (i == CAPE && j == CUPE) t = basis_elem(CUPCAP);
        else if (i == CAPE && j == EMPTY) t = basis_elem(CAPE);
        else if (i == EMPTY) t = basis_elem(j);  // j is EMPTY or CUPE
        else if (i == LEFTID || i == RIGHTID) t = basis_elem(j);
        else if (i == SWAP_LR)
          t = j == LEFTID ? basis_elem(SWAP_LR)
                          : j == SWAP_RL ? basis_elem(RIGHTID) : basis_elem(YD_R);
        else if (i == SWAP_RL)
          t = j == RIGHTID ? basis_elem(SWAP_RL)
                           : j == SWAP_LR ? basis_elem(LEFTID) : basis_elem(YD_L);
        else if (i == YD_L || i == YD_R) {
          if (j < 5) t = sc(ydnT[j], i);
          else if (j == YU_L) t = i == YD_L ? sc(bub, LEFTID) : sc(bub, SWAP_LR);
          else if (j == YU_R) t = i == YD_R ? sc(bub, RIGHTID) : sc(bub, SWAP_RL);
          // j == CAPE: y_down of cap vanishes
        } else if (i == YU_L)
          t = j == LEFTID ? basis_elem(YU_L)
                          : j == SWAP_RL ? basis_elem(YU_R) : basis_elem(VERTICAL);
        else if (i == YU_R)
          t = j == RIGHTID ? basis_elem(YU_R)
                           : j == SWAP_LR ? basis_elem(YU_L) : basis_elem(VERTICAL);
        // i == CUPE with j in {YU_L, YU_R}: cup of y_up vanishes
      }
      table_[i][j] = t;
    }
  // certify every entry outside the V-V block against the probe columns
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < 5 && j < 5) continue;
      QVec16 direct = solve_in_basis(
          [&](const Col& v) { return basis_apply(i, basis_apply(j, v)); });
      if (direct != table_[i][j]) throw std::runtime_error("wring: product table mismatch");
    }
}

QVec16 WRing::mul(const QVec16& x, const QVec16& y) const {
  QVec16 out{};
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      QScalar c = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (!table_[i][j][k].is_zero()) out[k] += c * table_[i][j][k];
    }
  }
  return out;
}

Vec16 WRing::mul(const Vec16& x, const Vec16& y) const {
  Vec16 out{};
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      RatZ c = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (!table_[i][j][k].is_zero()) out[k] += c * RatZ(table_[i][j][k]);
    }
  }
  return out;
}

const std::array<long, 5>& WRing::channel_dims() {
  static const std::array<long, 5> d = {1, 248, 3875, 27000, 30380};
  return d;
}

WRing::Channels WRing::channel_blocks(const QVec16& c) const {
  Channels ch;
  // trivial channel: multiplicity basis is the cap embedding and w tensor w
  auto split_triv = [&](const Col& img, QScalar& a, QScalar& b) {
    Col vv = img;
    auto it = vv.find(flat(W, W));
    if (it != vv.end()) { b = it->second; vv.erase(it); }
    if (!vv.empty()) {
      a = vv.begin()->second / capcol_.front().second;
      Col chk;
      for (const auto& [r, v] : capcol_) {
        QScalar t = a * v;
        if (!t.is_zero()) chk.emplace(r, t);
      }
      if (chk != vv) throw std::runtime_error("wring: trivial channel leak");
    }
  };
  ch.triv.assign(2, QVec(2));
  Col e1;
  for (const auto& [r, v] : capcol_) e1.emplace(r, v);
  split_triv(expr_apply(c, e1), ch.triv[0][0], ch.triv[1][0]);
  split_triv(expr_apply(c, Col{{flat(W, W), QScalar(1)}}), ch.triv[0][1], ch.triv[1][1]);

  // adjoint channel: images of the highest weight vector under the three
  // embeddings (trivalent vertex, right w, left w)
  const auto& ycol = da_.y_up().cols[theta_];
  std::array<Col, 3> emb;
  for (const auto& [r, v] : ycol) emb[0].emplace(flat(r / N, r % N), v);
  emb[1].emplace(flat(theta_, W), QScalar(1));
  emb[2].emplace(flat(W, theta_), QScalar(1));
  ch.adj.assign(3, QVec(3));
  for (int k = 0; k < 3; ++k) {
    Col img = expr_apply(c, emb[k]);
    Col vv;
    for (const auto& [r, v] : img) {
      int a = r / NW, b = r % NW;
      if (a == W && b == W) throw std::runtime_error("wring: adjoint channel leak");
      if (b == W) {
        if (a != theta_) throw std::runtime_error("wring: adjoint channel leak");
        ch.adj[1][k] = v;
      } else if (a == W) {
        if (b != theta_) throw std::runtime_error("wring: adjoint channel leak");
        ch.adj[2][k] = v;
      } else vv.emplace(r, v);
    }
    if (!vv.empty()) {
      QScalar r0 = vv.begin()->second / emb[0].begin()->second;
      Col chk;
      for (const auto& [r, v] : emb[0]) {
        QScalar t = r0 * v;
        if (!t.is_zero()) chk.emplace(r, t);
      }
      if (chk != vv) throw std::runtime_error("wring: adjoint channel leak");
      ch.adj[0][k] = r0;
    }
  }

  // remaining channels live inside V tensor V and are multiplicity free:
  // the product against the idempotent is a scalar multiple of it
  for (int m = 2; m < 5; ++m) {
    QVec16 p = lift(da_.idempotents()[m]);
    QVec16 prod = mul(c, p);
    QScalar lam;
    int pivot = -1;
    for (int k = 0; k < n && pivot < 0; ++k)
      if (!p[k].is_zero()) pivot = k;
    lam = prod[pivot] / p[pivot];
    for (int k = 0; k < n; ++k)
      if (prod[k] != lam * p[k]) throw std::runtime_error("wring: channel not scalar");
    ch.scalars[m - 2] = lam;
  }
  return ch;
}

long WRing::rank_of(const QVec16& c) const {
  Channels ch = channel_blocks(c);
  const auto& d = channel_dims();
  long r = (long)qmat_rank(ch.triv) * d[0] + (long)qmat_rank(ch.adj) * d[1];
  for (int m = 0; m < 3; ++m)
    if (!ch.scalars[m].is_zero()) r += d[m + 2];
  return r;
}

QScalar WRing::trace_of(const QVec16& c) const {
  QScalar t;
  for (int i = 0; i < 5; ++i) t += c[i] * da_.basis_trace(i);
  t += c[EMPTY];
  t += c[LEFTID] * QScalar(248);
  t += c[RIGHTID] * QScalar(248);
  return t;
}

std::vector<std::string> WRing::check_intertwiners() const {
  // w spans a trivial summand for the finite subalgebra: generators 1..8 must
  // kill it (e, f), fix it (k), and never map V into it
  std::vector<std::string> bad;
  for (int i = 1; i <= 8; ++i)
    for (char kind : {'e', 'f', 'k'}) {
      const SparseOp& g = aw_.gen(kind, i);
      const auto& wc = g.cols[W];
      bool ok = kind == 'k' ? (wc.size() == 1 && wc[0].first == W && wc[0].second.is_one())
                            : wc.empty();
      for (int c = 0; c < W && ok; ++c)
        for (const auto& [r, v] : g.cols[c])
          if (r == W) { ok = false; break; }
      if (!ok)
        bad.push_back(std::string("generator ") + kind + std::to_string(i) +
                      " does not respect the trivial summand");
    }
  return bad;
}

const WRing& w_ring() {
  static WRing wr(affine_w());
  return wr;
}

}  // namespace e8r
