#include "e8r/repv.hpp"
#include <sstream>
#include <stdexcept>

namespace e8r {

RepV::RepV(const RootSystem& rs) : rs_(rs) {
  weights_.resize(dim);
  for (int b = 0; b < 240; ++b) weights_[b] = rs.roots()[b];
  for (int j = 1; j <= 8; ++j) weights_[u_index(j)] = Root{};
  build_generators();
  build_B();
  build_T();
}

void RepV::build_generators() {
  for (int i = 1; i <= 8; ++i) {
    SparseOp e({dim}, {dim}), f({dim}, {dim}), k({dim}, {dim}), kv({dim}, {dim});
    Root ai = rs_.simple(i);
    for (int b = 0; b < 240; ++b) {
      const Root& beta = rs_.roots()[b];
      // e_i
      Root up = beta + ai;
      if (rs_.is_root(up))
        e.add_to(rs_.index(up), b, QScalar(RatQ(Laurent::mono(rs_.epsilon(ai, beta), 0))));
      else if (up == Root{})
        e.add_to(u_index(i), b, QScalar(1));
      // f_i
      Root dn = beta - ai;
      if (rs_.is_root(dn))
        f.add_to(rs_.index(dn), b, QScalar(RatQ(Laurent::mono(rs_.epsilon(-ai, beta), 0))));
      else if (dn == Root{})
        f.add_to(u_index(i), b, QScalar(-1));
      // k_i
      int p = rs_.pairing(i, beta);
      k.add_to(b, b, QScalar::q(p));
      kv.add_to(b, b, QScalar::q(-p));
    }
    for (int j = 1; j <= 8; ++j) {
      int cij = rs_.cartan().C[i][j];
      if (cij != 0) {
        e.add_to(rs_.index(ai), u_index(j), -QScalar::qnum(cij));
        f.add_to(rs_.index(-ai), u_index(j), QScalar::qnum(cij));
      }
      k.add_to(u_index(j), u_index(j), QScalar(1));
      kv.add_to(u_index(j), u_index(j), QScalar(1));
    }
    e_[i - 1] = e; f_[i - 1] = f; k_[i - 1] = k; kinv_[i - 1] = kv;
    eT_[i - 1] = e.transpose(); fT_[i - 1] = f.transpose();
    kT_[i - 1] = k.transpose(); kinvT_[i - 1] = kv.transpose();
  }
}

const SparseOp& RepV::gen(char kind, int i) const {
  switch (kind) {
    case 'e': return e_[i - 1];
    case 'f': return f_[i - 1];
    case 'k': return k_[i - 1];
    case 'K': return kinv_[i - 1];
  }
  throw std::runtime_error("RepV::gen: bad kind");
}

const SparseOp& RepV::genT(char kind, int i) const {
  switch (kind) {
    case 'e': return eT_[i - 1];
    case 'f': return fT_[i - 1];
    case 'k': return kT_[i - 1];
    case 'K': return kinvT_[i - 1];
  }
  throw std::runtime_error("RepV::genT: bad kind");
}

void RepV::build_B() {
  B_.arity = 2;
  for (int b = 0; b < 240; ++b) {
    const Root& beta = rs_.roots()[b];
    int nb = rs_.index(-beta);
    QScalar v = QScalar(RatQ(Laurent::mono(rs_.epsilon(beta, beta),
                                           1 - RootSystem::height(beta))));
    B_.set(b, nb, -1, v);
  }
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      int cij = rs_.cartan().C[i][j];
      if (cij != 0) B_.set(u_index(i), u_index(j), -1, QScalar::qnum(cij));
    }
}

QScalar RepV::T_root(int bi, int ci, int di) const {
  const Root* r[3] = {&rs_.roots()[bi], &rs_.roots()[ci], &rs_.roots()[di]};
  int idx[3] = {bi, ci, di};
  // T(a,b,c) = q^{2 height(c)} T(c,a,b); rotate until base pattern matches
  bool found = false;
  QScalar value;
  int shift = 0;  // accumulated exponent
  int a = 0, b = 1, c = 2;
  for (int rot = 0; rot < 3; ++rot) {
    if (RootSystem::height(*r[a]) > 0 && RootSystem::height(*r[c]) < 0) {
      int ell = rs_.triple_ell(idx[a], idx[b]);
      if (ell < 0) throw std::runtime_error("T_root: not a triple");
      int sg = rs_.epsilon(*r[a], *r[a]) * rs_.epsilon(*r[b], *r[b]) * rs_.epsilon(*r[b], *r[a]);
      QScalar cand = QScalar(RatQ(Laurent::mono(sg, -41 + ell + shift)));
      if (found && cand != value)
        throw std::runtime_error("T_root: inconsistent cyclic reduction");
      value = cand;
      found = true;
    }
    // rotate: (a,b,c) = q^{2h(c)} (c,a,b)
    shift += 2 * RootSystem::height(*r[c]);
    int na = c, nb = a, nc = b;
    a = na; b = nb; c = nc;
  }
  if (!found) throw std::runtime_error("T_root: no base pattern applies");
  return value;
}

void RepV::build_T() {
  T_.arity = 3;
  // root-triple entries
  for (const auto& t : rs_.triples()) T_.set(t.b, t.c, t.d, T_root(t.b, t.c, t.d));

  // u-v-v entries: t1[j][beta] = T(u_j (x) v_beta (x) v_{-beta}),
  // propagated from the seeds at beta = +-alpha_j via e_i-invariance:
  //   eps(ai,b) t1[b+ai] + q^{<ai,b>} eps(ai,-b-ai) t1[b] = [C_ij] T(ai, b, -b-ai)
  const auto& d5 = rs_.cartan().dist5;
  for (int j = 1; j <= 8; ++j) {
    QScalar dfac = QScalar::q(d5[j]) + QScalar::q(-d5[j]);
    std::vector<QScalar> t1(240);
    std::vector<char> known(240, 0);
    int sj = rs_.index(rs_.simple(j)), nj = rs_.index(-rs_.simple(j));
    t1[sj] = QScalar::q(1) * dfac;
    t1[nj] = -QScalar::q(1) * dfac;
    known[sj] = known[nj] = 1;
    std::vector<int> queue{sj, nj};
    size_t head = 0;
    auto relate = [&](int bidx, int i) {
      // edge between beta and beta+alpha_i (if the latter is a root)
      const Root& beta = rs_.roots()[bidx];
      Root ai = rs_.simple(i);
      Root up = beta + ai;
      int uidx = rs_.index(up);
      if (uidx < 0) return;
      QScalar rhs;
      {
        int a_i = rs_.index(ai), mi = rs_.index(-up);
        rhs = QScalar::qnum(rs_.cartan().C[i][j]) * T_root(a_i, bidx, mi);
      }
      QScalar ce = QScalar(RatQ(Laurent::mono(rs_.epsilon(ai, beta), 0)));
      QScalar cb = QScalar::q(rs_.pairing(i, beta)) *
                   QScalar(RatQ(Laurent::mono(rs_.epsilon(ai, -up), 0)));
      if (known[bidx] && known[uidx]) {
        if (ce * t1[uidx] + cb * t1[bidx] != rhs)
          throw std::runtime_error("T u-entries: invariance relations inconsistent");
      } else if (known[bidx]) {
        t1[uidx] = (rhs - cb * t1[bidx]) * ce.inv();
        known[uidx] = 1;
        queue.push_back(uidx);
      } else if (known[uidx]) {
        t1[bidx] = (rhs - ce * t1[uidx]) * cb.inv();
        known[bidx] = 1;
        queue.push_back(bidx);
      }
    };
    while (head < queue.size()) {
      int b = queue[head++];
      for (int i = 1; i <= 8; ++i) {
        relate(b, i);                                  // edge b -> b+ai
        Root dn = rs_.roots()[b] - rs_.simple(i);      // edge b-ai -> b
        int didx = rs_.index(dn);
        if (didx >= 0) relate(didx, i);
      }
    }
    for (int b = 0; b < 240; ++b)
      if (!known[b]) throw std::runtime_error("T u-entries: propagation incomplete");
    // consistency sweep over every edge
    for (int b = 0; b < 240; ++b)
      for (int i = 1; i <= 8; ++i) relate(b, i);
    // place entries: (u_j,b,-b), (b,-b,u_j), (-b,u_j,b)*q^{2h}
    for (int b = 0; b < 240; ++b) {
      int mb = rs_.index(-rs_.roots()[b]);
      T_.set(u_index(j), b, mb, t1[b]);
      T_.set(b, mb, u_index(j), t1[b]);
      T_.set(mb, u_index(j), b, QScalar::q(2 * RootSystem::height(rs_.roots()[b])) * t1[b]);
    }
  }

  // u^3 entries
  QScalar qq = QScalar::q(1) - QScalar::q(-1);
  for (int i = 1; i <= 8; ++i) {
    QScalar dfac = QScalar::q(d5[i]) + QScalar::q(-d5[i]);
    T_.set(u_index(i), u_index(i), u_index(i), qq * QScalar::qnum(2) * dfac);
    for (int k = 1; k <= 8; ++k) {
      if (k == i || !rs_.cartan().A[i][k]) continue;
      int s = d5[k] > d5[i] ? -1 : +1;  // Dynkin orientation toward node 5
      QScalar val = qq * QScalar::qnum(s * d5[k]);
      T_.set(u_index(i), u_index(i), u_index(k), val);
      T_.set(u_index(i), u_index(k), u_index(i), val);
      T_.set(u_index(k), u_index(i), u_index(i), val);
    }
  }
}

FormTensor RepV::form_compose(const FormTensor& t,
                              const std::vector<const SparseOp*>& site_ops) const {
  FormTensor out;
  out.arity = t.arity;
  for (const auto& [x, v] : t.ent) {
    // expand site by site; site_ops[s] given as transposed matrices (row access)
    std::vector<std::pair<std::array<int, 3>, QScalar>> cur{{{-1, -1, -1}, v}};
    for (int s = 0; s < t.arity; ++s) {
      std::vector<std::pair<std::array<int, 3>, QScalar>> nxt;
      for (const auto& [y, w] : cur)
        for (const auto& [yc, a] : site_ops[s]->cols[x[s]]) {
          auto y2 = y;
          y2[s] = yc;
          nxt.emplace_back(y2, w * a);
        }
      cur = std::move(nxt);
    }
    for (const auto& [y, w] : cur) {
      auto it = out.ent.find(y);
      if (it == out.ent.end()) out.ent.emplace(y, w);
      else it->second += w;
    }
  }
  for (auto it = out.ent.begin(); it != out.ent.end();) {
    if (it->second.is_zero()) it = out.ent.erase(it);
    else ++it;
  }
  return out;
}

static bool form_equal(const FormTensor& a, const FormTensor& b) {
  return a.ent == b.ent;
}

std::vector<std::string> RepV::check_invariance(const FormTensor& t) const {
  std::vector<std::string> bad;
  int n = t.arity;
  auto add_forms = [&](FormTensor& acc, const FormTensor& x) {
    for (const auto& [k, v] : x.ent) {
      auto it = acc.ent.find(k);
      if (it == acc.ent.end()) acc.ent.emplace(k, v);
      else {
        it->second += v;
        if (it->second.is_zero()) acc.ent.erase(it);
      }
    }
  };
  const SparseOp idT = SparseOp::identity({dim}).transpose();
  for (int i = 1; i <= 8; ++i) {
    // e_i: sum over position p of k..k e 1..1
    FormTensor acc; acc.arity = n;
    for (int p = 0; p < n; ++p) {
      std::vector<const SparseOp*> ops(n, &idT);
      for (int s = 0; s < p; ++s) ops[s] = &genT('k', i);
      ops[p] = &genT('e', i);
      add_forms(acc, form_compose(t, ops));
    }
    if (!acc.ent.empty()) bad.push_back("e_" + std::to_string(i));
    // f_i: positions with trailing k^{-1}
    FormTensor accf; accf.arity = n;
    for (int p = 0; p < n; ++p) {
      std::vector<const SparseOp*> ops(n, &idT);
      ops[p] = &genT('f', i);
      for (int s = p + 1; s < n; ++s) ops[s] = &genT('K', i);
      add_forms(accf, form_compose(t, ops));
    }
    if (!accf.ent.empty()) bad.push_back("f_" + std::to_string(i));
    // k_i
    std::vector<const SparseOp*> ops(n, &genT('k', i));
    if (!form_equal(form_compose(t, ops), t)) bad.push_back("k_" + std::to_string(i));
  }
  return bad;
}

std::vector<std::string> RepV::serre_check() const {
  std::vector<std::string> bad;
  QScalar denom = (QScalar::q(1) - QScalar::q(-1)).inv();
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const SparseOp &ei = gen('e', i), &ej = gen('e', j);
      const SparseOp &fi = gen('f', i), &fj = gen('f', j);
      const SparseOp &ki = gen('k', i), &kj = gen('k', j);
      int cij = rs_.cartan().C[i][j];
      if (ki.compose(kj) != kj.compose(ki)) bad.push_back("kk " + std::to_string(i) + "," + std::to_string(j));
      if (ki.compose(ej).compose(gen('K', i)) != ej.scaled(QScalar::q(cij)))
        bad.push_back("kek " + std::to_string(i) + "," + std::to_string(j));
      if (ki.compose(fj).compose(gen('K', i)) != fj.scaled(QScalar::q(-cij)))
        bad.push_back("kfk " + std::to_string(i) + "," + std::to_string(j));
      SparseOp comm = ei.compose(fj) - fj.compose(ei);
      SparseOp rhs = (i == j) ? (ki - gen('K', i)).scaled(denom)
                              : SparseOp({dim}, {dim});
      if (comm != rhs) bad.push_back("ef " + std::to_string(i) + "," + std::to_string(j));
      if (i != j && cij == 0) {
        if (ei.compose(ej) != ej.compose(ei)) bad.push_back("ee0 " + std::to_string(i) + "," + std::to_string(j));
        if (fi.compose(fj) != fj.compose(fi)) bad.push_back("ff0 " + std::to_string(i) + "," + std::to_string(j));
      }
      if (cij == -1) {
        SparseOp s = ei.compose(ej).compose(ej) - ej.compose(ei).compose(ej).scaled(QScalar::qnum(2))
                     + ej.compose(ej).compose(ei);
        if (!s.is_zero()) bad.push_back("serre-e " + std::to_string(i) + "," + std::to_string(j));
        SparseOp sf = fi.compose(fj).compose(fj) - fj.compose(fi).compose(fj).scaled(QScalar::qnum(2))
                      + fj.compose(fj).compose(fi);
        if (!sf.is_zero()) bad.push_back("serre-f " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  return bad;
}

const RepV& rep_v() {
  static const RepV rv(root_system());
  return rv;
}

}  // namespace e8r
