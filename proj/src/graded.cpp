#include "hinfty/graded.hpp"

#include <sstream>

namespace hinfty {

HInftyElem HInftyElem::of(const HTensor& t) {
  HInftyElem x;
  x.add(t);
  return x;
}

HInftyElem HInftyElem::of_scalar(const Scalar& s) { return of(HTensor::scalar(s)); }

void HInftyElem::add(const HTensor& t) {
  if (t.is_zero()) return;
  auto [it, fresh] = comp.emplace(t.deg, t);
  if (!fresh) {
    it->second.axpy(Scalar(1), t);
    if (it->second.is_zero()) comp.erase(it);
  }
}

std::string HInftyElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, t] : comp) {
    if (!first) os << " + ";
    os << "[deg " << d << "] " << t.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HInftyElem hinfty_product(const HopfAlgebra& H, const HInftyElem& x, const HInftyElem& y) {
  HInftyElem r;
  for (const auto& [dx, tx] : x.comp) {
    auto it = y.comp.find(dx);
    if (it == y.comp.end()) continue;  // degrees differ: product is 0
    r.add(htensor_mul(H, tx, it->second));
  }
  return r;
}

void HInftyTensor2::add(const Word& a, const Word& b, const Scalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, fresh] = t.emplace(key, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

HInftyTensor2 hinfty_coproduct(const HInftyElem& x) {
  HInftyTensor2 r;
  for (const auto& [d, comp] : x.comp)
    for (const auto& [w, c] : comp.t)
      for (int i = 0; i <= d; ++i)
        r.add(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()), c);
  return r;
}

Scalar hinfty_counit(const HInftyElem& x) {
  auto it = x.comp.find(0);
  if (it == x.comp.end()) return Scalar(0);
  return it->second.t.at(Word{});
}

HInftyTensor2 hinfty_tensor2_product(const HopfAlgebra& H, const HInftyTensor2& x,
                                     const HInftyTensor2& y) {
  HInftyTensor2 r;
  for (const auto& [kx, cx] : x.t)
    for (const auto& [ky, cy] : y.t) {
      if (kx.first.size() != ky.first.size() || kx.second.size() != ky.second.size())
        continue;
      HTensor left = htensor_mul(H, HTensor::word(kx.first), HTensor::word(ky.first));
      HTensor right = htensor_mul(H, HTensor::word(kx.second), HTensor::word(ky.second));
      for (const auto& [lw, lc] : left.t)
        for (const auto& [rw, rc] : right.t) r.add(lw, rw, cx * cy * lc * rc);
    }
  return r;
}

const ModulePres& GradedModule::at(int n) const {
  if (n < 0 || n > trunc)
    throw TruncationError("graded degree " + std::to_string(n) +
                          " outside truncation N=" + std::to_string(trunc));
  return piece[n];
}

std::vector<int> GradedModule::dims() const {
  std::vector<int> d(trunc + 1);
  for (int n = 0; n <= trunc; ++n) d[n] = piece[n].rank;
  return d;
}

void GradedVec::add(int deg, const SparseVec& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = comp.emplace(deg, v);
  if (!fresh) {
    it->second.axpy(Scalar(1), v);
    if (it->second.is_zero()) comp.erase(it);
  }
}

GradedMap GradedMap::zero(const GradedModule& V, const GradedModule& W) {
  GradedMap g;
  g.trunc = V.trunc;
  g.f.reserve(V.trunc + 1);
  for (int n = 0; n <= V.trunc; ++n) g.f.emplace_back(W.at(n).rank, V.at(n).rank);
  return g;
}

GradedMap GradedMap::identity(const GradedModule& V) {
  GradedMap g;
  g.trunc = V.trunc;
  for (int n = 0; n <= V.trunc; ++n) g.f.push_back(LinearMap::identity(V.at(n).rank));
  return g;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (inner.trunc != trunc) throw TruncationError("composing maps of different truncations");
  GradedMap g;
  g.trunc = trunc;
  for (int n = 0; n <= trunc; ++n) g.f.push_back(f[n].compose(inner.f[n]));
  return g;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  GradedMap g;
  g.trunc = trunc;
  for (int n = 0; n <= trunc; ++n) g.f.push_back(f[n] + o.f[n]);
  return g;
}

GradedMap GradedMap::operator*(const Scalar& s) const {
  GradedMap g;
  g.trunc = trunc;
  for (const auto& m : f) g.f.push_back(m * s);
  return g;
}

bool GradedMap::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

GradedVec GradedMap::apply(const GradedVec& v) const {
  GradedVec r;
  for (const auto& [d, x] : v.comp) {
    if (d > trunc) throw TruncationError("vector beyond the map truncation");
    r.add(d, f[d].apply(x));
  }
  return r;
}

GradedVec module_action(const GradedModule& M, const HInftyElem& h, const GradedVec& v) {
  GradedVec r;
  for (const auto& [dh, th] : h.comp) {
    if (dh > M.trunc) throw TruncationError("acting element beyond truncation");
    auto it = v.comp.find(dh);
    if (it == v.comp.end()) continue;  // tensor degrees differ: zero
    r.add(dh, M.at(dh).act_tensor(th, it->second));
  }
  return r;
}

GradedModule unit_module(const HopfAlgebra& H, int trunc) {
  GradedModule m;
  m.H = &H;
  m.trunc = trunc;
  m.prov = GradedModule::Prov::Unit;
  m.piece.resize(trunc + 1);
  m.piece[0] = ModulePres::space(1);
  int d = H.dim();
  for (int n = 1; n <= trunc; ++n) {
    ModulePres p;
    p.deg = n;
    p.rank = 0;
    p.slot.assign(n, std::vector<LinearMap>(d, LinearMap(0, 0)));
    m.piece[n] = std::move(p);
  }
  return m;
}

GradedModule concentrated(const HopfAlgebra& H, int trunc, int deg, ModulePres mod) {
  if (deg > trunc) throw TruncationError("concentration degree beyond truncation");
  GradedModule m = unit_module(H, trunc);
  m.prov = GradedModule::Prov::Direct;
  if (deg != 0) m.piece[0] = ModulePres::space(0);
  m.piece[deg] = std::move(mod);
  return m;
}

namespace {

// Direct sum of presentations of equal degree, with block metadata.
ModulePres pres_direct_sum(const HopfAlgebra& H, int deg,
                           std::vector<std::pair<Block, ModulePres>> parts) {
  ModulePres out;
  out.deg = deg;
  out.rank = 0;
  int d = H.dim();
  out.slot.assign(deg, std::vector<LinearMap>(d, LinearMap(0, 0)));
  for (auto& [blk, pres] : parts) {
    blk.offset = out.rank;
    blk.dim = pres.rank;
    out.blocks.push_back(blk);
    for (int s = 0; s < deg; ++s)
      for (int b = 0; b < d; ++b)
        out.slot[s][b] = LinearMap::direct_sum(out.slot[s][b], pres.slot[s][b]);
    out.rank += pres.rank;
  }
  return out;
}

}  // namespace

GradedModule boxtimes(const GradedModule& V, const GradedModule& W) {
  if (V.H != W.H || V.trunc != W.trunc)
    throw TruncationError("⊠ needs matching algebra and truncation");
  GradedModule m;
  m.H = V.H;
  m.trunc = V.trunc;
  m.prov = GradedModule::Prov::Box;
  m.factors = {V, W};
  m.piece.resize(m.trunc + 1);
  for (int n = 0; n <= m.trunc; ++n) {
    std::vector<std::pair<Block, ModulePres>> parts;
    for (int p = 0; p <= n; ++p) {
      Block blk;
      blk.tag = "box";
      blk.p = p;
      blk.q = n - p;
      parts.emplace_back(blk, ModulePres::boxtimes(V.at(p), W.at(n - p)));
    }
    m.piece[n] = pres_direct_sum(*V.H, n, std::move(parts));
  }
  return m;
}

GradedMap boxtimes_map(const GradedMap& f, const GradedMap& g) {
  GradedMap out;
  out.trunc = f.trunc;
  for (int n = 0; n <= f.trunc; ++n) {
    LinearMap m(0, 0);
    for (int p = 0; p <= n; ++p)
      m = LinearMap::direct_sum(m, LinearMap::kronecker(f.f[p], g.f[n - p]));
    out.f.push_back(std::move(m));
  }
  return out;
}

Perm star_sort(const SetMap& f) {
  // Rank of each source slot in the fiber-grouped order (fibers in target
  // order, each fiber ascending).
  std::vector<int> rank(f.src);
  int pos = 0;
  for (const auto& fib : f.fibers())
    for (int j : fib) rank[j] = pos++;
  return Perm(rank);
}

namespace {

// ⊠-block of a ⊗*-summand keyed by f: tensor product over the factors of
// their |fiber|-degree pieces, slots routed through the fiber sort.
ModulePres star_block_pres(const HopfAlgebra& H, const std::vector<GradedModule>& factors,
                           const SetMap& f) {
  int k = static_cast<int>(factors.size());
  auto fibs = f.fibers();
  std::vector<const ModulePres*> comp(k);
  for (int i = 0; i < k; ++i) comp[i] = &factors[i].at(static_cast<int>(fibs[i].size()));
  ModulePres out;
  out.deg = f.src;
  out.rank = 1;
  for (int i = 0; i < k; ++i) out.rank *= comp[i]->rank;
  int d = H.dim();
  out.slot.assign(f.src, std::vector<LinearMap>(d, LinearMap(out.rank, out.rank)));
  for (int j = 0; j < f.src; ++j) {
    int t = f.to[j];
    int q = static_cast<int>(std::find(fibs[t].begin(), fibs[t].end(), j) - fibs[t].begin());
    for (int b = 0; b < d; ++b) {
      LinearMap acc(1, 1);
      acc.col[0] = SparseVec::unit(0);
      for (int i = 0; i < k; ++i) {
        const LinearMap& part =
            i == t ? comp[i]->slot[q][b] : LinearMap::identity(comp[i]->rank);
        acc = LinearMap::kronecker(acc, part);
      }
      out.slot[j][b] = std::move(acc);
    }
  }
  return out;
}

}  // namespace

GradedModule star_tensor(const HopfAlgebra& H, const std::vector<GradedModule>& factors) {
  if (factors.empty()) return unit_module(H, 0);
  int trunc = factors[0].trunc;
  for (const auto& v : factors)
    if (v.trunc != trunc || v.H != factors[0].H)
      throw TruncationError("⊗* needs matching algebra and truncation");
  GradedModule m;
  m.H = factors[0].H;
  m.trunc = trunc;
  m.prov = GradedModule::Prov::Star;
  m.factors = factors;
  m.piece.resize(trunc + 1);
  int k = static_cast<int>(factors.size());
  for (int n = 0; n <= trunc; ++n) {
    std::vector<std::pair<Block, ModulePres>> parts;
    for (const auto& f : SetMap::all(n, k)) {
      Block blk;
      blk.tag = "star";
      blk.key = f;
      parts.emplace_back(blk, star_block_pres(H, factors, f));
    }
    m.piece[n] = pres_direct_sum(H, n, std::move(parts));
  }
  return m;
}

Braiding braiding(const Perm& tau, const GradedModule& X) {
  if (X.prov != GradedModule::Prov::Star)
    throw std::invalid_argument("braiding needs a ⊗*-product");
  int k = static_cast<int>(X.factors.size());
  if (tau.n() != k) throw std::invalid_argument("braiding permutation arity mismatch");
  std::vector<GradedModule> permuted(k);
  Perm inv = tau.inverse();
  for (int i = 0; i < k; ++i) permuted[i] = X.factors[inv.p[i]];
  Braiding out{star_tensor(*X.H, permuted), GradedMap{}};
  out.map.trunc = X.trunc;
  for (int n = 0; n <= X.trunc; ++n) {
    LinearMap m(out.target.at(n).rank, X.at(n).rank);
    for (const auto& blk : X.at(n).blocks) {
      SetMap f2 = SetMap(n, k, [&] {
        std::vector<int> t(n);
        for (int j = 0; j < n; ++j) t[j] = tau.p[blk.key.to[j]];
        return t;
      }());
      const Block* tgt = nullptr;
      for (const auto& b2 : out.target.at(n).blocks)
        if (b2.key == f2) tgt = &b2;
      if (!tgt) throw std::logic_error("braiding target block missing");
      // Radices: X block lists factor components in factor order.
      auto fibs = blk.key.fibers();
      std::vector<int> rx(k);
      for (int i = 0; i < k; ++i)
        rx[i] = X.factors[i].at(static_cast<int>(fibs[i].size())).rank;
      for (int idx = 0; idx < blk.dim; ++idx) {
        // Decode X digits, re-encode in the target (digit i comes from
        // source digit inv(i); its radix matches by construction).
        std::vector<int> digits(k);
        int rem = idx;
        for (int i = k - 1; i >= 0; --i) {
          digits[i] = rx[i] ? rem % rx[i] : 0;
          rem = rx[i] ? rem / rx[i] : rem;
        }
        int tgt_idx = 0;
        for (int i = 0; i < k; ++i) {
          int src_digit = digits[inv.p[i]];
          int radix = rx[inv.p[i]];
          tgt_idx = tgt_idx * radix + src_digit;
        }
        m.col[blk.offset + idx].set(tgt->offset + tgt_idx, Scalar(1));
      }
    }
    out.map.f.push_back(std::move(m));
  }
  return out;
}

GradedMap star_map(const GradedModule& X, const GradedModule& Y,
                   const std::vector<GradedMap>& fs) {
  if (X.prov != GradedModule::Prov::Star || Y.prov != GradedModule::Prov::Star)
    throw std::invalid_argument("star_map needs ⊗*-products");
  int k = static_cast<int>(X.factors.size());
  GradedMap out;
  out.trunc = X.trunc;
  for (int n = 0; n <= X.trunc; ++n) {
    LinearMap m(Y.at(n).rank, X.at(n).rank);
    for (const auto& blk : X.at(n).blocks) {
      const Block* tgt = nullptr;
      for (const auto& b2 : Y.at(n).blocks)
        if (b2.key == blk.key) tgt = &b2;
      if (!tgt) throw std::logic_error("star_map target block missing");
      auto fibs = blk.key.fibers();
      LinearMap acc(1, 1);
      acc.col[0] = SparseVec::unit(0);
      for (int i = 0; i < k; ++i)
        acc = LinearMap::kronecker(acc, fs[i].f[static_cast<int>(fibs[i].size())]);
      for (int j = 0; j < acc.cols; ++j)
        for (const auto& [i2, c] : acc.col[j].c)
          m.col[blk.offset + j].add(tgt->offset + i2, c);
    }
    out.f.push_back(std::move(m));
  }
  return out;
}

GradedModule regular_module(const HopfAlgebra& H, const ModulePres& V, int trunc) {
  if (V.deg != 1) throw std::invalid_argument("regular module wants an H-module (degree 1)");
  GradedModule m;
  m.H = &H;
  m.trunc = trunc;
  m.prov = GradedModule::Prov::Regular;
  m.regular_base = V;
  m.piece.resize(trunc + 1);
  for (int n = 0; n <= trunc; ++n) {
    InducedModule ind(H, V, SetMap(n, 1, std::vector<int>(n, 0)));
    m.piece[n] = ind.pres();
  }
  return m;
}

std::vector<SetMap> iota_class_maps(int n, int trunc) {
  std::vector<SetMap> out;
  // Restricted growth strings enumerate set partitions of [n]; blocks are
  // numbered by first occurrence, matching the canonical target labeling.
  std::vector<int> a(n, 0);
  auto emit = [&](int p) {
    for (int j = 0; p + j <= trunc; ++j) out.push_back(SetMap(n, p + j, a));
  };
  if (n == 0) {
    emit(0);
    return out;
  }
  while (true) {
    int p = 0;
    for (int v : a) p = std::max(p, v + 1);
    if (p <= trunc) emit(p);
    // Next RGS.
    int i = n - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[j] + 1);
      if (a[i] < mx) {
        ++a[i];
        for (int j = i + 1; j < n; ++j) a[j] = 0;
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

GradedModule iota_object(const GradedModule& V) {
  GradedModule m;
  m.H = V.H;
  m.trunc = V.trunc;
  m.prov = GradedModule::Prov::Iota;
  m.piece.resize(V.trunc + 1);
  for (int n = 0; n <= V.trunc; ++n) {
    std::vector<std::pair<Block, ModulePres>> parts;
    for (const auto& pi : iota_class_maps(n, V.trunc)) {
      Block blk;
      blk.tag = "iota";
      blk.key = pi;
      parts.emplace_back(blk, InducedModule(*V.H, V.at(pi.tgt), pi).pres());
    }
    m.piece[n] = pres_direct_sum(*V.H, n, std::move(parts));
  }
  return m;
}

GradedMap iota_map(const GradedModule& V, const GradedModule& W, const GradedMap& f) {
  GradedMap out;
  out.trunc = V.trunc;
  for (int n = 0; n <= V.trunc; ++n) {
    LinearMap m(0, 0);
    for (const auto& pi : iota_class_maps(n, V.trunc)) {
      InducedModule iv(*V.H, V.at(pi.tgt), pi);
      InducedModule iw(*W.H, W.at(pi.tgt), pi);
      m = LinearMap::direct_sum(m, induce_map(iv, iw, f.f[pi.tgt]));
    }
    out.f.push_back(std::move(m));
  }
  return out;
}

std::vector<LinearMap> equivariant_hom(const HopfAlgebra& H, const ModulePres& A,
                                       const ModulePres& B) {
  if (A.deg != B.deg) throw std::invalid_argument("equivariant hom needs equal degrees");
  int unknowns = A.rank * B.rank;
  auto ix = [&](int v, int w) { return v * B.rank + w; };
  int d = H.dim();
  std::vector<LinearMap> constraints;
  for (int s = 0; s < A.deg; ++s)
    for (int b = 0; b < d; ++b) {
      LinearMap eq(unknowns, unknowns);
      const LinearMap& As = A.slot[s][b];
      const LinearMap& Bs = B.slot[s][b];
      for (int v = 0; v < A.rank; ++v) {
        for (int w = 0; w < B.rank; ++w) {
          int row = ix(v, w);
          // (f∘A - B∘f)[w, v] = Σ_{v'} A[v',v] x[v',w] - Σ_{w'} B[w,w'] x[v,w'].
          for (const auto& [v2, c] : As.col[v].c) eq.col[ix(v2, w)].add(row, c);
          for (int w2 = 0; w2 < B.rank; ++w2) {
            Scalar c = Bs.entry(w, w2);
            if (!c.is_zero()) eq.col[ix(v, w2)].add(row, -c);
          }
        }
      }
      constraints.push_back(std::move(eq));
    }
  auto kernel = solve_hom_space(constraints, unknowns);
  std::vector<LinearMap> out;
  out.reserve(kernel.size());
  for (const auto& x : kernel) {
    LinearMap f(B.rank, A.rank);
    for (const auto& [i, c] : x.c) f.col[i / B.rank].set(i % B.rank, c);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<GradedMap> hom_basis(const GradedModule& V, const GradedModule& W) {
  std::vector<GradedMap> out;
  for (int n = 0; n <= V.trunc; ++n) {
    auto maps = equivariant_hom(*V.H, V.at(n), W.at(n));
    for (auto& m : maps) {
      GradedMap g = GradedMap::zero(V, W);
      g.f[n] = std::move(m);
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace hinfty
