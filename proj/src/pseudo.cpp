#include "hinfty/pseudo.hpp"

namespace hinfty {

namespace {

SetMap to_point(int m) { return SetMap(m, 1, std::vector<int>(m, 0)); }

// Product basis index over the given radices (first factor major).
int tuple_index(const std::vector<int>& digits, const std::vector<int>& radix) {
  int idx = 0;
  for (size_t i = 0; i < digits.size(); ++i) idx = idx * radix[i] + digits[i];
  return idx;
}

std::vector<int> tuple_digits(int idx, const std::vector<int>& radix) {
  std::vector<int> d(radix.size());
  for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
    d[i] = radix[i] ? idx % radix[i] : 0;
    idx = radix[i] ? idx / radix[i] : idx;
  }
  return d;
}

}  // namespace

PolyOperation PolyOperation::identity(const HopfAlgebra& H, const ModulePres& M) {
  PolyOperation op;
  op.H = &H;
  op.sources = {M};
  op.target = M;
  op.value = LinearMap::identity(M.rank);  // induce along id_[1] is M itself
  return op;
}

PolyOperation Pseudoproduct::as_operation() const {
  PolyOperation op;
  op.H = H;
  op.sources = {V, V};
  op.target = V;
  InducedModule ind2(*H, V, to_point(2));
  op.value = LinearMap(ind2.rank(), V.rank * V.rank);
  for (int v = 0; v < V.rank; ++v)
    for (int w = 0; w < V.rank; ++w) op.value.col[v * V.rank + w] = table[v][w];
  return op;
}

bool Pseudoproduct::bilinear() const {
  InducedModule ind2(*H, V, to_point(2));
  const ModulePres& p2 = ind2.pres();
  int d = H->dim();
  for (int f = 0; f < d; ++f)
    for (int g = 0; g < d; ++g)
      for (int v = 0; v < V.rank; ++v)
        for (int w = 0; w < V.rank; ++w) {
          SparseVec fv = V.act_letter(0, f, SparseVec::unit(v));
          SparseVec gw = V.act_letter(0, g, SparseVec::unit(w));
          SparseVec lhs;
          for (const auto& [v2, cv] : fv.c)
            for (const auto& [w2, cw] : gw.c) lhs.axpy(cv * cw, table[v2][w2]);
          SparseVec rhs = p2.act_word(Word{f, g}, table[v][w]);
          if (!(lhs == rhs)) return false;
        }
  return true;
}

Pseudoproduct Pseudoproduct::mul_table(const HopfAlgebra& H) {
  Pseudoproduct p;
  p.H = &H;
  p.V = ModulePres::regular(H);
  int d = H.dim();
  InducedModule ind2(H, p.V, to_point(2));
  p.table.assign(d, std::vector<SparseVec>(d));
  for (int v = 0; v < d; ++v)
    for (int w = 0; w < d; ++w) {
      RawElem raw;
      raw_add(raw, Word{v, w}, H.unit());
      p.table[v][w] = ind2.normalize(raw);
    }
  return p;
}

Pseudoproduct Pseudoproduct::zero(const HopfAlgebra& H, const ModulePres& V) {
  Pseudoproduct p;
  p.H = &H;
  p.V = V;
  p.table.assign(V.rank, std::vector<SparseVec>(V.rank));
  return p;
}

LinearMap expand_poly(const PolyOperation& op, const std::vector<int>& degrees) {
  const HopfAlgebra& H = *op.H;
  int k = op.arity();
  if (static_cast<int>(degrees.size()) != k)
    throw std::invalid_argument("expansion degree tuple does not match the arity");
  int total = 0;
  for (int d : degrees) total += d;

  std::vector<InducedModule> ind_in;
  ind_in.reserve(k);
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) {
    ind_in.emplace_back(H, op.sources[i], to_point(degrees[i]));
    radix[i] = ind_in[i].rank();
  }
  InducedModule ind_outk(H, op.target, to_point(k));
  InducedModule ind_out(H, op.target, to_point(total));
  int dom = 1;
  for (int r : radix) dom *= r;
  LinearMap out(ind_out.rank(), dom);

  std::vector<int> src_radix(k);
  for (int i = 0; i < k; ++i) src_radix[i] = op.sources[i].rank;

  for (int col = 0; col < dom; ++col) {
    auto digits = tuple_digits(col, radix);
    // Lift every input: (word over [d_i] with a pinned unit, L_i rep).
    std::vector<Word> words(k);
    std::vector<int> reps(k);
    for (int i = 0; i < k; ++i) {
      RawElem r = ind_in[i].lift(digits[i]);
      words[i] = r.begin()->first;
      reps[i] = r.begin()->second.c.begin()->first;
    }
    // φ on the source tuple.
    SparseVec phi_val = op.value.col[tuple_index(reps, src_radix)];
    SparseVec acc;
    for (const auto& [oidx, oc] : phi_val.c) {
      RawElem lifted = ind_outk.lift(oidx);
      const Word& u = lifted.begin()->first;        // length k, pinned unit at k-1
      int mrep = lifted.begin()->second.c.begin()->first;
      // Per leg i: Δ^{d_i-1}(u_i) (ε when d_i = 0), multiplied slotwise by
      // the lifted word letters; concatenate the legs.
      struct Partial {
        Word w;
        Scalar c;
      };
      std::vector<Partial> parts{{Word{}, oc}};
      bool dead = false;
      for (int i = 0; i < k && !dead; ++i) {
        int di = degrees[i];
        if (di == 0) {
          Scalar eps = u[i] == kUnitLetter ? Scalar(1) : H.counit(u[i]);
          if (eps.is_zero()) {
            dead = true;
            break;
          }
          for (auto& p : parts) p.c = p.c * eps;
          continue;
        }
        HTensor du;
        if (u[i] == kUnitLetter) {
          du = HTensor::word(Word(di, kUnitLetter));
        } else {
          du = iterated_coproduct(H, SparseVec::unit(u[i]), di - 1);
        }
        std::vector<Partial> next;
        for (const auto& p : parts)
          for (const auto& [dw, dc] : du.t) {
            // Slotwise product w_i[q] * dw[q].
            std::vector<Partial> local{{p.w, p.c * dc}};
            for (int q = 0; q < di; ++q) {
              std::vector<Partial> expanded;
              int a = words[i][q];
              int b = dw[q];
              for (const auto& lp : local) {
                if (a == kUnitLetter && b == kUnitLetter) {
                  Partial np = lp;
                  np.w.push_back(kUnitLetter);
                  expanded.push_back(std::move(np));
                } else if (a == kUnitLetter || b == kUnitLetter) {
                  Partial np = lp;
                  np.w.push_back(a == kUnitLetter ? b : a);
                  expanded.push_back(std::move(np));
                } else {
                  for (const auto& [pb, pc] : H.mul(a, b).c) {
                    Partial np = lp;
                    np.w.push_back(pb);
                    np.c = lp.c * pc;
                    expanded.push_back(std::move(np));
                  }
                }
              }
              local = std::move(expanded);
            }
            next.insert(next.end(), local.begin(), local.end());
          }
        parts = std::move(next);
      }
      if (dead) continue;
      RawElem raw;
      for (const auto& p : parts) raw_add(raw, p.w, SparseVec::unit(mrep, p.c));
      acc.axpy(Scalar(1), ind_out.normalize(raw));
    }
    out.col[col] = std::move(acc);
  }
  return out;
}

LinearMap expand_pseudoproduct(const Pseudoproduct& star, int m, int n) {
  return expand_poly(star.as_operation(), {m, n});
}

GradedMap pseudo_to_hinfty(const Pseudoproduct& star, int trunc) {
  const HopfAlgebra& H = *star.H;
  GradedModule R = regular_module(H, star.V, trunc);
  GradedModule X = star_tensor(H, {R, R});
  PolyOperation op = star.as_operation();
  GradedMap out;
  out.trunc = trunc;
  for (int ell = 0; ell <= trunc; ++ell) {
    LinearMap m(R.at(ell).rank, X.at(ell).rank);
    InducedModule ind_out(H, star.V, to_point(ell));
    for (const auto& blk : X.at(ell).blocks) {
      auto fibs = blk.key.fibers();
      int k1 = static_cast<int>(fibs[0].size());
      int k2 = static_cast<int>(fibs[1].size());
      LinearMap exp = expand_poly(op, {k1, k2});
      // Un-sort the output word slots from (fiber-grouped) to J-order.
      Perm sort = star_sort(blk.key);
      for (int c = 0; c < exp.cols; ++c) {
        SparseVec vec;
        for (const auto& [oidx, oc] : exp.col[c].c) {
          RawElem lifted = ind_out.lift(oidx);
          const Word& w = lifted.begin()->first;
          int mrep = lifted.begin()->second.c.begin()->first;
          Word unsorted(ell);
          for (int j = 0; j < ell; ++j) unsorted[j] = w[sort.p[j]];
          RawElem raw;
          raw_add(raw, unsorted, SparseVec::unit(mrep, oc));
          vec.axpy(Scalar(1), ind_out.normalize(raw));
        }
        m.col[blk.offset + c] = std::move(vec);
      }
    }
    out.f.push_back(std::move(m));
  }
  return out;
}

PseudoExtraction hinfty_to_pseudo(const GradedMap& mu, const ICModule& X,
                                  const ICModule& V) {
  const HopfAlgebra& H = *V.mod.H;
  PseudoExtraction out;
  out.star.H = &H;
  out.star.V = V.mod.regular_base;
  int r = out.star.V.rank;
  out.star.table.assign(r, std::vector<SparseVec>(r));
  // The (1,1) summand with 1 ∈ J1: key (0,1) in factor indices.
  const Block* blk = nullptr;
  for (const auto& b : X.mod.at(2).blocks)
    if (b.key.to == std::vector<int>{0, 1}) blk = &b;
  if (!blk) throw std::invalid_argument("morphism domain has no (1,1) summand");
  for (int v = 0; v < r; ++v)
    for (int w = 0; w < r; ++w)
      out.star.table[v][w] = mu.f[2].col[blk->offset + v * r + w];
  GradedMap rebuilt = pseudo_to_hinfty(out.star, mu.trunc);
  out.is_pseudo = rebuilt == mu;
  return out;
}

std::vector<PolyOperation> poly_op_space(const HopfAlgebra& H,
                                         const std::vector<ModulePres>& sources,
                                         const ModulePres& target) {
  if (sources.empty()) throw std::invalid_argument("poly_op_space needs arity >= 1");
  ModulePres dom = sources[0];
  for (size_t i = 1; i < sources.size(); ++i) dom = ModulePres::boxtimes(dom, sources[i]);
  InducedModule ind(H, target, to_point(static_cast<int>(sources.size())));
  std::vector<PolyOperation> out;
  for (auto& f : equivariant_hom(H, dom, ind.pres())) {
    PolyOperation op;
    op.H = &H;
    op.sources = sources;
    op.target = target;
    op.value = std::move(f);
    out.push_back(std::move(op));
  }
  return out;
}

PolyOperation poly_op_permute(const PolyOperation& op, const Perm& sigma) {
  const HopfAlgebra& H = *op.H;
  int k = op.arity();
  PolyOperation out;
  out.H = &H;
  out.target = op.target;
  out.sources.resize(k);
  Perm inv = sigma.inverse();
  for (int i = 0; i < k; ++i) out.sources[i] = op.sources[inv.p[i]];
  std::vector<int> new_radix(k), old_radix(k);
  for (int i = 0; i < k; ++i) {
    new_radix[i] = out.sources[i].rank;
    old_radix[i] = op.sources[i].rank;
  }
  int dom = 1;
  for (int r : new_radix) dom *= r;
  InducedModule ind(H, op.target, to_point(k));
  out.value = LinearMap(ind.rank(), dom);
  for (int col = 0; col < dom; ++col) {
    auto nd = tuple_digits(col, new_radix);
    // Input i of the permuted op feeds slot sigma^{-1}... the original
    // op's input j is the new tuple's component sigma(j).
    std::vector<int> od(k);
    for (int j = 0; j < k; ++j) od[j] = nd[sigma.p[j]];
    SparseVec val = op.value.col[tuple_index(od, old_radix)];
    // Permute the output word slots by sigma and renormalize.
    SparseVec res;
    for (const auto& [oidx, oc] : val.c) {
      RawElem lifted = ind.lift(oidx);
      const Word& w = lifted.begin()->first;
      int mrep = lifted.begin()->second.c.begin()->first;
      Word pw(k);
      for (int j = 0; j < k; ++j) pw[sigma.p[j]] = w[j];
      RawElem raw;
      raw_add(raw, pw, SparseVec::unit(mrep, oc));
      res.axpy(Scalar(1), ind.normalize(raw));
    }
    out.value.col[col] = std::move(res);
  }
  return out;
}

PolyOperation compose_poly_ops(const PolyOperation& phi,
                               const std::vector<PolyOperation>& psis) {
  const HopfAlgebra& H = *phi.H;
  int k = phi.arity();
  if (static_cast<int>(psis.size()) != k)
    throw std::invalid_argument("composition needs one inner operation per input");
  std::vector<int> degrees(k);
  PolyOperation out;
  out.H = &H;
  out.target = phi.target;
  for (int i = 0; i < k; ++i) {
    if (psis[i].target.rank != phi.sources[i].rank)
      throw std::invalid_argument("inner operation target does not match input " +
                                  std::to_string(i));
    degrees[i] = psis[i].arity();
    for (const auto& s : psis[i].sources) out.sources.push_back(s);
  }
  // expand_poly(φ, degrees) ∘ ⊠_i (ψ_i read into the induced coordinates).
  LinearMap expanded = expand_poly(phi, degrees);
  // Build ⊠ψ: domain tuple over all K_j, target tuple over ind(L_i,[d_i]→[1]).
  std::vector<int> in_radix, mid_radix(k);
  for (const auto& op : psis)
    for (const auto& s : op.sources) in_radix.push_back(s.rank);
  std::vector<InducedModule> mids;
  mids.reserve(k);
  for (int i = 0; i < k; ++i) {
    mids.emplace_back(H, phi.sources[i], to_point(degrees[i]));
    mid_radix[i] = mids[i].rank();
  }
  int dom = 1;
  for (int r : in_radix) dom *= r;
  LinearMap box(expanded.cols, dom);
  for (int col = 0; col < dom; ++col) {
    auto digits = tuple_digits(col, in_radix);
    // Per factor: evaluate ψ_i on its digit slice.
    SparseVec acc = SparseVec::unit(0);
    int off = 0;
    for (int i = 0; i < k; ++i) {
      int a = psis[i].arity();
      std::vector<int> slice(digits.begin() + off, digits.begin() + off + a);
      std::vector<int> sradix(a);
      for (int t = 0; t < a; ++t) sradix[t] = psis[i].sources[t].rank;
      SparseVec val = psis[i].value.col[tuple_index(slice, sradix)];
      SparseVec next;
      for (const auto& [base, cb] : acc.c)
        for (const auto& [ii, ci] : val.c) next.add(base * mid_radix[i] + ii, cb * ci);
      acc = std::move(next);
      off += a;
    }
    box.col[col] = std::move(acc);
  }
  out.value = expanded.compose(box);
  return out;
}

EnvelopeMorphism envelope_compose(const EnvelopeMorphism& outer,
                                  const EnvelopeMorphism& inner) {
  // outer: J ↠ I with φ_i on fibers J_i; inner: K ↠ J with ψ_j on fibers K_j.
  if (!outer.pi.surjective() || !inner.pi.surjective())
    throw std::invalid_argument("envelope morphisms need surjective maps");
  EnvelopeMorphism out;
  out.pi = compose_setmaps(inner.pi, outer.pi);
  auto jfibs = outer.pi.fibers();
  for (int i = 0; i < outer.pi.tgt; ++i) {
    std::vector<PolyOperation> inners;
    inners.reserve(jfibs[i].size());
    for (int j : jfibs[i]) inners.push_back(inner.phi[j]);
    out.phi.push_back(compose_poly_ops(outer.phi[i], inners));
  }
  return out;
}

SparseVec poly_eval(const PolyOperation& op, const std::vector<SparseVec>& inputs) {
  int k = op.arity();
  if (static_cast<int>(inputs.size()) != k)
    throw std::invalid_argument("poly_eval arity mismatch");
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = op.sources[i].rank;
  SparseVec acc = SparseVec::unit(0);
  for (int i = 0; i < k; ++i) {
    SparseVec next;
    for (const auto& [base, cb] : acc.c)
      for (const auto& [ii, ci] : inputs[i].c) next.add(base * radix[i] + ii, cb * ci);
    acc = std::move(next);
  }
  return op.value.apply(acc);
}

}  // namespace hinfty
