#include "hinfty/htensor.hpp"

#include <algorithm>
#include <sstream>

namespace hinfty {

SetMap::SetMap(int m, int n, std::vector<int> t) : src(m), tgt(n), to(std::move(t)) {
  if (static_cast<int>(to.size()) != m)
    throw std::invalid_argument("set map arity mismatch");
  for (int v : to)
    if (v < 0 || v >= n) throw std::invalid_argument("set map target out of range");
}

SetMap SetMap::id(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return SetMap(n, n, std::move(t));
}

SetMap SetMap::constant(int m, int n, int value) {
  return SetMap(m, n, std::vector<int>(m, value));
}

std::vector<SetMap> SetMap::all(int m, int n) {
  std::vector<SetMap> maps;
  if (m == 0) {
    maps.push_back(SetMap(0, n, {}));
    return maps;
  }
  if (n == 0) return maps;  // no total maps from a nonempty set
  std::vector<int> t(m, 0);
  while (true) {
    maps.push_back(SetMap(m, n, t));
    int i = m - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return maps;
}

std::vector<std::vector<int>> SetMap::fibers() const {
  std::vector<std::vector<int>> f(tgt);
  for (int j = 0; j < src; ++j) f[to[j]].push_back(j);
  return f;
}

bool SetMap::surjective() const {
  std::vector<bool> hit(tgt, false);
  for (int v : to) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool SetMap::injective() const {
  std::vector<bool> hit(tgt, false);
  for (int v : to) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

SetMap SetMap::after(const SetMap& first) const {
  if (first.tgt != src)
    throw std::invalid_argument("set map composition size mismatch: " + first.str() +
                                " then " + str());
  std::vector<int> t(first.src);
  for (int i = 0; i < first.src; ++i) t[i] = to[first.to[i]];
  return SetMap(first.src, tgt, std::move(t));
}

std::string SetMap::str() const {
  std::ostringstream os;
  os << "[" << src << "->" << tgt << ":";
  for (int i = 0; i < src; ++i) os << (i ? "," : "") << to[i] + 1;
  os << "]";
  return os.str();
}

SetMap compose_setmaps(const SetMap& pi1, const SetMap& pi2) { return pi2.after(pi1); }

ModulePres ModulePres::space(int rank0) {
  ModulePres m;
  m.deg = 0;
  m.rank = rank0;
  return m;
}

ModulePres ModulePres::regular(const HopfAlgebra& H) {
  int d = H.dim();
  ModulePres m;
  m.deg = 1;
  m.rank = d;
  m.slot.resize(1);
  m.slot[0].resize(d, LinearMap(d, d));
  for (int b = 0; b < d; ++b)
    for (int v = 0; v < d; ++v) m.slot[0][b].col[v] = H.mul(b, v);
  return m;
}

ModulePres ModulePres::trivial(const HopfAlgebra& H) {
  int d = H.dim();
  ModulePres m;
  m.deg = 1;
  m.rank = 1;
  m.slot.resize(1);
  m.slot[0].resize(d, LinearMap(1, 1));
  for (int b = 0; b < d; ++b) m.slot[0][b].col[0] = SparseVec::unit(0, H.counit(b));
  return m;
}

ModulePres ModulePres::boxtimes(const ModulePres& a, const ModulePres& b) {
  ModulePres m;
  m.deg = a.deg + b.deg;
  m.rank = a.rank * b.rank;
  m.slot.resize(m.deg);
  LinearMap ida = LinearMap::identity(a.rank);
  LinearMap idb = LinearMap::identity(b.rank);
  for (int s = 0; s < a.deg; ++s) {
    m.slot[s].reserve(a.slot[s].size());
    for (const auto& act : a.slot[s]) m.slot[s].push_back(LinearMap::kronecker(act, idb));
  }
  for (int s = 0; s < b.deg; ++s) {
    m.slot[a.deg + s].reserve(b.slot[s].size());
    for (const auto& act : b.slot[s])
      m.slot[a.deg + s].push_back(LinearMap::kronecker(ida, act));
  }
  return m;
}

SparseVec ModulePres::act_letter(int s, int letter, const SparseVec& v) const {
  if (letter == kUnitLetter) return v;
  return slot.at(s).at(letter).apply(v);
}

SparseVec ModulePres::act_elem(int s, const SparseVec& h, const SparseVec& v) const {
  SparseVec r;
  for (const auto& [b, c] : h.c) r.axpy(c, act_letter(s, b, v));
  return r;
}

SparseVec ModulePres::act_word(const Word& w, const SparseVec& v) const {
  if (static_cast<int>(w.size()) != deg)
    throw std::invalid_argument("module action word length mismatch");
  SparseVec r = v;
  for (int s = 0; s < deg; ++s) r = act_letter(s, w[s], r);
  return r;
}

SparseVec ModulePres::act_tensor(const HTensor& h, const SparseVec& v) const {
  if (h.deg != deg) throw std::invalid_argument("module action degree mismatch");
  SparseVec r;
  for (const auto& [w, c] : h.t) r.axpy(c, act_word(w, v));
  return r;
}

void ModulePres::validate(const HopfAlgebra& H) const {
  int d = H.dim();
  if (static_cast<int>(slot.size()) != deg)
    throw std::invalid_argument("module presentation missing slot actions");
  SparseVec one = H.unit();
  for (int s = 0; s < deg; ++s) {
    if (static_cast<int>(slot[s].size()) != d)
      throw std::invalid_argument("slot action table size mismatch");
    for (int v = 0; v < rank; ++v)
      if (!(act_elem(s, one, SparseVec::unit(v)) == SparseVec::unit(v)))
        throw std::invalid_argument("module action not unital at slot " + std::to_string(s));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        LinearMap lhs = slot[s][a].compose(slot[s][b]);
        LinearMap rhs(rank, rank);
        for (const auto& [p, c] : H.mul(a, b).c) rhs = rhs + slot[s][p] * c;
        if (!(lhs == rhs))
          throw std::invalid_argument("module action not associative at slot " +
                                      std::to_string(s));
      }
  }
  for (int s = 0; s < deg; ++s)
    for (int t = s + 1; t < deg; ++t)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          if (!(slot[s][a].compose(slot[t][b]) == slot[t][b].compose(slot[s][a])))
            throw std::invalid_argument("slot actions do not commute");
}

void raw_add(RawElem& r, const Word& w, const SparseVec& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = r.emplace(w, v);
  if (!fresh) {
    it->second.axpy(Scalar(1), v);
    if (it->second.is_zero()) r.erase(it);
  }
}

namespace {

// a·b as a sparse combination of letters; kUnitLetter is the unit of H.
// unit_result reports the case 1·1 (no basis expansion available).
SparseVec letter_mul(const HopfAlgebra& H, int a, int b, bool& unit_result) {
  unit_result = false;
  if (a == kUnitLetter && b == kUnitLetter) {
    unit_result = true;
    return {};
  }
  if (a == kUnitLetter) return SparseVec::unit(b);
  if (b == kUnitLetter) return SparseVec::unit(a);
  return H.mul(a, b);
}

// Expand kUnitLetter occurrences at the given word positions through the
// basis expansion of 1_H.
RawElem expand_units(const HopfAlgebra& H, const RawElem& in, const std::vector<int>& at) {
  SparseVec one = H.unit();
  RawElem out;
  for (const auto& [w, v] : in) {
    std::vector<std::pair<Word, Scalar>> parts{{w, Scalar(1)}};
    for (int pos : at) {
      if (w[pos] != kUnitLetter) continue;
      std::vector<std::pair<Word, Scalar>> next;
      for (const auto& [pw, pc] : parts)
        for (const auto& [b, c] : one.c) {
          Word nw = pw;
          nw[pos] = b;
          next.emplace_back(std::move(nw), pc * c);
        }
      parts = std::move(next);
    }
    for (const auto& [pw, pc] : parts) raw_add(out, pw, v * pc);
  }
  return out;
}

// One fiber-normalization pass: move the letter in the pinned (= last)
// slot of the fiber onto the module through the fiber's target slot; the
// remaining fiber slots pick up antipode factors on the right.
RawElem normalize_fiber(const HopfAlgebra& H, const RawElem& in,
                        const std::vector<int>& fiber,
                        const std::function<SparseVec(int, const SparseVec&)>& act_tgt) {
  RawElem out;
  int k = static_cast<int>(fiber.size());
  int pinned = fiber[k - 1];
  for (const auto& [w, v] : in) {
    int g = w[pinned];
    if (g == kUnitLetter) {
      raw_add(out, w, v);
      continue;
    }
    HTensor dg = iterated_coproduct(H, SparseVec::unit(g), k - 1);  // degree k
    for (const auto& [gw, gc] : dg.t) {
      struct Partial {
        Word w;
        Scalar c;
      };
      std::vector<Partial> parts{{w, gc}};
      parts[0].w[pinned] = kUnitLetter;
      for (int q = 0; q + 1 < k; ++q) {
        SparseVec sg = H.antipode(gw[q]);
        std::vector<Partial> next;
        for (const auto& p : parts)
          for (const auto& [sb, sc] : sg.c) {
            bool unit_res = false;
            SparseVec prod = letter_mul(H, p.w[fiber[q]], sb, unit_res);
            if (unit_res) {
              Partial np = p;
              np.w[fiber[q]] = kUnitLetter;
              np.c = p.c * sc;
              next.push_back(std::move(np));
            } else {
              for (const auto& [pb, pc] : prod.c) {
                Partial np = p;
                np.w[fiber[q]] = pb;
                np.c = p.c * sc * pc;
                next.push_back(std::move(np));
              }
            }
          }
        parts = std::move(next);
      }
      SparseVec mv = act_tgt(gw[k - 1], v);
      for (const auto& p : parts) raw_add(out, p.w, mv * p.c);
    }
  }
  return out;
}

}  // namespace

std::map<std::pair<Word, int>, Scalar> normalize_tensor_over_h(
    const HopfAlgebra& H, const ElementAction& act,
    const std::map<std::pair<Word, int>, Scalar>& raw, int n) {
  if (n < 1)
    throw std::invalid_argument("degree-0 tensor with nontrivial H-part cannot be pinned");
  RawElem r;
  for (const auto& [key, c] : raw) {
    if (static_cast<int>(key.first.size()) != n)
      throw std::invalid_argument("raw word length mismatch");
    raw_add(r, key.first, SparseVec::unit(key.second, c));
  }
  std::vector<int> fiber(n);
  for (int i = 0; i < n; ++i) fiber[i] = i;
  auto act_tgt = [&](int letter, const SparseVec& v) {
    if (letter == kUnitLetter) return v;
    SparseVec out;
    for (const auto& [vb, vc] : v.c) out.axpy(vc, act(letter, vb));
    return out;
  };
  RawElem nf = normalize_fiber(H, r, fiber, act_tgt);
  std::vector<int> free_positions(n - 1);
  for (int i = 0; i + 1 < n; ++i) free_positions[i] = i;
  nf = expand_units(H, nf, free_positions);
  std::map<std::pair<Word, int>, Scalar> result;
  for (const auto& [w, v] : nf) {
    Word freew(w.begin(), w.end() - 1);
    for (const auto& [vb, vc] : v.c) {
      auto key = std::make_pair(freew, vb);
      auto [it, fresh] = result.emplace(key, vc);
      if (!fresh) {
        it->second += vc;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  return result;
}

InducedModule::InducedModule(const HopfAlgebra& H, ModulePres base, SetMap pi)
    : H_(&H), base_(std::move(base)), pi_(std::move(pi)) {
  if (pi_.tgt != base_.deg)
    throw std::invalid_argument("induction map target must match module degree");
  dimH_ = H.dim();  // throws for infinite-dimensional H
  fibers_ = pi_.fibers();
  for (const auto& f : fibers_)
    for (size_t q = 0; q + 1 < f.size(); ++q) free_slots_.push_back(f[q]);
  std::sort(free_slots_.begin(), free_slots_.end());

  // Counit collapse for missed targets: h ·_i v ~ ε(h) v.
  std::vector<SparseVec> rels;
  for (int i = 0; i < pi_.tgt; ++i) {
    if (!fibers_[i].empty()) continue;
    for (int b = 0; b < dimH_; ++b)
      for (int v = 0; v < base_.rank; ++v) {
        SparseVec rel = base_.act_letter(i, b, SparseVec::unit(v));
        rel.add(v, -H.counit(b));
        if (!rel.is_zero()) rels.push_back(std::move(rel));
      }
  }
  collapse_ = quotient_space(base_.rank, rels);

  word_dim_ = 1;
  for (size_t i = 0; i < free_slots_.size(); ++i) word_dim_ *= dimH_;
  rank_ = word_dim_ * collapse_.dim();
}

int InducedModule::index(const Word& freeword, int rep_pos) const {
  return word_index(freeword, dimH_) * collapse_.dim() + rep_pos;
}

std::pair<Word, int> InducedModule::unindex(int idx) const {
  int q = collapse_.dim();
  return {index_word(idx / q, dimH_, static_cast<int>(free_slots_.size())), idx % q};
}

SparseVec InducedModule::normalize(const RawElem& raw) const {
  RawElem cur = raw;
  for (const auto& f : fibers_) {
    if (f.empty()) continue;
    int tgt_slot = pi_.to[f[0]];
    auto act_tgt = [&](int letter, const SparseVec& v) {
      return base_.act_letter(tgt_slot, letter, v);
    };
    cur = normalize_fiber(*H_, cur, f, act_tgt);
  }
  cur = expand_units(*H_, cur, free_slots_);
  SparseVec out;
  int q = collapse_.dim();
  if (q == 0) return out;
  for (const auto& [w, v] : cur) {
    Word freew;
    freew.reserve(free_slots_.size());
    for (int s : free_slots_) freew.push_back(w[s]);
    SparseVec coords = collapse_.to_coords.apply(v);
    int base_idx = word_index(freew, dimH_) * q;
    for (const auto& [rp, c] : coords.c) out.add(base_idx + rp, c);
  }
  return out;
}

RawElem InducedModule::lift(int idx) const {
  auto [freew, rep_pos] = unindex(idx);
  Word w(pi_.src, kUnitLetter);
  for (size_t i = 0; i < free_slots_.size(); ++i) w[free_slots_[i]] = freew[i];
  RawElem r;
  raw_add(r, w, SparseVec::unit(collapse_.reps[rep_pos]));
  return r;
}

const ModulePres& InducedModule::pres() const {
  if (pres_) return *pres_;
  ModulePres m;
  m.deg = pi_.src;
  m.rank = rank_;
  m.slot.resize(m.deg);
  for (int s = 0; s < m.deg; ++s) {
    m.slot[s].resize(dimH_, LinearMap(rank_, rank_));
    for (int b = 0; b < dimH_; ++b) {
      for (int idx = 0; idx < rank_; ++idx) {
        RawElem lifted = lift(idx);
        RawElem raw;
        for (const auto& [w, v] : lifted) {
          bool unit_res = false;
          SparseVec prod = letter_mul(*H_, b, w[s], unit_res);
          if (unit_res) {
            Word nw = w;
            nw[s] = kUnitLetter;
            raw_add(raw, nw, v);
          } else {
            for (const auto& [pb, pc] : prod.c) {
              Word nw = w;
              nw[s] = pb;
              raw_add(raw, nw, v * pc);
            }
          }
        }
        m.slot[s][b].col[idx] = normalize(raw);
      }
    }
  }
  pres_ = std::move(m);
  return *pres_;
}

HTensor right_action_via_map(const HopfAlgebra& H, const HTensor& t, const HTensor& h,
                             const SetMap& pi) {
  if (t.deg != pi.src || h.deg != pi.tgt)
    throw std::invalid_argument("right action size mismatch with the set map");
  auto fibers = pi.fibers();
  HTensor out(t.deg);
  for (const auto& [hw, hc] : h.t) {
    for (const auto& [tw, tc] : t.t) {
      struct Partial {
        Word w;
        Scalar c;
      };
      std::vector<Partial> parts{{tw, tc * hc}};
      for (int i = 0; i < pi.tgt && !parts.empty(); ++i) {
        const auto& fib = fibers[i];
        int letter = hw[i];
        if (fib.empty()) {
          Scalar eps = letter == kUnitLetter ? Scalar(1) : H.counit(letter);
          if (eps.is_zero()) {
            parts.clear();
            break;
          }
          for (auto& p : parts) p.c = p.c * eps;
          continue;
        }
        if (letter == kUnitLetter) continue;
        int k = static_cast<int>(fib.size());
        HTensor dh = iterated_coproduct(H, SparseVec::unit(letter), k - 1);
        std::vector<Partial> next;
        for (const auto& p : parts)
          for (const auto& [dw, dc] : dh.t) {
            std::vector<Partial> local{{p.w, p.c * dc}};
            for (int q = 0; q < k; ++q) {
              std::vector<Partial> expanded;
              for (const auto& lp : local) {
                bool unit_res = false;
                SparseVec prod = letter_mul(H, lp.w[fib[q]], dw[q], unit_res);
                if (unit_res) {
                  Partial np = lp;
                  np.w[fib[q]] = kUnitLetter;
                  expanded.push_back(std::move(np));
                } else {
                  for (const auto& [pb, pc] : prod.c) {
                    Partial np = lp;
                    np.w[fib[q]] = pb;
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
      for (const auto& p : parts) out.add(p.w, p.c);
    }
  }
  return out;
}

LinearMap induce_map(const InducedModule& domA, const InducedModule& domB,
                     const LinearMap& f) {
  if (!(domA.pi() == domB.pi()))
    throw std::invalid_argument("induce_map needs matching set maps");
  if (f.cols != domA.base().rank || f.rows != domB.base().rank)
    throw std::invalid_argument("induce_map base map dimension mismatch");
  LinearMap out(domB.rank(), domA.rank());
  int qa = domA.collapse().dim();
  int qb = domB.collapse().dim();
  if (qa == 0 || qb == 0) return out;
  LinearMap rep_map(qb, qa);
  for (int r = 0; r < qa; ++r)
    rep_map.col[r] =
        domB.collapse().to_coords.apply(f.apply(SparseVec::unit(domA.collapse().reps[r])));
  int words = domA.rank() / qa;
  for (int w = 0; w < words; ++w)
    for (int r = 0; r < qa; ++r)
      for (const auto& [r2, c] : rep_map.col[r].c) out.col[w * qa + r].add(w * qb + r2, c);
  return out;
}

LinearMap canonical_assoc_iso(const HopfAlgebra& H, const ModulePres& V,
                              const SetMap& pi1, const SetMap& pi2,
                              const InducedModule& iterated, const InducedModule& direct) {
  if (!(iterated.pi() == pi1) || !(direct.pi() == compose_setmaps(pi1, pi2)))
    throw std::invalid_argument("assoc iso set maps do not chain");
  InducedModule inner(H, V, pi2);
  if (iterated.base().rank != inner.rank())
    throw std::invalid_argument("iterated base does not match the inner induction");
  LinearMap out(direct.rank(), iterated.rank());
  for (int idx = 0; idx < iterated.rank(); ++idx) {
    RawElem outer = iterated.lift(idx);
    SparseVec acc;
    for (const auto& [xw, xv] : outer) {
      for (const auto& [inner_idx, c] : xv.c) {
        RawElem innerraw = inner.lift(inner_idx);
        for (const auto& [yw, yv] : innerraw) {
          HTensor x = HTensor::word(xw, c);
          HTensor y = HTensor::word(yw);
          HTensor z = right_action_via_map(H, x, y, pi1);
          RawElem raw;
          for (const auto& [zw, zc] : z.t) raw_add(raw, zw, yv * zc);
          acc.axpy(Scalar(1), direct.normalize(raw));
        }
      }
    }
    out.col[idx] = acc;
  }
  return out;
}

}  // namespace hinfty
