#pragma once

#include "hinfty/hopf.hpp"

#include <functional>

namespace hinfty {

struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Sentinel word letter standing for 1_H (used for pinned tensor slots, so
// that nothing requires the unit of H to be a basis vector).
inline constexpr int kUnitLetter = -2;

// Total map [m] -> [n] between skeletal finite sets (0-based internally).
struct SetMap {
  int src = 0;
  int tgt = 0;
  std::vector<int> to;

  SetMap() = default;
  SetMap(int m, int n, std::vector<int> t);
  static SetMap id(int n);
  static SetMap constant(int m, int n, int value = 0);
  static std::vector<SetMap> all(int m, int n);

  std::vector<std::vector<int>> fibers() const;  // tgt entries, slots ascending
  bool surjective() const;
  bool injective() const;
  bool bijective() const { return src == tgt && surjective(); }

  // this ∘ first (apply `first`, then this). Sizes must chain.
  SetMap after(const SetMap& first) const;

  auto operator<=>(const SetMap&) const = default;
  std::string str() const;
};

// π₂ ∘ π₁ for π₁: K→J, π₂: J→I.
SetMap compose_setmaps(const SetMap& pi1, const SetMap& pi2);

// Named block inside a based space (keeps track of direct-sum summands:
// ⊠ splits, ⊗*-summand keys, ι summand classes).
struct Block {
  std::string tag;       // "plain" | "box" | "star" | "iota"
  int p = -1, q = -1;    // for box: degrees of the two factors
  SetMap key;            // for star: f:[m]->I; for iota: canonical class map
  int offset = 0;
  int dim = 0;
};

// Finite module over H^{⊗deg}, presented by commuting slot actions.
// slot[s][b] is the action of 1⊗...⊗b⊗...⊗1 (b in slot s).
struct ModulePres {
  int deg = 0;
  int rank = 0;
  std::vector<std::vector<LinearMap>> slot;
  std::vector<Block> blocks;  // optional decomposition metadata

  static ModulePres space(int rank0);                       // deg 0
  static ModulePres regular(const HopfAlgebra& H);          // V = H over H
  static ModulePres trivial(const HopfAlgebra& H);          // V = k via ε
  static ModulePres boxtimes(const ModulePres& a, const ModulePres& b);

  // Action of a single slot letter (kUnitLetter acts as the identity).
  SparseVec act_letter(int s, int letter, const SparseVec& v) const;
  SparseVec act_elem(int s, const SparseVec& h, const SparseVec& v) const;
  // Action of a full word (letters may be kUnitLetter).
  SparseVec act_word(const Word& w, const SparseVec& v) const;
  // Action of an arbitrary element of H^{⊗deg}.
  SparseVec act_tensor(const HTensor& h, const SparseVec& v) const;

  // Unit, associativity per slot, and slot commutation on basis pairs.
  void validate(const HopfAlgebra& H) const;
};

// Raw element of H^{⊗m} ⊗ V: word -> coefficient vector of V.
using RawElem = std::map<Word, SparseVec>;
void raw_add(RawElem& r, const Word& w, const SparseVec& v);

// ---- Pinned normal forms ----
//
// H^{⊗n} ⊗_H V is spanned by representatives with 1_H in the last slot;
// the Fourier identity f⊗g = (f g_{(-1)} ⊗ 1)Δ(g_{(2)}) moves the last
// letter onto the module. Induced modules along a general π pin the last
// slot of every fiber and collapse counit-acting slots.

// Element-level single-fiber normalization for V given by an action
// callback (works for infinite-dimensional H and infinite-rank V):
// raw sum of length-n words tensor module basis indices -> pinned form
// (word of length n-1, module element).
using ElementAction = std::function<SparseVec(int hletter, int vbasis)>;
std::map<std::pair<Word, int>, Scalar> normalize_tensor_over_h(
    const HopfAlgebra& H, const ElementAction& act,
    const std::map<std::pair<Word, int>, Scalar>& raw, int n);

// Explicit realization of H^{⊗m} ⊗_{H^{⊗n}} V along π: [m] -> [n].
// Basis: (free word over the non-pinned slots) × (counit-collapse
// representative of V); finite-dimensional H only.
class InducedModule {
public:
  InducedModule(const HopfAlgebra& H, ModulePres base, SetMap pi);

  const SetMap& pi() const { return pi_; }
  const ModulePres& base() const { return base_; }
  const Quotient& collapse() const { return collapse_; }
  const std::vector<int>& free_slots() const { return free_slots_; }
  int rank() const { return rank_; }

  int index(const Word& freeword, int rep_pos) const;
  std::pair<Word, int> unindex(int idx) const;

  // Full-word raw element -> induced coordinates.
  SparseVec normalize(const RawElem& raw) const;
  // Induced coordinate basis vector -> raw representative
  // (free letters placed, pinned slots kUnitLetter, collapse rep included).
  RawElem lift(int idx) const;

  // The induced H^{⊗m}-module presentation (left multiplication followed
  // by renormalization), with the base's block structure propagated.
  const ModulePres& pres() const;

private:
  const HopfAlgebra* H_;
  ModulePres base_;
  SetMap pi_;
  Quotient collapse_;
  std::vector<int> free_slots_;            // ascending
  std::vector<std::vector<int>> fibers_;
  int dimH_;
  int word_dim_;
  int rank_;
  mutable std::optional<ModulePres> pres_;
};

// Right H^{⊗n}-action on H^{⊗m} attached to π: [m] -> [n]: each target
// slot acts diagonally on its fiber, missed targets act by the counit.
HTensor right_action_via_map(const HopfAlgebra& H, const HTensor& t,
                             const HTensor& h, const SetMap& pi);

// Functorial action of induction on module maps: f: A -> B (both over
// H^{⊗n}) yields induce(A, π) -> induce(B, π).
LinearMap induce_map(const InducedModule& domA, const InducedModule& domB,
                     const LinearMap& f);

// Canonical isomorphism
//   H^{⊗|K|} ⊗_{H^{⊗|J|}} (H^{⊗|J|} ⊗_{H^{⊗|I|}} V)  ≅  H^{⊗|K|} ⊗_{H^{⊗|I|}} V
// for π₁: K→J, π₂: J→I. Returns the forward map between the two induced
// presentations; it commutes with the left H^{⊗|K|}-actions.
LinearMap canonical_assoc_iso(const HopfAlgebra& H, const ModulePres& V,
                              const SetMap& pi1, const SetMap& pi2,
                              const InducedModule& iterated,
                              const InducedModule& direct);

}  // namespace hinfty
