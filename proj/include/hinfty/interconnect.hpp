#pragma once

#include "hinfty/graded.hpp"

namespace hinfty {

// One interconnection value θ^{(π)}: induce(V^{|I|}, π) -> V^{|J|} for
// π: [|J|] -> [|I|], stored in the canonical induced coordinates.
// For ⊗*-product rules the paper's ⊗_Iπ_i formula covers a domain summand
// keyed g exactly when g and g∘π are block-monotone; paper_cols marks the
// covered domain basis columns (empty = fully covered).
struct RuleEntry {
  LinearMap value;
  bool paper = true;                // fully paper-covered entry
  std::vector<char> paper_cols;    // per-column coverage when partial
  bool col_is_paper(int c) const {
    return paper_cols.empty() ? paper : paper_cols[c] != 0;
  }
};

// Interconnection rule: a value for every map within the truncation (or a
// recorded gap). The id and δ rules are the built-ins from the paper.
struct Rule {
  enum class Kind { Explicit, Id, Delta, Product };
  Kind kind = Kind::Explicit;
  std::map<SetMap, RuleEntry> entry;
  std::vector<SetMap> unspecified;  // maps with no paper-given value

  const RuleEntry* find(const SetMap& pi) const {
    auto it = entry.find(pi);
    return it == entry.end() ? nullptr : &it->second;
  }
};

struct ICModule {
  GradedModule mod;
  Rule rule;
};

// The identity rule on a regular module V^∞ (the canonical identifications
// H^{⊗|J|}⊗_{H^{⊗|I|}}(H^{⊗|I|}⊗_H V) ≅ H^{⊗|J|}⊗_H V).
Rule id_rule(const GradedModule& V);

// The δ rule: permutations act by the paper's slot-permutation formula
// (the coordinate identity in pinned normal form), all other maps by 0.
Rule delta_rule(const GradedModule& V);

ICModule embed_i(const HopfAlgebra& H, const ModulePres& V, int trunc);
ICModule embed_iota_ic(const GradedModule& V);
ModulePres project_p(const ICModule& X);

// ---- Compatibility ----

struct PairCheck {
  SetMap pi1, pi2;  // π₁: K→J, π₂: J→I
  enum class Status { Pass, Fail, Flagged, Skipped } status;
  int witness = -1;  // first failing domain basis index
};

struct CompatReport {
  std::vector<PairCheck> pairs;
  int failures() const;
  int flagged() const;
  bool clean_or_flagged() const { return failures() == 0; }
};

// Enumerates all composable pairs with sizes ≤ trunc and compares
// θ^{(π₂∘π₁)} against θ^{(π₁)} ∘ induce(θ^{(π₂)}) through the canonical
// associativity isomorphism. For the δ rule, pairs whose composite is a
// permutation while a factor is not are the documented divergence and are
// flagged rather than failed.
CompatReport check_rule_compatibility(const ICModule& X, int trunc);

// ---- Morphisms ----

struct MorphismVerdict {
  bool pass = true;
  std::string detail;
};

enum class CheckMode { Full, Reduced };

// Full mode checks every table entry; Reduced checks only entries with
// target [n] (the Prop-4.1 reduction; n defaults to 1 and needs V^n ≠ 0).
MorphismVerdict check_ic_morphism(const GradedMap& f, const ICModule& V,
                                  const ICModule& W, CheckMode mode,
                                  int designated = 1);

// ---- Tensor products in H^∞-Mod_IC ----

// ⊠ of two interconnected modules: rule populated on product maps only;
// the rest is recorded as unspecified.
ICModule ic_boxtimes(const ICModule& A, const ICModule& B);

// ⊗* of a family: the rule is total via key-routing (each summand key g
// routes π through its fibers); entries are tagged `paper` exactly on the
// contiguous product maps the paper displays.
ICModule ic_star(const std::vector<ICModule>& factors);

// ---- i ⊣ p adjunction ----

// Hom_H(V, W¹) -> Hom_IC(i(V), (W,θ)): degree m component is
// θ_W^{(![m]→[1])} ∘ induce(g).
GradedMap adjoint_to_ic(const HopfAlgebra& H, const ModulePres& V, const ICModule& W,
                        const LinearMap& g);
// Hom_IC(i(V), (W,θ)) -> Hom_H(V, W¹): restriction to degree 1.
LinearMap adjoint_from_ic(const GradedMap& f);

// ---- Rule-constrained hom solver ----

// Basis of {f : degreewise equivariant, f∘θ_X^{(π)} = θ_W^{(π)}∘ind(f)
// for every π with entries on both sides}. With restrict_target ≥ 0 only
// the entries π: [m] → [restrict_target] are imposed (the Prop 4.3/4.4
// restriction to ι of one designated piece).
std::vector<GradedMap> ic_hom_basis(const ICModule& X, const ICModule& W,
                                    int restrict_target = -1);

}  // namespace hinfty
