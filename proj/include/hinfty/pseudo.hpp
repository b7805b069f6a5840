#pragma once

#include "hinfty/interconnect.hpp"

namespace hinfty {

// Polylinear operation φ ∈ Hom_{H^{⊗k}}(⊠_i L_i, H^{⊗k} ⊗_H M), stored in
// the pinned induced coordinates of the target.
struct PolyOperation {
  const HopfAlgebra* H = nullptr;
  std::vector<ModulePres> sources;  // degree-1 modules L_i
  ModulePres target;                // degree-1 module M
  LinearMap value;                  // ⊠L_i -> induce(M, [k]→[1]) coords

  int arity() const { return static_cast<int>(sources.size()); }
  static PolyOperation identity(const HopfAlgebra& H, const ModulePres& M);
};

// Pseudoproduct *: V⊗V -> (H⊗H)⊗_H V as the arity-2 table on basis pairs.
struct Pseudoproduct {
  const HopfAlgebra* H = nullptr;
  ModulePres V;                                 // degree-1 carrier
  std::vector<std::vector<SparseVec>> table;    // [v][w] -> induce(V,[2]→[1]) coords

  PolyOperation as_operation() const;
  bool operator==(const Pseudoproduct& o) const {
    return V.rank == o.V.rank && table == o.table;
  }

  // H-bilinearity (fv)*(gw) = ((f⊗g)⊗_H 1)(v*w) on enumerated letters.
  bool bilinear() const;

  // The free rank-1 example v*w := (v⊗w)⊗_H 1 on V = H.
  static Pseudoproduct mul_table(const HopfAlgebra& H);
  static Pseudoproduct zero(const HopfAlgebra& H, const ModulePres& V);
};

// Expansion of φ to inputs of degrees (d_1,...,d_k):
//   ⊠_i (H^{⊗d_i} ⊗_H L_i) -> H^{⊗Σd_i} ⊗_H M,
// (F_1⊗a_1)⊠... ↦ (F⃗ ⊗_H id)(Δ^{d_1-1}⊗...⊗Δ^{d_k-1} ⊗_H id)(φ(a⃗)),
// with Δ^{-1} = ε. Domain basis: tuples of pinned induced bases.
LinearMap expand_poly(const PolyOperation& op, const std::vector<int>& degrees);

// Binary case *_{(m,n)} of a pseudoproduct.
LinearMap expand_pseudoproduct(const Pseudoproduct& star, int m, int n);

// The H^∞-multiplication attached to a pseudoproduct: the morphism
// V^∞ ⊗* V^∞ -> V^∞ whose (J1,J2)-summand is *_{(|J1|,|J2|)} read through
// the fiber sort. Passes check_ic_morphism against the id rules.
GradedMap pseudo_to_hinfty(const Pseudoproduct& star, int trunc);

// Extraction of the (1,1) block plus the membership verdict: whether the
// given morphism is the expansion of its own (1,1) block (μ ∈ Hom^pseudo).
struct PseudoExtraction {
  Pseudoproduct star;
  bool is_pseudo = false;
};
PseudoExtraction hinfty_to_pseudo(const GradedMap& mu, const ICModule& X,
                                  const ICModule& V);

// Basis of P_I({L_i}, M) = Hom_{H^{⊗|I|}}(⊠L_i, H^{⊗|I|}⊗_H M).
std::vector<PolyOperation> poly_op_space(const HopfAlgebra& H,
                                         const std::vector<ModulePres>& sources,
                                         const ModulePres& target);

// Input permutation action on P_I (conjugating by the tuple permutation
// and the word-slot permutation of the target).
PolyOperation poly_op_permute(const PolyOperation& op, const Perm& sigma);

// Composition (Eq. 2): φ ∈ P_I, ψ_i ∈ P_{J_i} with contiguous fibers in
// tree order; the result has arity Σ|J_i|.
PolyOperation compose_poly_ops(const PolyOperation& phi,
                               const std::vector<PolyOperation>& psis);

// Formal tensor-envelope morphisms (π, {φ_i}) with surjective π.
struct EnvelopeMorphism {
  SetMap pi;  // J ↠ I
  std::vector<PolyOperation> phi;  // φ_i on the fiber J_i
};
EnvelopeMorphism envelope_compose(const EnvelopeMorphism& outer,
                                  const EnvelopeMorphism& inner);

// Direct evaluation of a PolyOperation on a tuple of module elements.
SparseVec poly_eval(const PolyOperation& op, const std::vector<SparseVec>& inputs);

}  // namespace hinfty
