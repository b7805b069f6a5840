#pragma once

#include "hinfty/htensor.hpp"
#include "hinfty/perm.hpp"

namespace hinfty {

// ---- The graded algebra H^∞ ----

// Finitely supported element of H^∞ = ⊕_{n≥0} H^{⊗n}.
struct HInftyElem {
  std::map<int, HTensor> comp;  // tensor degree -> homogeneous component

  static HInftyElem of(const HTensor& t);
  static HInftyElem of_scalar(const Scalar& s);
  void add(const HTensor& t);
  bool is_zero() const { return comp.empty(); }
  bool operator==(const HInftyElem&) const = default;
  std::string str() const;
};

// Componentwise product: slotwise when the degrees match, zero otherwise.
HInftyElem hinfty_product(const HopfAlgebra& H, const HInftyElem& x, const HInftyElem& y);

// Element of H^∞ ⊗ H^∞ (pairs of words of any lengths).
struct HInftyTensor2 {
  std::map<std::pair<Word, Word>, Scalar> t;
  void add(const Word& a, const Word& b, const Scalar& s);
  bool operator==(const HInftyTensor2&) const = default;
};

// Deconcatenation coproduct Δ^∞ (with the 1⊗x and x⊗1 extremes).
HInftyTensor2 hinfty_coproduct(const HInftyElem& x);
// Counit: the degree-0 coefficient.
Scalar hinfty_counit(const HInftyElem& x);
// Componentwise product on H^∞ ⊗ H^∞ (for the bialgebra-failure witness).
HInftyTensor2 hinfty_tensor2_product(const HopfAlgebra& H, const HInftyTensor2& x,
                                     const HInftyTensor2& y);

// ---- Graded H^∞-modules ----

// Truncated graded H^∞-module: piece[n] is an H^{⊗n}-module, 0 ≤ n ≤ N.
struct GradedModule {
  enum class Prov { Direct, Regular, Iota, Box, Star, Unit };

  const HopfAlgebra* H = nullptr;
  int trunc = 0;
  std::vector<ModulePres> piece;

  Prov prov = Prov::Direct;
  ModulePres regular_base;             // Prov::Regular: the H-module V
  std::vector<GradedModule> factors;   // Prov::Box / Prov::Star

  const ModulePres& at(int n) const;
  int dim(int n) const { return at(n).rank; }
  std::vector<int> dims() const;
};

// Homogeneous element of a graded module.
struct GradedVec {
  std::map<int, SparseVec> comp;  // degree -> coordinates
  void add(int deg, const SparseVec& v);
  bool is_zero() const { return comp.empty(); }
  bool operator==(const GradedVec&) const = default;
};

// Degreewise linear map (every H^∞-morphism is one; Lemma: f(V^n) ⊆ W^n).
struct GradedMap {
  int trunc = 0;
  std::vector<LinearMap> f;

  static GradedMap zero(const GradedModule& V, const GradedModule& W);
  static GradedMap identity(const GradedModule& V);
  GradedMap compose(const GradedMap& inner) const;
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator*(const Scalar& s) const;
  GradedMap operator-(const GradedMap& o) const { return *this + o * Scalar(-1); }
  bool operator==(const GradedMap& o) const { return f == o.f; }
  bool is_zero() const;
  GradedVec apply(const GradedVec& v) const;
};

// Action of an H^∞ element on a graded vector (degree match, else zero).
GradedVec module_action(const GradedModule& M, const HInftyElem& h, const GradedVec& v);

// The unit object k, concentrated in tensor degree 0.
GradedModule unit_module(const HopfAlgebra& H, int trunc);

// A module supported in one degree.
GradedModule concentrated(const HopfAlgebra& H, int trunc, int deg, ModulePres m);

// V ⊠ W with the split action; blocks tagged by (p,q).
GradedModule boxtimes(const GradedModule& V, const GradedModule& W);
GradedMap boxtimes_map(const GradedMap& f, const GradedMap& g);

// ⊗*_I V_i: degree-m piece sums over all maps f:[m]→I, each summand a
// ⊠-block read through the fiber-sorting twist; blocks carry f as key.
GradedModule star_tensor(const HopfAlgebra& H, const std::vector<GradedModule>& factors);

// The braiding of a ⊗*-product along τ: sends the summand keyed f to the
// summand keyed τ∘f of ⊗*_I V_{τ^{-1}(i)}; an H^∞-isomorphism.
struct Braiding {
  GradedModule target;
  GradedMap map;
};
Braiding braiding(const Perm& tau, const GradedModule& X);

// ⊗* on morphisms (blockwise, key-preserving).
GradedMap star_map(const GradedModule& X, const GradedModule& Y,
                   const std::vector<GradedMap>& fs);

// Regular module V^∞ = H^∞ ⊗_H V (degree n piece induced along [n]→[1]).
GradedModule regular_module(const HopfAlgebra& H, const ModulePres& V, int trunc);

// Endofunctor ι: object map sums induced modules over iso classes of maps
// [n] → I (set partition for the surjective part + counit-acting extras).
GradedModule iota_object(const GradedModule& V);
GradedMap iota_map(const GradedModule& V, const GradedModule& W, const GradedMap& f);

// Canonical class maps indexing (ι(V))^n within the truncation.
std::vector<SetMap> iota_class_maps(int n, int trunc);

// Degreewise equivariant hom basis Hom_{H^∞}(V, W) = ⊕_n Hom_{H^{⊗n}}(V^n, W^n),
// ordered by (degree, canonical kernel index).
std::vector<GradedMap> hom_basis(const GradedModule& V, const GradedModule& W);

// Hom_{H^{⊗n}}(A, B) for two presentations of equal degree.
std::vector<LinearMap> equivariant_hom(const HopfAlgebra& H, const ModulePres& A,
                                       const ModulePres& B);

// Star-summand slot bookkeeping: the fiber-sorting permutation σ_f
// (position j of [m] ↦ its rank in the fiber-grouped order).
Perm star_sort(const SetMap& f);

}  // namespace hinfty
