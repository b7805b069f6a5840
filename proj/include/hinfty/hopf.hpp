#pragma once

#include "hinfty/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hinfty {

// Basis word of H^{⊗n}: a tuple of basis indices, length n (n = 0 is the
// scalar unit of H^{⊗0} = k).
using Word = std::vector<int>;

// Element of H^{⊗deg} as a finitely supported sum of basis words.
struct HTensor {
  int deg = 0;
  std::map<Word, Scalar> t;

  HTensor() = default;
  explicit HTensor(int d) : deg(d) {}
  static HTensor word(const Word& w, const Scalar& s = Scalar(1));
  static HTensor scalar(const Scalar& s);  // degree 0

  bool is_zero() const { return t.empty(); }
  void add(const Word& w, const Scalar& s);
  void axpy(const Scalar& a, const HTensor& x);
  HTensor operator+(const HTensor& o) const;
  HTensor operator-(const HTensor& o) const;
  HTensor operator*(const Scalar& s) const;
  bool operator==(const HTensor& o) const { return deg == o.deg && t == o.t; }

  std::string str() const;
};

// Basis-presented Hopf algebra. Basis indices are 0,1,2,...; infinite-
// dimensional presentations expose element-level operations only, and
// operations needing a full enumeration take an explicit cap.
class HopfAlgebra {
public:
  virtual ~HopfAlgebra() = default;

  const Field& field() const { return field_; }
  virtual bool finite() const = 0;
  // Basis size; throws std::domain_error for infinite presentations.
  virtual int dim() const = 0;
  // Number of basis elements enumerated up to the degree cap (finite
  // presentations ignore the cap).
  virtual int enum_dim(int degree_cap) const;

  virtual SparseVec mul(int a, int b) const = 0;
  virtual SparseVec unit() const = 0;
  virtual HTensor comul(int b) const = 0;  // Δ(b), degree 2
  virtual Scalar counit(int b) const = 0;
  virtual SparseVec antipode(int b) const = 0;
  virtual bool cocommutative() const = 0;
  virtual std::string basis_label(int b) const = 0;
  virtual std::string name() const = 0;

  // Element-level extensions.
  SparseVec mul_elem(const SparseVec& x, const SparseVec& y) const;
  HTensor comul_elem(const SparseVec& x) const;
  Scalar counit_elem(const SparseVec& x) const;
  SparseVec antipode_elem(const SparseVec& x) const;

protected:
  Field field_;
};

// Group algebra k[G] from an explicit multiplication table.
class GroupAlgebra : public HopfAlgebra {
public:
  // table[i][j] = index of g_i g_j; validates the group axioms.
  GroupAlgebra(Field f, std::vector<std::string> names,
               std::vector<std::vector<int>> table, std::string name);
  static std::unique_ptr<GroupAlgebra> cyclic(Field f, int n);
  static std::unique_ptr<GroupAlgebra> symmetric(Field f, int n);

  bool finite() const override { return true; }
  int dim() const override { return n_; }
  SparseVec mul(int a, int b) const override;
  SparseVec unit() const override { return SparseVec::unit(identity_); }
  HTensor comul(int b) const override;
  Scalar counit(int) const override { return Scalar(1); }
  SparseVec antipode(int b) const override { return SparseVec::unit(inverse_[b]); }
  bool cocommutative() const override { return true; }
  std::string basis_label(int b) const override { return names_[b]; }
  std::string name() const override { return name_; }

  int group_mul(int a, int b) const { return table_[a][b]; }
  int group_inv(int a) const { return inverse_[a]; }
  int identity_index() const { return identity_; }

private:
  int n_;
  int identity_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string name_;
};

// Primitive polynomial Hopf algebra k[∂_1,...,∂_m] with monomial basis
// ordered by (total degree, lexicographic exponent). Infinite-dimensional;
// element-level operations work on arbitrary indices.
class PolyHopf : public HopfAlgebra {
public:
  PolyHopf(Field f, int vars, std::optional<int> default_cap = std::nullopt);

  bool finite() const override { return false; }
  int dim() const override;
  int enum_dim(int degree_cap) const override;

  SparseVec mul(int a, int b) const override;
  SparseVec unit() const override { return SparseVec::unit(0); }
  HTensor comul(int b) const override;
  Scalar counit(int b) const override { return b == 0 ? Scalar(1) : Scalar(0); }
  SparseVec antipode(int b) const override;
  bool cocommutative() const override { return true; }
  std::string basis_label(int b) const override;
  std::string name() const override;

  std::vector<int> exponents(int index) const;
  int index_of(const std::vector<int>& expo) const;
  int vars() const { return vars_; }
  std::optional<int> default_cap() const { return cap_; }

private:
  int vars_;
  std::optional<int> cap_;
};

// Test fixture: wraps a presentation and overrides one antipode value.
class CorruptedAntipode : public HopfAlgebra {
public:
  CorruptedAntipode(std::shared_ptr<const HopfAlgebra> base, int at, SparseVec value)
      : base_(std::move(base)), at_(at), value_(std::move(value)) {
    field_ = base_->field();
  }

  bool finite() const override { return base_->finite(); }
  int dim() const override { return base_->dim(); }
  int enum_dim(int cap) const override { return base_->enum_dim(cap); }
  SparseVec mul(int a, int b) const override { return base_->mul(a, b); }
  SparseVec unit() const override { return base_->unit(); }
  HTensor comul(int b) const override { return base_->comul(b); }
  Scalar counit(int b) const override { return base_->counit(b); }
  SparseVec antipode(int b) const override {
    return b == at_ ? value_ : base_->antipode(b);
  }
  bool cocommutative() const override { return base_->cocommutative(); }
  std::string basis_label(int b) const override { return base_->basis_label(b); }
  std::string name() const override { return base_->name() + "#corrupted-antipode"; }

private:
  std::shared_ptr<const HopfAlgebra> base_;
  int at_;
  SparseVec value_;
};

// ---- Tensor-power calculus ----

std::vector<Word> enumerate_words(int dim, int n);
int word_index(const Word& w, int dim);
Word index_word(int idx, int dim, int n);

// Slotwise product of two elements of H^{⊗n}.
HTensor htensor_mul(const HopfAlgebra& H, const HTensor& x, const HTensor& y);

// Iterated coproduct Δ^n : H -> H^{⊗(n+1)}; n = -1 is the counit
// (result of degree 0), n = 0 the identity.
HTensor iterated_coproduct(const HopfAlgebra& H, const SparseVec& x, int n);

// Fourier transform of H⊗H: forward f⊗g ↦ f g_{(-1)} ⊗ g_{(2)},
// inverse f⊗g ↦ f g_{(1)} ⊗ g_{(2)}.
enum class FourierDir { Forward, Inverse };
HTensor fourier(const HopfAlgebra& H, const HTensor& x, FourierDir dir);

// Right diagonal action (f_1⊗...⊗f_n)·h = (f_1 h_{(1)})⊗...⊗(f_n h_{(n)}).
HTensor act_tensor_power(const HopfAlgebra& H, const HTensor& t, const SparseVec& h);

// ---- Dual algebra (finite-dimensional presentations only) ----

enum class Side { Left, Right };
// Dual-basis action: ⟨x f, g⟩ = ⟨x, g S(f)⟩ (right), ⟨f x, g⟩ = ⟨x, S(f) g⟩ (left).
SparseVec dual_action(const HopfAlgebra& H, const SparseVec& x, const SparseVec& f,
                      Side side);
// ⟨S(x), f⟩ = ⟨x, S(f)⟩.
SparseVec dual_antipode(const HopfAlgebra& H, const SparseVec& x);
Scalar dual_pairing(const SparseVec& x, const SparseVec& h);

// ---- Axiom checking ----

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::string witness;  // first failing basis element / pair, empty when pass
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_pass() const;
  std::string str() const;
};

// Checks the Hopf axioms on the basis enumerated up to `bound` (ignored
// for finite presentations): associativity, unit, coassociativity, counit
// laws, Δ and ε multiplicative, the antipode identity, and cocommutativity
// when flagged.
AxiomReport check_hopf_axioms(const HopfAlgebra& H, int bound);

}  // namespace hinfty
