#pragma once

#include "hinfty/scalar.hpp"

#include <map>
#include <vector>

namespace hinfty {

// Sparse vector over a finite ordered index set {0,...,dim-1}. Zero
// coefficients are never stored.
struct SparseVec {
  std::map<int, Scalar> c;

  SparseVec() = default;
  static SparseVec unit(int i, const Scalar& s = Scalar(1));

  bool is_zero() const { return c.empty(); }
  Scalar get(int i) const;
  void set(int i, const Scalar& s);
  void add(int i, const Scalar& s);  // c[i] += s, dropping zeros
  void axpy(const Scalar& a, const SparseVec& x);  // *this += a*x

  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec operator*(const Scalar& s) const;
  SparseVec operator-() const { return *this * Scalar(-1); }
  bool operator==(const SparseVec& o) const { return c == o.c; }

  Scalar dot(const SparseVec& o) const;
  std::string str() const;
};

// Linear map between finite based spaces, stored column-wise:
// col[j] = image of the j-th domain basis vector, supported in [0, rows).
struct LinearMap {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  LinearMap() = default;
  LinearMap(int r, int c) : rows(r), cols(c), col(c) {}
  static LinearMap identity(int n);
  static LinearMap zero(int r, int c) { return LinearMap(r, c); }

  SparseVec apply(const SparseVec& x) const;
  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator*(const Scalar& s) const;
  bool operator==(const LinearMap& o) const;
  bool is_zero() const;

  Scalar entry(int i, int j) const { return col[j].get(i); }
  void set_entry(int i, int j, const Scalar& s) { col[j].set(i, s); }

  // Row i as a functional on the domain.
  SparseVec row(int i) const;
  std::vector<SparseVec> all_rows() const;

  int rank() const;
  LinearMap inverse() const;  // throws std::domain_error when singular

  // Block helpers.
  static LinearMap direct_sum(const LinearMap& a, const LinearMap& b);
  static LinearMap kronecker(const LinearMap& a, const LinearMap& b);

  std::string str() const;
};

// Reduced row echelon accumulator over the declared column order.
// Inserting rows in any order yields the same canonical form.
class Echelon {
public:
  void insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;  // residual of v modulo the row space
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

private:
  std::map<int, SparseVec> rows_;  // pivot column -> normalized row
};

// Canonical basis of the joint kernel of the given maps (all sharing one
// domain). Basis vectors are labeled by the free columns of the stacked
// reduced echelon form, in increasing order; they satisfy every
// constraint exactly. Throws std::invalid_argument when the domains
// mismatch.
std::vector<SparseVec> solve_hom_space(const std::vector<LinearMap>& constraints,
                                       int domain_dim);

// Quotient of k^{ambient} by span(relations). Representatives are the
// echelon-pivot complements (a subset of the ambient basis); projection
// is the idempotent with kernel = span(relations) fixing them.
struct Quotient {
  int ambient = 0;
  std::vector<int> reps;    // ambient indices of representative basis vectors
  LinearMap projection;     // ambient -> ambient, P∘P = P
  LinearMap to_coords;      // ambient -> dim(reps)
  LinearMap from_coords;    // dim(reps) -> ambient (inclusion)
  int dim() const { return static_cast<int>(reps.size()); }
};

Quotient quotient_space(int ambient_dim, const std::vector<SparseVec>& relations);

// Kernel basis of the row space accumulated in ech, over ncols columns.
std::vector<SparseVec> kernel_basis(const Echelon& ech, int ncols);

}  // namespace hinfty
