#include "hinfty/linalg.hpp"

#include <sstream>

namespace hinfty {

SparseVec SparseVec::unit(int i, const Scalar& s) {
  SparseVec v;
  v.set(i, s);
  return v;
}

Scalar SparseVec::get(int i) const {
  auto it = c.find(i);
  return it == c.end() ? Scalar(0) : it->second;
}

void SparseVec::set(int i, const Scalar& s) {
  if (s.is_zero())
    c.erase(i);
  else
    c[i] = s;
}

void SparseVec::add(int i, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = c.emplace(i, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) c.erase(it);
  }
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, s] : x.c) add(i, a * s);
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec r = *this;
  r.axpy(Scalar(1), o);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
  SparseVec r = *this;
  r.axpy(Scalar(-1), o);
  return r;
}

SparseVec SparseVec::operator*(const Scalar& s) const {
  SparseVec r;
  if (s.is_zero()) return r;
  for (const auto& [i, v] : c) r.c[i] = v * s;
  return r;
}

Scalar SparseVec::dot(const SparseVec& o) const {
  Scalar r(0);
  const SparseVec& small = c.size() <= o.c.size() ? *this : o;
  const SparseVec& big = c.size() <= o.c.size() ? o : *this;
  for (const auto& [i, v] : small.c) {
    auto it = big.c.find(i);
    if (it != big.c.end()) r += v * it->second;
  }
  return r;
}

std::string SparseVec::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, v] : c) {
    if (!first) os << " + ";
    os << v.str() << "*e" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

LinearMap LinearMap::identity(int n) {
  LinearMap m(n, n);
  for (int j = 0; j < n; ++j) m.col[j].set(j, Scalar(1));
  return m;
}

SparseVec LinearMap::apply(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [j, v] : x.c) {
    if (j < 0 || j >= cols) throw std::out_of_range("vector index outside map domain");
    r.axpy(v, col[j]);
  }
  return r;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (cols != inner.rows)
    throw std::invalid_argument("composition dimension mismatch");
  LinearMap r(rows, inner.cols);
  for (int j = 0; j < inner.cols; ++j) r.col[j] = apply(inner.col[j]);
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("sum dimension mismatch");
  LinearMap r = *this;
  for (int j = 0; j < cols; ++j) r.col[j].axpy(Scalar(1), o.col[j]);
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  return *this + o * Scalar(-1);
}

LinearMap LinearMap::operator*(const Scalar& s) const {
  LinearMap r(rows, cols);
  for (int j = 0; j < cols; ++j) r.col[j] = col[j] * s;
  return r;
}

bool LinearMap::operator==(const LinearMap& o) const {
  return rows == o.rows && cols == o.cols && col == o.col;
}

bool LinearMap::is_zero() const {
  for (const auto& v : col)
    if (!v.is_zero()) return false;
  return true;
}

SparseVec LinearMap::row(int i) const {
  SparseVec r;
  for (int j = 0; j < cols; ++j) {
    Scalar s = col[j].get(i);
    if (!s.is_zero()) r.c[j] = s;
  }
  return r;
}

std::vector<SparseVec> LinearMap::all_rows() const {
  std::vector<SparseVec> rs(rows);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[j].c) rs[i].c[j] = v;
  return rs;
}

int LinearMap::rank() const {
  Echelon e;
  for (int j = 0; j < cols; ++j) e.insert(col[j]);
  return e.rank();
}

LinearMap LinearMap::inverse() const {
  if (rows != cols) throw std::domain_error("inverse of a non-square map");
  // Gauss-Jordan on [M | I] over the columns of M.
  int n = rows;
  std::vector<SparseVec> m(n), aug(n);
  for (int j = 0; j < n; ++j) {
    m[j] = col[j];
    aug[j].set(j, Scalar(1));
  }
  std::vector<int> where(n, -1);  // pivot row -> column holding it
  std::vector<bool> used(n, false);
  for (int r = 0; r < n; ++r) {
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (!used[j] && !m[j].get(r).is_zero()) {
        pc = j;
        break;
      }
    if (pc == -1) throw std::domain_error("singular map");
    used[pc] = true;
    where[r] = pc;
    Scalar inv = m[pc].get(r).inverse();
    m[pc] = m[pc] * inv;
    aug[pc] = aug[pc] * inv;
    for (int j = 0; j < n; ++j) {
      if (j == pc) continue;
      Scalar f = m[j].get(r);
      if (f.is_zero()) continue;
      m[j].axpy(-f, m[pc]);
      aug[j].axpy(-f, aug[pc]);
    }
  }
  // Now column where[r] of M is e_r; the inverse sends e_r to aug[where[r]].
  LinearMap inv(n, n);
  for (int r = 0; r < n; ++r) inv.col[r] = aug[where[r]];
  return inv;
}

LinearMap LinearMap::direct_sum(const LinearMap& a, const LinearMap& b) {
  LinearMap r(a.rows + b.rows, a.cols + b.cols);
  for (int j = 0; j < a.cols; ++j) r.col[j] = a.col[j];
  for (int j = 0; j < b.cols; ++j)
    for (const auto& [i, v] : b.col[j].c) r.col[a.cols + j].set(a.rows + i, v);
  return r;
}

LinearMap LinearMap::kronecker(const LinearMap& a, const LinearMap& b) {
  // Index (i,j) of the product basis as i*dim_b + j.
  LinearMap r(a.rows * b.rows, a.cols * b.cols);
  for (int ja = 0; ja < a.cols; ++ja)
    for (int jb = 0; jb < b.cols; ++jb) {
      SparseVec& out = r.col[ja * b.cols + jb];
      for (const auto& [ia, va] : a.col[ja].c)
        for (const auto& [ib, vb] : b.col[jb].c)
          out.set(ia * b.rows + ib, va * vb);
    }
  return r;
}

std::string LinearMap::str() const {
  std::ostringstream os;
  os << rows << "x" << cols << ":";
  for (int j = 0; j < cols; ++j) os << " [" << col[j].str() << "]";
  return os.str();
}

void Echelon::insert(SparseVec v) {
  // Forward-reduce against existing rows.
  for (auto it = v.c.begin(); it != v.c.end();) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    v.axpy(-f, rit->second);
    it = v.c.lower_bound(rit->first + 1);
  }
  if (v.is_zero()) return;
  int pivot = v.c.begin()->first;
  Scalar lead = v.c.begin()->second;
  v = v * lead.inverse();
  // Back-substitute into rows containing the new pivot.
  for (auto& [p, r] : rows_) {
    Scalar f = r.get(pivot);
    if (!f.is_zero()) r.axpy(-f, v);
  }
  rows_.emplace(pivot, std::move(v));
}

SparseVec Echelon::reduce(SparseVec v) const {
  for (auto it = v.c.begin(); it != v.c.end();) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    v.axpy(-f, rit->second);
    it = v.c.lower_bound(rit->first + 1);
  }
  return v;
}

std::vector<SparseVec> kernel_basis(const Echelon& ech, int ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& [p, r] : ech.rows()) {
    if (p >= ncols) throw std::invalid_argument("echelon wider than declared domain");
    is_pivot[p] = true;
  }
  std::vector<SparseVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec x;
    x.set(f, Scalar(1));
    for (const auto& [p, r] : ech.rows()) {
      Scalar cf = r.get(f);
      if (!cf.is_zero()) x.set(p, -cf);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<SparseVec> solve_hom_space(const std::vector<LinearMap>& constraints,
                                       int domain_dim) {
  Echelon ech;
  for (const auto& m : constraints) {
    if (m.cols != domain_dim)
      throw std::invalid_argument("constraint domain mismatch: " +
                                  std::to_string(m.cols) + " vs " +
                                  std::to_string(domain_dim));
    for (const auto& r : m.all_rows()) ech.insert(r);
  }
  return kernel_basis(ech, domain_dim);
}

Quotient quotient_space(int ambient_dim, const std::vector<SparseVec>& relations) {
  Echelon ech;
  for (const auto& r : relations) {
    for (const auto& [i, v] : r.c)
      if (i < 0 || i >= ambient_dim)
        throw std::invalid_argument("relation outside the ambient space");
    ech.insert(r);
  }
  Quotient q;
  q.ambient = ambient_dim;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (const auto& [p, r] : ech.rows()) is_pivot[p] = true;
  for (int i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) q.reps.push_back(i);

  q.projection = LinearMap(ambient_dim, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    if (!is_pivot[i]) {
      q.projection.col[i].set(i, Scalar(1));
    } else {
      // e_p = -sum over free columns of the pivot row, modulo relations.
      const SparseVec& r = ech.rows().at(i);
      for (const auto& [j, v] : r.c)
        if (j != i) q.projection.col[i].set(j, -v);
    }
  }

  int d = q.dim();
  q.to_coords = LinearMap(d, ambient_dim);
  q.from_coords = LinearMap(ambient_dim, d);
  std::map<int, int> rep_pos;
  for (int k = 0; k < d; ++k) {
    rep_pos[q.reps[k]] = k;
    q.from_coords.col[k].set(q.reps[k], Scalar(1));
  }
  for (int i = 0; i < ambient_dim; ++i)
    for (const auto& [j, v] : q.projection.col[i].c)
      q.to_coords.col[i].set(rep_pos.at(j), v);
  return q;
}

}  // namespace hinfty
