#include "hinfty/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hinfty {

HTensor HTensor::word(const Word& w, const Scalar& s) {
  HTensor x(static_cast<int>(w.size()));
  x.add(w, s);
  return x;
}

HTensor HTensor::scalar(const Scalar& s) {
  HTensor x(0);
  x.add(Word{}, s);
  return x;
}

void HTensor::add(const Word& w, const Scalar& s) {
  if (static_cast<int>(w.size()) != deg)
    throw std::invalid_argument("word length does not match tensor degree");
  if (s.is_zero()) return;
  auto [it, fresh] = t.emplace(w, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

void HTensor::axpy(const Scalar& a, const HTensor& x) {
  if (x.deg != deg) throw std::invalid_argument("tensor degree mismatch");
  if (a.is_zero()) return;
  for (const auto& [w, s] : x.t) add(w, a * s);
}

HTensor HTensor::operator+(const HTensor& o) const {
  HTensor r = *this;
  r.axpy(Scalar(1), o);
  return r;
}

HTensor HTensor::operator-(const HTensor& o) const {
  HTensor r = *this;
  r.axpy(Scalar(-1), o);
  return r;
}

HTensor HTensor::operator*(const Scalar& s) const {
  HTensor r(deg);
  if (s.is_zero()) return r;
  for (const auto& [w, v] : t) r.t[w] = v * s;
  return r;
}

std::string HTensor::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, s] : t) {
    if (!first) os << " + ";
    os << s.str() << "*(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int HopfAlgebra::enum_dim(int) const { return dim(); }

SparseVec HopfAlgebra::mul_elem(const SparseVec& x, const SparseVec& y) const {
  SparseVec r;
  for (const auto& [a, va] : x.c)
    for (const auto& [b, vb] : y.c) r.axpy(va * vb, mul(a, b));
  return r;
}

HTensor HopfAlgebra::comul_elem(const SparseVec& x) const {
  HTensor r(2);
  for (const auto& [b, v] : x.c) r.axpy(v, comul(b));
  return r;
}

Scalar HopfAlgebra::counit_elem(const SparseVec& x) const {
  Scalar r(0);
  for (const auto& [b, v] : x.c) r += v * counit(b);
  return r;
}

SparseVec HopfAlgebra::antipode_elem(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [b, v] : x.c) r.axpy(v, antipode(b));
  return r;
}

GroupAlgebra::GroupAlgebra(Field f, std::vector<std::string> names,
                           std::vector<std::vector<int>> table, std::string name)
    : names_(std::move(names)), table_(std::move(table)), name_(std::move(name)) {
  field_ = f;
  n_ = static_cast<int>(table_.size());
  if (n_ == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n_) throw std::invalid_argument("group table entry out of range");
  }
  if (static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("group element name count mismatch");
  // Identity: two-sided.
  identity_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("group table has no identity");
  // Associativity.
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative at (" +
                                      names_[a] + "," + names_[b] + "," + names_[c] + ")");
  // Inverses.
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0)
      throw std::invalid_argument("group table element without inverse: " + names_[a]);
  }
}

SparseVec GroupAlgebra::mul(int a, int b) const {
  return SparseVec::unit(table_[a][b]);
}

HTensor GroupAlgebra::comul(int b) const { return HTensor::word(Word{b, b}); }

std::unique_ptr<GroupAlgebra> GroupAlgebra::cyclic(Field f, int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return std::make_unique<GroupAlgebra>(f, names, table, "k[Z/" + std::to_string(n) + "]");
}

std::unique_ptr<GroupAlgebra> GroupAlgebra::symmetric(Field f, int n) {
  if (n < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int sz = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> lookup;
  for (int i = 0; i < sz; ++i) lookup[perms[i]] = i;
  std::vector<std::vector<int>> table(sz, std::vector<int>(sz));
  std::vector<std::string> names(sz);
  for (int a = 0; a < sz; ++a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) os << (i ? " " : "") << perms[a][i] + 1;
    os << "]";
    names[a] = os.str();
    for (int b = 0; b < sz; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = lookup.at(c);
    }
  }
  return std::make_unique<GroupAlgebra>(f, names, table, "k[S_" + std::to_string(n) + "]");
}

namespace {

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// Number of monomials in m variables of total degree t.
long monomials_of_degree(int m, int t) {
  return binom(t + m - 1, m - 1).convert_to<long>();
}

}  // namespace

PolyHopf::PolyHopf(Field f, int vars, std::optional<int> default_cap)
    : vars_(vars), cap_(default_cap) {
  field_ = f;
  if (vars < 1) throw std::invalid_argument("polynomial Hopf algebra needs >= 1 variable");
}

int PolyHopf::dim() const {
  throw std::domain_error("infinite-dimensional presentation " + name() +
                          ": operation needs an explicit degree cap");
}

int PolyHopf::enum_dim(int degree_cap) const {
  if (degree_cap < 0)
    throw std::domain_error("infinite-dimensional presentation " + name() +
                            ": operation needs an explicit degree cap");
  long total = 0;
  for (int t = 0; t <= degree_cap; ++t) total += monomials_of_degree(vars_, t);
  return static_cast<int>(total);
}

std::vector<int> PolyHopf::exponents(int index) const {
  if (index < 0) throw std::out_of_range("negative basis index");
  int t = 0;
  long rem = index;
  while (rem >= monomials_of_degree(vars_, t)) {
    rem -= monomials_of_degree(vars_, t);
    ++t;
  }
  // rem-th exponent vector of total degree t in ascending lex order.
  std::vector<int> e(vars_);
  int left = t;
  for (int i = 0; i < vars_ - 1; ++i) {
    for (int a = 0;; ++a) {
      long block = monomials_of_degree(vars_ - 1 - i, left - a);
      if (rem < block) {
        e[i] = a;
        left -= a;
        break;
      }
      rem -= block;
    }
  }
  e[vars_ - 1] = left;
  return e;
}

int PolyHopf::index_of(const std::vector<int>& expo) const {
  if (static_cast<int>(expo.size()) != vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  int t = 0;
  for (int a : expo) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    t += a;
  }
  long idx = 0;
  for (int s = 0; s < t; ++s) idx += monomials_of_degree(vars_, s);
  int left = t;
  for (int i = 0; i < vars_ - 1; ++i) {
    for (int a = 0; a < expo[i]; ++a) idx += monomials_of_degree(vars_ - 1 - i, left - a);
    left -= expo[i];
  }
  return static_cast<int>(idx);
}

SparseVec PolyHopf::mul(int a, int b) const {
  auto ea = exponents(a), eb = exponents(b);
  for (int i = 0; i < vars_; ++i) ea[i] += eb[i];
  return SparseVec::unit(index_of(ea));
}

HTensor PolyHopf::comul(int b) const {
  // Δ(∂^a) = Σ_{c ≤ a} Π binom(a_i, c_i) ∂^c ⊗ ∂^{a-c}.
  auto a = exponents(b);
  HTensor r(2);
  std::vector<int> c(vars_, 0);
  while (true) {
    BigInt coeff = 1;
    for (int i = 0; i < vars_; ++i) coeff *= binom(a[i], c[i]);
    std::vector<int> rest(vars_);
    for (int i = 0; i < vars_; ++i) rest[i] = a[i] - c[i];
    r.add(Word{index_of(c), index_of(rest)}, Scalar::of_field(1, field()) * Scalar(coeff));
    int i = 0;
    while (i < vars_ && c[i] == a[i]) c[i++] = 0;
    if (i == vars_) break;
    ++c[i];
  }
  return r;
}

SparseVec PolyHopf::antipode(int b) const {
  auto a = exponents(b);
  int t = std::accumulate(a.begin(), a.end(), 0);
  return SparseVec::unit(b, Scalar(t % 2 == 0 ? 1 : -1));
}

std::string PolyHopf::basis_label(int b) const {
  auto e = exponents(b);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < vars_; ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << "d" << (vars_ > 1 ? std::to_string(i + 1) : "");
    if (e[i] > 1) os << "^" << e[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string PolyHopf::name() const {
  return vars_ == 1 ? "k[d]" : "k[d1..d" + std::to_string(vars_) + "]";
}

std::vector<Word> enumerate_words(int dim, int n) {
  std::vector<Word> ws;
  Word w(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= dim;
  ws.reserve(total);
  while (true) {
    ws.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == dim - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return ws;
}

int word_index(const Word& w, int dim) {
  int idx = 0;
  for (int b : w) {
    if (b < 0 || b >= dim) throw std::out_of_range("word letter outside basis");
    idx = idx * dim + b;
  }
  return idx;
}

Word index_word(int idx, int dim, int n) {
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = idx % dim;
    idx /= dim;
  }
  return w;
}

HTensor htensor_mul(const HopfAlgebra& H, const HTensor& x, const HTensor& y) {
  if (x.deg != y.deg) throw std::invalid_argument("slotwise product degree mismatch");
  HTensor r(x.deg);
  for (const auto& [wx, vx] : x.t)
    for (const auto& [wy, vy] : y.t) {
      // Expand the slotwise products.
      HTensor acc(0);
      acc.add(Word{}, vx * vy);
      for (int i = 0; i < x.deg; ++i) {
        HTensor next(i + 1);
        SparseVec prod = H.mul(wx[i], wy[i]);
        for (const auto& [w, v] : acc.t)
          for (const auto& [b, vb] : prod.c) {
            Word nw = w;
            nw.push_back(b);
            next.add(nw, v * vb);
          }
        acc = std::move(next);
      }
      r.axpy(Scalar(1), acc);
    }
  return r;
}

HTensor iterated_coproduct(const HopfAlgebra& H, const SparseVec& x, int n) {
  if (n < -1) throw std::invalid_argument("iterated coproduct needs n >= -1");
  if (n == -1) return HTensor::scalar(H.counit_elem(x));
  HTensor cur(1);
  for (const auto& [b, v] : x.c) cur.add(Word{b}, v);
  for (int k = 0; k < n; ++k) {
    HTensor next(cur.deg + 1);
    for (const auto& [w, v] : cur.t) {
      HTensor dw = H.comul(w[0]);
      for (const auto& [pair, vp] : dw.t) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(pair[0]);
        nw.push_back(pair[1]);
        nw.insert(nw.end(), w.begin() + 1, w.end());
        next.add(nw, v * vp);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

HTensor fourier(const HopfAlgebra& H, const HTensor& x, FourierDir dir) {
  if (x.deg != 2) throw std::invalid_argument("Fourier transform acts on H⊗H");
  HTensor r(2);
  for (const auto& [w, v] : x.t) {
    HTensor dg = H.comul(w[1]);
    for (const auto& [pair, vp] : dg.t) {
      SparseVec first = dir == FourierDir::Forward
                            ? H.mul_elem(SparseVec::unit(w[0]), H.antipode(pair[0]))
                            : H.mul(w[0], pair[0]);
      for (const auto& [b, vb] : first.c) r.add(Word{b, pair[1]}, v * vp * vb);
    }
  }
  return r;
}

HTensor act_tensor_power(const HopfAlgebra& H, const HTensor& t, const SparseVec& h) {
  if (t.deg < 1) throw std::invalid_argument("right action needs degree >= 1");
  HTensor r(t.deg);
  HTensor dh = iterated_coproduct(H, h, t.deg - 1);
  for (const auto& [w, v] : t.t)
    for (const auto& [dw, dv] : dh.t) {
      HTensor acc(0);
      acc.add(Word{}, v * dv);
      for (int i = 0; i < t.deg; ++i) {
        HTensor next(i + 1);
        SparseVec prod = H.mul(w[i], dw[i]);
        for (const auto& [pw, pv] : acc.t)
          for (const auto& [b, vb] : prod.c) {
            Word nw = pw;
            nw.push_back(b);
            next.add(nw, pv * vb);
          }
        acc = std::move(next);
      }
      r.axpy(Scalar(1), acc);
    }
  return r;
}

SparseVec dual_action(const HopfAlgebra& H, const SparseVec& x, const SparseVec& f,
                      Side side) {
  int d = H.dim();  // throws for infinite presentations
  SparseVec sf = H.antipode_elem(f);
  SparseVec r;
  for (int j = 0; j < d; ++j) {
    SparseVec arg = side == Side::Right ? H.mul_elem(SparseVec::unit(j), sf)
                                        : H.mul_elem(sf, SparseVec::unit(j));
    Scalar cj = dual_pairing(x, arg);
    if (!cj.is_zero()) r.set(j, cj);
  }
  return r;
}

SparseVec dual_antipode(const HopfAlgebra& H, const SparseVec& x) {
  int d = H.dim();
  SparseVec r;
  for (int j = 0; j < d; ++j) {
    Scalar cj = dual_pairing(x, H.antipode(j));
    if (!cj.is_zero()) r.set(j, cj);
  }
  return r;
}

Scalar dual_pairing(const SparseVec& x, const SparseVec& h) { return x.dot(h); }

bool AxiomReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string AxiomReport::str() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.axiom;
    if (!r.pass) os << "  witness: " << r.witness;
    os << "\n";
  }
  return os.str();
}

AxiomReport check_hopf_axioms(const HopfAlgebra& H, int bound) {
  AxiomReport rep;
  int n = H.finite() ? H.dim() : H.enum_dim(bound);
  auto basis = [&](int i) { return SparseVec::unit(i); };
  SparseVec one = H.unit();

  {
    AxiomResult r{"associativity", true, ""};
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b)
        for (int c = 0; c < n && r.pass; ++c) {
          SparseVec lhs = H.mul_elem(H.mul(a, b), basis(c));
          SparseVec rhs = H.mul_elem(basis(a), H.mul(b, c));
          if (!(lhs == rhs)) {
            r.pass = false;
            r.witness = H.basis_label(a) + "," + H.basis_label(b) + "," + H.basis_label(c);
          }
        }
    rep.results.push_back(r);
  }
  {
    AxiomResult r{"unit", true, ""};
    for (int b = 0; b < n && r.pass; ++b) {
      if (!(H.mul_elem(one, basis(b)) == basis(b)) ||
          !(H.mul_elem(basis(b), one) == basis(b))) {
        r.pass = false;
        r.witness = H.basis_label(b);
      }
    }
    rep.results.push_back(r);
  }
  {
    AxiomResult r{"coassociativity", true, ""};
    for (int b = 0; b < n && r.pass; ++b) {
      // (Δ⊗id)Δ(b) vs (id⊗Δ)Δ(b).
      HTensor d = H.comul(b);
      HTensor lhs(3), rhs(3);
      for (const auto& [w, v] : d.t) {
        HTensor d0 = H.comul(w[0]);
        for (const auto& [p, vp] : d0.t) lhs.add(Word{p[0], p[1], w[1]}, v * vp);
        HTensor d1 = H.comul(w[1]);
        for (const auto& [p, vp] : d1.t) rhs.add(Word{w[0], p[0], p[1]}, v * vp);
      }
      if (!(lhs == rhs)) {
        r.pass = false;
        r.witness = H.basis_label(b);
      }
    }
    rep.results.push_back(r);
  }
  {
    AxiomResult r{"counit", true, ""};
    for (int b = 0; b < n && r.pass; ++b) {
      HTensor d = H.comul(b);
      SparseVec lhs, rhs;
      for (const auto& [w, v] : d.t) {
        lhs.add(w[1], v * H.counit(w[0]));
        rhs.add(w[0], v * H.counit(w[1]));
      }
      if (!(lhs == basis(b)) || !(rhs == basis(b))) {
        r.pass = false;
        r.witness = H.basis_label(b);
      }
    }
    rep.results.push_back(r);
  }
  {
    AxiomResult r{"comul-multiplicative", true, ""};
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b) {
        HTensor lhs = H.comul_elem(H.mul(a, b));
        HTensor rhs = htensor_mul(H, H.comul(a), H.comul(b));
        if (!(lhs == rhs)) {
          r.pass = false;
          r.witness = H.basis_label(a) + "," + H.basis_label(b);
        }
      }
    rep.results.push_back(r);
  }
  {
    AxiomResult r{"counit-multiplicative", true, ""};
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b) {
        if (!(H.counit_elem(H.mul(a, b)) == H.counit(a) * H.counit(b))) {
          r.pass = false;
          r.witness = H.basis_label(a) + "," + H.basis_label(b);
        }
      }
    if (r.pass && !(H.counit_elem(one) == Scalar(1))) {
      r.pass = false;
      r.witness = "1";
    }
    rep.results.push_back(r);
  }
  {
    AxiomResult r{"antipode", true, ""};
    for (int b = 0; b < n && r.pass; ++b) {
      HTensor d = H.comul(b);
      SparseVec lhs, rhs;
      for (const auto& [w, v] : d.t) {
        lhs.axpy(v, H.mul_elem(H.antipode(w[0]), basis(w[1])));
        rhs.axpy(v, H.mul_elem(basis(w[0]), H.antipode(w[1])));
      }
      SparseVec want = one * H.counit(b);
      if (!(lhs == want) || !(rhs == want)) {
        r.pass = false;
        r.witness = H.basis_label(b);
      }
    }
    rep.results.push_back(r);
  }
  if (H.cocommutative()) {
    AxiomResult r{"cocommutativity", true, ""};
    for (int b = 0; b < n && r.pass; ++b) {
      HTensor d = H.comul(b);
      HTensor sw(2);
      for (const auto& [w, v] : d.t) sw.add(Word{w[1], w[0]}, v);
      if (!(sw == d)) {
        r.pass = false;
        r.witness = H.basis_label(b);
      }
    }
    rep.results.push_back(r);
  }
  return rep;
}

}  // namespace hinfty
