#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace hinfty {

// Permutation of {0,...,n-1} in one-line notation: i ↦ p[i].
struct Perm {
  std::vector<int> p;

  Perm() = default;
  explicit Perm(std::vector<int> v) : p(std::move(v)) {}
  static Perm id(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(v);
  }
  static std::vector<Perm> all(int n);

  int n() const { return static_cast<int>(p.size()); }
  int operator()(int i) const { return p[i]; }
  Perm inverse() const {
    std::vector<int> v(p.size());
    for (int i = 0; i < n(); ++i) v[p[i]] = i;
    return Perm(v);
  }
  // (this ∘ o)(i) = this(o(i)).
  Perm after(const Perm& o) const {
    std::vector<int> v(p.size());
    for (int i = 0; i < n(); ++i) v[i] = p[o.p[i]];
    return Perm(v);
  }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (p[i] != i) return false;
    return true;
  }
  // Block permutation: permutes consecutive blocks of the given sizes as
  // this permutes their indices; block i lands where this sends it, kept
  // intact. Returns a permutation of {0,...,sum(sizes)-1}.
  Perm block(const std::vector<int>& sizes) const;

  auto operator<=>(const Perm&) const = default;
  std::string str() const;
};

inline std::vector<Perm> Perm::all(int n) {
  std::vector<Perm> out;
  Perm p = id(n);
  std::vector<int> v = p.p;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Perm Perm::block(const std::vector<int>& sizes) const {
  int k = n();
  std::vector<int> src_off(k, 0), tgt_off(k + 1, 0);
  for (int i = 1; i < k; ++i) src_off[i] = src_off[i - 1] + sizes[i - 1];
  // Target slot j holds source block inverse()(j).
  Perm inv = inverse();
  for (int j = 0; j < k; ++j) tgt_off[j + 1] = tgt_off[j] + sizes[inv.p[j]];
  int total = tgt_off[k];
  std::vector<int> q(total);
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < sizes[i]; ++r) q[src_off[i] + r] = tgt_off[p[i]] + r;
  return Perm(q);
}

inline std::string Perm::str() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) s += (i ? " " : "") + std::to_string(p[i] + 1);
  return s + ")";
}

}  // namespace hinfty
