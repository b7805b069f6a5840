#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hinfty {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Ground field: exact rationals (p == 0), or the prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

// Exact scalar. A value is either a rational or a residue mod a prime p.
// Integer literals start out moduleless and coerce through the canonical
// map Z -> F_p the first time they meet a modular value; a genuine
// rational entering F_p inverts its denominator mod p and throws when p
// divides it. All arithmetic is exact; division by zero throws.
class Scalar {
public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(const BigInt& n) : v_(n) {}
  explicit Scalar(const BigRat& q) : v_(q) {}

  static Scalar of_field(long n, const Field& f);
  static Scalar rational(const BigInt& num, const BigInt& den);
  static Scalar mod_p(const BigInt& r, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  const BigRat& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

private:
  BigRat v_;
  std::uint32_t p_ = 0;  // 0: no modulus yet (rational / integer literal)

  void reduce();
  static std::uint32_t join(const Scalar& a, const Scalar& b);
};

// n! as an exact scalar of the given field; throws in F_p when p <= n.
Scalar factorial_scalar(int n, const Field& f);

}  // namespace hinfty
