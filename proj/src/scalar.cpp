#include "hinfty/scalar.hpp"

namespace hinfty {

namespace {

// x^{-1} mod p for prime p, 0 <= x < p. Throws on x == 0.
std::int64_t inv_mod(std::int64_t x, std::int64_t p) {
  if (x == 0) throw std::domain_error("division by zero in F_p");
  std::int64_t a = x, b = p, u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  // a == gcd(x, p) == 1 since p is prime and x != 0 mod p
  u %= p;
  if (u < 0) u += p;
  return u;
}

}  // namespace

Scalar Scalar::of_field(long n, const Field& f) {
  Scalar s(n);
  if (f.p != 0) s = mod_p(BigInt(n), f.p);
  return s;
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Scalar s;
  s.v_ = BigRat(num, den);
  return s;
}

Scalar Scalar::mod_p(const BigInt& r, std::uint32_t p) {
  if (p == 0) throw std::invalid_argument("modulus must be a prime > 0");
  Scalar s;
  s.p_ = p;
  BigInt m = r % p;
  if (m < 0) m += p;
  s.v_ = BigRat(m);
  return s;
}

void Scalar::reduce() {
  if (p_ == 0) return;
  BigInt num = boost::multiprecision::numerator(v_);
  BigInt den = boost::multiprecision::denominator(v_);
  BigInt n = num % p_;
  if (n < 0) n += p_;
  BigInt d = den % p_;
  if (d == 0)
    throw std::domain_error("denominator divisible by the field characteristic " +
                            std::to_string(p_));
  std::int64_t di = d.convert_to<std::int64_t>();
  BigInt r = (n * inv_mod(di, p_)) % p_;
  v_ = BigRat(r);
}

std::uint32_t Scalar::join(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw std::invalid_argument("scalars from different prime fields: F" +
                              std::to_string(a.p_) + " vs F" + std::to_string(b.p_));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.p_ = join(*this, o);
  r.v_ = v_ + o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  r.p_ = join(*this, o);
  r.v_ = v_ - o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.p_ = join(*this, o);
  r.v_ = v_ * o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.v_ == 0) throw std::domain_error("division by zero");
  Scalar r;
  r.p_ = join(*this, o);
  if (r.p_ == 0) {
    r.v_ = v_ / o.v_;
  } else {
    Scalar oo = o;
    oo.p_ = r.p_;
    oo.reduce();
    if (oo.v_ == 0) throw std::domain_error("division by zero in F_p");
    std::int64_t d = boost::multiprecision::numerator(oo.v_).convert_to<std::int64_t>();
    r.v_ = v_ * inv_mod(d, r.p_);
    r.reduce();
  }
  return r;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

bool Scalar::operator==(const Scalar& o) const {
  std::uint32_t p = join(*this, o);
  if (p == 0) return v_ == o.v_;
  Scalar a = *this, b = o;
  a.p_ = b.p_ = p;
  a.reduce();
  b.reduce();
  return a.v_ == b.v_;
}

std::string Scalar::str() const {
  BigInt num = boost::multiprecision::numerator(v_);
  BigInt den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar factorial_scalar(int n, const Field& f) {
  Scalar r = Scalar::of_field(1, f);
  for (int i = 2; i <= n; ++i) {
    if (f.p != 0 && static_cast<int>(f.p) <= i)
      throw std::domain_error("characteristic " + std::to_string(f.p) +
                              " divides " + std::to_string(n) + "!");
    r *= Scalar::of_field(i, f);
  }
  return r;
}

}  // namespace hinfty
