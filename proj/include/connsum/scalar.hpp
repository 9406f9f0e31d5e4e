#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <span>
#include <string>

namespace connsum {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// An element of Q(i) extended by a single projective point at infinity.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar infinity();
  /// Gaussian rational (a/b) + (c/d) i.
  static Scalar gauss(long a, long b, long c = 0, long d = 1);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return !infinite_ && re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return !infinite_ && sgn(im_) == 0; }

  const Rational& re() const;
  const Rational& im() const;

  Scalar inv() const;
  Scalar conj() const;
  Rational abs_sq() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
  bool infinite_ = false;
};

Scalar pow(const Scalar& base, long exponent);

/// |z| <= 1; false for infinity.
bool in_closed_disk(const Scalar& z);
/// Re z <= 1/2; false for infinity.
bool re_leq_half(const Scalar& z);
bool re_eq_half(const Scalar& z);
/// |z| = 1; false for infinity.
bool abs_eq_one(const Scalar& z);
/// |z| < 1; false for infinity.
bool abs_lt_one(const Scalar& z);

/// Membership of the tuple vs in B_n(t): with S = sum 1/v_i the tuple belongs
/// to the set when S = t or |t - S| >= 1.  Every v must lie in D \ {0} or be
/// infinite, and t must lie in D.
bool in_B(std::span<const Scalar> vs, const Scalar& t);

/// The involution z -> z / (z - 1) on the finite plane minus 1.
Scalar mobius_dual(const Scalar& z);

}  // namespace connsum
