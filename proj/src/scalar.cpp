#include "connsum/scalar.hpp"

#include "connsum/errors.hpp"

namespace connsum {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::UndefinedArithmetic, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Scalar Scalar::infinity() {
  Scalar s;
  s.infinite_ = true;
  return s;
}

Scalar Scalar::gauss(long a, long b, long c, long d) {
  return Scalar(make_rational(a, b), make_rational(c, d));
}

const Rational& Scalar::re() const {
  if (infinite_) throw Error(ErrorKind::DomainError, "real part of infinity");
  return re_;
}

const Rational& Scalar::im() const {
  if (infinite_) throw Error(ErrorKind::DomainError, "imaginary part of infinity");
  return im_;
}

Scalar Scalar::inv() const {
  if (infinite_) return Scalar();
  if (is_zero()) return infinity();
  Rational n = re_ * re_ + im_ * im_;
  return Scalar(Rational(re_ / n), Rational(-im_ / n));
}

Scalar Scalar::conj() const {
  if (infinite_) return *this;
  return Scalar(re_, Rational(-im_));
}

Rational Scalar::abs_sq() const {
  if (infinite_) throw Error(ErrorKind::DomainError, "modulus of infinity");
  return re_ * re_ + im_ * im_;
}

Scalar Scalar::operator-() const {
  if (infinite_) return *this;
  return Scalar(Rational(-re_), Rational(-im_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (infinite_ && o.infinite_) throw Error(ErrorKind::UndefinedArithmetic, "inf + inf");
  if (infinite_ || o.infinite_) return *this = infinity();
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (infinite_ || o.infinite_) {
    if (is_zero() || o.is_zero()) throw Error(ErrorKind::UndefinedArithmetic, "0 * inf");
    return *this = infinity();
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_zero() && o.is_zero()) throw Error(ErrorKind::UndefinedArithmetic, "0 / 0");
  if (infinite_ && o.infinite_) throw Error(ErrorKind::UndefinedArithmetic, "inf / inf");
  return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.re_ == b.re_ && a.im_ == b.im_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c <=> 0;
}

std::complex<double> Scalar::to_complex() const {
  if (infinite_) throw Error(ErrorKind::DomainError, "infinity has no complex value");
  return {re_.get_d(), im_.get_d()};
}

std::string Scalar::str() const {
  if (infinite_) return "inf";
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  std::string sep = sgn(im_) > 0 ? "+" : "";
  return "(" + re_.get_str() + sep + imag + ")";
}

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) return pow(base.inv(), -exponent);
  Scalar result(1);
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool in_closed_disk(const Scalar& z) { return !z.is_infinite() && z.abs_sq() <= 1; }

bool re_leq_half(const Scalar& z) { return !z.is_infinite() && 2 * z.re() <= 1; }

bool re_eq_half(const Scalar& z) { return !z.is_infinite() && 2 * z.re() == 1; }

bool abs_eq_one(const Scalar& z) { return !z.is_infinite() && z.abs_sq() == 1; }

bool abs_lt_one(const Scalar& z) { return !z.is_infinite() && z.abs_sq() < 1; }

bool in_B(std::span<const Scalar> vs, const Scalar& t) {
  if (!in_closed_disk(t)) throw Error(ErrorKind::DomainError, "B-set parameter outside the unit disk");
  Scalar s;
  for (const Scalar& v : vs) {
    if (v.is_zero()) throw Error(ErrorKind::DomainError, "zero entry in B-set tuple");
    if (!v.is_infinite() && !in_closed_disk(v))
      throw Error(ErrorKind::DomainError, "B-set tuple entry outside the unit disk: " + v.str());
    s += v.inv();
  }
  if (s == t) return true;
  return (t - s).abs_sq() >= 1;
}

Scalar mobius_dual(const Scalar& z) {
  if (z.is_infinite() || z.is_one()) throw Error(ErrorKind::DomainError, "z/(z-1) undefined at " + z.str());
  return z / (z - Scalar(1));
}

}  // namespace connsum
