#pragma once

// Exact scalars: arbitrary-precision integers and rationals, the real
// quadratic field Q(sqrt 6) and the Gaussian rationals Q(i).

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "bilevel/error.hpp"

namespace bilevel {

using BigInt = mpz_class;

std::string to_string(const BigInt& v);

/// Reduced fraction num/den with den > 0. Every constructor and every
/// arithmetic result is canonical, so == is structural equality.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const BigInt& v) : v_(v) {}         // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "n", "-n", "n/d", "+n/d" (whitespace is rejected).
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Throws NonIntegralCoefficient when the value is not an integer.
  BigInt to_integer() const;
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return v_.get_d(); }

  /// Canonical text: "n" for integers, otherwise "n/d".
  std::string str() const;

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// a + b*sqrt(6).
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  template <std::integral I>
  QuadNum(I v) : a_(v) {}  // NOLINT(implicit)
  QuadNum(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadNum sqrt6() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt6_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_integer() const { return b_.is_zero() && a_.is_integer(); }

  /// Field norm a^2 - 6 b^2.
  Rational norm() const { return a_ * a_ - Rational(6) * b_ * b_; }
  QuadNum conjugate() const { return {a_, -b_}; }

  /// Throws IrrationalEntry when the sqrt(6) part is nonzero.
  const Rational& as_rational() const;

  std::string str() const;

  QuadNum& operator+=(const QuadNum& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadNum& operator-=(const QuadNum& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);

  friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
  friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
  friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
  friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }
  friend QuadNum operator-(const QuadNum& a) { return {-a.a_, -a.b_}; }
  friend bool operator==(const QuadNum& x, const QuadNum& y) = default;

  friend std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.str(); }

 private:
  Rational a_;
  Rational b_;
};

/// re + i*im with rational parts.
class GaussNum {
 public:
  GaussNum() = default;
  GaussNum(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  template <std::integral I>
  GaussNum(I v) : re_(v) {}  // NOLINT(implicit)
  GaussNum(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussNum conjugate() const { return {re_, -im_}; }
  std::string str() const;

  GaussNum& operator+=(const GaussNum& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussNum& operator-=(const GaussNum& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussNum& operator*=(const GaussNum& o);
  GaussNum& operator/=(const GaussNum& o);

  friend GaussNum operator+(GaussNum a, const GaussNum& b) { return a += b; }
  friend GaussNum operator-(GaussNum a, const GaussNum& b) { return a -= b; }
  friend GaussNum operator*(GaussNum a, const GaussNum& b) { return a *= b; }
  friend GaussNum operator/(GaussNum a, const GaussNum& b) { return a /= b; }
  friend GaussNum operator-(const GaussNum& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussNum& x, const GaussNum& y) = default;

 private:
  Rational re_;
  Rational im_;
};

BigInt gcd(const BigInt& a, const BigInt& b);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  BigInt g, x, y;
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

/// Mathematical modulus in [0, n).
BigInt mod(const BigInt& a, const BigInt& n);
std::int64_t mod(std::int64_t a, std::int64_t n);

}  // namespace bilevel
