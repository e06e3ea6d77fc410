#pragma once

// Dense univariate polynomials, lowest degree first.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bilevel/exact.hpp"
#include "bilevel/matrix.hpp"

namespace bilevel {

inline bool is_zero_value(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero_value(const Rational& v) { return v.is_zero(); }
inline bool is_zero_value(const QuadNum& v) { return v.is_zero(); }

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly x() { return Poly({T(0), T(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using QuadPoly = Poly<QuadNum>;

/// Polynomial over F_p for prime p.
class PolyModP {
 public:
  PolyModP(std::int64_t p, const std::vector<std::int64_t>& coeffs);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  friend bool operator==(const PolyModP&, const PolyModP&) = default;

 private:
  std::int64_t p_;
  std::vector<std::int64_t> c_;
};

/// (1 - x)^k over F_p.
PolyModP one_minus_x_pow(std::int64_t p, int k);

/// True iff the Euclidean remainder of dividend by divisor vanishes.
bool poly_divides_mod_p(const PolyModP& divisor, const PolyModP& dividend);

/// Coefficients reduced into [0, n), trailing zeros stripped.
struct ResiduePoly {
  std::int64_t n;
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;
};

ResiduePoly reduce_poly_mod(const IntPoly& f, std::int64_t n);
/// Throws NonIntegralCoefficient unless every coefficient is a rational integer.
ResiduePoly reduce_poly_mod(const QuadPoly& f, std::int64_t n);
IntPoly to_int_poly(const QuadPoly& f);

/// det(M - x I) by cofactor expansion over polynomial entries.
QuadPoly charpoly(const Mat4<QuadNum>& m);

std::string to_string(const IntPoly& f);

}  // namespace bilevel
