#pragma once

// Truncated two-variable expansions sum c(a,b) q^a r^b with rational
// exponents, trusted for q-exponents strictly below qprec.

#include <map>
#include <string>
#include <vector>

#include "bilevel/exact.hpp"

namespace bilevel {

/// Laurent polynomial in r with rational exponents.
using Slice = std::map<Rational, Rational>;

class QRSeries {
 public:
  using Levels = std::map<Rational, Slice>;

  QRSeries() = default;
  explicit QRSeries(Rational qprec, Rational weight = 0, Rational index = 0)
      : qprec_(std::move(qprec)), weight_(std::move(weight)), index_(std::move(index)) {}

  static QRSeries constant(const Rational& c, const Rational& qprec);

  const Rational& qprec() const { return qprec_; }
  const Rational& weight() const { return weight_; }
  const Rational& index() const { return index_; }
  void set_weight(Rational w) { weight_ = std::move(w); }
  void set_index(Rational i) { index_ = std::move(i); }

  const Levels& levels() const { return levels_; }
  bool is_zero() const { return levels_.empty(); }
  std::size_t term_count() const;

  /// Zero when absent; throws InsufficientPrecision for qexp >= qprec.
  Rational coeff(const Rational& qexp, const Rational& rexp) const;
  /// Empty slice when absent; throws InsufficientPrecision for qexp >= qprec.
  Slice slice(const Rational& qexp) const;
  /// Lowest q-exponent carrying a nonzero coefficient; throws ZeroDivisor on zero.
  const Rational& min_qexp() const;

  /// Adds c to the coefficient at (qexp, rexp). Terms at or beyond qprec are dropped.
  void add_term(const Rational& qexp, const Rational& rexp, const Rational& c);
  void set_slice(const Rational& qexp, Slice s);

  QRSeries truncated(const Rational& qprec) const;

  friend bool operator==(const QRSeries& a, const QRSeries& b) {
    return a.qprec_ == b.qprec_ && a.levels_ == b.levels_ && a.weight_ == b.weight_ &&
           a.index_ == b.index_;
  }

 private:
  Rational qprec_;
  Rational weight_;
  Rational index_;
  Levels levels_;
};

QRSeries add(const QRSeries& a, const QRSeries& b);
QRSeries sub(const QRSeries& a, const QRSeries& b);
QRSeries negate(const QRSeries& a);
QRSeries scale(const Rational& c, const QRSeries& a);

/// Reference kernel: plain double loop over q-levels.
QRSeries mul_serial(const QRSeries& a, const QRSeries& b);
/// Same product computed per output q-level, one OpenMP task per level.
QRSeries mul_parallel(const QRSeries& a, const QRSeries& b);
QRSeries mul(const QRSeries& a, const QRSeries& b);
QRSeries pow(const QRSeries& a, unsigned k);

/// Solves b*c = a level by level; throws NonExactDivision on any remainder.
QRSeries exact_div(const QRSeries& a, const QRSeries& b);

Slice slice_mul(const Slice& a, const Slice& b);
/// Exact Laurent division; throws NonExactDivision when den does not divide num.
Slice slice_div(const Slice& num, const Slice& den);

/// Plain text such as "r^-1 + 4 + r", ascending in the r-exponent.
std::string slice_to_string(const Slice& s);

}  // namespace bilevel
