#pragma once

// Humbert multiplicities of exponential lifts and truncated Borcherds
// products in q, r, s for the index-6 inputs.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bilevel/jacobi.hpp"

namespace bilevel {

/// m_{Delta,b} = sum_{d>0} f(d^2 a, d b) with b^2 - 24a = Delta, using the
/// reduction rule. Delta = 4 with b = 1 is evaluated as b = 2.
BigInt humbert_multiplicity(const QRSeries& form, int delta, const BigInt& b);
BigInt humbert_multiplicity(LiftInputId id, int delta, const BigInt& b);

/// Same sum read straight from stored coefficients; needs qprec > 36 a.
BigInt humbert_multiplicity_raw(const QRSeries& form, int delta, const BigInt& b);

struct LeadingExponents {
  Rational A, B, C;
  friend bool operator==(const LeadingExponents&, const LeadingExponents&) = default;
};

/// (A, B, C) from the q^0 coefficients. Throws ConstructionMismatch if
/// C differs from 6A.
LeadingExponents leading_exponents(const QRSeries& form);
LeadingExponents leading_exponents(LiftInputId id);

/// Integer offsets (n, l, m) from the origin q^A r^B s^C, standing for the
/// monomial q^(A+n) r^(B+l) s^(C+6m).
using Offset = std::array<long, 3>;

/// Truncated product expansion. Terms with n + m <= bound are exact.
class TripleSeries {
 public:
  TripleSeries() = default;
  TripleSeries(LeadingExponents origin, long bound) : origin_(std::move(origin)), bound_(bound) {}

  const LeadingExponents& origin() const { return origin_; }
  long bound() const { return bound_; }
  const std::map<Offset, BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Offset& o, const BigInt& c);
  BigInt coeff(const Offset& o) const;
  std::array<Rational, 3> exponents(const Offset& o) const;
  TripleSeries truncated(long bound) const;

  friend bool operator==(const TripleSeries& a, const TripleSeries& b) {
    return a.origin_ == b.origin_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  LeadingExponents origin_;
  long bound_ = 0;
  std::map<Offset, BigInt> terms_;
};

TripleSeries mul_serial(const TripleSeries& a, const TripleSeries& b);
TripleSeries mul_parallel(const TripleSeries& a, const TripleSeries& b);
TripleSeries mul(const TripleSeries& a, const TripleSeries& b);

inline constexpr long kDefaultProductBound = 2;

/// q^A r^B s^C prod_{(n,l,m)>0} (1 - q^n r^l s^(6m))^f(nm,l), where
/// (n,l,m) > 0 means m > 0, or m = 0 and n > 0, or n = m = 0 and l < 0.
TripleSeries exp_lift_truncated(const QRSeries& form, long bound);
TripleSeries exp_lift_truncated(LiftInputId id, long bound = kDefaultProductBound);

/// Rank over Q of the coefficient matrix on the union of monomials.
std::size_t lift_rank(const std::vector<TripleSeries>& lifts);
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

std::string triple_to_json(std::string_view form, const TripleSeries& t);

}  // namespace bilevel
