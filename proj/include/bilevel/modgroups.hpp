#pragma once

// PSL(2, Z/N) enumeration and subgroup indices, the branch-component count
// over the five zeta classes, and the multiplier of eta^2 on SL(2, Z).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bilevel/symplectic.hpp"

namespace bilevel {

/// Class of +-[[a, b], [c, d]] in PSL(2, Z/N), stored as the lexicographically
/// smaller of the two reduced sign representatives.
class PSL2Elt {
 public:
  /// Throws NonUnimodular unless ad - bc = 1 mod N.
  PSL2Elt(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static PSL2Elt identity(std::int64_t n) { return {n, 1, 0, 0, 1}; }

  std::int64_t modulus() const { return n_; }
  const std::array<std::int64_t, 4>& entries() const { return m_; }
  std::string str() const;

  friend PSL2Elt operator*(const PSL2Elt& x, const PSL2Elt& y);
  friend bool operator==(const PSL2Elt&, const PSL2Elt&) = default;
  friend auto operator<=>(const PSL2Elt&, const PSL2Elt&) = default;

 private:
  std::int64_t n_;
  std::array<std::int64_t, 4> m_;
};

std::vector<PSL2Elt> enumerate_psl2(std::int64_t n);

/// Throws NonUnimodular if det g != 1.
PSL2Elt reduce_psl2(const Mat2& g, std::int64_t n);

/// [[M11, M31], [M13, M33]] mod 6, the inverse of the j1 placement.
PSL2Elt psl_image(const SpMatrix& m);

std::vector<PSL2Elt> subgroup_closure(const std::vector<PSL2Elt>& gens, std::int64_t n);
/// |PSL(2, Z/N)| / |<gens>|.
std::int64_t subgroup_index(const std::vector<PSL2Elt>& gens, std::int64_t n);

/// Least k >= 1 with x^k = 1.
int element_order(const PSL2Elt& x);

/// Lifted centralizer element for zeta_1 built from g = [[a,b],[c,d]]
/// with b even.
SpMatrix zeta1_centralizer_element(const Mat2& g);

struct BranchClass {
  std::string matrix;  // ZETA0..ZETA4
  std::int64_t components;
  BigInt discriminant;
  /// Witness elements commute with the class representative exactly.
  bool witnesses_commute;
};

struct BranchCount {
  std::vector<BranchClass> classes;
  std::int64_t total;
};

/// Component counts as indices of centralizer images in PSL(2, Z/6).
BranchCount branch_component_count();

/// Dedekind sum s(h, k) for k > 0.
Rational dedekind_sum(const BigInt& h, const BigInt& k);

/// w mod 12 with eta^2(g tau) = e^(2 pi i w / 12) (c tau + d) eta^2(tau),
/// from the Dedekind-sum formula. Throws NonUnimodular.
int eta_multiplier_sq_formula(const Mat2& g);

/// Same exponent read off a 50-digit evaluation of eta at a point with
/// c tau + d = +-i. Throws OracleDisagreement if the ratio is farther than
/// 1e-20 from every 12th root of unity.
int eta_multiplier_sq_numeric(const Mat2& g);

/// Formula value, cross-checked against the numeric oracle; throws
/// OracleDisagreement if they differ.
int eta_multiplier_sq(const Mat2& g);

/// Random word in S and T of the given length.
Mat2 sample_sl2(int word_len, std::uint64_t seed);

/// Random element of +-Gamma(6): conjugates of the level-6 elementary
/// matrices, with a random sign.
Mat2 sample_pm_gamma6(std::uint64_t seed);

bool in_pm_gamma6(const Mat2& g);

/// (D/2) w = 0 mod 12 for every sampled g in +-Gamma(6), D even.
bool character_triviality(int d, int samples, std::uint64_t seed);

}  // namespace bilevel
