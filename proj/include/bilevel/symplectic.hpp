#pragma once

// 4x4 symplectic matrices over Q(sqrt 6): congruence groups at level 6,
// the Jacobi embeddings, the Siegel action on exact points, torsion and
// characteristic-polynomial tests, fixed loci and the factorization of the
// conjugated bilevel group.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilevel/matrix.hpp"
#include "bilevel/poly.hpp"

namespace bilevel {

using SpMatrix = Mat4<QuadNum>;

/// J = [[0, I2], [-I2, 0]].
const SpMatrix& symplectic_form();

/// M^T J M == J.
bool is_symplectic(const SpMatrix& m);

SpMatrix to_sp(const Mat4<BigInt>& m);
SpMatrix sp_mul(const SpMatrix& a, const SpMatrix& b);
SpMatrix sp_inverse(const SpMatrix& m);
SpMatrix sp_neg(const SpMatrix& m);
SpMatrix sp_pow(const SpMatrix& m, long k);

/// Throws IrrationalEntry if any entry has a sqrt(6) part.
Mat4<Rational> rational_entries(const SpMatrix& m);
/// Throws IrrationalEntry or NonIntegralCoefficient.
Mat4<BigInt> integer_entries(const SpMatrix& m);
bool has_integer_entries(const SpMatrix& m);

struct GroupId {
  enum class Kind { SP4Z, GAMMA_T, GAMMA_NAT, GAMMA_BIL, GAMMA_NAT_TILDE, J_GAMMA6_HEIS, HEISENBERG, PRINCIPAL };
  Kind kind = Kind::SP4Z;
  /// t for GAMMA_T / GAMMA_NAT / GAMMA_BIL, N for PRINCIPAL, unused otherwise.
  long param = 0;

  /// "SP4Z", "GAMMA_NAT(6)", "PRINCIPAL(3)", ... Throws ParseError.
  static GroupId parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// Throws IrrationalEntry when the membership test needs rational entries
/// and M has a sqrt(6) part.
bool in_group(const SpMatrix& m, const GroupId& g);

struct HeisenbergElt {
  BigInt m, n, k;
  friend bool operator==(const HeisenbergElt&, const HeisenbergElt&) = default;
};

/// [m,n;k] = [[1,m,0,0],[0,1,0,0],[0,n,1,0],[n,k,-m,1]].
SpMatrix heisenberg(const BigInt& m, const BigInt& n, const BigInt& k);
SpMatrix heisenberg(const HeisenbergElt& h);
/// Coordinates of M if it is exactly a Heisenberg image with integer entries.
std::optional<HeisenbergElt> heisenberg_coords(const SpMatrix& m);

/// g = [[a,b],[c,d]] in rows/columns 1 and 3 as [[a,.,c,.],[.,.,.,.],[b,.,d,.],...].
/// All of j1, j2, j throw NonUnimodular unless det g = 1.
SpMatrix j1(const Mat2& g);
/// Same placement in rows/columns 2 and 4.
SpMatrix j2(const Mat2& g);
/// [m,n;k] * j1(g).
SpMatrix j(const Mat2& g, const HeisenbergElt& h);

/// R6 M R6^-1 with R6 = diag(1,1,1,6).
SpMatrix nu6(const SpMatrix& m);
SpMatrix nu6_inv(const SpMatrix& m);

/// ZETA, V6, J6, R6, I, THETA, ZETA0..ZETA4, ZETA01 (zeta [0,1;0]), BETA, BETAP.
/// Throws InvalidQuery for other names.
SpMatrix builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

/// Least k in [1, max] with M^k = I, else NotFound.
long torsion_order(const SpMatrix& m, long max);

enum class CharpolyClass { UNIPOTENT_CLASS, ZETA_CLASS, OTHER };
std::string_view to_string(CharpolyClass c);

/// (1 - x)^4 and (1 - x^2)^2 reduced mod 6.
ResiduePoly unipotent_class_poly();
ResiduePoly zeta_class_poly();

/// Reduction of det(M - xI) mod 6 compared with the two class polynomials.
/// Requires integer entries.
CharpolyClass charpoly_mod6_class(const SpMatrix& m);

/// Point of the Siegel upper half space Z = [[t1, t2], [t2, t3]].
struct SiegelPoint {
  GaussNum t1, t2, t3;
  bool in_upper_half_space() const;
  friend bool operator==(const SiegelPoint&, const SiegelPoint&) = default;
};

/// (AZ + B)(CZ + D)^-1. Throws SingularDenominator or IrrationalEntry.
SiegelPoint act(const SpMatrix& m, const SiegelPoint& z);

/// a t1 + b t2 + c t3 + d (t2^2 - t1 t3) + e = 0.
struct HumbertRelation {
  Rational a, b, c, d, e;
  bool holds_at(const SiegelPoint& z) const;
  std::string str() const;
  friend bool operator==(const HumbertRelation&, const HumbertRelation&) = default;
};

/// b^2 - 4ac - 4de; throws NonIntegerDiscriminant.
BigInt humbert_discriminant(const HumbertRelation& rel);

struct FixedLocus {
  std::string matrix;  // builtin name
  HumbertRelation relation;
};

/// The five branch relations for ZETA0..ZETA4 followed by the second fixed
/// divisor of zeta [0,1;0].
const std::vector<FixedLocus>& fixed_locus_catalog();

/// Exact random points on the relation; throws DegenerateRelation if none
/// can be found.
std::vector<SiegelPoint> sample_relation_points(const HumbertRelation& rel, int count, std::uint64_t seed);

/// act(M, Z) == Z for `samples` random points Z on the relation.
bool fixed_relation_check(const SpMatrix& m, const HumbertRelation& rel, int samples, std::uint64_t seed);

/// Random word of length word_len in generators of GAMMA_NAT(6),
/// GAMMA_NAT_TILDE or GAMMA_BIL(6), retried until it passes in_group.
/// Throws SamplingExhausted or InvalidQuery for other groups.
SpMatrix sample_group_element(const GroupId& g, int word_len, std::uint64_t seed);

struct FactorToken {
  enum class Kind { J6TILDE, HEIS, GAMMA6, SIGN };
  Kind kind;
  HeisenbergElt h{};  // HEIS
  Mat2 g{};           // GAMMA6

  /// J6TILDE = nu6(J6), HEIS = nu6([m,n;k]), GAMMA6 = nu6(j1(g)), SIGN = -I.
  SpMatrix matrix() const;
  std::string str() const;
};

struct FactorWord {
  std::vector<FactorToken> tokens;
  SpMatrix product() const;
  std::string str() const;
};

/// Writes an element of nu6(GAMMA_NAT(6)) as a word in nu6(J6), nu6 of
/// Heisenberg elements and nu6(j1(Gamma(6))). Throws NotInGroup or
/// SearchBudgetExceeded.
FactorWord factorize_nat(const SpMatrix& m);

inline constexpr long kFactorSearchBound = 36;

/// {"entries": 4x4 array of [a, b]} encoding a + b sqrt(6).
std::string matrix_to_json(const SpMatrix& m);
SpMatrix matrix_from_json(std::string_view text);
SpMatrix read_matrix_file(const std::string& path);

std::string matrix_str(const SpMatrix& m);

}  // namespace bilevel
