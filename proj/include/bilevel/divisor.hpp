#pragma once

// Cusp classification and formal divisors on the bilevel-6 threefold.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bilevel/lift.hpp"

namespace bilevel {

enum class CuspClass { D1, D2 };

std::string_view to_string(CuspClass c);
CuspClass parse_cusp(std::string_view s);

struct CuspInvariant {
  int r;
  CuspClass cls;
  friend bool operator==(const CuspInvariant&, const CuspInvariant&) = default;
};

/// r = gcd(6, v1, v3); r in {1, 6} gives D1 and r in {2, 3} gives D2.
CuspInvariant cusp_invariant(const std::array<BigInt, 4>& v);

/// 6A along D1, C along D2.
BigInt cusp_vanishing_order(const LeadingExponents& e, CuspClass c);
BigInt cusp_vanishing_order(LiftInputId id, CuspClass c);

/// Branch components over zeta_0..zeta_4 (three over zeta_1) and the two
/// boundary classes.
enum class ComponentId { HZ0, HZ1, HZ1P, HZ1PP, HZ2, HZ3, HZ4, D1, D2 };
inline constexpr ComponentId kAllComponents[] = {
    ComponentId::HZ0, ComponentId::HZ1, ComponentId::HZ1P, ComponentId::HZ1PP, ComponentId::HZ2,
    ComponentId::HZ3, ComponentId::HZ4, ComponentId::D1,   ComponentId::D2};
std::string_view to_string(ComponentId c);

class DivisorRecord {
 public:
  DivisorRecord() = default;
  DivisorRecord(std::initializer_list<std::pair<const ComponentId, BigInt>> init);

  BigInt operator[](ComponentId c) const;
  void set(ComponentId c, const BigInt& v);
  const std::map<ComponentId, BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;

  /// "4*HZ2 + D1 + D2"; "0" for the zero divisor.
  std::string str() const;

  friend DivisorRecord operator+(const DivisorRecord& a, const DivisorRecord& b);
  friend DivisorRecord operator-(const DivisorRecord& a, const DivisorRecord& b);
  friend DivisorRecord operator*(const BigInt& k, const DivisorRecord& a);
  friend bool operator==(const DivisorRecord&, const DivisorRecord&) = default;

 private:
  std::map<ComponentId, BigInt> coeffs_;
};

/// Div(omega) for omega = F dtau1 dtau2 dtau3, F the lift of the input.
/// Throws NegativeCoefficient if any coefficient is negative.
DivisorRecord canonical_divisor(const QRSeries& form);
DivisorRecord canonical_divisor(LiftInputId id);

struct DivisorRelation {
  std::string name;
  /// Formal difference that the relation asserts to vanish (or to be
  /// linearly equivalent to zero when `in_picard`).
  DivisorRecord difference;
  bool in_picard;
  bool holds;
};

/// For every pair i < j the difference record_j - record_i, which is
/// principal because both are canonical; for exactly three records also the
/// formal identity r0 + r1 = 2 r2.
std::vector<DivisorRelation> divisor_relations(const std::vector<DivisorRecord>& records);

/// Solves a principal difference c(D1 + D2) + rest ~ 0 for D1 + D2.
/// Throws DegenerateRelation if D1 and D2 enter unequally, with zero
/// coefficient, or if rest is not divisible by c.
DivisorRecord boundary_relation(const DivisorRecord& difference);

}  // namespace bilevel
