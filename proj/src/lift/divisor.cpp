#include "bilevel/divisor.hpp"

namespace bilevel {

std::string_view to_string(CuspClass c) { return c == CuspClass::D1 ? "D1" : "D2"; }

CuspClass parse_cusp(std::string_view s) {
  if (s == "D1") return CuspClass::D1;
  if (s == "D2") return CuspClass::D2;
  throw Error(ErrorKind::InvalidQuery, "cusp must be D1 or D2, got '" + std::string(s) + "'");
}

CuspInvariant cusp_invariant(const std::array<BigInt, 4>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g != 1) throw Error(ErrorKind::NonPrimitiveVector, "entries have gcd " + g.get_str());
  int r = static_cast<int>(gcd(gcd(BigInt(6), v[0]), v[2]).get_si());
  return {r, (r == 1 || r == 6) ? CuspClass::D1 : CuspClass::D2};
}

BigInt cusp_vanishing_order(const LeadingExponents& e, CuspClass c) {
  Rational order = c == CuspClass::D1 ? e.A * 6 : e.C;
  return order.to_integer();
}

BigInt cusp_vanishing_order(LiftInputId id, CuspClass c) {
  return cusp_vanishing_order(leading_exponents(id), c);
}

std::string_view to_string(ComponentId c) {
  switch (c) {
    case ComponentId::HZ0: return "HZ0";
    case ComponentId::HZ1: return "HZ1";
    case ComponentId::HZ1P: return "HZ1P";
    case ComponentId::HZ1PP: return "HZ1PP";
    case ComponentId::HZ2: return "HZ2";
    case ComponentId::HZ3: return "HZ3";
    case ComponentId::HZ4: return "HZ4";
    case ComponentId::D1: return "D1";
    case ComponentId::D2: return "D2";
  }
  return "?";
}

DivisorRecord::DivisorRecord(std::initializer_list<std::pair<const ComponentId, BigInt>> init) {
  for (const auto& [c, v] : init) set(c, v);
}

BigInt DivisorRecord::operator[](ComponentId c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void DivisorRecord::set(ComponentId c, const BigInt& v) {
  if (v == 0) {
    coeffs_.erase(c);
  } else {
    coeffs_[c] = v;
  }
}

bool DivisorRecord::is_effective() const {
  for (const auto& [c, v] : coeffs_) {
    if (v < 0) return false;
  }
  return true;
}

std::string DivisorRecord::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [c, v] : coeffs_) {
    BigInt mag = abs(v);
    s += s.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
    if (mag != 1) s += mag.get_str() + "*";
    s += to_string(c);
  }
  return s;
}

DivisorRecord operator+(const DivisorRecord& a, const DivisorRecord& b) {
  DivisorRecord r = a;
  for (const auto& [c, v] : b.coeffs_) r.set(c, r[c] + v);
  return r;
}

DivisorRecord operator-(const DivisorRecord& a, const DivisorRecord& b) {
  return a + BigInt(-1) * b;
}

DivisorRecord operator*(const BigInt& k, const DivisorRecord& a) {
  DivisorRecord r;
  for (const auto& [c, v] : a.coeffs_) r.set(c, k * v);
  return r;
}

DivisorRecord canonical_divisor(const QRSeries& form) {
  const BigInt m11 = humbert_multiplicity(form, 1, 1);
  const BigInt m15 = humbert_multiplicity(form, 1, 5);
  const BigInt m42 = humbert_multiplicity(form, 4, 2);
  const LeadingExponents e = leading_exponents(form);
  DivisorRecord d;
  d.set(ComponentId::HZ0, m11 - 1);
  d.set(ComponentId::HZ2, m15 - 1);
  for (auto c : {ComponentId::HZ1, ComponentId::HZ1P, ComponentId::HZ1PP, ComponentId::HZ3,
                 ComponentId::HZ4}) {
    d.set(c, m42 - 1);
  }
  d.set(ComponentId::D1, cusp_vanishing_order(e, CuspClass::D1) - 1);
  d.set(ComponentId::D2, cusp_vanishing_order(e, CuspClass::D2) - 1);
  if (!d.is_effective()) {
    throw Error(ErrorKind::NegativeCoefficient, "canonical divisor " + d.str() + " is not effective");
  }
  return d;
}

DivisorRecord canonical_divisor(LiftInputId id) {
  return canonical_divisor(*global_form_cache().get(id));
}

std::vector<DivisorRelation> divisor_relations(const std::vector<DivisorRecord>& records) {
  std::vector<DivisorRelation> out;
  if (records.size() == 1) {
    DivisorRecord z = records[0] - records[0];
    out.push_back({"r0 - r0", z, false, z.is_zero()});
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      out.push_back({"r" + std::to_string(j) + " - r" + std::to_string(i), records[j] - records[i],
                     true, true});
    }
  }
  if (records.size() == 3) {
    DivisorRecord diff = records[0] + records[1] - BigInt(2) * records[2];
    out.push_back({"r0 + r1 - 2*r2", diff, false, diff.is_zero()});
  }
  return out;
}

DivisorRecord boundary_relation(const DivisorRecord& difference) {
  const BigInt c = difference[ComponentId::D1];
  if (c == 0 || difference[ComponentId::D2] != c) {
    throw Error(ErrorKind::DegenerateRelation,
                "D1 and D2 do not enter " + difference.str() + " with one common nonzero coefficient");
  }
  DivisorRecord rest = difference;
  rest.set(ComponentId::D1, 0);
  rest.set(ComponentId::D2, 0);
  DivisorRecord out;
  for (const auto& [comp, v] : rest.coefficients()) {
    if (mod(v, abs(c)) != 0) {
      throw Error(ErrorKind::DegenerateRelation, "coefficients of " + rest.str() + " not divisible by " + c.get_str());
    }
    out.set(comp, -v / c);
  }
  return out;
}

}  // namespace bilevel
