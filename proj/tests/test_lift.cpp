#include <doctest.h>

#include "bilevel/divisor.hpp"
#include "bilevel/lift.hpp"

using namespace bilevel;

namespace {

const QRSeries& input(LiftInputId id) { return *global_form_cache().get(id, 8); }

// Coefficients of the product at s-offset m compared with a q,r-series
// positioned at the same absolute exponents.
void check_s_slice(const TripleSeries& t, long m, const QRSeries& ref) {
  for (long n = 0; n + m <= t.bound(); ++n) {
    for (long l = -30; l <= 30; ++l) {
      auto e = t.exponents({n, l, m});
      CHECK(Rational(t.coeff({n, l, m})) == ref.coeff(e[0], e[1]));
    }
  }
}

}  // namespace

TEST_CASE("multiplicity matrix") {
  const long want[3][3] = {{1, 5, 1}, {5, 1, 1}, {3, 3, 1}};
  int row = 0;
  for (auto id : kAllLiftInputs) {
    CHECK(humbert_multiplicity(input(id), 1, 1) == want[row][0]);
    CHECK(humbert_multiplicity(input(id), 1, 5) == want[row][1]);
    CHECK(humbert_multiplicity(input(id), 4, 2) == want[row][2]);
    CHECK(humbert_multiplicity(input(id), 4, 1) == want[row][2]);
    ++row;
  }
  CHECK_THROWS_AS(humbert_multiplicity(input(LiftInputId::PHI3), 1, 2), Error);
  CHECK_THROWS_AS(humbert_multiplicity(input(LiftInputId::PHI3), 9, 3), Error);
}

TEST_CASE("raw multiplicity sum needs the full precision") {
  CHECK_THROWS_AS(humbert_multiplicity_raw(input(LiftInputId::PHI3), 1, 5), Error);
  CHECK(humbert_multiplicity_raw(input(LiftInputId::PHI3), 1, 1) == 1);
  CHECK(humbert_multiplicity_raw(input(LiftInputId::PHI3P), 4, 2) == 1);
}

TEST_CASE("leading exponents") {
  CHECK(leading_exponents(input(LiftInputId::PHI3)) ==
        LeadingExponents{Rational(1, 3), 1, 2});
  CHECK(leading_exponents(input(LiftInputId::PHI3P)) ==
        LeadingExponents{Rational(2, 3), 3, 4});
  CHECK(leading_exponents(input(LiftInputId::PHI3PP)) ==
        LeadingExponents{Rational(1, 2), 2, 3});
}

TEST_CASE("cusp orders") {
  const long want[3] = {2, 4, 3};
  int i = 0;
  for (auto id : kAllLiftInputs) {
    CHECK(cusp_vanishing_order(id, CuspClass::D1) == want[i]);
    CHECK(cusp_vanishing_order(id, CuspClass::D2) == want[i]);
    ++i;
  }
}

TEST_CASE("cusp invariants") {
  CHECK(cusp_invariant({0, 0, 1, 0}) == CuspInvariant{1, CuspClass::D1});
  CHECK(cusp_invariant({0, 0, 2, 1}) == CuspInvariant{2, CuspClass::D2});
  CHECK(cusp_invariant({1, 0, 0, 0}) == CuspInvariant{1, CuspClass::D1});
  CHECK(cusp_invariant({6, 1, 0, 0}) == CuspInvariant{6, CuspClass::D1});
  CHECK(cusp_invariant({3, 1, 9, 0}) == CuspInvariant{3, CuspClass::D2});
  CHECK_THROWS_AS(cusp_invariant({2, 0, 4, 0}), Error);
}

TEST_CASE("product slices agree with theta and eta products") {
  const QRSeries e = eta(4), t1 = theta_odd(1, 4), t2 = theta_odd(2, 4);
  TripleSeries f3 = exp_lift_truncated(input(LiftInputId::PHI3), 2);
  TripleSeries f3p = exp_lift_truncated(input(LiftInputId::PHI3P), 2);
  TripleSeries f3pp = exp_lift_truncated(input(LiftInputId::PHI3PP), 2);

  QRSeries psi3 = mul(pow(e, 5), t2);
  QRSeries psi3p = mul(mul(e, pow(t1, 4)), t2);
  QRSeries psi3pp = mul(mul(pow(e, 3), pow(t1, 2)), t2);
  check_s_slice(f3, 0, psi3);
  check_s_slice(f3p, 0, psi3p);
  check_s_slice(f3pp, 0, psi3pp);

  // The first s-step of the product is -psi0 * phi.
  check_s_slice(f3, 1, negate(mul(psi3, input(LiftInputId::PHI3))));
  check_s_slice(f3p, 1, negate(mul(psi3p, input(LiftInputId::PHI3P))));
  check_s_slice(f3pp, 1, negate(mul(psi3pp, input(LiftInputId::PHI3PP))));
}

TEST_CASE("product identity and rank") {
  TripleSeries f3 = exp_lift_truncated(LiftInputId::PHI3);
  TripleSeries f3p = exp_lift_truncated(LiftInputId::PHI3P);
  TripleSeries f3pp = exp_lift_truncated(LiftInputId::PHI3PP);
  for (const auto* f : {&f3, &f3p, &f3pp}) CHECK(f->coeff({0, 0, 0}) == 1);
  CHECK(f3.exponents({0, 0, 0}) == std::array<Rational, 3>{Rational(1, 3), 1, 2});
  TripleSeries lhs = mul_serial(f3, f3p);
  TripleSeries rhs = mul_serial(f3pp, f3pp);
  CHECK(lhs == rhs);
  CHECK(mul_parallel(f3, f3p) == lhs);
  CHECK(mul_parallel(f3pp, f3pp) == rhs);
  CHECK(lift_rank({f3, f3p, f3pp}) == 3);
  CHECK(lift_rank({f3, f3, f3pp}) == 2);
}

TEST_CASE("truncation is compatible with smaller bounds") {
  for (auto id : kAllLiftInputs) {
    TripleSeries big = exp_lift_truncated(input(id), 3);
    for (long b = 0; b < 3; ++b) CHECK(exp_lift_truncated(input(id), b) == big.truncated(b));
  }
}

TEST_CASE("rational rank") {
  CHECK(rational_rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
  CHECK(rational_rank({{Rational(1, 2), 0}, {0, Rational(1, 3)}}) == 2);
  CHECK(rational_rank({}) == 0);
}

TEST_CASE("canonical divisors") {
  using C = ComponentId;
  DivisorRecord w = canonical_divisor(LiftInputId::PHI3);
  DivisorRecord wp = canonical_divisor(LiftInputId::PHI3P);
  DivisorRecord wpp = canonical_divisor(LiftInputId::PHI3PP);
  CHECK(w == DivisorRecord{{C::HZ2, 4}, {C::D1, 1}, {C::D2, 1}});
  CHECK(wp == DivisorRecord{{C::HZ0, 4}, {C::D1, 3}, {C::D2, 3}});
  CHECK(wpp == DivisorRecord{{C::HZ0, 2}, {C::HZ2, 2}, {C::D1, 2}, {C::D2, 2}});
  CHECK(w.str() == "4*HZ2 + D1 + D2");
  for (const auto* d : {&w, &wp, &wpp}) CHECK(d->is_effective());

  auto rels = divisor_relations({w, wp, wpp});
  REQUIRE(rels.size() == 4);
  CHECK(rels.back().holds);
  CHECK(rels.back().difference.is_zero());
  DivisorRecord diff = wp - w;
  CHECK(diff == DivisorRecord{{C::HZ0, 4}, {C::HZ2, -4}, {C::D1, 2}, {C::D2, 2}});
  CHECK(boundary_relation(diff) == DivisorRecord{{C::HZ2, 2}, {C::HZ0, -2}});
  CHECK_THROWS_AS(boundary_relation(DivisorRecord{{C::D1, 1}}), Error);

  auto self = divisor_relations({w});
  REQUIRE(self.size() == 1);
  CHECK(self[0].difference.is_zero());
}
