#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "bilevel/modgroups.hpp"

using namespace bilevel;

namespace {

// ((x)) = x - floor(x) - 1/2, and 0 at integers.
Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return 0;
  return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_brute(long h, long k) {
  Rational s;
  for (long r = 1; r < k; ++r) s += sawtooth(Rational(BigInt(r), BigInt(k))) * sawtooth(Rational(BigInt(h * r), BigInt(k)));
  return s;
}

std::map<int, int> order_stats(const std::vector<PSL2Elt>& g) {
  std::map<int, int> m;
  for (const auto& x : g) ++m[element_order(x)];
  return m;
}

}  // namespace

TEST_CASE("PSL2 enumeration") {
  CHECK(enumerate_psl2(6).size() == 72);
  CHECK(enumerate_psl2(2).size() == 6);
  CHECK(enumerate_psl2(3).size() == 12);
  CHECK(enumerate_psl2(1).size() == 1);
  CHECK(PSL2Elt(6, 1, 2, 0, 1) == PSL2Elt(6, -1, -2, 0, -1));
  CHECK_THROWS_AS(PSL2Elt(6, 2, 0, 0, 1), Error);
}

TEST_CASE("PSL2(Z/6) is closed and matches the CRT product") {
  const auto g = enumerate_psl2(6);
  std::set<PSL2Elt> all(g.begin(), g.end());
  for (const auto& x : g) {
    for (const auto& y : g) CHECK(all.count(x * y) == 1);
  }
  // SL(2,Z/6) = SL(2,Z/2) x SL(2,Z/3); -I = (I, -I), so PSL(2,Z/6) is
  // SL(2,Z/2) x PSL(2,Z/3) and orders are lcms of component orders.
  std::map<int, int> want;
  for (const auto& a : enumerate_psl2(2)) {
    for (const auto& b : enumerate_psl2(3)) {
      int oa = element_order(a), ob = element_order(b);
      int l = oa * ob / static_cast<int>(std::gcd(oa, ob));
      ++want[l];
    }
  }
  CHECK(order_stats(g) == want);
}

TEST_CASE("subgroup indices") {
  const auto b = psl_image(builtin("BETA")), bp = psl_image(builtin("BETAP"));
  CHECK(b == PSL2Elt(6, 0, 1, -1, 0));
  CHECK(bp == PSL2Elt(6, -1, -1, 1, 0));
  CHECK(subgroup_index({b, bp}, 6) == 1);
  CHECK(subgroup_index({PSL2Elt::identity(6)}, 6) == 72);
  CHECK(subgroup_index({PSL2Elt(6, 1, 0, 1, 1), PSL2Elt(6, 1, 2, 0, 1)}, 6) == 3);
  for (const auto& x : enumerate_psl2(6)) {
    CHECK(72 % subgroup_closure({x}, 6).size() == 0);
  }
  CHECK_THROWS_AS(reduce_psl2(Mat2{{{2, 0}, {0, 1}}}, 6), Error);
  CHECK(psl_image(j1(Mat2{{{2, 3}, {5, 8}}})) == reduce_psl2(Mat2{{{2, 3}, {5, 8}}}, 6));
}

TEST_CASE("zeta_1 centralizer family") {
  const SpMatrix z1 = builtin("ZETA1");
  for (const Mat2& g : {Mat2{{{1, 2}, {0, 1}}}, Mat2{{{1, 0}, {1, 1}}}, Mat2{{{3, 2}, {4, 3}}}}) {
    SpMatrix c = zeta1_centralizer_element(g);
    CHECK(is_symplectic(c));
    CHECK(sp_mul(c, z1) == sp_mul(z1, c));
  }
  CHECK_THROWS_AS(zeta1_centralizer_element(Mat2{{{1, 1}, {0, 1}}}), Error);
}

TEST_CASE("branch components") {
  BranchCount bc = branch_component_count();
  REQUIRE(bc.classes.size() == 5);
  const std::int64_t counts[] = {1, 3, 1, 1, 1};
  const long discs[] = {1, 4, 1, 4, 4};
  for (int i = 0; i < 5; ++i) {
    CHECK(bc.classes[i].components == counts[i]);
    CHECK(bc.classes[i].discriminant == discs[i]);
  }
  CHECK(bc.total == 7);
  CHECK(bc.classes[0].witnesses_commute);
  CHECK(bc.classes[1].witnesses_commute);
  CHECK(bc.classes[2].witnesses_commute);
  CHECK_FALSE(bc.classes[3].witnesses_commute);
}

TEST_CASE("dedekind sums") {
  for (long k = 1; k <= 30; ++k) {
    for (long h = -k; h <= 2 * k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      CHECK(dedekind_sum(h, k) == dedekind_brute(h, k));
    }
  }
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
}

TEST_CASE("eta squared multiplier") {
  CHECK(eta_multiplier_sq(Mat2{{{1, 1}, {0, 1}}}) == 1);
  CHECK(eta_multiplier_sq(Mat2{{{1, 0}, {0, 1}}}) == 0);
  CHECK(eta_multiplier_sq(Mat2{{{-1, 0}, {0, -1}}}) == 6);
  CHECK(eta_multiplier_sq(Mat2{{{0, -1}, {1, 0}}}) == 9);
  CHECK_THROWS_AS(eta_multiplier_sq(Mat2{{{2, 0}, {0, 1}}}), Error);
  for (std::uint64_t s = 0; s < 100; ++s) {
    Mat2 g = sample_sl2(8, s);
    CHECK(eta_multiplier_sq_formula(g) == eta_multiplier_sq_numeric(g));
  }
}

TEST_CASE("character values on SL2 and on +-Gamma(6)") {
  std::set<int> v8, v12;
  for (std::uint64_t s = 0; s < 200; ++s) {
    int w = eta_multiplier_sq_formula(sample_sl2(6 + static_cast<int>(s % 2), s));
    v8.insert(w * 4 % 12);
    v12.insert(w * 6 % 12);
  }
  CHECK(v8 == std::set<int>{0, 4, 8});
  CHECK(v12 == std::set<int>{0, 6});
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(in_pm_gamma6(sample_pm_gamma6(s)));
  CHECK(character_triviality(8, 100, 1));
  CHECK(character_triviality(12, 100, 2));
  CHECK(character_triviality(16, 100, 3));
  CHECK(eta_multiplier_sq(Mat2{{{1, 1}, {0, 1}}}) * 4 % 12 != 0);
}
