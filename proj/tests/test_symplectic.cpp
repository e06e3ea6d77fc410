#include <doctest.h>

#include "bilevel/symplectic.hpp"

using namespace bilevel;

namespace {

SpMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  SpMatrix m{};
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t k = 0;
    for (long v : row) m[i][k++] = QuadNum(v);
    ++i;
  }
  return m;
}

const GroupId kNat{GroupId::Kind::GAMMA_NAT, 6};
const GroupId kBil{GroupId::Kind::GAMMA_BIL, 6};
const GroupId kTilde{GroupId::Kind::GAMMA_NAT_TILDE, 6};

SpMatrix unipotent(long n) {
  return ints({{1, 0, 4 * n, 2 * n}, {0, 1, 2 * n, n}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

}  // namespace

TEST_CASE("symplecticity of builtins and embeddings") {
  for (const auto& name : builtin_names()) {
    if (name == "R6") continue;
    CHECK_MESSAGE(is_symplectic(builtin(name)), name);
  }
  CHECK_FALSE(is_symplectic(builtin("R6")));
  CHECK(is_symplectic(heisenberg(2, -1, 3)));
  CHECK_FALSE(is_symplectic(ints({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}})));
  const Mat2 g{{{2, 3}, {5, 8}}}, s{{{0, 1}, {-1, 0}}};
  CHECK(is_symplectic(j1(g)));
  CHECK(is_symplectic(j2(g)));
  CHECK(is_symplectic(j(g, {4, -7, 9})));
  CHECK_THROWS_AS(j1(Mat2{{{2, 0}, {0, 1}}}), Error);
  CHECK(j(Mat2{{{-1, 0}, {0, -1}}}, {0, 0, 0}) == builtin("ZETA"));
  CHECK(builtin("I") == j1(s));
}

TEST_CASE("heisenberg composition follows matrix multiplication") {
  auto a = heisenberg(2, -1, 3), b = heisenberg(-5, 4, 1);
  auto ab = heisenberg_coords(sp_mul(a, b));
  REQUIRE(ab.has_value());
  CHECK(ab->m == -3);
  CHECK(ab->n == 3);
  // Cocycle from the (4,2) entry: k + k' + n m' - m n'.
  CHECK(ab->k == 3 + 1 + (-1) * (-5) - 2 * 4);
  CHECK_FALSE(heisenberg_coords(builtin("ZETA")).has_value());
}

TEST_CASE("J6 and its conjugate") {
  const SpMatrix I = builtin("I"), V = builtin("V6");
  CHECK(sp_mul(sp_mul(I, V), sp_mul(I, V)) == builtin("J6"));
  CHECK(nu6(builtin("J6")) == ints({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(nu6_inv(nu6(builtin("V6"))) == builtin("V6"));
  const SpMatrix R = builtin("R6");
  CHECK(nu6(builtin("THETA")) == sp_mul(sp_mul(R, builtin("THETA")), sp_inverse(R)));
}

TEST_CASE("zeta family") {
  const SpMatrix z = builtin("ZETA");
  CHECK(builtin("ZETA1") == ints({{-1, 0, 0, 0}, {-6, 1, 0, 0}, {0, 0, -1, -6}, {0, 0, 0, 1}}));
  CHECK(builtin("ZETA3") == ints({{-1, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, -1, 1}}));
  // zeta_4 is zeta_3 conjugated by the transpose of [0,0;6].
  const SpMatrix t = transpose(heisenberg(0, 0, 6));
  CHECK(builtin("ZETA4") == sp_mul(sp_mul(t, builtin("ZETA3")), sp_inverse(t)));
  for (const char* name : {"ZETA0", "ZETA1", "ZETA2", "ZETA3", "ZETA4", "ZETA01"}) {
    CHECK_MESSAGE(torsion_order(builtin(name), 12) == 2, name);
    CHECK_MESSAGE(in_group(builtin(name), kBil), name);
    CHECK_FALSE(in_group(builtin(name), kNat));
  }
  CHECK(torsion_order(builtin("I"), 12) == 4);
  CHECK_THROWS_AS(torsion_order(heisenberg(1, 0, 0), 50), Error);
  CHECK(in_group(z, kBil));
}

TEST_CASE("j1 does not commute with zeta_3 unless g11 = 1") {
  const SpMatrix z3 = builtin("ZETA3");
  const Mat2 s{{{0, 1}, {-1, 0}}}, t{{{1, 1}, {0, 1}}}, lower{{{1, 0}, {1, 1}}};
  CHECK(sp_mul(j1(s), z3) != sp_mul(z3, j1(s)));
  CHECK(sp_mul(j1(t), z3) != sp_mul(z3, j1(t)));
  CHECK(sp_mul(j1(lower), z3) == sp_mul(z3, j1(lower)));
  for (const auto& g : {s, t, lower}) {
    CHECK(sp_mul(j1(g), builtin("ZETA0")) == sp_mul(builtin("ZETA0"), j1(g)));
  }
}

TEST_CASE("group membership") {
  CHECK_FALSE(in_group(builtin("J6"), GroupId::parse("SP4Z")));
  CHECK_THROWS_AS(in_group(builtin("V6"), GroupId::parse("SP4Z")), Error);
  CHECK(in_group(builtin("J6"), GroupId::parse("GAMMA_T(6)")));
  CHECK(in_group(heisenberg(1, 2, 3), kNat));
  CHECK(in_group(heisenberg(1, 2, 3), GroupId::parse("HEISENBERG")));
  CHECK(in_group(j(Mat2{{{7, 6}, {36, 31}}}, {1, 2, 3}), GroupId::parse("J_GAMMA6_HEIS")));
  CHECK_FALSE(in_group(j(Mat2{{{1, 1}, {0, 1}}}, {0, 0, 0}), GroupId::parse("J_GAMMA6_HEIS")));
  CHECK(in_group(identity4<QuadNum>(), GroupId::parse("PRINCIPAL(6)")));
  CHECK_FALSE(in_group(heisenberg(1, 0, 0), GroupId::parse("PRINCIPAL(6)")));
  CHECK(in_group(heisenberg(6, 12, 18), GroupId::parse("PRINCIPAL(6)")));
  CHECK(GroupId::parse("GAMMA_BIL(6)") == kBil);
  CHECK(GroupId::parse("GAMMA_NAT(6)").str() == "GAMMA_NAT(6)");
  CHECK_THROWS_AS(GroupId::parse("GAMMA_NAT(x)"), Error);
  CHECK_THROWS_AS(GroupId::parse("GAMMA"), Error);
}

TEST_CASE("unipotent boundary element first enters at n = 36") {
  long first = 0;
  for (long n = 1; n <= 36 && first == 0; ++n) {
    if (in_group(unipotent(n), kBil)) first = n;
  }
  CHECK(first == 36);
  CHECK_FALSE(in_group(unipotent(12), kBil));
  CHECK(in_group(unipotent(72), kBil));
}

TEST_CASE("charpoly classes") {
  CHECK(unipotent_class_poly().coeffs == std::vector<std::int64_t>{1, 2, 0, 2, 1});
  CHECK(zeta_class_poly().coeffs == std::vector<std::int64_t>{1, 0, 4, 0, 1});
  CHECK(charpoly_mod6_class(identity4<QuadNum>()) == CharpolyClass::UNIPOTENT_CLASS);
  CHECK(charpoly_mod6_class(builtin("ZETA")) == CharpolyClass::ZETA_CLASS);
  CHECK(charpoly_mod6_class(builtin("ZETA01")) == CharpolyClass::ZETA_CLASS);
  CHECK(charpoly_mod6_class(builtin("I")) == CharpolyClass::OTHER);
  CHECK_THROWS_AS(charpoly_mod6_class(builtin("J6")), Error);
}

TEST_CASE("printed zeta-class polynomial is not the mod-6 charpoly of zeta") {
  // (1 - x^2)(1 + x^2) = 1 - x^4 reduces to 1 + 5x^4, while every element
  // of the zeta coset reduces to (1 - x^2)^2.
  const IntPoly printed = IntPoly{1, 0, -1} * IntPoly{1, 0, 1};
  CHECK(reduce_poly_mod(printed, 6).coeffs == std::vector<std::int64_t>{1, 0, 0, 0, 5});
  CHECK(reduce_poly_mod(charpoly(builtin("ZETA")), 6) != reduce_poly_mod(printed, 6));
}

TEST_CASE("sampled bilevel elements") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SpMatrix g = sample_group_element(kNat, 6, seed);
    REQUIRE(in_group(g, kNat));
    CHECK(charpoly_mod6_class(g) == CharpolyClass::UNIPOTENT_CLASS);
    CHECK(charpoly_mod6_class(sp_mul(builtin("ZETA"), g)) == CharpolyClass::ZETA_CLASS);
    CHECK(in_group(sample_group_element(kTilde, 6, seed), kTilde));
    CHECK(in_group(sample_group_element(kBil, 6, seed), kBil));
  }
  CHECK(sample_group_element(kNat, 0, 3) == identity4<QuadNum>());
  CHECK(sample_group_element(kNat, 5, 11) == sample_group_element(kNat, 5, 11));
  CHECK_THROWS_AS(sample_group_element(GroupId::parse("SP4Z"), 3, 0), Error);
}

TEST_CASE("siegel action") {
  const SiegelPoint z{GaussNum(Rational(1, 3), 2), GaussNum(Rational(1, 5), Rational(1, 2)),
                      GaussNum(-1, 3)};
  REQUIRE(z.in_upper_half_space());
  CHECK(act(identity4<QuadNum>(), z) == z);
  const SiegelPoint diag{z.t1, 0, z.t3};
  CHECK(act(builtin("ZETA"), diag) == diag);
  CHECK(act(builtin("ZETA"), z) != z);
  const SpMatrix a = builtin("ZETA2"), b = j(Mat2{{{2, 1}, {1, 1}}}, {1, -2, 3});
  CHECK(act(sp_mul(a, b), z) == act(a, act(b, z)));
  CHECK(act(b, z).in_upper_half_space());
  CHECK_THROWS_AS(act(builtin("V6"), z), Error);
}

TEST_CASE("humbert discriminants and fixed loci") {
  const auto& cat = fixed_locus_catalog();
  const long want[] = {1, 4, 1, 4, 4, 4};
  REQUIRE(cat.size() == 6);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK_MESSAGE(humbert_discriminant(cat[i].relation) == want[i], cat[i].matrix);
    CHECK_MESSAGE(fixed_relation_check(builtin(cat[i].matrix), cat[i].relation, 10, 7 + i), cat[i].matrix);
  }
  CHECK_FALSE(fixed_relation_check(builtin("ZETA0"), {0, 2, 1, 0, 0}, 10, 1));
  CHECK_THROWS_AS(humbert_discriminant({Rational(1, 3), 1, 1, 0, 0}), Error);
  CHECK_THROWS_AS(sample_relation_points({0, 0, 0, 0, 1}, 1, 0), Error);
  CHECK(cat[2].relation.str() == "6*t1 - 7*t2 + 2*t3 = 0");
}

TEST_CASE("zeta_1 fixes its locus only under the left-transpose reading") {
  const SpMatrix other = transpose(sp_mul(builtin("ZETA"), heisenberg(-6, 0, 0)));
  const HumbertRelation rel{6, -2, 0, 0, 0};
  CHECK(fixed_relation_check(builtin("ZETA1"), rel, 10, 3));
  CHECK_FALSE(fixed_relation_check(other, rel, 10, 3));
}

TEST_CASE("printed beta matrices are not symplectic") {
  const SpMatrix beta = ints({{-18, 14, 25, 42}, {-42, 31, 42, 72}, {107, -70, -18, -42}, {-70, 46, -14, 31}});
  const SpMatrix betap = ints({{23, -30, 25, 42}, {24, -5, 42, 72}, {59, -34, 0, -6}, {-34, 20, -6, 7}});
  CHECK_FALSE(is_symplectic(beta));
  CHECK_FALSE(is_symplectic(betap));
  CHECK(determinant(beta) == QuadNum(1177));
  for (const char* name : {"BETA", "BETAP"}) {
    const SpMatrix b = builtin(name);
    CHECK(is_symplectic(b));
    CHECK(has_integer_entries(b));
    CHECK(sp_mul(b, builtin("ZETA2")) == sp_mul(builtin("ZETA2"), b));
  }
}

TEST_CASE("factorization of the conjugated bilevel group") {
  const Mat2 g{{{7, 6}, {36, 31}}};
  const SpMatrix single = nu6(j(g, {6, 12, 36}));
  FactorWord w = factorize_nat(single);
  CHECK(w.product() == single);
  for (const auto& t : w.tokens) CHECK(t.kind != FactorToken::Kind::J6TILDE);

  const SpMatrix J6 = builtin("J6");
  const SpMatrix beta = nu6(sp_mul(sp_mul(J6, heisenberg(6, -12, 30)), sp_inverse(J6)));
  const SpMatrix two = sp_mul(single, beta);
  REQUIRE(in_group(two, kTilde));
  CHECK(factorize_nat(two).product() == two);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SpMatrix s = sample_group_element(kTilde, 8, seed);
    CHECK(factorize_nat(s).product() == s);
  }
  CHECK_THROWS_AS(factorize_nat(builtin("ZETA")), Error);
}

TEST_CASE("matrix json") {
  const SpMatrix v = builtin("V6");
  CHECK(matrix_from_json(matrix_to_json(v)) == v);
  CHECK_THROWS_AS(matrix_from_json("{\"entries\": [[1]]}"), Error);
  CHECK_THROWS_AS(matrix_from_json("nope"), Error);
}
