#include <doctest.h>

#include <random>

#include "bilevel/jacobi.hpp"
#include "bilevel/qrseries.hpp"

using namespace bilevel;

namespace {

QRSeries random_series(std::mt19937_64& rng, const Rational& qprec) {
  QRSeries s(qprec);
  int terms = 1 + static_cast<int>(rng() % 12);
  for (int i = 0; i < terms; ++i) {
    Rational q(BigInt(static_cast<long>(rng() % 48)), BigInt(8));
    Rational r(BigInt(static_cast<long>(rng() % 13) - 6), BigInt(2));
    Rational c(BigInt(static_cast<long>(rng() % 19) - 9), BigInt(static_cast<long>(rng() % 3) + 1));
    s.add_term(q, r, c);
  }
  return s;
}

}  // namespace

TEST_CASE("add and negate cancel") {
  std::mt19937_64 rng(1);
  QRSeries x = random_series(rng, 6);
  QRSeries z = add(x, negate(x));
  CHECK(z.is_zero());
  CHECK(z.qprec() == Rational(6));
}

TEST_CASE("multiplication is commutative and the kernels agree") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    QRSeries a = random_series(rng, 6);
    QRSeries b = random_series(rng, 5);
    QRSeries ab = mul_serial(a, b);
    CHECK(ab == mul_serial(b, a));
    CHECK(ab == mul_parallel(a, b));
    CHECK(ab == mul_parallel(b, a));
  }
}

TEST_CASE("product precision rule") {
  QRSeries a(4), b(3);
  a.add_term(Rational(1, 8), 0, 1);
  b.add_term(Rational(1, 2), 1, 1);
  QRSeries c = mul(a, b);
  CHECK(c.qprec() == min(Rational(4) + Rational(1, 2), Rational(3) + Rational(1, 8)));
}

TEST_CASE("metadata adds under multiplication") {
  QRSeries p = mul(pow(eta(3), 5), theta_odd(2, 3));
  CHECK(p.weight() == Rational(3));
  CHECK(p.index() == Rational(2));
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    QRSeries a = random_series(rng, 8);
    QRSeries b = random_series(rng, 8);
    QRSeries ab = mul(a, b);
    QRSeries c = exact_div(ab, b);
    CHECK(c == a.truncated(c.qprec()));
  }
}

TEST_CASE("exact division by itself is one") {
  QRSeries t = theta_odd(1, 4);
  QRSeries one = exact_div(t, t);
  CHECK(one.term_count() == 1);
  CHECK(one.coeff(0, 0) == Rational(1));
}

TEST_CASE("theta quotients have the expected leading slices") {
  QRSeries q2 = exact_div(theta_odd(2, 4), theta_odd(1, 4));
  CHECK(q2.slice(0) == Slice{{Rational(-1, 2), 1}, {Rational(1, 2), 1}});
  QRSeries q3 = exact_div(theta_odd(3, 4), theta_odd(1, 4));
  CHECK(q3.slice(0) == Slice{{-1, 1}, {0, 1}, {1, 1}});
}

TEST_CASE("non-exact division is reported") {
  QRSeries a(3), b(3);
  a.add_term(0, 0, 1);
  b.add_term(0, 0, 1);
  b.add_term(0, 1, 1);
  CHECK_THROWS_AS(exact_div(a, b), Error);
  try {
    exact_div(a, b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonExactDivision);
  }
  CHECK_THROWS_AS(exact_div(a, QRSeries(3)), Error);
}

TEST_CASE("Laurent division") {
  Slice den{{0, 1}, {1, -1}};
  Slice quo{{-1, 1}, {Rational(1, 2), 3}, {2, -2}};
  Slice num = slice_mul(quo, den);
  CHECK(slice_div(num, den) == quo);
  CHECK_THROWS_AS(slice_div(Slice{{0, 1}}, den), Error);
}

TEST_CASE("coefficient access respects precision") {
  QRSeries s = eta(2);
  CHECK_THROWS_AS(s.coeff(2, 0), Error);
  CHECK_THROWS_AS(s.slice(Rational(5, 2)), Error);
  CHECK(s.coeff(Rational(1, 24), 0) == Rational(1));
}
