#include "bilevel/random.hpp"
#include "bilevel/symplectic.hpp"

namespace bilevel {

namespace {

using G2 = std::array<std::array<GaussNum, 2>, 2>;

G2 mul(const G2& x, const G2& y) {
  G2 r;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) r[i][k] = x[i][0] * y[0][k] + x[i][1] * y[1][k];
  }
  return r;
}

G2 block(const Mat4<Rational>& m, int r0, int c0) {
  G2 b;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) b[i][k] = GaussNum(m[r0 + i][c0 + k]);
  }
  return b;
}

G2 add(G2 x, const G2& y) {
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) x[i][k] += y[i][k];
  }
  return x;
}

GaussNum draw(Rng& rng, int im_sign) {
  Rational re(BigInt(rng.uniform(-12, 12)), BigInt(4));
  Rational im(BigInt(rng.uniform(1, 16)), BigInt(4));
  if (im_sign < 0 || (im_sign == 0 && rng.coin())) im = -im;
  return {re, im};
}

void append_term(std::string& s, const Rational& c, const char* var) {
  if (c.is_zero()) return;
  Rational mag = abs(c);
  s += s.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
  if (mag != 1 || *var == '\0') s += mag.str();
  if (*var != '\0') s += (mag != 1 ? "*" : "") + std::string(var);
}

}  // namespace

bool SiegelPoint::in_upper_half_space() const {
  return t1.im().sign() > 0 && (t1.im() * t3.im() - t2.im() * t2.im()).sign() > 0;
}

SiegelPoint act(const SpMatrix& m, const SiegelPoint& z) {
  const Mat4<Rational> r = rational_entries(m);
  const G2 Z{{{z.t1, z.t2}, {z.t2, z.t3}}};
  const G2 num = add(mul(block(r, 0, 0), Z), block(r, 0, 2));
  const G2 den = add(mul(block(r, 2, 0), Z), block(r, 2, 2));
  const GaussNum det = den[0][0] * den[1][1] - den[0][1] * den[1][0];
  if (det.is_zero()) throw Error(ErrorKind::SingularDenominator, "CZ + D is singular");
  const G2 inv{{{den[1][1] / det, -den[0][1] / det}, {-den[1][0] / det, den[0][0] / det}}};
  const G2 w = mul(num, inv);
  if (w[0][1] != w[1][0]) throw Error(ErrorKind::ConstructionMismatch, "image is not symmetric");
  return {w[0][0], w[0][1], w[1][1]};
}

bool HumbertRelation::holds_at(const SiegelPoint& z) const {
  GaussNum v = GaussNum(a) * z.t1 + GaussNum(b) * z.t2 + GaussNum(c) * z.t3 +
               GaussNum(d) * (z.t2 * z.t2 - z.t1 * z.t3) + GaussNum(e);
  return v.is_zero();
}

std::string HumbertRelation::str() const {
  std::string s;
  append_term(s, a, "t1");
  append_term(s, b, "t2");
  append_term(s, c, "t3");
  append_term(s, d, "(t2^2 - t1*t3)");
  append_term(s, e, "");
  return (s.empty() ? "0" : s) + " = 0";
}

BigInt humbert_discriminant(const HumbertRelation& rel) {
  Rational v = rel.b * rel.b - Rational(4) * rel.a * rel.c - Rational(4) * rel.d * rel.e;
  if (!v.is_integer()) throw Error(ErrorKind::NonIntegerDiscriminant, "discriminant " + v.str());
  return v.num();
}

const std::vector<FixedLocus>& fixed_locus_catalog() {
  static const std::vector<FixedLocus> catalog = {
      {"ZETA0", {0, 1, 0, 0, 0}},  {"ZETA1", {6, -2, 0, 0, 0}}, {"ZETA2", {6, -7, 2, 0, 0}},
      {"ZETA3", {0, 2, 1, 0, 0}},  {"ZETA4", {0, 2, 1, 0, -6}}, {"ZETA01", {0, 2, 0, 1, 0}},
  };
  return catalog;
}

std::vector<SiegelPoint> sample_relation_points(const HumbertRelation& rel, int count, std::uint64_t seed) {
  const bool solve_t1 = !rel.a.is_zero() || !rel.d.is_zero();
  const bool solve_t3 = !solve_t1 && !rel.c.is_zero();
  const bool solve_t2 = !solve_t1 && !solve_t3 && !rel.b.is_zero();
  if (!solve_t1 && !solve_t3 && !solve_t2) {
    throw Error(ErrorKind::DegenerateRelation, "relation " + rel.str() + " has no variable");
  }
  Rng rng(seed);
  std::vector<SiegelPoint> out;
  const int budget = 1000 * (count > 0 ? count : 1);
  for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
    SiegelPoint z;
    if (solve_t1) {
      z.t2 = draw(rng, 0);
      z.t3 = draw(rng, 1);
      GaussNum coef = GaussNum(rel.a) - GaussNum(rel.d) * z.t3;
      if (coef.is_zero()) continue;
      GaussNum rest = GaussNum(rel.b) * z.t2 + GaussNum(rel.c) * z.t3 + GaussNum(rel.d) * z.t2 * z.t2 +
                      GaussNum(rel.e);
      z.t1 = -rest / coef;
    } else if (solve_t3) {
      z.t1 = draw(rng, 1);
      z.t2 = draw(rng, 0);
      z.t3 = -(GaussNum(rel.b) * z.t2 + GaussNum(rel.e)) / GaussNum(rel.c);
    } else {
      z.t1 = draw(rng, 1);
      z.t3 = draw(rng, 1);
      z.t2 = -GaussNum(rel.e) / GaussNum(rel.b);
    }
    if (z.in_upper_half_space() && rel.holds_at(z)) out.push_back(z);
  }
  if (static_cast<int>(out.size()) < count) {
    throw Error(ErrorKind::DegenerateRelation, "no points of H2 found on " + rel.str());
  }
  return out;
}

bool fixed_relation_check(const SpMatrix& m, const HumbertRelation& rel, int samples, std::uint64_t seed) {
  for (const auto& z : sample_relation_points(rel, samples, seed)) {
    if (act(m, z) != z) return false;
  }
  return true;
}

}  // namespace bilevel
