#include "bilevel/modgroups.hpp"

#include <set>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "bilevel/random.hpp"

namespace bilevel {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

std::int64_t md(std::int64_t a, std::int64_t n) { return mod(a, n); }

const Mat2 kS{{{0, -1}, {1, 0}}};
const Mat2 kT{{{1, 1}, {0, 1}}};
const Mat2 kTinv{{{1, -1}, {0, 1}}};

Mat2 inverse2(const Mat2& g) { return Mat2{{{g[1][1], -g[0][1]}, {-g[1][0], g[0][0]}}}; }
Mat2 neg2(const Mat2& g) { return Mat2{{{-g[0][0], -g[0][1]}, {-g[1][0], -g[1][1]}}}; }

std::int64_t small(const BigInt& v, std::int64_t n) { return mod(v, BigInt(n)).get_si(); }

Real to_real(const BigInt& v) { return Real(v.get_str()); }

// eta(tau) = e(tau/24) sum_k (-1)^k q^(k(3k-1)/2), q = e(tau).
Complex eta(const Complex& tau) {
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Complex i2pi(0, two_pi);
  const Complex q = exp(i2pi * tau);
  const Real im = tau.imag();
  if (im <= 0) throw Error(ErrorKind::InvalidQuery, "eta needs Im tau > 0");
  Complex sum(1);
  // x = q^(k(3k-1)/2), y = q^(k(3k+1)/2); stepping k multiplies them by
  // q^(3k+1) and q^(3k+2).
  Complex x(1), y(1), step_x = q, step_y = q * q;
  const Complex q3 = q * q * q;
  for (long k = 1;; ++k) {
    x *= step_x;
    y *= step_y;
    step_x *= q3;
    step_y *= q3;
    const Complex term = x + y;
    sum += (k % 2 == 0) ? term : Complex(-term);
    if (Real(k * (3 * k - 1) / 2) * two_pi * im > 160) break;
  }
  return exp(i2pi * tau / 24) * sum;
}

}  // namespace

PSL2Elt::PSL2Elt(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidQuery, "modulus must be positive");
  std::array<std::int64_t, 4> p{md(a, n), md(b, n), md(c, n), md(d, n)};
  if (md(p[0] * p[3] - p[1] * p[2] - 1, n) != 0) {
    throw Error(ErrorKind::NonUnimodular, "determinant is not 1 mod " + std::to_string(n));
  }
  std::array<std::int64_t, 4> q{md(-a, n), md(-b, n), md(-c, n), md(-d, n)};
  m_ = std::min(p, q);
}

std::string PSL2Elt::str() const {
  return "[[" + std::to_string(m_[0]) + "," + std::to_string(m_[1]) + "],[" + std::to_string(m_[2]) + "," +
         std::to_string(m_[3]) + "]] mod " + std::to_string(n_);
}

PSL2Elt operator*(const PSL2Elt& x, const PSL2Elt& y) {
  if (x.n_ != y.n_) throw Error(ErrorKind::ModulusMismatch, "PSL2 moduli differ");
  const auto& a = x.m_;
  const auto& b = y.m_;
  return {x.n_, a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

std::vector<PSL2Elt> enumerate_psl2(std::int64_t n) {
  std::set<PSL2Elt> out;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          if (md(a * d - b * c - 1, n) == 0) out.insert(PSL2Elt(n, a, b, c, d));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

PSL2Elt reduce_psl2(const Mat2& g, std::int64_t n) {
  if (det2(g) != 1) throw Error(ErrorKind::NonUnimodular, "determinant " + det2(g).get_str());
  return {n, small(g[0][0], n), small(g[0][1], n), small(g[1][0], n), small(g[1][1], n)};
}

PSL2Elt psl_image(const SpMatrix& m) {
  const auto e = integer_entries(m);
  return {6, small(e[0][0], 6), small(e[2][0], 6), small(e[0][2], 6), small(e[2][2], 6)};
}

std::vector<PSL2Elt> subgroup_closure(const std::vector<PSL2Elt>& gens, std::int64_t n) {
  std::set<PSL2Elt> seen{PSL2Elt::identity(n)};
  std::vector<PSL2Elt> frontier{PSL2Elt::identity(n)};
  while (!frontier.empty()) {
    std::vector<PSL2Elt> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        PSL2Elt y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::int64_t subgroup_index(const std::vector<PSL2Elt>& gens, std::int64_t n) {
  return static_cast<std::int64_t>(enumerate_psl2(n).size() / subgroup_closure(gens, n).size());
}

int element_order(const PSL2Elt& x) {
  const PSL2Elt id = PSL2Elt::identity(x.modulus());
  PSL2Elt p = x;
  int k = 1;
  while (p != id) {
    p = p * x;
    ++k;
  }
  return k;
}

SpMatrix zeta1_centralizer_element(const Mat2& g) {
  if (det2(g) != 1) throw Error(ErrorKind::NonUnimodular, "determinant " + det2(g).get_str());
  if (mod(g[0][1], BigInt(2)) != 0) throw Error(ErrorKind::InvalidQuery, "b must be even");
  const BigInt &a = g[0][0], &b = g[0][1], &c = g[1][0], &d = g[1][1];
  Mat4<BigInt> m{};
  m[0] = {a, 0, b, 3 * b};
  m[1] = {3 * (a - 1), 1, 3 * b, 0};
  m[2] = {c, 0, d, 3 * (d - 1)};
  m[3] = {0, 0, 0, 1};
  return to_sp(m);
}

BranchCount branch_component_count() {
  auto commute_all = [](const SpMatrix& z, const std::vector<SpMatrix>& ws) {
    for (const auto& w : ws) {
      if (sp_mul(w, z) != sp_mul(z, w)) return false;
    }
    return true;
  };
  auto images = [](const std::vector<SpMatrix>& ws) {
    std::vector<PSL2Elt> out;
    for (const auto& w : ws) out.push_back(psl_image(w));
    return out;
  };
  const std::vector<SpMatrix> jacobi = {j1(kS), j1(kT)};
  const std::vector<SpMatrix> zeta1 = {zeta1_centralizer_element(Mat2{{{1, 2}, {0, 1}}}),
                                       zeta1_centralizer_element(Mat2{{{1, 0}, {1, 1}}}),
                                       zeta1_centralizer_element(Mat2{{{-1, 0}, {0, -1}}})};
  const std::vector<SpMatrix> beta = {builtin("BETA"), builtin("BETAP")};
  const std::vector<std::pair<const char*, const std::vector<SpMatrix>*>> plan = {
      {"ZETA0", &jacobi}, {"ZETA1", &zeta1}, {"ZETA2", &beta}, {"ZETA3", &jacobi}, {"ZETA4", &jacobi}};

  BranchCount out{{}, 0};
  for (const auto& [name, ws] : plan) {
    BigInt disc;
    for (const auto& f : fixed_locus_catalog()) {
      if (f.matrix == name) disc = humbert_discriminant(f.relation);
    }
    const std::int64_t idx = subgroup_index(images(*ws), 6);
    out.classes.push_back({name, idx, disc, commute_all(builtin(name), *ws)});
    out.total += idx;
  }
  return out;
}

Rational dedekind_sum(const BigInt& h, const BigInt& k) {
  if (k <= 0) throw Error(ErrorKind::InvalidQuery, "Dedekind sum needs k > 0");
  if (gcd(h, k) != 1) throw Error(ErrorKind::InvalidQuery, "Dedekind sum needs gcd(h, k) = 1");
  const BigInt r = mod(h, k);
  if (r == 0) return 0;
  // Reciprocity: s(r,k) + s(k,r) = (r/k + k/r + 1/(rk))/12 - 1/4.
  Rational rk(r, k), kr(k, r), inv(BigInt(1), r * k);
  return (rk + kr + inv) / Rational(12) - Rational(1, 4) - dedekind_sum(k, r);
}

int eta_multiplier_sq_formula(const Mat2& g) {
  if (det2(g) != 1) throw Error(ErrorKind::NonUnimodular, "determinant " + det2(g).get_str());
  const BigInt &a = g[0][0], &b = g[0][1], &c = g[1][0], &d = g[1][1];
  if (c < 0) return static_cast<int>(mod(eta_multiplier_sq_formula(neg2(g)) + 6, 12));
  if (c == 0) {
    // g = +-T^b; the sign contributes the factor -1 from cτ + d = -1.
    BigInt w = d == 1 ? b : -b + 6;
    return static_cast<int>(mod(w, BigInt(12)).get_si());
  }
  Rational w = Rational(a + d, c) - Rational(12) * dedekind_sum(d, c) - Rational(3);
  return static_cast<int>(mod(w.to_integer(), BigInt(12)).get_si());
}

int eta_multiplier_sq_numeric(const Mat2& g) {
  if (det2(g) != 1) throw Error(ErrorKind::NonUnimodular, "determinant " + det2(g).get_str());
  const Real a = to_real(g[0][0]), b = to_real(g[0][1]), c = to_real(g[1][0]), d = to_real(g[1][1]);
  const Complex i(0, 1);
  const Complex tau = g[1][0] == 0 ? i : (Complex(-d) + (g[1][0] > 0 ? i : Complex(-i))) / c;
  const Complex cz = c * tau + d;
  const Complex gtau = (a * tau + b) / cz;
  const Complex e1 = eta(tau), e2 = eta(gtau);
  const Complex ratio = e2 * e2 / (cz * e1 * e1);

  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Real turns = arg(ratio) / two_pi * 12;
  const long w = boost::multiprecision::lround(turns);
  const Complex root = exp(Complex(0, two_pi * w / 12));
  if (abs(ratio - root) > Real("1e-20")) {
    throw Error(ErrorKind::OracleDisagreement, "eta^2 ratio is not a 12th root of unity");
  }
  return static_cast<int>(md(w, 12));
}

int eta_multiplier_sq(const Mat2& g) {
  const int f = eta_multiplier_sq_formula(g);
  const int n = eta_multiplier_sq_numeric(g);
  if (f != n) {
    throw Error(ErrorKind::OracleDisagreement,
                "formula gives " + std::to_string(f) + ", numeric oracle gives " + std::to_string(n));
  }
  return f;
}

Mat2 sample_sl2(int word_len, std::uint64_t seed) {
  Rng rng(seed);
  Mat2 g{{{1, 0}, {0, 1}}};
  const Mat2* gens[] = {&kS, &kT, &kTinv};
  for (int i = 0; i < word_len; ++i) g = mul2(g, *gens[rng.uniform(0, 2)]);
  return g;
}

bool in_pm_gamma6(const Mat2& g) {
  if (det2(g) != 1) return false;
  for (int s : {1, -1}) {
    if (mod(g[0][0] - s, BigInt(6)) == 0 && mod(g[0][1], BigInt(6)) == 0 && mod(g[1][0], BigInt(6)) == 0 &&
        mod(g[1][1] - s, BigInt(6)) == 0) {
      return true;
    }
  }
  return false;
}

Mat2 sample_pm_gamma6(std::uint64_t seed) {
  Rng rng(seed);
  const Mat2 elementary[] = {
      {{{1, 6}, {0, 1}}}, {{{1, -6}, {0, 1}}}, {{{1, 0}, {6, 1}}}, {{{1, 0}, {-6, 1}}}};
  Mat2 g{{{1, 0}, {0, 1}}};
  const long factors = rng.uniform(1, 3);
  for (long f = 0; f < factors; ++f) {
    const Mat2 h = sample_sl2(static_cast<int>(rng.uniform(0, 2)), rng.next());
    g = mul2(g, mul2(mul2(h, elementary[rng.uniform(0, 3)]), inverse2(h)));
  }
  if (rng.coin()) g = neg2(g);
  if (!in_pm_gamma6(g)) throw Error(ErrorKind::ConstructionMismatch, "sampled element left +-Gamma(6)");
  return g;
}

bool character_triviality(int d, int samples, std::uint64_t seed) {
  if (d % 2 != 0) throw Error(ErrorKind::InvalidQuery, "D must be even");
  for (int s = 0; s < samples; ++s) {
    const Mat2 g = sample_pm_gamma6(derive_seed(seed, std::to_string(s)));
    if ((eta_multiplier_sq(g) * (d / 2)) % 12 != 0) return false;
  }
  return true;
}

}  // namespace bilevel
