#include "bilevel/lift.hpp"

#include <set>

#include <json.hpp>

namespace bilevel {

namespace {

struct HumbertQuery {
  BigInt a, b;
  long dmax;
};

HumbertQuery normalize_query(int delta, BigInt b) {
  if (delta != 1 && delta != 4) {
    throw Error(ErrorKind::InvalidQuery, "discriminant must be 1 or 4, got " + std::to_string(delta));
  }
  if (delta == 4 && abs(b) == 1) b = 2 * sgn(b);
  BigInt num = b * b - delta;
  if (mod(num, BigInt(24)) != 0) {
    throw Error(ErrorKind::InvalidQuery,
                "no integer a with b^2 - 24a = " + std::to_string(delta) + " for b = " + b.get_str());
  }
  return {num / 24, b, delta == 1 ? 6 : 3};
}

BigInt lookup(const QRSeries& form, long n, long l) {
  try {
    return fourier_coeff(form, n, l);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonIntegralCoefficient) throw;
    throw Error(ErrorKind::NonIntegerExponentData, e.what());
  }
}

BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// (1 - x)^e truncated to x^jmax, as coefficients of x^j.
std::vector<BigInt> one_minus_power(const BigInt& e, long jmax) {
  std::vector<BigInt> c;
  for (long j = 0; j <= jmax; ++j) {
    BigInt v = e >= 0 ? binomial(e, j) : binomial(BigInt(-e + j - 1), j);
    if (e >= 0 && j % 2 == 1) v = -v;
    if (e >= 0 && v == 0) break;
    c.push_back(v);
  }
  return c;
}

long degree(const Offset& o) { return o[0] + o[2]; }

long isqrt(long v) {
  BigInt r;
  BigInt bv(v);
  mpz_sqrt(r.get_mpz_t(), bv.get_mpz_t());
  return r.get_si();
}

}  // namespace

BigInt humbert_multiplicity(const QRSeries& form, int delta, const BigInt& b) {
  auto q = normalize_query(delta, b);
  BigInt m = 0;
  for (long d = 1; d <= q.dmax; ++d) m += fourier_coeff(form, d * d * q.a, d * q.b);
  return m;
}

BigInt humbert_multiplicity(LiftInputId id, int delta, const BigInt& b) {
  return humbert_multiplicity(*global_form_cache().get(id), delta, b);
}

BigInt humbert_multiplicity_raw(const QRSeries& form, int delta, const BigInt& b) {
  auto q = normalize_query(delta, b);
  BigInt m = 0;
  for (long d = 1; d <= q.dmax; ++d) {
    m += form.coeff(Rational(BigInt(d * d * q.a)), Rational(BigInt(d * q.b))).to_integer();
  }
  return m;
}

LeadingExponents leading_exponents(const QRSeries& form) {
  Slice s0 = form.slice(0);
  Rational sum, b, c;
  for (const auto& [l, f] : s0) {
    sum += f;
    if (l.sign() > 0) b += l * f;
    c += l * l * f;
  }
  LeadingExponents e{sum / 24, b / 2, c / 4};
  if (e.C != e.A * form.index()) {
    throw Error(ErrorKind::ConstructionMismatch,
                "C = " + e.C.str() + " disagrees with (t/24) sum f(0,l) = " + (e.A * form.index()).str());
  }
  return e;
}

LeadingExponents leading_exponents(LiftInputId id) {
  return leading_exponents(*global_form_cache().get(id));
}

void TripleSeries::add_term(const Offset& o, const BigInt& c) {
  if (c == 0 || degree(o) > bound_) return;
  auto [it, inserted] = terms_.try_emplace(o, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt TripleSeries::coeff(const Offset& o) const {
  if (degree(o) > bound_) {
    throw Error(ErrorKind::InsufficientPrecision, "monomial beyond the product bound");
  }
  auto it = terms_.find(o);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::array<Rational, 3> TripleSeries::exponents(const Offset& o) const {
  return {origin_.A + o[0], origin_.B + o[1], origin_.C + 6 * o[2]};
}

TripleSeries TripleSeries::truncated(long bound) const {
  if (bound > bound_) throw Error(ErrorKind::InsufficientPrecision, "cannot raise the product bound");
  TripleSeries t(origin_, bound);
  for (const auto& [o, c] : terms_) t.add_term(o, c);
  return t;
}

namespace {

LeadingExponents add_origins(const LeadingExponents& a, const LeadingExponents& b) {
  return {a.A + b.A, a.B + b.B, a.C + b.C};
}

}  // namespace

TripleSeries mul_serial(const TripleSeries& a, const TripleSeries& b) {
  TripleSeries r(add_origins(a.origin(), b.origin()), std::min(a.bound(), b.bound()));
  for (const auto& [oa, ca] : a.terms()) {
    for (const auto& [ob, cb] : b.terms()) {
      r.add_term({oa[0] + ob[0], oa[1] + ob[1], oa[2] + ob[2]}, ca * cb);
    }
  }
  return r;
}

TripleSeries mul_parallel(const TripleSeries& a, const TripleSeries& b) {
  TripleSeries r(add_origins(a.origin(), b.origin()), std::min(a.bound(), b.bound()));
  using Term = std::pair<Offset, BigInt>;
  std::map<std::pair<long, long>, std::vector<Term>> ga, gb;
  for (const auto& [o, c] : a.terms()) ga[{o[0], o[2]}].emplace_back(o, c);
  for (const auto& [o, c] : b.terms()) gb[{o[0], o[2]}].emplace_back(o, c);

  std::map<std::pair<long, long>, std::vector<std::pair<const std::vector<Term>*, const std::vector<Term>*>>> plan;
  for (const auto& [ka, ta] : ga) {
    for (const auto& [kb, tb] : gb) {
      std::pair<long, long> k{ka.first + kb.first, ka.second + kb.second};
      if (k.first + k.second > r.bound()) continue;
      plan[k].emplace_back(&ta, &tb);
    }
  }
  std::vector<const std::vector<std::pair<const std::vector<Term>*, const std::vector<Term>*>>*> tasks;
  for (const auto& [k, v] : plan) tasks.push_back(&v);
  std::vector<std::map<Offset, BigInt>> out(tasks.size());

  const long ntasks = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < ntasks; ++t) {
    auto& acc = out[t];
    for (const auto& [ta, tb] : *tasks[t]) {
      for (const auto& [oa, ca] : *ta) {
        for (const auto& [ob, cb] : *tb) {
          acc[{oa[0] + ob[0], oa[1] + ob[1], oa[2] + ob[2]}] += ca * cb;
        }
      }
    }
  }
  for (const auto& acc : out) {
    for (const auto& [o, c] : acc) r.add_term(o, c);
  }
  return r;
}

TripleSeries mul(const TripleSeries& a, const TripleSeries& b) {
#ifdef BILEVEL6_HAVE_OPENMP
  return mul_parallel(a, b);
#else
  return mul_serial(a, b);
#endif
}

TripleSeries exp_lift_truncated(const QRSeries& form, long bound) {
  if (bound < 0) throw Error(ErrorKind::InvalidQuery, "product bound must be nonnegative");
  const LeadingExponents origin = leading_exponents(form);
  TripleSeries product(origin, bound);
  product.add_term({0, 0, 0}, 1);

  auto apply = [&](long n, long l, long m, const BigInt& e) {
    if (e == 0) return;
    const long d = n + m;
    if (d == 0 && e < 0) {
      throw Error(ErrorKind::NonIntegerExponentData,
                  "negative exponent " + e.get_str() + " on a degree-zero factor (1 - r^" +
                      std::to_string(l) + ")");
    }
    auto c = one_minus_power(e, d == 0 ? e.get_si() : bound / d);
    TripleSeries factor(LeadingExponents{0, 0, 0}, bound);
    for (long j = 0; j < static_cast<long>(c.size()); ++j) factor.add_term({j * n, j * l, j * m}, c[j]);
    product = mul(product, factor);
  };

  for (long l = -1; l >= -6; --l) apply(0, l, 0, lookup(form, 0, l));
  for (long d = 1; d <= bound; ++d) {
    for (long m = 0; m <= d; ++m) {
      const long n = d - m;
      const long lmax = isqrt(24 * n * m + 36);
      for (long l = -lmax; l <= lmax; ++l) apply(n, l, m, lookup(form, n * m, l));
    }
  }
  return product;
}

TripleSeries exp_lift_truncated(LiftInputId id, long bound) {
  return exp_lift_truncated(*global_form_cache().get(id), bound);
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t lift_rank(const std::vector<TripleSeries>& lifts) {
  std::set<std::array<Rational, 3>> monomials;
  for (const auto& t : lifts) {
    for (const auto& [o, c] : t.terms()) monomials.insert(t.exponents(o));
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : lifts) {
    std::map<std::array<Rational, 3>, Rational> byexp;
    for (const auto& [o, c] : t.terms()) byexp.emplace(t.exponents(o), Rational(c));
    std::vector<Rational> row;
    for (const auto& mono : monomials) {
      auto it = byexp.find(mono);
      row.push_back(it == byexp.end() ? Rational(0) : it->second);
    }
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

std::string triple_to_json(std::string_view form, const TripleSeries& t) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [o, c] : t.terms()) {
    auto e = t.exponents(o);
    coeffs.push_back({e[0].str(), e[1].str(), e[2].str(), c.get_str()});
  }
  nlohmann::json j = {{"version", 1},
                      {"form", std::string(form)},
                      {"bound", std::to_string(t.bound())},
                      {"origin", {t.origin().A.str(), t.origin().B.str(), t.origin().C.str()}},
                      {"coeffs", std::move(coeffs)}};
  return j.dump() + "\n";
}

}  // namespace bilevel
