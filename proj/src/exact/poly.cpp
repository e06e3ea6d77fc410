#include "bilevel/poly.hpp"

namespace bilevel {

PolyModP::PolyModP(std::int64_t p, const std::vector<std::int64_t>& coeffs) : p_(p) {
  if (p < 2) throw Error(ErrorKind::InvalidQuery, "modulus must be a prime >= 2");
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(mod(v, p));
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP one_minus_x_pow(std::int64_t p, int k) {
  std::vector<std::int64_t> c{1};
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= c[j];
    }
    for (auto& v : next) v = mod(v, p);
    c = std::move(next);
  }
  return PolyModP(p, c);
}

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  auto r = extended_gcd(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(p)));
  if (r.g != 1) throw Error(ErrorKind::ZeroDivisor, "leading coefficient not invertible mod p");
  return mod(r.x, BigInt(static_cast<long>(p))).get_si();
}

}  // namespace

bool poly_divides_mod_p(const PolyModP& divisor, const PolyModP& dividend) {
  if (divisor.p() != dividend.p()) {
    throw Error(ErrorKind::ModulusMismatch,
                "moduli " + std::to_string(divisor.p()) + " and " + std::to_string(dividend.p()));
  }
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroDivisor, "zero divisor polynomial");
  const std::int64_t p = divisor.p();
  std::vector<std::int64_t> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  const std::int64_t lead_inv = inverse_mod(d.back(), p);
  for (int top = static_cast<int>(rem.size()) - 1; top >= divisor.degree(); --top) {
    std::int64_t f = (rem[top] * lead_inv) % p;
    if (f == 0) continue;
    int shift = top - divisor.degree();
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] = mod(rem[shift + i] - f * d[i], p);
  }
  for (auto v : rem) {
    if (v != 0) return false;
  }
  return true;
}

ResiduePoly reduce_poly_mod(const IntPoly& f, std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidQuery, "modulus must be >= 2");
  ResiduePoly r{n, {}};
  BigInt bn(static_cast<long>(n));
  for (const auto& c : f.coeffs()) r.coeffs.push_back(mod(c, bn).get_si());
  while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
  return r;
}

IntPoly to_int_poly(const QuadPoly& f) {
  std::vector<BigInt> c;
  for (const auto& q : f.coeffs()) {
    if (!q.is_integer()) {
      throw Error(ErrorKind::NonIntegralCoefficient, "coefficient " + q.str() + " is not an integer");
    }
    c.push_back(q.rational_part().to_integer());
  }
  return IntPoly(std::move(c));
}

ResiduePoly reduce_poly_mod(const QuadPoly& f, std::int64_t n) {
  return reduce_poly_mod(to_int_poly(f), n);
}

namespace {

using PolyMat = std::vector<std::vector<QuadPoly>>;

QuadPoly cofactor_det(const PolyMat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  QuadPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QuadPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    QuadPoly term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

QuadPoly charpoly(const Mat4<QuadNum>& m) {
  PolyMat pm(4, std::vector<QuadPoly>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      pm[i][j] = i == j ? QuadPoly({m[i][j], QuadNum(-1)}) : QuadPoly({m[i][j]});
    }
  }
  return cofactor_det(pm);
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (c == 0) continue;
    std::string mag = BigInt(abs(c)).get_str();
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (i == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag + "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace bilevel
