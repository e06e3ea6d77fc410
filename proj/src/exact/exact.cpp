#include "bilevel/exact.hpp"

#include <cctype>

namespace bilevel {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::IncompatibleSeries: return "IncompatibleSeries";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::NonIntegerExponentData: return "NonIntegerExponentData";
    case ErrorKind::NonPrimitiveVector: return "NonPrimitiveVector";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::IrrationalEntry: return "IrrationalEntry";
    case ErrorKind::NonUnimodular: return "NonUnimodular";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NonIntegerDiscriminant: return "NonIntegerDiscriminant";
    case ErrorKind::DegenerateRelation: return "DegenerateRelation";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::UnknownForm: return "UnknownForm";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const BigInt& v) { return v.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::ZeroDivisor, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  BigInt num, den = 1;
  auto slash = text.find('/');
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    auto d = text.substr(slash + 1);
    ok = !d.empty() && d[0] != '-' && d[0] != '+' && parse_integer(d, den);
  }
  if (!ok) throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw Error(ErrorKind::NonIntegralCoefficient, str() + " is not an integer");
  return v_.get_num();
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDivisor, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

const Rational& QuadNum::as_rational() const {
  if (!b_.is_zero()) throw Error(ErrorKind::IrrationalEntry, str() + " has a sqrt(6) component");
  return a_;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  Rational a = a_ * o.a_ + Rational(6) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero in Q(sqrt6)");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string QuadNum::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  if (b_ == Rational(1)) return s + "sqrt6";
  if (b_ == Rational(-1)) return s + "-sqrt6";
  return s + b_.str() + "*sqrt6";
}

GaussNum& GaussNum::operator*=(const GaussNum& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussNum& GaussNum::operator/=(const GaussNum& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero in Q(i)");
  *this *= o.conjugate();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussNum::str() const {
  if (im_.is_zero()) return re_.str();
  return re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "i";
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt mod(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace bilevel
