#include "bilevel/jacobi.hpp"

#include <algorithm>
#include <functional>

#include "bilevel/series_io.hpp"

namespace bilevel {

namespace {

const Rational kHalf(1, 2);

QRSeries binomial_factor(long n, const Rational& rexp, const Rational& qprec) {
  QRSeries f(qprec);
  f.add_term(0, 0, 1);
  f.add_term(n, rexp, -1);
  return f;
}

BigInt sigma3(long n) {
  BigInt s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) s += BigInt(d) * d * d;
  }
  return s;
}

QRSeries build_phi01(const Rational& work) {
  QRSeries sum(work, 0, 1);
  for (int j = 2; j <= 4; ++j) {
    QRSeries num = pow(theta_even(j, true, work), 2);
    QRSeries den = pow(theta_even(j, false, work), 2);
    sum = add(sum, exact_div(num, den));
  }
  return scale(4, sum);
}

QRSeries build_phi02(const Rational& work) {
  QRSeries p01 = build_phi01(work);
  QRSeries m21 = phi_m2_1(work);
  QRSeries t = sub(pow(p01, 2), mul(eisenstein4(work), pow(m21, 2)));
  return scale(Rational(1, 24), t);
}

QRSeries build_theta_quotient(int a, const Rational& work) {
  return exact_div(theta_odd(a, work), theta_odd(1, work));
}

QRSeries build_weak(int k, const Rational& work) {
  switch (k) {
    case 1: return build_phi01(work);
    case 2: return build_phi02(work);
    case 3: return pow(build_theta_quotient(2, work), 2);
    case 4: return build_theta_quotient(3, work);
    default: throw Error(ErrorKind::UnknownForm, "phi_{0," + std::to_string(k) + "}");
  }
}

Slice symmetric(std::initializer_list<std::pair<int, int>> terms) {
  Slice s;
  for (auto [e, c] : terms) {
    if (c == 0) continue;
    s[e] = c;
    s[-e] = c;
  }
  return s;
}

}  // namespace

std::string_view to_string(LiftInputId id) {
  switch (id) {
    case LiftInputId::PHI3: return "PHI3";
    case LiftInputId::PHI3P: return "PHI3P";
    case LiftInputId::PHI3PP: return "PHI3PP";
  }
  return "?";
}

std::string_view form_name(LiftInputId id) {
  switch (id) {
    case LiftInputId::PHI3: return "phi3";
    case LiftInputId::PHI3P: return "phi3p";
    case LiftInputId::PHI3PP: return "phi3pp";
  }
  return "?";
}

LiftInputId parse_lift_input(std::string_view name) {
  for (auto id : kAllLiftInputs) {
    if (name == form_name(id) || name == to_string(id)) return id;
  }
  throw Error(ErrorKind::UnknownForm, "not a lift input: '" + std::string(name) + "'");
}

QRSeries eta(const Rational& qprec) {
  QRSeries s(qprec, kHalf, 0);
  const Rational lead(1, 24);
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k - 1}) {
      Rational e = lead + Rational(kk * (3 * kk - 1) / 2);
      if (e >= qprec) continue;
      any = true;
      s.add_term(e, 0, kk % 2 == 0 ? 1 : -1);
    }
    if (!any) break;
  }
  return s;
}

QRSeries theta_odd(int a, const Rational& qprec) {
  if (a < 1 || a > 3) throw Error(ErrorKind::InvalidQuery, "theta_odd needs a in {1,2,3}");
  QRSeries s(qprec, kHalf, Rational(a * a, 2));
  s.add_term(Rational(1, 8), Rational(a, 2), 1);
  s.add_term(Rational(1, 8), Rational(-a, 2), -1);
  for (long n = 1; Rational(n) < qprec; ++n) {
    for (int re : {a, -a, 0}) s = mul(s, binomial_factor(n, re, qprec));
  }
  return s;
}

QRSeries theta_even(int j, bool two_variable, const Rational& qprec) {
  if (j < 2 || j > 4) throw Error(ErrorKind::InvalidQuery, "theta_even needs j in {2,3,4}");
  QRSeries s(qprec, kHalf, two_variable ? kHalf : Rational(0));
  const Rational shift = j == 2 ? kHalf : Rational(0);
  for (long n = 0;; ++n) {
    bool any = false;
    for (long m : {n, -n - 1}) {
      Rational x = Rational(m) + shift;
      Rational e = x * x * kHalf;
      if (e >= qprec) continue;
      any = true;
      int sign = (j == 4 && m % 2 != 0) ? -1 : 1;
      s.add_term(e, two_variable ? x : Rational(0), sign);
    }
    if (!any) break;
  }
  return s;
}

QRSeries eisenstein4(const Rational& qprec) {
  QRSeries s(qprec, 4, 0);
  s.add_term(0, 0, 1);
  for (long n = 1; Rational(n) < qprec; ++n) s.add_term(n, 0, Rational(sigma3(n) * 240));
  return s;
}

QRSeries phi_m2_1(const Rational& qprec) {
  const Rational work = qprec + 1;
  QRSeries t = exact_div(pow(theta_odd(1, work), 2), pow(eta(work), 6));
  return t.truncated(qprec);
}

Slice reference_slice(int k, int qexp) {
  if (qexp == 0) {
    switch (k) {
      case 2: return symmetric({{1, 1}, {0, 4}});
      case 3: return symmetric({{1, 1}, {0, 2}});
      case 4: return symmetric({{1, 1}, {0, 1}});
      default: break;
    }
  } else if (qexp == 1) {
    switch (k) {
      case 2: return symmetric({{3, 1}, {2, -8}, {1, -1}, {0, 16}});
      case 3: return symmetric({{3, -2}, {2, -2}, {1, 2}, {0, 4}});
      case 4: return symmetric({{4, -1}, {3, -1}, {1, 1}, {0, 2}});
      default: break;
    }
  }
  throw Error(ErrorKind::InvalidQuery, "no reference slice for this form and q-level");
}

void require_integral(const QRSeries& f, std::string_view what) {
  for (const auto& [q, s] : f.levels()) {
    if (!q.is_integer()) {
      throw Error(ErrorKind::ConstructionMismatch,
                  std::string(what) + " has fractional q-exponent " + q.str());
    }
    for (const auto& [r, c] : s) {
      if (!r.is_integer() || !c.is_integer()) {
        throw Error(ErrorKind::ConstructionMismatch, std::string(what) + " has non-integral term " +
                                                         c.str() + " q^" + q.str() + " r^" + r.str());
      }
    }
  }
}

QRSeries weak_jacobi(int k, const Rational& qprec) {
  const Rational work = max(qprec, Rational(2)) + 1;
  QRSeries f = build_weak(k, work);
  const std::string what = "phi_{0," + std::to_string(k) + "}";
  require_integral(f, what);
  if (k >= 2) {
    for (int level : {0, 1}) {
      Slice got = f.slice(level);
      Slice want = reference_slice(k, level);
      if (got != want) {
        throw Error(ErrorKind::ConstructionMismatch, what + " q^" + std::to_string(level) +
                                                         " slice is " + slice_to_string(got) +
                                                         ", expected " + slice_to_string(want));
      }
    }
  }
  return f.truncated(qprec);
}

QRSeries lift_input(LiftInputId id, const Rational& qprec) {
  QRSeries p3sq = pow(weak_jacobi(3, qprec), 2);
  if (id == LiftInputId::PHI3P) return p3sq;
  QRSeries p24 = mul(weak_jacobi(2, qprec), weak_jacobi(4, qprec));
  if (id == LiftInputId::PHI3) return sub(scale(5, p3sq), scale(4, p24));
  return sub(scale(3, p3sq), scale(2, p24));
}

BigInt fourier_coeff(const QRSeries& form, const BigInt& n, const BigInt& l) {
  if (form.index() != Rational(6)) {
    throw Error(ErrorKind::IndexMismatch, "form has index " + form.index().str() + ", expected 6");
  }
  BigInt lr = mod(l, BigInt(12));
  BigInt lp = lr <= 6 ? lr : BigInt(lr - 12);
  BigInt num = 24 * n - l * l + lp * lp;
  BigInt np = num / 24;
  if (np < 0) return 0;
  if (Rational(np) >= form.qprec()) {
    throw Error(ErrorKind::InsufficientPrecision,
                "f(" + n.get_str() + "," + l.get_str() + ") reduces to n' = " + np.get_str() +
                    " beyond qprec " + form.qprec().str());
  }
  return form.coeff(Rational(np), Rational(lp)).to_integer();
}

const std::vector<std::string>& standard_form_names() {
  static const std::vector<std::string> names = {
      "eta",    "e4",     "vartheta1", "vartheta2", "vartheta3", "theta2", "theta3", "theta4",
      "phim21", "phi01",  "phi02",     "phi03",     "phi04",     "phi3",   "phi3p",  "phi3pp"};
  return names;
}

QRSeries standard_form(std::string_view name, const Rational& qprec) {
  if (name == "eta") return eta(qprec);
  if (name == "e4") return eisenstein4(qprec);
  if (name.size() == 9 && name.substr(0, 8) == "vartheta") {
    int a = name[8] - '0';
    if (a >= 1 && a <= 3) return theta_odd(a, qprec);
  }
  if (name.size() == 6 && name.substr(0, 5) == "theta") {
    int j = name[5] - '0';
    if (j >= 2 && j <= 4) return theta_even(j, true, qprec);
  }
  if (name == "phim21") return phi_m2_1(qprec);
  if (name.size() == 5 && name.substr(0, 4) == "phi0") {
    int k = name[4] - '0';
    if (k >= 1 && k <= 4) return weak_jacobi(k, qprec);
  }
  for (auto id : kAllLiftInputs) {
    if (name == form_name(id)) return lift_input(id, qprec);
  }
  throw Error(ErrorKind::UnknownForm, "unknown form '" + std::string(name) + "'");
}

std::filesystem::path FormCache::file_for(const std::filesystem::path& dir, std::string_view name,
                                          const Rational& qprec) {
  std::string p = qprec.str();
  std::replace(p.begin(), p.end(), '/', '_');
  return dir / (std::string(name) + ".q" + p + ".json");
}

std::shared_ptr<const QRSeries> FormCache::get(std::string_view name, const Rational& qprec) {
  auto key = std::make_pair(std::string(name), qprec.str());
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::shared_ptr<const QRSeries> value;
  if (dir_) {
    auto path = file_for(*dir_, name, qprec);
    if (std::filesystem::exists(path)) {
      NamedSeries ns = read_series_file(path);
      if (ns.form != name) {
        throw Error(ErrorKind::ParseError, path.string() + " holds form '" + ns.form + "'");
      }
      value = std::make_shared<const QRSeries>(std::move(ns.series));
    }
  }
  if (!value) value = std::make_shared<const QRSeries>(standard_form(name, qprec));
  std::lock_guard lock(mu_);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

FormCache& global_form_cache() {
  static FormCache cache;
  return cache;
}

}  // namespace bilevel
