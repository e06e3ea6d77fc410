#include "bilevel/symplectic.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace bilevel {

namespace {

SpMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  SpMatrix m{};
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m[i][j++] = QuadNum(v);
    ++i;
  }
  return m;
}

void require_unimodular(const Mat2& g) {
  if (det2(g) != 1) throw Error(ErrorKind::NonUnimodular, "2x2 matrix has determinant " + det2(g).get_str());
}

bool divisible(const Rational& v, const Rational& unit) { return (v / unit).is_integer(); }

// gamma - I against a level-t pattern whose cells are 1, t or t^2.
bool nat_pattern(const Mat4<Rational>& m, long t) {
  const long t2 = t * t;
  const long pattern[4][4] = {{t, 1, t, t}, {t, t, t, t2}, {t, 1, t, t}, {1, 1, 1, t}};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      Rational v = m[i][k] - Rational(i == k ? 1 : 0);
      if (!divisible(v, pattern[i][k])) return false;
    }
  }
  return true;
}

bool paramodular_pattern(const Mat4<Rational>& m, long t) {
  const Rational T(t), one(1), inv(BigInt(1), BigInt(t));
  const Rational pattern[4][4] = {
      {one, one, one, T}, {T, one, T, T}, {one, one, one, T}, {one, inv, one, one}};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (!divisible(m[i][k], pattern[i][k])) return false;
    }
  }
  return true;
}

bool integral_symplectic(const SpMatrix& m) {
  rational_entries(m);
  return has_integer_entries(m) && is_symplectic(m);
}

bool in_nat(const SpMatrix& m, long t) { return integral_symplectic(m) && nat_pattern(rational_entries(m), t); }

bool in_j_gamma6_heis(const SpMatrix& m) {
  if (!integral_symplectic(m)) return false;
  auto e = integer_entries(m);
  Mat2 g{{{e[0][0], e[2][0]}, {e[0][2], e[2][2]}}};
  if (det2(g) != 1) return false;
  if (mod(g[0][0] - 1, BigInt(6)) != 0 || mod(g[0][1], BigInt(6)) != 0 || mod(g[1][0], BigInt(6)) != 0 ||
      mod(g[1][1] - 1, BigInt(6)) != 0) {
    return false;
  }
  return heisenberg_coords(sp_mul(m, sp_inverse(j1(g)))).has_value();
}

long parse_param(std::string_view text, std::string_view head) {
  std::string_view rest = text.substr(head.size());
  if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
    throw Error(ErrorKind::ParseError, "expected " + std::string(head) + "(n), got '" + std::string(text) + "'");
  }
  std::string digits(rest.substr(1, rest.size() - 2));
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "bad group parameter '" + digits + "'");
  }
  long v = std::stol(digits);
  if (v < 1) throw Error(ErrorKind::ParseError, "group parameter must be positive");
  return v;
}

}  // namespace

const SpMatrix& symplectic_form() {
  static const SpMatrix J = from_ints({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
  return J;
}

bool is_symplectic(const SpMatrix& m) {
  return multiply(multiply(transpose(m), symplectic_form()), m) == symplectic_form();
}

SpMatrix to_sp(const Mat4<BigInt>& m) {
  SpMatrix r{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) r[i][k] = QuadNum(Rational(m[i][k]));
  }
  return r;
}

SpMatrix sp_mul(const SpMatrix& a, const SpMatrix& b) { return multiply(a, b); }
SpMatrix sp_inverse(const SpMatrix& m) { return inverse(m); }

SpMatrix sp_neg(const SpMatrix& m) {
  SpMatrix r = m;
  for (auto& row : r) {
    for (auto& v : row) v = -v;
  }
  return r;
}

SpMatrix sp_pow(const SpMatrix& m, long k) {
  SpMatrix base = k < 0 ? sp_inverse(m) : m;
  SpMatrix r = identity4<QuadNum>();
  for (long e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) r = multiply(r, base);
    base = multiply(base, base);
  }
  return r;
}

Mat4<Rational> rational_entries(const SpMatrix& m) {
  Mat4<Rational> r{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) r[i][k] = m[i][k].as_rational();
  }
  return r;
}

Mat4<BigInt> integer_entries(const SpMatrix& m) {
  Mat4<BigInt> r{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) r[i][k] = m[i][k].as_rational().to_integer();
  }
  return r;
}

bool has_integer_entries(const SpMatrix& m) {
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!v.is_integer()) return false;
    }
  }
  return true;
}

GroupId GroupId::parse(std::string_view text) {
  using K = Kind;
  if (text == "SP4Z") return {K::SP4Z, 0};
  if (text == "GAMMA_NAT_TILDE") return {K::GAMMA_NAT_TILDE, 6};
  if (text == "J_GAMMA6_HEIS") return {K::J_GAMMA6_HEIS, 6};
  if (text == "HEISENBERG") return {K::HEISENBERG, 0};
  const std::pair<std::string_view, K> parametric[] = {{"GAMMA_T", K::GAMMA_T},
                                                       {"GAMMA_NAT", K::GAMMA_NAT},
                                                       {"GAMMA_BIL", K::GAMMA_BIL},
                                                       {"PRINCIPAL", K::PRINCIPAL}};
  for (const auto& [head, kind] : parametric) {
    if (text.substr(0, head.size()) == head && text.size() > head.size() && text[head.size()] == '(') {
      return {kind, parse_param(text, head)};
    }
  }
  throw Error(ErrorKind::ParseError, "unknown group '" + std::string(text) + "'");
}

std::string GroupId::str() const {
  auto with = [this](const char* head) { return std::string(head) + "(" + std::to_string(param) + ")"; };
  switch (kind) {
    case Kind::SP4Z: return "SP4Z";
    case Kind::GAMMA_T: return with("GAMMA_T");
    case Kind::GAMMA_NAT: return with("GAMMA_NAT");
    case Kind::GAMMA_BIL: return with("GAMMA_BIL");
    case Kind::GAMMA_NAT_TILDE: return "GAMMA_NAT_TILDE";
    case Kind::J_GAMMA6_HEIS: return "J_GAMMA6_HEIS";
    case Kind::HEISENBERG: return "HEISENBERG";
    case Kind::PRINCIPAL: return with("PRINCIPAL");
  }
  return "?";
}

bool in_group(const SpMatrix& m, const GroupId& g) {
  using K = GroupId::Kind;
  switch (g.kind) {
    case K::SP4Z:
      return integral_symplectic(m);
    case K::GAMMA_T:
      return paramodular_pattern(rational_entries(m), g.param) && is_symplectic(m);
    case K::GAMMA_NAT:
      return in_nat(m, g.param);
    case K::GAMMA_BIL:
      return in_nat(m, g.param) || in_nat(sp_mul(builtin("ZETA"), m), g.param);
    case K::GAMMA_NAT_TILDE:
      return in_nat(nu6_inv(m), 6);
    case K::J_GAMMA6_HEIS:
      return in_j_gamma6_heis(m);
    case K::HEISENBERG:
      rational_entries(m);
      return heisenberg_coords(m).has_value();
    case K::PRINCIPAL: {
      if (!integral_symplectic(m)) return false;
      auto e = integer_entries(m);
      for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
          if (mod(e[i][k] - (i == k ? 1 : 0), BigInt(g.param)) != 0) return false;
        }
      }
      return true;
    }
  }
  return false;
}

SpMatrix heisenberg(const BigInt& m, const BigInt& n, const BigInt& k) {
  SpMatrix r = identity4<QuadNum>();
  r[0][1] = Rational(m);
  r[2][1] = Rational(n);
  r[3][0] = Rational(n);
  r[3][1] = Rational(k);
  r[3][2] = Rational(-m);
  return r;
}

SpMatrix heisenberg(const HeisenbergElt& h) { return heisenberg(h.m, h.n, h.k); }

std::optional<HeisenbergElt> heisenberg_coords(const SpMatrix& m) {
  if (!has_integer_entries(m)) return std::nullopt;
  auto e = integer_entries(m);
  HeisenbergElt h{e[0][1], e[2][1], e[3][1]};
  if (heisenberg(h) != m) return std::nullopt;
  return h;
}

SpMatrix j1(const Mat2& g) {
  require_unimodular(g);
  SpMatrix r = identity4<QuadNum>();
  r[0][0] = Rational(g[0][0]);
  r[2][0] = Rational(g[0][1]);
  r[0][2] = Rational(g[1][0]);
  r[2][2] = Rational(g[1][1]);
  return r;
}

SpMatrix j2(const Mat2& g) {
  require_unimodular(g);
  SpMatrix r = identity4<QuadNum>();
  r[1][1] = Rational(g[0][0]);
  r[3][1] = Rational(g[0][1]);
  r[1][3] = Rational(g[1][0]);
  r[3][3] = Rational(g[1][1]);
  return r;
}

SpMatrix j(const Mat2& g, const HeisenbergElt& h) { return sp_mul(heisenberg(h), j1(g)); }

SpMatrix nu6(const SpMatrix& m) {
  const long r[4] = {1, 1, 1, 6};
  SpMatrix out = m;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) out[i][k] *= QuadNum(Rational(BigInt(r[i]), BigInt(r[k])));
  }
  return out;
}

SpMatrix nu6_inv(const SpMatrix& m) {
  const long r[4] = {1, 1, 1, 6};
  SpMatrix out = m;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) out[i][k] *= QuadNum(Rational(BigInt(r[k]), BigInt(r[i])));
  }
  return out;
}

namespace {

const std::map<std::string, std::function<SpMatrix()>, std::less<>>& builtin_table() {
  static const std::map<std::string, std::function<SpMatrix()>, std::less<>> table = {
      {"ZETA", [] { return from_ints({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}); }},
      {"V6",
       [] {
         const QuadNum s = QuadNum::sqrt6(), si(0, Rational(1, 6));
         SpMatrix v{};
         v[0][1] = si;
         v[1][0] = s;
         v[2][3] = s;
         v[3][2] = si;
         return v;
       }},
      {"J6",
       [] {
         SpMatrix m{};
         m[0][2] = -1;
         m[1][3] = -6;
         m[2][0] = 1;
         m[3][1] = Rational(1, 6);
         return m;
       }},
      {"R6", [] { return from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 6}}); }},
      {"I", [] { return j1(Mat2{{{0, 1}, {-1, 0}}}); }},
      {"THETA", [] { return from_ints({{1, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}}); }},
      {"ZETA0", [] { return builtin("ZETA"); }},
      {"ZETA1", [] { return sp_mul(builtin("ZETA"), transpose(heisenberg(-6, 0, 0))); }},
      {"ZETA2", [] { return from_ints({{-7, 4, 0, 0}, {-12, 7, 0, 0}, {0, 0, -7, -12}, {0, 0, 4, 7}}); }},
      {"ZETA3", [] { return sp_mul(builtin("ZETA"), heisenberg(1, 0, 0)); }},
      {"ZETA4", [] { return from_ints({{-1, -1, 0, 6}, {0, 1, -6, 0}, {0, 0, -1, 0}, {0, 0, -1, 1}}); }},
      {"ZETA01", [] { return sp_mul(builtin("ZETA"), heisenberg(0, 1, 0)); }},
      {"BETA",
       [] {
         return from_ints({{-18, 14, 25, 42}, {-42, 31, 42, 72}, {107, -70, -18, -42}, {-70, 46, 14, 31}});
       }},
      {"BETAP",
       [] { return from_ints({{23, -8, 25, 42}, {24, -5, 42, 72}, {59, -34, 0, -6}, {-34, 20, 2, 7}}); }},
  };
  return table;
}

}  // namespace

SpMatrix builtin(std::string_view name) {
  const auto& t = builtin_table();
  auto it = t.find(name);
  if (it == t.end()) throw Error(ErrorKind::InvalidQuery, "unknown builtin matrix '" + std::string(name) + "'");
  return it->second();
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : builtin_table()) v.push_back(k);
    return v;
  }();
  return names;
}

long torsion_order(const SpMatrix& m, long max) {
  const SpMatrix id = identity4<QuadNum>();
  SpMatrix p = m;
  for (long k = 1; k <= max; ++k) {
    if (p == id) return k;
    p = multiply(p, m);
  }
  throw Error(ErrorKind::NotFound, "no torsion order up to " + std::to_string(max));
}

std::string_view to_string(CharpolyClass c) {
  switch (c) {
    case CharpolyClass::UNIPOTENT_CLASS: return "UNIPOTENT_CLASS";
    case CharpolyClass::ZETA_CLASS: return "ZETA_CLASS";
    case CharpolyClass::OTHER: return "OTHER";
  }
  return "?";
}

ResiduePoly unipotent_class_poly() {
  IntPoly f{1, -1};
  return reduce_poly_mod(f * f * f * f, 6);
}

ResiduePoly zeta_class_poly() {
  IntPoly f{1, 0, -1};
  return reduce_poly_mod(f * f, 6);
}

CharpolyClass charpoly_mod6_class(const SpMatrix& m) {
  integer_entries(m);
  ResiduePoly r = reduce_poly_mod(charpoly(m), 6);
  if (r == unipotent_class_poly()) return CharpolyClass::UNIPOTENT_CLASS;
  if (r == zeta_class_poly()) return CharpolyClass::ZETA_CLASS;
  return CharpolyClass::OTHER;
}

std::string matrix_to_json(const SpMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back({v.rational_part().str(), v.sqrt6_part().str()});
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"entries", std::move(rows)}}.dump() + "\n";
}

SpMatrix matrix_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("matrix file: ") + e.what());
  }
  try {
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != 4) throw Error(ErrorKind::ParseError, "entries must have 4 rows");
    SpMatrix m{};
    for (int i = 0; i < 4; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != 4) throw Error(ErrorKind::ParseError, "each row needs 4 entries");
      for (int k = 0; k < 4; ++k) {
        const auto& e = row[k];
        if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "entry must be [a, b]");
        m[i][k] = QuadNum(Rational::parse(e[0].get<std::string>()), Rational::parse(e[1].get<std::string>()));
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("matrix file: ") + e.what());
  }
}

SpMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open matrix file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return matrix_from_json(ss.str());
}

std::string matrix_str(const SpMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? ", [" : "[";
    for (int k = 0; k < 4; ++k) s += (k ? ", " : "") + m[i][k].str();
    s += "]";
  }
  return s + "]";
}

}  // namespace bilevel
