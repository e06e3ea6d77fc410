#include "bilevel/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

#include "bilevel/divisor.hpp"
#include "bilevel/modgroups.hpp"
#include "bilevel/poly.hpp"
#include "bilevel/random.hpp"
#include "bilevel/series_io.hpp"

namespace bilevel {

namespace {

using Src = CheckSource;

constexpr int kOracleQprec = 37;

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(long v) { return std::to_string(v); }

std::string exps_str(const LeadingExponents& e) {
  return "(" + e.A.str() + ", " + e.B.str() + ", " + e.C.str() + ")";
}

std::string list_str(const std::vector<std::string>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s + ")";
}

const QRSeries& form(const CheckContext& ctx, std::string_view name, int qprec = kDefaultQprec) {
  return *ctx.forms.get(name, qprec);
}

const QRSeries& input(const CheckContext& ctx, LiftInputId id, int qprec = kDefaultQprec) {
  return form(ctx, form_name(id), qprec);
}

SpMatrix unipotent(long n) {
  Mat4<BigInt> m{};
  m[0] = {1, 0, 4 * n, 2 * n};
  m[1] = {0, 1, 2 * n, n};
  m[2] = {0, 0, 1, 0};
  m[3] = {0, 0, 0, 1};
  return to_sp(m);
}

// Divisibility over F_p by trying every monic-scaled quotient of the right
// degree, independent of the Euclidean routine.
bool divides_by_search(const PolyModP& d, const PolyModP& f) {
  const std::int64_t p = d.p();
  const int qdeg = f.degree() - d.degree();
  if (f.is_zero()) return true;
  if (qdeg < 0) return false;
  std::vector<std::int64_t> q(static_cast<std::size_t>(qdeg + 1), 0);
  while (true) {
    std::vector<std::int64_t> prod(static_cast<std::size_t>(f.degree() + 1), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < d.coeffs().size(); ++j) {
        prod[i + j] = mod(prod[i + j] + q[i] * d.coeffs()[j], p);
      }
    }
    if (PolyModP(p, prod) == f) return true;
    std::size_t k = 0;
    while (k < q.size() && ++q[k] == p) q[k++] = 0;
    if (k == q.size()) return false;
  }
}

CheckOutcome polydiv(std::int64_t p, std::vector<std::int64_t> divisor) {
  const PolyModP d(p, std::move(divisor)), f = one_minus_x_pow(p, 4);
  const bool euclid = poly_divides_mod_p(d, f), search = divides_by_search(d, f);
  if (euclid != search) return {"false", "division " + str(euclid) + ", search " + str(search)};
  return {"false", str(euclid)};
}

std::string slice_check(const CheckContext& ctx, std::string_view name, int qexp) {
  return slice_to_string(form(ctx, name).slice(qexp));
}

CheckOutcome class_samples(const CheckContext& ctx, bool zeta_coset) {
  const GroupId nat{GroupId::Kind::GAMMA_NAT, 6};
  const CharpolyClass want = zeta_coset ? CharpolyClass::ZETA_CLASS : CharpolyClass::UNIPOTENT_CLASS;
  const int n = 1000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    SpMatrix g = sample_group_element(nat, 6, derive_seed(ctx.seed, std::to_string(i)));
    if (zeta_coset) g = sp_mul(builtin("ZETA"), g);
    if (charpoly_mod6_class(g) == want) ++hits;
  }
  const std::string label = std::string(to_string(want));
  return {std::to_string(n) + "/" + std::to_string(n) + " " + label,
          std::to_string(hits) + "/" + std::to_string(n) + " " + label};
}

CheckOutcome fixed_locus(const CheckContext& ctx, const std::string& matrix, const std::string& catalog_name,
                         long disc) {
  for (const auto& f : fixed_locus_catalog()) {
    if (f.matrix != catalog_name) continue;
    const bool fixed = fixed_relation_check(builtin(matrix), f.relation, 10, ctx.seed);
    return {"discriminant " + str(disc) + ", fixed at 10 points",
            "discriminant " + str(humbert_discriminant(f.relation)) + (fixed ? ", fixed at 10 points" : ", moved")};
  }
  return {"catalog entry " + catalog_name, "missing"};
}

std::vector<TripleSeries> products(const CheckContext& ctx) {
  std::vector<TripleSeries> out;
  for (LiftInputId id : kAllLiftInputs) out.push_back(exp_lift_truncated(input(ctx, id), kDefaultProductBound));
  return out;
}

std::string mult_matrix(const CheckContext& ctx, bool raw) {
  const std::pair<int, int> cols[] = {{1, 1}, {1, 5}, {4, 2}};
  std::string s = "[";
  for (LiftInputId id : kAllLiftInputs) {
    const QRSeries& f = input(ctx, id, raw ? kOracleQprec : kDefaultQprec);
    s += s.size() > 1 ? ",[" : "[";
    for (int c = 0; c < 3; ++c) {
      const BigInt m = raw ? humbert_multiplicity_raw(f, cols[c].first, cols[c].second)
                           : humbert_multiplicity(f, cols[c].first, cols[c].second);
      s += (c ? "," : "") + m.get_str();
    }
    s += "]";
  }
  return s + "]";
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> r;
  auto reg = [&](std::string id, Src src, bool seeded, std::function<CheckOutcome(const CheckContext&)> fn) {
    r.push_back({std::move(id), src, seeded, std::move(fn)});
  };

  // Eichler-Zagier generators: q^0 and q^1 slices.
  for (int k : {2, 3, 4}) {
    for (int qexp : {0, 1}) {
      const std::string name = "phi0" + std::to_string(k);
      reg("jacobi." + name + ".q" + std::to_string(qexp), Src::printed, false, [=](const CheckContext& c) {
        return CheckOutcome{slice_to_string(reference_slice(k, qexp)), slice_check(c, name, qexp)};
      });
    }
  }

  reg("lift_input.phi3.q0", Src::printed, false, [](const CheckContext& c) {
    return CheckOutcome{"r^-2 + 6 + r^2", slice_check(c, "phi3", 0)};
  });
  reg("lift_input.phi3pp.q0", Src::printed, false, [](const CheckContext& c) {
    return CheckOutcome{"r^-2 + 2*r^-1 + 6 + 2*r + r^2", slice_check(c, "phi3pp", 0)};
  });
  reg("lift_input.sum_identity", Src::structural, false, [](const CheckContext& c) {
    const QRSeries d = sub(add(input(c, LiftInputId::PHI3), input(c, LiftInputId::PHI3P)),
                           scale(2, input(c, LiftInputId::PHI3PP)));
    return CheckOutcome{"0 terms", std::to_string(d.term_count()) + " terms"};
  });

  const std::pair<LiftInputId, std::string> short_names[] = {
      {LiftInputId::PHI3, "phi3"}, {LiftInputId::PHI3P, "phi3p"}, {LiftInputId::PHI3PP, "phi3pp"}};
  const long coeff15[] = {4, 0, 2};
  for (int i = 0; i < 3; ++i) {
    const auto [id, name] = short_names[i];
    const long want = coeff15[i];
    reg("coeff." + name + ".n1.l5", Src::printed, false, [id, want](const CheckContext& c) {
      return CheckOutcome{str(want), str(fourier_coeff(input(c, id), 1, 5))};
    });
  }
  reg("coeff.phi3.n4.l10", Src::oracle, false, [](const CheckContext& c) {
    return CheckOutcome{"1", str(fourier_coeff(input(c, LiftInputId::PHI3), 4, 10))};
  });
  reg("coeff.phi3.negative_n", Src::structural, false, [](const CheckContext& c) {
    std::string acc = "0";
    for (long l = -8; l <= 8; ++l) {
      const BigInt v = fourier_coeff(input(c, LiftInputId::PHI3), -1, l);
      if (v != 0) acc = "f(-1," + std::to_string(l) + ") = " + v.get_str();
    }
    return CheckOutcome{"0", acc};
  });

  // Humbert multiplicities m_{1,1}, m_{1,5}, m_{4,2}.
  const long mults[3][3] = {{1, 5, 1}, {5, 1, 1}, {3, 3, 1}};
  const std::pair<int, int> mcols[] = {{1, 1}, {1, 5}, {4, 2}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto [id, name] = short_names[i];
      const auto [delta, b] = mcols[j];
      const long want = mults[i][j];
      reg("multiplicity." + name + ".d" + std::to_string(delta) + "b" + std::to_string(b), Src::printed, false,
          [=](const CheckContext& c) {
            return CheckOutcome{str(want), str(humbert_multiplicity(input(c, id), delta, b))};
          });
    }
  }
  reg("multiplicity.bruteforce", Src::oracle, false, [](const CheckContext& c) {
    return CheckOutcome{mult_matrix(c, false), mult_matrix(c, true)};
  });

  const LeadingExponents lead[] = {{Rational(1, 3), 1, 2}, {Rational(2, 3), 3, 4}, {Rational(1, 2), 2, 3}};
  const long orders[] = {2, 4, 3};
  for (int i = 0; i < 3; ++i) {
    const auto [id, name] = short_names[i];
    const LeadingExponents want = lead[i];
    reg("lift.exponents." + name, Src::printed, false, [=](const CheckContext& c) {
      return CheckOutcome{exps_str(want), exps_str(leading_exponents(input(c, id)))};
    });
    for (CuspClass cusp : {CuspClass::D1, CuspClass::D2}) {
      const long ord = orders[i];
      reg("cusp.order." + name + "." + std::string(to_string(cusp)), Src::printed, false,
          [=](const CheckContext& c) {
            return CheckOutcome{str(ord), str(cusp_vanishing_order(leading_exponents(input(c, id)), cusp))};
          });
    }
  }

  reg("product.leading", Src::structural, false, [](const CheckContext& c) {
    std::vector<std::string> lc;
    for (const auto& t : products(c)) lc.push_back(t.coeff({0, 0, 0}).get_str());
    return CheckOutcome{"(1,1,1)", list_str(lc)};
  });
  reg("product.identity", Src::printed, false, [](const CheckContext& c) {
    const auto p = products(c);
    const TripleSeries lhs = mul(p[0], p[1]), rhs = mul(p[2], p[2]);
    std::set<Offset> keys;
    for (const auto& [o, v] : lhs.terms()) keys.insert(o);
    for (const auto& [o, v] : rhs.terms()) keys.insert(o);
    long diff = lhs.origin() == rhs.origin() ? 0 : 1;
    for (const auto& o : keys) diff += lhs.coeff(o) != rhs.coeff(o);
    return CheckOutcome{"0 differing terms", std::to_string(diff) + " differing terms"};
  });
  reg("product.rank", Src::printed, false, [](const CheckContext& c) {
    return CheckOutcome{"3", std::to_string(lift_rank(products(c)))};
  });
  reg("genus.lower_bound", Src::printed, false, [](const CheckContext& c) {
    for (LiftInputId id : kAllLiftInputs) {
      if (!canonical_divisor(input(c, id)).is_effective()) {
        return CheckOutcome{"3", std::string(to_string(id)) + " has a non-effective divisor"};
      }
    }
    return CheckOutcome{"3", std::to_string(lift_rank(products(c)))};
  });

  using C = ComponentId;
  const std::pair<std::string, DivisorRecord> divisors[] = {
      {"omega", {{C::HZ2, 4}, {C::D1, 1}, {C::D2, 1}}},
      {"omega_prime", {{C::HZ0, 4}, {C::D1, 3}, {C::D2, 3}}},
      {"omega_dprime", {{C::HZ0, 2}, {C::HZ2, 2}, {C::D1, 2}, {C::D2, 2}}}};
  for (int i = 0; i < 3; ++i) {
    const auto id = short_names[i].first;
    const DivisorRecord want = divisors[i].second;
    reg("divisor." + divisors[i].first, Src::printed, false, [=](const CheckContext& c) {
      return CheckOutcome{want.str(), canonical_divisor(input(c, id)).str()};
    });
  }
  reg("divisor.effective", Src::structural, false, [](const CheckContext& c) {
    std::vector<std::string> eff;
    for (LiftInputId id : kAllLiftInputs) eff.push_back(str(canonical_divisor(input(c, id)).is_effective()));
    return CheckOutcome{"(true,true,true)", list_str(eff)};
  });
  reg("divisor.relation.sum", Src::printed, false, [](const CheckContext& c) {
    std::vector<DivisorRecord> recs;
    for (LiftInputId id : kAllLiftInputs) recs.push_back(canonical_divisor(input(c, id)));
    const DivisorRelation rel = divisor_relations(recs).back();
    return CheckOutcome{"r0 + r1 - 2*r2 = 0", rel.name + " = " + rel.difference.str()};
  });
  reg("divisor.relation.boundary", Src::printed, false, [](const CheckContext& c) {
    const DivisorRecord diff =
        canonical_divisor(input(c, LiftInputId::PHI3P)) - canonical_divisor(input(c, LiftInputId::PHI3));
    const DivisorRecord want{{C::HZ2, 2}, {C::HZ0, -2}};
    return CheckOutcome{"D1 + D2 = " + want.str(), "D1 + D2 = " + boundary_relation(diff).str()};
  });

  reg("polydiv.f2.deg2", Src::printed, false, [](const CheckContext&) { return polydiv(2, {1, 1, 1}); });
  reg("polydiv.f3.deg1", Src::printed, false, [](const CheckContext&) { return polydiv(3, {1, 1}); });
  reg("polydiv.f3.deg4", Src::printed, false, [](const CheckContext&) { return polydiv(3, {1, 1, 1, 1, 1}); });
  reg("charpoly.unipotent_samples", Src::printed, true,
      [](const CheckContext& c) { return class_samples(c, false); });
  reg("charpoly.zeta_samples", Src::oracle, true, [](const CheckContext& c) { return class_samples(c, true); });
  for (const char* name : {"ZETA", "ZETA01"}) {
    const std::string lower = name == std::string("ZETA") ? "zeta" : "zeta01";
    reg("torsion." + lower, Src::printed, false,
        [=](const CheckContext&) { return CheckOutcome{"2", str(torsion_order(builtin(name), 12))}; });
  }
  reg("fixed.zeta", Src::printed, true, [](const CheckContext& c) { return fixed_locus(c, "ZETA", "ZETA0", 1); });
  reg("fixed.zeta01", Src::printed, true,
      [](const CheckContext& c) { return fixed_locus(c, "ZETA01", "ZETA01", 4); });

  reg("group.j6_identity", Src::printed, false, [](const CheckContext&) {
    const SpMatrix I = builtin("I"), V = builtin("V6");
    return CheckOutcome{matrix_str(builtin("J6")), matrix_str(sp_mul(sp_mul(I, V), sp_mul(I, V)))};
  });
  reg("group.nu6_j6", Src::printed, false, [](const CheckContext&) {
    Mat4<BigInt> k{};
    k[0][2] = k[1][3] = -1;
    k[2][0] = k[3][1] = 1;
    return CheckOutcome{matrix_str(to_sp(k)), matrix_str(nu6(builtin("J6")))};
  });
  reg("factorize.roundtrip", Src::oracle, true, [](const CheckContext& c) {
    const GroupId tilde{GroupId::Kind::GAMMA_NAT_TILDE, 6};
    const int n = 200;
    int ok = 0;
    for (int i = 0; i < n; ++i) {
      const SpMatrix g = sample_group_element(tilde, 6, derive_seed(c.seed, std::to_string(i)));
      if (factorize_nat(g).product() == g) ++ok;
    }
    return CheckOutcome{"200/200 exact", std::to_string(ok) + "/200 exact"};
  });
  for (int d : {8, 12, 16}) {
    reg("eta.character.D" + std::to_string(d), Src::printed, true, [d](const CheckContext& c) {
      return CheckOutcome{"trivial on 500 samples",
                          character_triviality(d, 500, c.seed) ? "trivial on 500 samples" : "nontrivial"};
    });
  }

  reg("psl2.order", Src::structural, false,
      [](const CheckContext&) { return CheckOutcome{"72", std::to_string(enumerate_psl2(6).size())}; });
  reg("psl2.beta_index", Src::printed, false, [](const CheckContext&) {
    const auto idx = subgroup_index({psl_image(builtin("BETA")), psl_image(builtin("BETAP"))}, 6);
    return CheckOutcome{"1", std::to_string(idx)};
  });
  reg("psl2.stabilizer_index", Src::printed, false, [](const CheckContext&) {
    std::vector<PSL2Elt> imgs;
    for (const Mat2& g : {Mat2{{{1, 2}, {0, 1}}}, Mat2{{{1, 0}, {1, 1}}}, Mat2{{{-1, 0}, {0, -1}}}}) {
      imgs.push_back(psl_image(zeta1_centralizer_element(g)));
    }
    return CheckOutcome{"3", std::to_string(subgroup_index(imgs, 6))};
  });
  reg("branch.total", Src::printed, false,
      [](const CheckContext&) { return CheckOutcome{"7", std::to_string(branch_component_count().total)}; });
  reg("branch.class_counts", Src::printed, false, [](const CheckContext&) {
    std::vector<std::string> xs;
    for (const auto& cl : branch_component_count().classes) xs.push_back(std::to_string(cl.components));
    return CheckOutcome{"(1,3,1,1,1)", list_str(xs)};
  });
  reg("branch.discriminants", Src::printed, false, [](const CheckContext&) {
    std::vector<std::string> xs;
    for (const auto& cl : branch_component_count().classes) xs.push_back(cl.discriminant.get_str());
    return CheckOutcome{"(1,4,1,4,4)", list_str(xs)};
  });

  reg("cusp.invariant.v1", Src::printed, false, [](const CheckContext&) {
    const CuspInvariant ci = cusp_invariant({0, 0, 1, 0});
    return CheckOutcome{"r=1 D1", "r=" + std::to_string(ci.r) + " " + std::string(to_string(ci.cls))};
  });
  reg("cusp.invariant.v2", Src::printed, false, [](const CheckContext&) {
    const CuspInvariant ci = cusp_invariant({0, 0, 2, 1});
    return CheckOutcome{"r=2 D2", "r=" + std::to_string(ci.r) + " " + std::string(to_string(ci.cls))};
  });
  reg("unipotent.min_level", Src::printed, false, [](const CheckContext&) {
    const GroupId bil{GroupId::Kind::GAMMA_BIL, 6};
    for (long n = 1; n <= 72; ++n) {
      if (in_group(unipotent(n), bil)) return CheckOutcome{"36", std::to_string(n)};
    }
    return CheckOutcome{"36", "none up to 72"};
  });

  std::sort(r.begin(), r.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
  return r;
}

const CheckDef* find_check(std::string_view id) {
  const auto& reg = check_registry();
  auto it = std::lower_bound(reg.begin(), reg.end(), id, [](const CheckDef& d, std::string_view k) { return d.id < k; });
  return it != reg.end() && it->id == id ? &*it : nullptr;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "?";
}

std::string_view to_string(CheckSource s) {
  switch (s) {
    case CheckSource::printed: return "printed";
    case CheckSource::structural: return "structural";
    case CheckSource::oracle: return "oracle";
  }
  return "?";
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> reg = build_registry();
  return reg;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& d : check_registry()) ids.push_back(d.id);
  return ids;
}

CheckResult run_check(std::string_view id, std::uint64_t seed, FormCache& forms) {
  const CheckDef* def = find_check(id);
  if (!def) throw Error(ErrorKind::UnknownCheck, std::string(id));
  const std::uint64_t check_seed = derive_seed(seed, def->id);
  CheckResult res{def->id, CheckStatus::error, "", "", def->source, std::nullopt, 0};
  if (def->seeded) res.seed = check_seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome out = def->run(CheckContext{check_seed, forms});
    res.status = out.expected == out.actual ? CheckStatus::pass : CheckStatus::fail;
    res.expected = std::move(out.expected);
    res.actual = std::move(out.actual);
  } catch (const std::exception& e) {
    res.status = CheckStatus::error;
    res.actual = e.what();
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

Report run_checks(const std::vector<std::string>& ids, std::uint64_t seed, FormCache& forms) {
  std::vector<std::string> todo = ids.empty() ? check_ids() : ids;
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  for (const auto& id : todo) {
    if (!find_check(id)) throw Error(ErrorKind::UnknownCheck, id);
  }
  Report rep{seed, std::vector<CheckResult>(todo.size())};
  const long n = static_cast<long>(todo.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    rep.checks[static_cast<std::size_t>(i)] = run_check(todo[static_cast<std::size_t>(i)], seed, forms);
  }
  for (const auto& c : rep.checks) {
    switch (c.status) {
      case CheckStatus::pass: ++rep.pass; break;
      case CheckStatus::fail: ++rep.fail; break;
      case CheckStatus::error: ++rep.error; break;
    }
  }
  return rep;
}

Report run_all(std::uint64_t seed, FormCache& forms) { return run_checks({}, seed, forms); }

std::string report_to_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["tool_version"] = kToolVersion;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["source"] = to_string(c.source);
    if (c.seed) e["seed"] = *c.seed;
    if (with_timing) e["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"error", r.error}};
  return j.dump(2) + "\n";
}

const std::vector<std::pair<std::string, int>>& cache_manifest() {
  static const std::vector<std::pair<std::string, int>> m = {
      {"phi02", kDefaultQprec}, {"phi03", kDefaultQprec}, {"phi04", kDefaultQprec},
      {"phi3", kDefaultQprec},  {"phi3p", kDefaultQprec}, {"phi3pp", kDefaultQprec},
      {"phi3", kOracleQprec},   {"phi3p", kOracleQprec},  {"phi3pp", kOracleQprec}};
  return m;
}

std::vector<std::filesystem::path> build_cache(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> out;
  for (const auto& [name, qprec] : cache_manifest()) {
    const auto path = FormCache::file_for(dir, name, qprec);
    write_series_file(path, name, standard_form(name, qprec));
    out.push_back(path);
  }
  return out;
}

int clear_cache(const std::filesystem::path& dir) {
  int removed = 0;
  for (const auto& [name, qprec] : cache_manifest()) removed += std::filesystem::remove(FormCache::file_for(dir, name, qprec));
  return removed;
}

std::string display_slice(const Slice& s) {
  auto mono = [](const Rational& e, bool pm) -> std::string {
    if (e.is_zero()) return "";
    if (pm) return "r^{±" + e.str() + "}";
    return e == 1 ? "r" : "r^{" + e.str() + "}";
  };
  auto term = [](const Rational& c, const std::string& m) {
    if (m.empty()) return c.str();
    if (c == 1) return m;
    if (c == -1) return "-" + m;
    return c.str() + m;
  };
  std::vector<Rational> mags;
  for (const auto& [e, c] : s) mags.push_back(abs(e));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());

  std::string out;
  auto append = [&](const std::string& t) {
    if (out.empty()) out = t;
    else if (t[0] == '-') out += t;
    else out += "+" + t;
  };
  for (const Rational& m : mags) {
    auto pos = s.find(m), neg = s.find(-m);
    if (m.is_zero()) {
      append(term(pos->second, ""));
    } else if (pos != s.end() && neg != s.end() && pos->second == neg->second) {
      append(term(pos->second, mono(m, true)));
    } else {
      if (pos != s.end()) append(term(pos->second, mono(m, false)));
      if (neg != s.end()) append(term(neg->second, mono(-m, false)));
    }
  }
  return out.empty() ? "0" : out;
}

std::string display_series(const QRSeries& f) {
  std::string out;
  for (const auto& [qexp, slice] : f.levels()) {
    if (slice.empty()) continue;
    std::string prefix = qexp.is_zero() ? "" : (qexp == 1 ? "q" : "q^{" + qexp.str() + "}");
    if (!out.empty()) out += " + ";
    out += prefix + "(" + display_slice(slice) + ")";
  }
  if (out.empty()) out = "0";
  return out + " + O(q^{" + f.qprec().str() + "})";
}

}  // namespace bilevel
