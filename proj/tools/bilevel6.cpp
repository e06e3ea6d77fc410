// bilevel6: command-line front end for the verification checks and the
// series, divisor and group computations behind them.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bilevel/divisor.hpp"
#include "bilevel/modgroups.hpp"
#include "bilevel/poly.hpp"
#include "bilevel/series_io.hpp"
#include "bilevel/verifier.hpp"

using namespace bilevel;

namespace {

constexpr int kExitUsage = 2;

std::optional<std::filesystem::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv(std::string(kCacheDirEnv).c_str()); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

bool is_usage(ErrorKind k) {
  return k == ErrorKind::UnknownCheck || k == ErrorKind::UnknownForm || k == ErrorKind::InvalidQuery ||
         k == ErrorKind::ParseError;
}

QRSeries named_form(const std::string& name, const Rational& qprec) {
  const auto& names = standard_form_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorKind::UnknownForm, "'" + name + "'");
  }
  return standard_form(name, qprec);
}

void print_triple(const TripleSeries& t) {
  for (const auto& [o, c] : t.terms()) {
    const auto e = t.exponents(o);
    std::cout << c.get_str() << " * q^" << e[0].str() << " r^" << e[1].str() << " s^" << e[2].str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the bilevel-6 Siegel threefold computations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  bool all = false, timing = false, list = false;
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  std::string json_path, verify_cache;
  verify->add_flag("--all", all, "Run every registered check (default)");
  verify->add_option("ids", ids, "Check ids");
  verify->add_option("--seed", seed, "Global seed");
  verify->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  verify->add_flag("--timing", timing, "Include per-check timings in the JSON report");
  verify->add_flag("--list", list, "List check ids and exit");
  verify->add_option("--cache-dir", verify_cache, "Series cache directory");

  auto* expand = app.add_subcommand("expand", "Print a q,r-expansion");
  std::string form;
  int qprec = kDefaultQprec;
  bool as_json = false;
  expand->add_option("form", form)->required();
  expand->add_option("--qprec", qprec)->check(CLI::PositiveNumber);
  expand->add_flag("--json", as_json, "Emit the series cache format");

  auto* coeff = app.add_subcommand("coeff", "Fourier coefficient f(n, l)");
  long cn = 0, cl = 0;
  coeff->add_option("form", form)->required();
  coeff->add_option("n", cn)->required();
  coeff->add_option("l", cl)->required();
  coeff->add_option("--qprec", qprec)->check(CLI::PositiveNumber);

  auto* humbert = app.add_subcommand("humbert", "Humbert multiplicity m_{Delta,b}");
  int delta = 1;
  long hb = 1;
  humbert->add_option("form", form)->required();
  humbert->add_option("--delta", delta)->required();
  humbert->add_option("--b", hb)->required();

  auto* lift = app.add_subcommand("lift", "Truncated product expansion");
  long bound = kDefaultProductBound;
  lift->add_option("form", form)->required();
  lift->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
  lift->add_flag("--json", as_json);

  auto* cusp = app.add_subcommand("cusp-order", "Vanishing order along a boundary divisor");
  std::string cusp_name;
  cusp->add_option("form", form)->required();
  cusp->add_option("cusp", cusp_name)->required()->check(CLI::IsMember({"D1", "D2"}));

  auto* divisor = app.add_subcommand("divisor", "Divisor of a canonical form");
  std::string which;
  divisor->add_option("form", which)->required()->check(CLI::IsMember({"omega", "omega-prime", "omega-dprime"}));

  auto* group = app.add_subcommand("group", "Matrix group queries");
  std::string action, matrix_file, group_name;
  group->add_option("action", action)->required()->check(CLI::IsMember({"in", "charpoly", "order", "factorize"}));
  group->add_option("--matrix", matrix_file, "Matrix JSON file")->required();
  group->add_option("--group", group_name, "Group name, e.g. GAMMA_NAT(6)");

  auto* branch = app.add_subcommand("branch", "Branch components per zeta class");

  auto* cache = app.add_subcommand("cache", "Build or clear the series cache");
  std::string cache_action, cache_flag;
  cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"build", "clear"}));
  cache->add_option("--dir", cache_flag, "Cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      if (list) {
        for (const auto& id : check_ids()) std::cout << id << "\n";
        return 0;
      }
      if (all && !ids.empty()) {
        std::cerr << "verify: --all and check ids are exclusive\n";
        return kExitUsage;
      }
      FormCache forms(cache_dir(verify_cache));
      const Report rep = run_checks(ids, seed, forms);
      const std::string js = report_to_json(rep, timing);
      if (json_path == "-") {
        std::cout << js;
      } else {
        for (const auto& c : rep.checks) {
          std::cout << (c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "ERROR ")
                    << c.id;
          if (c.status != CheckStatus::pass) std::cout << ": expected " << c.expected << ", got " << c.actual;
          std::cout << "\n";
        }
        std::cout << rep.pass << " pass, " << rep.fail << " fail, " << rep.error << " error\n";
        if (!json_path.empty()) {
          std::ofstream out(json_path, std::ios::binary);
          if (!out) throw std::runtime_error("cannot write " + json_path);
          out << js;
        }
      }
      return rep.all_pass() ? 0 : 1;
    }
    if (*expand) {
      const QRSeries f = named_form(form, qprec);
      std::cout << (as_json ? series_to_json(form, f) : display_series(f) + "\n");
      return 0;
    }
    if (*coeff) {
      const QRSeries f = named_form(form, qprec);
      if (f.index() == 6) {
        std::cout << fourier_coeff(f, cn, cl).get_str() << "\n";
      } else {
        std::cout << f.coeff(cn, cl).str() << "\n";
      }
      return 0;
    }
    if (*humbert) {
      std::cout << humbert_multiplicity(parse_lift_input(form), delta, hb).get_str() << "\n";
      return 0;
    }
    if (*lift) {
      const LiftInputId id = parse_lift_input(form);
      const TripleSeries t = exp_lift_truncated(id, bound);
      if (as_json) {
        std::cout << triple_to_json(form_name(id), t);
      } else {
        print_triple(t);
      }
      return 0;
    }
    if (*cusp) {
      std::cout << cusp_vanishing_order(parse_lift_input(form), parse_cusp(cusp_name)).get_str() << "\n";
      return 0;
    }
    if (*divisor) {
      const LiftInputId id = which == "omega" ? LiftInputId::PHI3
                             : which == "omega-prime" ? LiftInputId::PHI3P
                                                      : LiftInputId::PHI3PP;
      std::cout << canonical_divisor(id).str() << "\n";
      return 0;
    }
    if (*group) {
      const SpMatrix m = read_matrix_file(matrix_file);
      if (action == "in") {
        if (group_name.empty()) {
          std::cerr << "group in: --group is required\n";
          return kExitUsage;
        }
        std::cout << (in_group(m, GroupId::parse(group_name)) ? "true" : "false") << "\n";
      } else if (action == "charpoly") {
        const QuadPoly p = charpoly(m);
        std::cout << to_string(to_int_poly(p)) << "\n";
        std::cout << "mod 6: " << to_string(charpoly_mod6_class(m)) << "\n";
      } else if (action == "order") {
        try {
          std::cout << torsion_order(m, 12) << "\n";
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotFound) throw;
          std::cout << "no finite order up to 12\n";
        }
      } else {
        std::cout << factorize_nat(m).str() << "\n";
      }
      return 0;
    }
    if (*branch) {
      const BranchCount bc = branch_component_count();
      for (const auto& c : bc.classes) {
        std::cout << c.matrix << ": " << c.components << " component(s), discriminant " << c.discriminant.get_str()
                  << "\n";
      }
      std::cout << "total: " << bc.total << "\n";
      return 0;
    }
    if (*cache) {
      const auto dir = cache_dir(cache_flag);
      if (!dir) {
        std::cerr << "cache: pass --dir or set " << kCacheDirEnv << "\n";
        return kExitUsage;
      }
      if (cache_action == "build") {
        for (const auto& p : build_cache(*dir)) std::cout << p.string() << "\n";
      } else {
        std::cout << "removed " << clear_cache(*dir) << " file(s)\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage(e.kind()) ? kExitUsage : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
