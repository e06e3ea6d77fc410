// Acceptance run: each criterion is a group of registered checks with a
// wall-clock budget. Criterion 12 drives the CLI twice from a cold start.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bilevel/verifier.hpp"

using namespace bilevel;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;
  double budget_s;
};

std::vector<std::string> matching(const std::vector<std::string>& prefixes) {
  std::vector<std::string> out;
  for (const auto& id : check_ids()) {
    for (const auto& p : prefixes) {
      if (id.rfind(p, 0) == 0) {
        out.push_back(id);
        break;
      }
    }
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int number, const std::string& title, bool ok, double secs, const std::string& detail) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  std::cout << (ok ? "PASS" : "FAIL") << " AC" << number << " " << title << " (" << buf << " s)";
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << std::endl;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool run_checks_criterion(const Criterion& c) {
  const auto ids = matching(c.prefixes);
  FormCache cold;
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = !ids.empty();
  if (ids.empty()) detail = "no checks registered";
  try {
    const Report r = run_checks(ids, 0, cold);
    for (const auto& res : r.checks) {
      if (res.status != CheckStatus::pass) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + res.id + " expected " + res.expected + ", got " + res.actual;
      }
    }
    if (ok) detail = std::to_string(r.pass) + " checks";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  const double secs = seconds_since(t0);
  if (secs > c.budget_s) {
    ok = false;
    detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
  }
  report(c.number, c.title, ok, secs, detail);
  return ok;
}

bool determinism_criterion(const std::string& cli) {
  unsetenv(std::string(kCacheDirEnv).c_str());
  const auto dir = std::filesystem::temp_directory_path() / "bilevel6_acceptance";
  std::filesystem::create_directories(dir);
  const auto a = dir / "run1.json", b = dir / "run2.json";
  std::filesystem::remove(a);
  std::filesystem::remove(b);

  const auto t0 = std::chrono::steady_clock::now();
  int codes[2];
  const std::filesystem::path outs[2] = {a, b};
  for (int i = 0; i < 2; ++i) {
    const std::string cmd = "\"" + cli + "\" verify --all --seed 0 --json \"" + outs[i].string() + "\" > /dev/null";
    codes[i] = std::system(cmd.c_str());
  }
  const double secs = seconds_since(t0);
  const std::string ra = slurp(a), rb = slurp(b);
  bool ok = codes[0] == 0 && codes[1] == 0 && !ra.empty() && ra == rb && secs / 2 < 300;
  std::string detail;
  if (codes[0] != 0 || codes[1] != 0) detail = "verify exit status " + std::to_string(codes[0]) + "/" + std::to_string(codes[1]);
  else if (ra.empty()) detail = "empty report";
  else if (ra != rb) detail = "reports differ";
  else detail = "identical reports, " + std::to_string(ra.size()) + " bytes";
  if (secs / 2 >= 300) detail += "; a full run took over 5 minutes";
  report(12, "determinism of cold verify --all runs", ok, secs, detail);
  std::filesystem::remove_all(dir);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Jacobi generator slices", {"jacobi."}, 1},
      {2, "lift-input slices and sum identity", {"lift_input."}, 1},
      {3, "Fourier coefficient table", {"coeff."}, 1},
      {4, "Humbert multiplicity matrix with brute-force oracle", {"multiplicity."}, 30},
      {5, "leading exponents and cusp orders", {"lift.exponents.", "cusp.order."}, 1},
      {6, "Borcherds product identity and rank", {"product.", "genus."}, 60},
      {7, "canonical divisors and relations", {"divisor."}, 1},
      {8, "characteristic polynomial suite", {"polydiv.", "charpoly.", "torsion.", "fixed."}, 60},
      {9, "generation and eta character suite", {"group.", "factorize.", "eta."}, 120},
      {10, "PSL(2,Z/6) indices and branch components", {"psl2.", "branch."}, 10},
      {11, "cusp invariants and unipotent level", {"cusp.invariant.", "unipotent."}, 1},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !run_checks_criterion(c);
  failed += !determinism_criterion(BILEVEL6_CLI_PATH);
  std::cout << (12 - failed) << "/12 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
