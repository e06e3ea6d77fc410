#pragma once

// Registry of verification checks and the JSON report built from them.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilevel/jacobi.hpp"

namespace bilevel {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kReportVersion = 1;
inline constexpr std::string_view kCacheDirEnv = "BILEVEL6_CACHE_DIR";

enum class CheckStatus { pass, fail, error };
std::string_view to_string(CheckStatus s);

/// Where the expected value of a check comes from: a value printed in the
/// reference literature, an identity that holds by construction, or an
/// independent computation.
enum class CheckSource { printed, structural, oracle };
std::string_view to_string(CheckSource s);

struct CheckContext {
  /// Per-check seed, derived from the global seed and the check id.
  std::uint64_t seed;
  FormCache& forms;
};

struct CheckOutcome {
  std::string expected;
  std::string actual;
};

struct CheckDef {
  std::string id;
  CheckSource source;
  bool seeded;
  std::function<CheckOutcome(const CheckContext&)> run;
};

struct CheckResult {
  std::string id;
  CheckStatus status;
  std::string expected;
  std::string actual;
  CheckSource source;
  std::optional<std::uint64_t> seed;
  double elapsed_ms;
};

struct Report {
  std::uint64_t seed;
  std::vector<CheckResult> checks;
  int pass = 0, fail = 0, error = 0;

  bool all_pass() const { return fail == 0 && error == 0; }
};

/// Sorted by id.
const std::vector<CheckDef>& check_registry();
std::vector<std::string> check_ids();

/// Throws UnknownCheck for an unregistered id. Mathematical failures and
/// library errors inside the check become fail / error results.
CheckResult run_check(std::string_view id, std::uint64_t seed, FormCache& forms);

/// Runs the given ids (all when empty) concurrently; results sorted by id.
Report run_checks(const std::vector<std::string>& ids, std::uint64_t seed, FormCache& forms);
Report run_all(std::uint64_t seed, FormCache& forms);

std::string report_to_json(const Report& r, bool with_timing);

/// Series files that `cache build` writes and the checks read.
const std::vector<std::pair<std::string, int>>& cache_manifest();
/// Returns the written paths.
std::vector<std::filesystem::path> build_cache(const std::filesystem::path& dir);
/// Removes the manifest files; returns how many existed.
int clear_cache(const std::filesystem::path& dir);

/// "(r^{±1}+4) + q(...)" rendering: pairs c*r^l + c*r^-l collapse to r^{±l}.
std::string display_slice(const Slice& s);
std::string display_series(const QRSeries& f);

}  // namespace bilevel
