#pragma once

// Standard modular and Jacobi building blocks as truncated q,r-expansions.
// Conventions: q = e(tau), r = e(z); the weight-0 index-k forms are weak
// Jacobi forms with integral Fourier coefficients f(n,l) at q^n r^l.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilevel/qrseries.hpp"

namespace bilevel {

inline constexpr int kDefaultQprec = 8;

enum class LiftInputId { PHI3, PHI3P, PHI3PP };

std::string_view to_string(LiftInputId id);
std::string_view form_name(LiftInputId id);
LiftInputId parse_lift_input(std::string_view name);
inline constexpr LiftInputId kAllLiftInputs[] = {LiftInputId::PHI3, LiftInputId::PHI3P,
                                                 LiftInputId::PHI3PP};

/// q^(1/24) prod (1 - q^n), via the pentagonal number theorem.
QRSeries eta(const Rational& qprec);

/// Odd theta at z -> a z by the triple product; a in {1, 2, 3}.
QRSeries theta_odd(int a, const Rational& qprec);

/// theta_2, theta_3, theta_4 by direct summation; r = 1 when !two_variable.
QRSeries theta_even(int j, bool two_variable, const Rational& qprec);

QRSeries eisenstein4(const Rational& qprec);

/// vartheta(z)^2 / eta^6, q^0 slice r - 2 + r^-1.
QRSeries phi_m2_1(const Rational& qprec);

/// phi_{0,k} for k in {1, 2, 3, 4}. For k >= 2 the q^0 and q^1 slices are
/// compared against the reference expansions; a disagreement throws
/// ConstructionMismatch.
QRSeries weak_jacobi(int k, const Rational& qprec);

QRSeries lift_input(LiftInputId id, const Rational& qprec);

/// f(n, l) of an index-6 form, reduced to |l'| <= 6 via the dependence on
/// 24n - l^2 and l mod 12.
BigInt fourier_coeff(const QRSeries& form, const BigInt& n, const BigInt& l);

/// Reference q^0 / q^1 slices for phi_{0,2}, phi_{0,3}, phi_{0,4}.
Slice reference_slice(int k, int qexp);

/// Throws ConstructionMismatch if f is not integral in coefficients and
/// r-exponents.
void require_integral(const QRSeries& f, std::string_view what);

/// Names accepted by standard_form: eta, e4, vartheta1..3, theta2..4,
/// phim21, phi01..phi04, phi3, phi3p, phi3pp.
const std::vector<std::string>& standard_form_names();
QRSeries standard_form(std::string_view name, const Rational& qprec);

/// Write-once memo of standard forms, optionally backed by a directory of
/// series files. Files found on disk are trusted as-is.
class FormCache {
 public:
  explicit FormCache(std::optional<std::filesystem::path> dir = std::nullopt)
      : dir_(std::move(dir)) {}

  std::shared_ptr<const QRSeries> get(std::string_view name, const Rational& qprec);
  std::shared_ptr<const QRSeries> get(LiftInputId id, const Rational& qprec = kDefaultQprec) {
    return get(form_name(id), qprec);
  }

  const std::optional<std::filesystem::path>& dir() const { return dir_; }
  static std::filesystem::path file_for(const std::filesystem::path& dir, std::string_view name,
                                        const Rational& qprec);

 private:
  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<std::pair<std::string, std::string>, std::shared_ptr<const QRSeries>> memo_;
};

/// Process-wide in-memory cache without a backing directory.
FormCache& global_form_cache();

}  // namespace bilevel
