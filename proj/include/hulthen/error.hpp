#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hulthen {

enum class errc {
  invalid_parameter,
  pole_in_denominator,
  invalid_exponent,
  negative_discriminant,
  wrong_branch,
  pole_at,
  wrong_family,
  out_of_domain,
  symmetry_violation,
  condition_violated,
  invalid_level,
  singular_potential,
  no_convergence,
  unknown_suite,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::pole_in_denominator: return "PoleInDenominator";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::negative_discriminant: return "NegativeDiscriminant";
    case errc::wrong_branch: return "WrongBranch";
    case errc::pole_at: return "PoleAt";
    case errc::wrong_family: return "WrongFamily";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::symmetry_violation: return "SymmetryViolation";
    case errc::condition_violated: return "ConditionViolated";
    case errc::invalid_level: return "InvalidLevel";
    case errc::singular_potential: return "SingularPotential";
    case errc::no_convergence: return "NoConvergence";
    case errc::unknown_suite: return "UnknownSuite";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message holds the specifics (which radicand, where the pole sits, ...).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hulthen
