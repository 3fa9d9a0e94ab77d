#ifndef TRICHEB_VERIFY_HPP_
#define TRICHEB_VERIFY_HPP_

#include <string>
#include <vector>

namespace tricheb {

enum class ClaimStatus { kPass, kFail, kOutsideHypothesis };

std::string to_string(ClaimStatus s);

/// Tally for one family of exact checks.  An instance that fails while its
/// hypothesis does not hold counts as outside_hypothesis, not as a failure.
struct ClaimReport {
  std::string name;
  std::string hypothesis;
  int instances = 0;
  int passed = 0;
  int failed = 0;
  int outside_hypothesis = 0;

  void record(bool holds, bool within_hypothesis);
  ClaimStatus status() const;
};

struct VerificationReport {
  int max_degree = 0;
  int gamma = 0;
  std::vector<ClaimReport> claims;

  bool passed() const;
};

/// Largest degree accepted by the exact suite.
inline constexpr int kMaxExactDegree = 20;

/// Runs every exact check for all degrees <= n at integer weight exponent gamma.
/// Throws std::domain_error for n outside [0, kMaxExactDegree] or gamma < 0.
VerificationReport run_verification(int n, int gamma);

}  // namespace tricheb

#endif  // TRICHEB_VERIFY_HPP_
