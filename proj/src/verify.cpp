#include "tricheb/verify.hpp"

#include "tricheb/bernstein.hpp"
#include "tricheb/chebyshev.hpp"
#include "tricheb/combinatorics.hpp"
#include "tricheb/simplex_basis.hpp"
#include "tricheb/weighted_ip.hpp"

#include <stdexcept>

namespace tricheb {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kOutsideHypothesis: return "outside_hypothesis";
  }
  return "unknown";
}

void ClaimReport::record(bool holds, bool within_hypothesis) {
  ++instances;
  if (holds) {
    ++passed;
  } else if (within_hypothesis) {
    ++failed;
  } else {
    ++outside_hypothesis;
  }
}

ClaimStatus ClaimReport::status() const {
  if (failed > 0) return ClaimStatus::kFail;
  if (outside_hypothesis > 0) return ClaimStatus::kOutsideHypothesis;
  return ClaimStatus::kPass;
}

bool VerificationReport::passed() const {
  for (const ClaimReport& c : claims) {
    if (c.status() == ClaimStatus::kFail) return false;
  }
  return true;
}

namespace {

// Rational sample points strictly inside, on edges and at vertices.
std::vector<BaryPointQ> sample_points() {
  std::vector<BaryPointQ> pts;
  const int den = 7;
  for (int a = 0; a <= den; a += 2) {
    for (int b = 0; a + b <= den; b += 3) pts.push_back(BaryPointQ::from_uv(Rational(a, den), Rational(b, den)));
  }
  pts.push_back(BaryPointQ::make(0, 0, 1));
  return pts;
}

}  // namespace

VerificationReport run_verification(int n, int gamma) {
  if (n < 0 || n > kMaxExactDegree) {
    throw std::domain_error("exact verification supports 0 <= n <= " + std::to_string(kMaxExactDegree));
  }
  if (gamma < 0) throw std::domain_error("exact verification needs integer gamma >= 0");

  VerificationReport report{n, gamma, {}};

  ClaimReport identity{"half_binomial_identity", "0 <= k <= n"};
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= m; ++k) identity.record(check_half_binomial_identity(m, k), true);
  }

  ClaimReport cheb{"chebyshev_bernstein_reproduction", "0 <= r <= n"};
  const std::vector<Rational> xs = {0, Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(5, 6), 1};
  for (int m = 0; m <= n; ++m) {
    for (int r = 0; r <= m; ++r) {
      const ChebBernCoeffs c = cheb_bernstein_coeffs(m, r);
      bool ok = true;
      for (const Rational& x : xs) ok = ok && eval_bernstein_uni<Rational>(c.values, x) == cheb_eval(r, x);
      cheb.record(ok, true);
    }
  }

  ClaimReport moments{"q_moment_orthogonality", "0 <= r <= n"};
  ClaimReport recursion{"recursion_matches_closed_form",
                        "closed form is orthogonal to lower degrees in the unweighted inner product"};
  ClaimReport factored{"bernstein_form_matches_factored_form", "0 <= r <= n"};
  ClaimReport lower{"orthogonal_to_lower_degree", "gamma >= 1"};
  ClaimReport same{"same_degree_orthogonality", "gamma > -1"};

  const std::vector<BaryPointQ> pts = sample_points();
  for (int m = 0; m <= n; ++m) {
    std::vector<std::vector<PiRational>> row_moments;
    std::vector<BBPoly> row;
    for (int r = 0; r <= m; ++r) {
      moments.record(verify_q_moment_orthogonality(m, r), true);

      const SimplexOrthoPoly closed = coeffs_closed_form(m, r);
      recursion.record(coeffs_recursive(m, r).bb == closed.bb, is_orthogonal_to_lower_degree(closed.bb));

      bool same_values = true;
      for (const BaryPointQ& p : pts) same_values = same_values && closed.bb(p) == eval_factored(m, r, p);
      factored.record(same_values, true);

      if (m >= 1) lower.record(verify_lower_degree_orthogonality(m, r, gamma), gamma >= 1);

      row_moments.push_back(weighted_moments(closed.bb, m, gamma));
      row.push_back(closed.bb);
    }
    for (int r = 0; r <= m; ++r) {
      for (int s = r + 1; s <= m; ++s) {
        PiRational value;
        const auto c = row[s].coeffs();
        for (std::size_t a = 0; a < c.size(); ++a) {
          if (!c[a].is_zero()) value += row_moments[r][a] * c[a];
        }
        same.record(value.is_zero(), true);
      }
    }
  }

  report.claims = {identity, cheb, moments, recursion, factored, lower, same};
  return report;
}

}  // namespace tricheb
