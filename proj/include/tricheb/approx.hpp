#ifndef TRICHEB_APPROX_HPP_
#define TRICHEB_APPROX_HPP_

#include "tricheb/bernstein.hpp"
#include "tricheb/simplex_basis.hpp"
#include "tricheb/weighted_ip.hpp"

#include <vector>

namespace tricheb {

struct ProjectionCoefficient {
  BasisIndex index;
  double value = 0.0;
};

/// Weighted least-squares projection of f onto span{T_{m,r} : r <= m <= n}.
struct ProjectionResult {
  int degree = 0;
  double gamma = 1.0;
  std::vector<ProjectionCoefficient> coefficients;  // basis_indices(degree) order
  double residual_norm = 0.0;                        // ||f - projection||_W
  BBPolyF polynomial;                                // sum c_{m,r} T_{m,r} at degree n

  double coefficient(int m, int r) const;
};

/// c_{m,r} = <f, T_{m,r}>_W / <T_{m,r}, T_{m,r}>_W by quadrature with `points`
/// nodes per direction.  Norms come from the exact oracle when gamma is an
/// exact integer.  At gamma = 1 the basis is fully orthogonal and the
/// coefficients decouple; for other gamma the normal equations are solved.
/// Throws std::domain_error for gamma < 1, n < 0 or points < 1.
ProjectionResult project(const TriangleFunction& f, int n, const WeightParams& gamma, int points);

double evaluate_projection(const ProjectionResult& pr, const BaryPointF& p);

}  // namespace tricheb

#endif  // TRICHEB_APPROX_HPP_
