#ifndef TRICHEB_WEIGHTED_IP_HPP_
#define TRICHEB_WEIGHTED_IP_HPP_

#include "tricheb/bernstein.hpp"
#include "tricheb/exactnum.hpp"
#include "tricheb/simplex_basis.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tricheb {

// Inner products under W(u,v,w) = u^(-1/2) v^(-1/2) (1-w)^gamma on the
// reference triangle, normalised by 1/Delta with Delta = 1.

/// Exponent gamma of the (1-w) factor.  Held exactly when it came from an
/// integer or p/q literal; otherwise only the double is known.
class WeightParams {
 public:
  /// Throws std::domain_error unless gamma > -1.
  static WeightParams exact(const Rational& gamma);
  static WeightParams real(double gamma);
  /// Integer or "p/q" syntax gives an exact value, anything else is a decimal.
  static WeightParams parse(const std::string& text);

  double value() const { return value_; }
  const std::optional<Rational>& exact_value() const { return exact_; }
  /// Set when gamma is known exactly and is a non-negative integer.
  std::optional<int> exact_integer() const;

  /// Regime in which the whole system is claimed orthogonal.
  bool full_orthogonality_claimed() const { return value_ >= 1.0; }
  std::string to_string() const;

 private:
  WeightParams(std::optional<Rational> exact, double value)
      : exact_(std::move(exact)), value_(value) {}
  std::optional<Rational> exact_;
  double value_;
};

/// Exact weighted inner products of the B_zeta^N basis: entry tri_offset(zeta)
/// holds <B_zeta^N, 1>_W.  Cached per (N, gamma); safe to call concurrently.
const std::vector<PiRational>& weighted_bernstein_moments(int degree, int gamma);

/// Exact <p, q>_W for integer gamma >= 0.  The result has zero rational part.
/// Throws std::domain_error for negative gamma.
PiRational weighted_inner_exact(const BBPoly& p, const BBPoly& q, int gamma);
/// As above; throws std::domain_error when gamma is not an exact non-negative
/// integer (use the quadrature path instead).
PiRational weighted_inner_exact(const BBPoly& p, const BBPoly& q, const WeightParams& gamma);

/// <p, B_eta^d>_W for every |eta| = d, in tri_offset order.  Any q of degree d
/// then has <p, q>_W = sum_eta q_eta * moments[eta].
std::vector<PiRational> weighted_moments(const BBPoly& p, int d, int gamma);

/// Nodes and weights of a one-dimensional rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// N-point rule for integral_0^1 f(t) t^(-1/2) (1-t)^(-1/2) dt; exact up to
/// degree 2N - 1.
QuadratureRule chebyshev_gauss_rule(int points);

/// Golub-Welsch rule for integral_-1^1 f(x) (1-x)^alpha (1+x)^beta dx.
QuadratureRule gauss_jacobi_rule(int points, double alpha, double beta);

/// N-point rule for integral_0^1 f(w) (1-w)^gamma dw.
QuadratureRule jacobi_w_rule(int points, double gamma);

using TriangleFunction = std::function<double(const BaryPointF&)>;

/// Tensor rule for (1/Delta) * integral over T of f W dA, obtained from the
/// substitution u = t(1-w), v = (1-t)(1-w).  Exact for integrands that are
/// polynomials of degree <= 2N - 1 in t and in w after the substitution.
class TriangleRule {
 public:
  /// Throws std::domain_error for points < 1 or gamma <= -1.
  TriangleRule(int points, double gamma);

  double integrate(const TriangleFunction& f) const;
  const std::vector<std::pair<BaryPointF, double>>& nodes() const { return nodes_; }

 private:
  std::vector<std::pair<BaryPointF, double>> nodes_;
};

/// <p, q>_W by tensor quadrature with `points` nodes per direction.
double weighted_inner_quadrature(const TriangleFunction& p, const TriangleFunction& q,
                                 double gamma, int points);

TriangleFunction as_function(const BBPolyF& p);

enum class GramMode { kExact, kQuadrature };

/// Pairwise weighted inner products of {T_{m,r} : r <= m <= n}.
struct GramMatrix {
  int max_degree = 0;
  WeightParams gamma = WeightParams::real(1.0);
  GramMode mode = GramMode::kExact;
  std::vector<BasisIndex> members;
  std::vector<PiRational> exact;  // row-major; exact mode only
  std::vector<double> values;     // row-major; both modes

  std::size_t size() const { return members.size(); }
  double value(std::size_t a, std::size_t b) const { return values[a * size() + b]; }
  const PiRational& exact_entry(std::size_t a, std::size_t b) const { return exact[a * size() + b]; }

  /// Off-diagonal pairs (a < b) that are not zero: identically zero in exact
  /// mode, |g_ab| <= 1e-10 sqrt(g_aa g_bb) in quadrature mode.
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_off_diagonal() const;
  bool is_diagonal() const { return nonzero_off_diagonal().empty(); }
  bool is_symmetric() const;
};

/// Exact mode requires an exact non-negative integer gamma; quadrature mode
/// uses `points` nodes per direction.
GramMatrix gram_matrix(int n, const WeightParams& gamma, GramMode mode, int points = 0);

/// True iff <T_{n,r}, g_{s,m}>_W vanishes exactly for every s <= m <= n - 1.
bool verify_lower_degree_orthogonality(int n, int r, int gamma);

/// integral_0^1 Q_{n,r}(w) w^i (1-w)^(2r+1) dw, exact.
Rational q_moment(int n, int r, int i);

/// True iff q_moment(n, r, i) = 0 for i = 0 .. n-r-1.
bool verify_q_moment_orthogonality(int n, int r);

}  // namespace tricheb

#endif  // TRICHEB_WEIGHTED_IP_HPP_
