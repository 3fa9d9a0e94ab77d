#include "tricheb/approx.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tricheb {

double ProjectionResult::coefficient(int m, int r) const {
  for (const ProjectionCoefficient& c : coefficients) {
    if (c.index.m == m && c.index.r == r) return c.value;
  }
  throw std::out_of_range("no coefficient for the requested basis member");
}

ProjectionResult project(const TriangleFunction& f, int n, const WeightParams& gamma, int points) {
  if (n < 0) throw std::domain_error("negative projection degree");
  if (gamma.value() < 1.0) {
    throw std::domain_error("projection needs gamma >= 1, got " + gamma.to_string());
  }
  const TriangleRule rule(points, gamma.value());
  const std::vector<SimplexOrthoPoly> basis = simplex_basis(n);
  const std::size_t size = basis.size();

  std::vector<BBPolyF> fbasis;
  for (const SimplexOrthoPoly& p : basis) fbasis.push_back(to_float(p.bb).elevate_to(n));

  const auto& nodes = rule.nodes();
  std::vector<double> fvals;
  fvals.reserve(nodes.size());
  for (const auto& node : nodes) fvals.push_back(f(node.first));

  Eigen::VectorXd rhs(static_cast<Eigen::Index>(size));
  std::vector<std::vector<double>> table(size);
  for (std::size_t a = 0; a < size; ++a) {
    double sum = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      table[a].push_back(fbasis[a](nodes[q].first));
      sum += nodes[q].second * fvals[q] * table[a][q];
    }
    rhs(static_cast<Eigen::Index>(a)) = sum;
  }

  const auto exact_gamma = gamma.exact_integer();
  auto gram_entry = [&](std::size_t a, std::size_t b) {
    if (exact_gamma) return weighted_inner_exact(basis[a].bb, basis[b].bb, *exact_gamma).to_double();
    double sum = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) sum += nodes[q].second * table[a][q] * table[b][q];
    return sum;
  };

  Eigen::VectorXd coeffs(static_cast<Eigen::Index>(size));
  if (gamma.value() == 1.0) {
    for (std::size_t a = 0; a < size; ++a) {
      coeffs(static_cast<Eigen::Index>(a)) = rhs(static_cast<Eigen::Index>(a)) / gram_entry(a, a);
    }
  } else {
    Eigen::MatrixXd gram(size, size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a; b < size; ++b) {
        gram(a, b) = gram(b, a) = gram_entry(a, b);
      }
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) throw std::runtime_error("Gram matrix is not positive definite");
    coeffs = llt.solve(rhs);
  }

  ProjectionResult out;
  out.degree = n;
  out.gamma = gamma.value();
  out.polynomial = BBPolyF::zero(n);
  for (std::size_t a = 0; a < size; ++a) {
    const double c = coeffs(static_cast<Eigen::Index>(a));
    out.coefficients.push_back({{basis[a].n, basis[a].r}, c});
    out.polynomial += fbasis[a] * c;
  }

  double residual = 0.0;
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    const double d = fvals[q] - out.polynomial(nodes[q].first);
    residual += nodes[q].second * d * d;
  }
  out.residual_norm = std::sqrt(std::max(residual, 0.0));
  return out;
}

double evaluate_projection(const ProjectionResult& pr, const BaryPointF& p) { return pr.polynomial(p); }

}  // namespace tricheb
