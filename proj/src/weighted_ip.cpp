#include "tricheb/weighted_ip.hpp"

#include "tricheb/combinatorics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <regex>
#include <stdexcept>
#include <thread>

namespace tricheb {

namespace {

// Runs body(i) for i in [0, count) on a few worker threads.  Each index is
// visited exactly once; callers write results to disjoint slots.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

WeightParams WeightParams::exact(const Rational& gamma) {
  if (gamma <= Rational(-1)) throw std::domain_error("weight exponent must exceed -1");
  return WeightParams(gamma, gamma.to_double());
}

WeightParams WeightParams::real(double gamma) {
  if (!(gamma > -1.0) || !std::isfinite(gamma)) {
    throw std::domain_error("weight exponent must be finite and exceed -1");
  }
  return WeightParams(std::nullopt, gamma);
}

WeightParams WeightParams::parse(const std::string& text) {
  static const std::regex exact_syntax(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (std::regex_match(text, exact_syntax)) return exact(Rational::parse(text));
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse weight exponent '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse weight exponent '" + text + "'");
  return real(value);
}

std::optional<int> WeightParams::exact_integer() const {
  if (!exact_ || !exact_->is_integer() || exact_->sign() < 0) return std::nullopt;
  return static_cast<int>(exact_->numerator().get_si());
}

std::string WeightParams::to_string() const {
  if (exact_) return exact_->to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

const std::vector<PiRational>& weighted_bernstein_moments(int degree, int gamma) {
  if (gamma < 0) throw std::domain_error("exact weighted integrals need integer gamma >= 0");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<PiRational>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({degree, gamma}); it != cache.end()) return it->second;
  }
  const Rational half(-1, 2);
  std::vector<PiRational> moments;
  moments.reserve(tri_count(degree));
  for (const TriIndex& z : tri_indices(degree)) {
    moments.push_back(Rational(multinomial(z.i, z.j, z.k)) *
                      integrate_monomial(z.i, z.j, z.k, half, half, Rational(gamma)));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace({degree, gamma}, std::move(moments)).first->second;
}

PiRational weighted_inner_exact(const BBPoly& p, const BBPoly& q, int gamma) {
  const BBPoly pq = multiply(p, q);
  const std::vector<PiRational>& moments = weighted_bernstein_moments(pq.degree(), gamma);
  PiRational sum;
  const auto coeffs = pq.coeffs();
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    if (!coeffs[a].is_zero()) sum += moments[a] * coeffs[a];
  }
  return sum;
}

PiRational weighted_inner_exact(const BBPoly& p, const BBPoly& q, const WeightParams& gamma) {
  const auto g = gamma.exact_integer();
  if (!g) {
    throw std::domain_error("exact inner product needs a non-negative integer gamma, got " +
                            gamma.to_string() + "; use the quadrature path");
  }
  return weighted_inner_exact(p, q, *g);
}

std::vector<PiRational> weighted_moments(const BBPoly& p, int d, int gamma) {
  if (d < 0) throw std::domain_error("negative moment degree");
  const int n = p.degree();
  const std::vector<PiRational>& base = weighted_bernstein_moments(n + d, gamma);
  const std::vector<TriIndex> rows = tri_indices(n);
  const std::vector<TriIndex> cols = tri_indices(d);
  std::vector<BigInt> col_weight;
  for (const TriIndex& e : cols) col_weight.push_back(multinomial(e.i, e.j, e.k));

  std::vector<PiRational> out(cols.size());
  for (const TriIndex& z : rows) {
    const Rational& c = p[z];
    if (c.is_zero()) continue;
    const BigInt wz = multinomial(z.i, z.j, z.k);
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const TriIndex& e = cols[b];
      const TriIndex s{z.i + e.i, z.j + e.j, z.k + e.k};
      out[b] += base[tri_offset(s)] * (c * Rational(wz * col_weight[b], multinomial(s.i, s.j, s.k)));
    }
  }
  return out;
}

QuadratureRule chebyshev_gauss_rule(int points) {
  if (points < 1) throw std::domain_error("quadrature needs at least one node");
  QuadratureRule rule;
  const double weight = std::numbers::pi / points;
  for (int i = 1; i <= points; ++i) {
    rule.nodes.push_back(0.5 * (1.0 + std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * points))));
    rule.weights.push_back(weight);
  }
  return rule;
}

QuadratureRule gauss_jacobi_rule(int points, double alpha, double beta) {
  if (points < 1) throw std::domain_error("quadrature needs at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::domain_error("Jacobi exponents must exceed -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(points);
  Eigen::VectorXd sub(std::max(points - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < points; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (k == 1) {
      // (k + alpha + beta) cancels against (2k + alpha + beta - 1) at k = 1.
      sub(0) = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
    } else {
      sub(k - 1) = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                             (s * s * (s + 1.0) * (s - 1.0)));
    }
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));

  QuadratureRule rule;
  if (points == 1) {
    rule.nodes.push_back(diag(0));
    rule.weights.push_back(mu0);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Jacobi matrix eigensolve failed");
  for (int i = 0; i < points; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes.push_back(solver.eigenvalues()(i));
    rule.weights.push_back(mu0 * v0 * v0);
  }
  return rule;
}

QuadratureRule jacobi_w_rule(int points, double gamma) {
  QuadratureRule x = gauss_jacobi_rule(points, gamma, 0.0);
  // w = (1 + x) / 2, 1 - w = (1 - x) / 2, dw = dx / 2.
  const double scale = std::pow(0.5, gamma + 1.0);
  for (std::size_t i = 0; i < x.nodes.size(); ++i) {
    x.nodes[i] = 0.5 * (1.0 + x.nodes[i]);
    x.weights[i] *= scale;
  }
  return x;
}

TriangleRule::TriangleRule(int points, double gamma) {
  if (!(gamma > -1.0)) throw std::domain_error("weight exponent must exceed -1");
  const QuadratureRule t = chebyshev_gauss_rule(points);
  const QuadratureRule w = jacobi_w_rule(points, gamma);
  nodes_.reserve(t.nodes.size() * w.nodes.size());
  for (std::size_t a = 0; a < t.nodes.size(); ++a) {
    for (std::size_t b = 0; b < w.nodes.size(); ++b) {
      const double ww = w.nodes[b];
      const double edge = 1.0 - ww;
      nodes_.emplace_back(BaryPointF::make(t.nodes[a] * edge, (1.0 - t.nodes[a]) * edge, ww),
                          t.weights[a] * w.weights[b]);
    }
  }
}

double TriangleRule::integrate(const TriangleFunction& f) const {
  double sum = 0.0;
  for (const auto& [p, weight] : nodes_) sum += weight * f(p);
  return sum;
}

double weighted_inner_quadrature(const TriangleFunction& p, const TriangleFunction& q,
                                 double gamma, int points) {
  const TriangleRule rule(points, gamma);
  return rule.integrate([&](const BaryPointF& x) { return p(x) * q(x); });
}

TriangleFunction as_function(const BBPolyF& p) {
  return [p](const BaryPointF& x) { return p(x); };
}

std::vector<std::pair<std::size_t, std::size_t>> GramMatrix::nonzero_off_diagonal() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool nonzero = false;
      if (mode == GramMode::kExact) {
        nonzero = !exact_entry(a, b).is_zero();
      } else {
        nonzero = std::abs(value(a, b)) > 1e-10 * std::sqrt(std::abs(value(a, a) * value(b, b)));
      }
      if (nonzero) out.emplace_back(a, b);
    }
  }
  return out;
}

bool GramMatrix::is_symmetric() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (mode == GramMode::kExact && exact_entry(a, b) != exact_entry(b, a)) return false;
      if (value(a, b) != value(b, a)) return false;
    }
  }
  return true;
}

GramMatrix gram_matrix(int n, const WeightParams& gamma, GramMode mode, int points) {
  if (n < 0) throw std::domain_error("negative maximum degree");
  GramMatrix g;
  g.max_degree = n;
  g.gamma = gamma;
  g.mode = mode;
  g.members = basis_indices(n);
  const std::size_t size = g.members.size();
  const std::vector<SimplexOrthoPoly> basis = simplex_basis(n);
  g.values.assign(size * size, 0.0);

  // Pairs (a, b) with a <= b, flattened so the work splits evenly.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) pairs.emplace_back(a, b);
  }

  if (mode == GramMode::kExact) {
    const auto exponent = gamma.exact_integer();
    if (!exponent) {
      throw std::domain_error("exact Gram matrix needs a non-negative integer gamma, got " +
                              gamma.to_string());
    }
    g.exact.assign(size * size, PiRational{});
    parallel_for(pairs.size(), [&](std::size_t idx) {
      const auto [a, b] = pairs[idx];
      g.exact[a * size + b] = weighted_inner_exact(basis[a].bb, basis[b].bb, *exponent);
    });
    for (const auto& [a, b] : pairs) {
      g.exact[b * size + a] = g.exact[a * size + b];
      g.values[a * size + b] = g.values[b * size + a] = g.exact[a * size + b].to_double();
    }
  } else {
    const TriangleRule rule(points, gamma.value());
    std::vector<BBPolyF> fbasis;
    for (const SimplexOrthoPoly& p : basis) fbasis.push_back(to_float(p.bb));
    // Tabulate every basis member once at the nodes.
    std::vector<std::vector<double>> table(size);
    for (std::size_t a = 0; a < size; ++a) {
      for (const auto& node : rule.nodes()) table[a].push_back(fbasis[a](node.first));
    }
    for (const auto& [a, b] : pairs) {
      double sum = 0.0;
      for (std::size_t q = 0; q < rule.nodes().size(); ++q) {
        sum += rule.nodes()[q].second * table[a][q] * table[b][q];
      }
      g.values[a * size + b] = g.values[b * size + a] = sum;
    }
  }
  return g;
}

bool verify_lower_degree_orthogonality(int n, int r, int gamma) {
  if (n == 0) return true;
  const std::vector<PiRational> moments = weighted_moments(coeffs_closed_form(n, r).bb, n - 1, gamma);
  for (int m = 0; m <= n - 1; ++m) {
    for (int s = 0; s <= m; ++s) {
      const BBPoly g = g_test_poly(s, m, n);
      PiRational value;
      for (std::size_t a = 0; a < moments.size(); ++a) {
        if (!g.coeffs()[a].is_zero()) value += moments[a] * g.coeffs()[a];
      }
      if (!value.is_zero()) return false;
    }
  }
  return true;
}

Rational q_moment(int n, int r, int i) {
  if (i < 0) throw std::domain_error("negative moment index");
  const QPoly q = q_poly(n, r);
  const int d = n - r;
  // C(d,j) w^j (1-w)^(d-j) * w^i (1-w)^(2r+1) integrates to a Beta value.
  Rational sum;
  for (int j = 0; j <= d; ++j) {
    const Rational beta(factorial(j + i) * factorial(d - j + 2 * r + 1),
                        factorial(d + i + 2 * r + 2));
    sum += q.bern_coeffs[j] * Rational(binom(d, j)) * beta;
  }
  return sum;
}

bool verify_q_moment_orthogonality(int n, int r) {
  for (int i = 0; i <= n - r - 1; ++i) {
    if (!q_moment(n, r, i).is_zero()) return false;
  }
  return true;
}

}  // namespace tricheb
