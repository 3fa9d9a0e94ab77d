#include "tricheb/weighted_ip.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using tricheb::BBPoly;
using tricheb::PiRational;
using tricheb::Rational;
using tricheb::WeightParams;

namespace {

BBPoly T(int n, int r) { return tricheb::coeffs_closed_form(n, r).bb; }

PiRational pi_times(long p, long q) { return PiRational(0, Rational(p, q)); }

tricheb::TriangleFunction fn(const BBPoly& p) { return tricheb::as_function(tricheb::to_float(p)); }

}  // namespace

TEST_CASE("weight parameters") {
  const auto one = WeightParams::parse("1");
  CHECK(one.exact_integer() == 1);
  CHECK(one.full_orthogonality_claimed());
  const auto half = WeightParams::parse("1/2");
  REQUIRE(half.exact_value().has_value());
  CHECK(*half.exact_value() == Rational(1, 2));
  CHECK_FALSE(half.exact_integer().has_value());
  CHECK_FALSE(half.full_orthogonality_claimed());
  const auto dec = WeightParams::parse("2.5");
  CHECK_FALSE(dec.exact_value().has_value());
  CHECK(dec.value() == 2.5);
  CHECK(WeightParams::parse("3").to_string() == "3");
  CHECK_THROWS_AS(WeightParams::parse("-1"), std::domain_error);
  CHECK_THROWS_AS(WeightParams::real(-1.5), std::domain_error);
  CHECK_THROWS_AS(WeightParams::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(WeightParams::parse("1.5x"), std::invalid_argument);
}

TEST_CASE("exact weighted inner products") {
  CHECK(tricheb::weighted_inner_exact(T(0, 0), T(0, 0), 1) == pi_times(1, 2));
  CHECK(tricheb::weighted_inner_exact(T(1, 0), T(1, 1), 1).is_zero());
  CHECK(tricheb::weighted_inner_exact(T(1, 1), T(1, 1), 1) == pi_times(1, 8));
  CHECK_THROWS_AS(tricheb::weighted_inner_exact(T(0, 0), T(0, 0), -1), std::domain_error);
  CHECK_THROWS_AS(tricheb::weighted_inner_exact(T(0, 0), T(0, 0), WeightParams::parse("1/2")), std::domain_error);
  CHECK(tricheb::weighted_inner_exact(T(1, 1), T(1, 1), WeightParams::parse("1")) == pi_times(1, 8));
}

TEST_CASE("cross-degree products away from gamma = 1") {
  // Reference values computed symbolically.
  CHECK(tricheb::weighted_inner_exact(T(0, 0), T(1, 0), 2) == pi_times(1, 12));
  CHECK(tricheb::weighted_inner_exact(T(1, 0), T(2, 0), 2) == pi_times(1, 20));
  CHECK(tricheb::weighted_inner_exact(T(1, 1), T(2, 1), 2) == pi_times(1, 60));
  CHECK(tricheb::weighted_inner_exact(T(2, 0), T(3, 0), 2) == pi_times(1, 28));
  CHECK(tricheb::weighted_inner_exact(T(0, 0), T(1, 0), 0) == pi_times(-1, 2));
  CHECK(tricheb::weighted_inner_exact(T(0, 0), T(2, 0), 0) == pi_times(1, 3));
  CHECK(tricheb::weighted_inner_exact(T(0, 0), T(3, 0), 0) == pi_times(-1, 4));
  CHECK(tricheb::weighted_inner_exact(T(1, 0), T(2, 0), 0) == pi_times(-2, 3));
}

TEST_CASE("exact products agree with the power-basis oracle") {
  for (int gamma = 0; gamma <= 3; ++gamma) {
    for (int n = 0; n <= 4; ++n) {
      for (int r = 0; r <= n; ++r) {
        for (int n2 = 0; n2 <= 4; ++n2) {
          for (int s = 0; s <= n2; ++s) {
            const PiRational v = tricheb::weighted_inner_exact(T(n, r), T(n2, s), gamma);
            CHECK(v.rat_part().is_zero());
            const auto prod = oracle::factored_basis(n, r) * oracle::factored_basis(n2, s);
            CHECK(v.pi_part() == prod.weighted_pi_coefficient(gamma));
          }
        }
      }
    }
  }
}

TEST_CASE("moments against basis functions") {
  const BBPoly p = T(3, 1);
  const auto mom = tricheb::weighted_moments(p, 2, 1);
  REQUIRE(mom.size() == tricheb::tri_count(2));
  const BBPoly q = T(2, 0);
  PiRational dot;
  for (const auto& z : tricheb::tri_indices(2)) dot += mom[tricheb::tri_offset(z)] * q[z];
  CHECK(dot == tricheb::weighted_inner_exact(p, q, 1));
  CHECK_THROWS_AS(tricheb::weighted_moments(p, -1, 1), std::domain_error);
}

TEST_CASE("one-dimensional rules") {
  const auto cg = tricheb::chebyshev_gauss_rule(4);
  double total = 0.0;
  for (double w : cg.weights) total += w;
  CHECK(total == doctest::Approx(std::numbers::pi).epsilon(1e-15));

  for (double gamma : {0.0, 0.5, 1.0, 2.0, 3.7}) {
    const auto rule = tricheb::jacobi_w_rule(5, gamma);
    for (int k = 0; k <= 9; ++k) {
      double q = 0.0;
      for (std::size_t a = 0; a < rule.nodes.size(); ++a) q += rule.weights[a] * std::pow(rule.nodes[a], k);
      CHECK(q == doctest::Approx(std::beta(k + 1.0, gamma + 1.0)).epsilon(1e-13));
    }
  }
  const auto gl = tricheb::gauss_jacobi_rule(3, 0.0, 0.0);
  CHECK(gl.nodes.size() == 3);
  CHECK(gl.weights[0] + gl.weights[1] + gl.weights[2] == doctest::Approx(2.0));
  CHECK_THROWS_AS(tricheb::TriangleRule(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tricheb::TriangleRule(4, -1.0), std::domain_error);
}

TEST_CASE("quadrature inner products") {
  CHECK(std::abs(tricheb::weighted_inner_quadrature(fn(T(0, 0)), fn(T(0, 0)), 1.0, 2) - std::numbers::pi / 2) <=
        1e-13);
  CHECK(std::abs(tricheb::weighted_inner_quadrature(fn(T(2, 1)), fn(T(2, 0)), 1.0, 8)) <= 1e-12);

  const auto one = [](const tricheb::BaryPointF&) { return 1.0; };
  const double q = tricheb::weighted_inner_quadrature(one, one, 0.5, 16);
  CHECK(std::abs(q - 2.0 * std::numbers::pi / 3.0) <= 1e-10);
  const double brute = oracle::brute_weighted_integral([](double, double, double) { return 1.0; }, 0.5, 1e-12);
  CHECK(std::abs(q - brute) <= 1e-8);

  const auto g = [](const tricheb::BaryPointF& p) { return std::exp(p.u()) * p.v(); };
  const double qg = tricheb::weighted_inner_quadrature(g, one, 0.5, 16);
  const double bg =
      oracle::brute_weighted_integral([](double u, double v, double) { return std::exp(u) * v; }, 0.5, 1e-12);
  CHECK(std::abs(qg - bg) <= 1e-8);
}

TEST_CASE("quadrature matches exact values") {
  for (int gamma = 1; gamma <= 3; ++gamma) {
    for (int n = 0; n <= 4; ++n) {
      for (int r = 0; r <= n; ++r) {
        for (int n2 = 0; n + n2 <= 8 && n2 <= 4; ++n2) {
          for (int s = 0; s <= n2; ++s) {
            const double exact = tricheb::weighted_inner_exact(T(n, r), T(n2, s), gamma).to_double();
            const double quad = tricheb::weighted_inner_quadrature(fn(T(n, r)), fn(T(n2, s)), gamma, 12);
            CHECK(std::abs(exact - quad) <= 1e-11);
          }
        }
      }
    }
  }
}

TEST_CASE("Gram matrices") {
  const auto g3 = tricheb::gram_matrix(3, WeightParams::exact(1), tricheb::GramMode::kExact);
  CHECK(g3.size() == 10);
  CHECK(g3.is_diagonal());
  CHECK(g3.is_symmetric());

  const auto g0 = tricheb::gram_matrix(2, WeightParams::exact(0), tricheb::GramMode::kExact);
  CHECK_FALSE(g0.is_diagonal());

  for (int gamma = 1; gamma <= 3; ++gamma) {
    const auto g = tricheb::gram_matrix(8, WeightParams::exact(gamma), tricheb::GramMode::kExact);
    CHECK(g.is_symmetric());
    for (std::size_t a = 0; a < g.size(); ++a) {
      CHECK(g.exact_entry(a, a).pi_part() > Rational(0));
      CHECK(g.exact_entry(a, a).rat_part().is_zero());
      for (std::size_t b = 0; b < g.size(); ++b) {
        // Same degree, different index: always orthogonal.
        if (a != b && g.members[a].m == g.members[b].m) CHECK(g.exact_entry(a, b).is_zero());
      }
    }
  }

  const auto gq = tricheb::gram_matrix(4, WeightParams::real(1.0), tricheb::GramMode::kQuadrature, 12);
  CHECK(gq.exact.empty());
  CHECK(gq.is_diagonal());
  CHECK(gq.is_symmetric());
  CHECK(gq.value(0, 0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));
  CHECK_THROWS_AS(tricheb::gram_matrix(2, WeightParams::parse("1/2"), tricheb::GramMode::kExact), std::domain_error);
}

TEST_CASE("orthogonality to lower degrees") {
  CHECK(tricheb::verify_lower_degree_orthogonality(1, 0, 1));
  CHECK(tricheb::verify_lower_degree_orthogonality(3, 2, 1));
  CHECK_FALSE(tricheb::verify_lower_degree_orthogonality(2, 0, 0));
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(tricheb::verify_lower_degree_orthogonality(n, r, 1));
  }
}

TEST_CASE("moments of the w-profile") {
  CHECK(tricheb::q_moment(1, 0, 0) == Rational(0));
  CHECK(tricheb::q_moment(1, 0, 1) == Rational(-1, 12));
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(tricheb::verify_q_moment_orthogonality(n, r));
  }
}
