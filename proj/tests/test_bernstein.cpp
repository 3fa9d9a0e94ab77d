#include "tricheb/bernstein.hpp"
#include "tricheb/simplex_basis.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using tricheb::BaryPointF;
using tricheb::BaryPointQ;
using tricheb::BBPoly;
using tricheb::BBPolyF;
using tricheb::PiRational;
using tricheb::Rational;
using tricheb::TriIndex;

namespace {

BBPoly random_poly(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  BBPoly p = BBPoly::zero(n);
  for (const TriIndex& z : tricheb::tri_indices(n)) p[z] = Rational(num(rng), den(rng));
  return p;
}

// 25 deterministic rational points covering vertices, edges and the interior.
std::vector<BaryPointQ> rational_points() {
  std::vector<BaryPointQ> pts;
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 6; b += 2) pts.push_back(BaryPointQ::from_uv(Rational(a, 6), Rational(b, 6)));
  }
  pts.push_back(BaryPointQ::from_uv(Rational(1, 7), Rational(2, 9)));
  pts.push_back(BaryPointQ::from_uv(Rational(3, 11), Rational(5, 13)));
  pts.push_back(BaryPointQ::from_uv(Rational(1, 3), Rational(1, 3)));
  pts.resize(25, BaryPointQ::make(0, 0, 1));
  return pts;
}

}  // namespace

TEST_CASE("dense layout enumerates each index once") {
  for (int n = 0; n <= 12; ++n) {
    const auto idx = tricheb::tri_indices(n);
    REQUIRE(idx.size() == tricheb::tri_count(n));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      CHECK(idx[a].degree() == n);
      CHECK(tricheb::tri_offset(idx[a]) == a);
    }
  }
  CHECK(tricheb::tri_indices(1)[0] == TriIndex{1, 0, 0});
  CHECK(tricheb::tri_indices(1)[1] == TriIndex{0, 1, 0});
  CHECK(tricheb::tri_indices(1)[2] == TriIndex{0, 0, 1});
}

TEST_CASE("barycentric points are validated") {
  CHECK_NOTHROW(BaryPointF::make(0.2, 0.3, 0.5));
  CHECK_THROWS_AS(BaryPointF::make(0.2, 0.3, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(BaryPointF::make(-0.1, 0.6, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(BaryPointQ::make(Rational(1, 3), Rational(1, 3), Rational(1, 4)), std::invalid_argument);
  CHECK(BaryPointQ::from_uv(Rational(1, 4), Rational(1, 4)).w() == Rational(1, 2));
}

TEST_CASE("univariate Bernstein evaluation") {
  CHECK(tricheb::bernstein_eval_uni(0, 5, 0.0) == 1.0);
  CHECK(tricheb::bernstein_eval_uni<Rational>(1, 2, Rational(1, 2)) == Rational(1, 2));
  double sum = 0.0;
  for (int i = 0; i <= 5; ++i) sum += tricheb::bernstein_eval_uni(i, 5, 0.3);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(tricheb::bernstein_eval_uni(3, 2, 0.5), std::out_of_range);
  CHECK_THROWS_AS(tricheb::bernstein_eval_uni(-1, 2, 0.5), std::out_of_range);
}

TEST_CASE("triangular Bernstein evaluation") {
  CHECK(tricheb::bernstein_eval_tri({3, 0, 0}, BaryPointF::make(1, 0, 0)) == 1.0);
  CHECK(tricheb::bernstein_eval_tri<Rational>({1, 1, 0}, BaryPointQ::make(Rational(1, 2), Rational(1, 2), 0)) ==
        Rational(1, 2));
  double sum = 0.0;
  for (const TriIndex& z : tricheb::tri_indices(4)) sum += tricheb::bernstein_eval_tri(z, BaryPointF::make(0.2, 0.3, 0.5));
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("partition of unity is exact at rational points") {
  for (int n = 0; n <= 10; ++n) {
    for (const BaryPointQ& p : rational_points()) {
      Rational sum;
      for (const TriIndex& z : tricheb::tri_indices(n)) sum += tricheb::bernstein_eval_tri(z, p);
      CHECK(sum == Rational(1));
    }
  }
}

TEST_CASE("evaluating BB polynomials") {
  const BBPoly c = BBPoly::constant(3, Rational(7, 2));
  CHECK(c(BaryPointQ::from_uv(Rational(1, 5), Rational(2, 5))) == Rational(7, 2));
  CHECK(tricheb::to_float(c)(BaryPointF::make(0.1, 0.2, 0.7)) == doctest::Approx(3.5).epsilon(1e-15));

  BBPoly t10 = BBPoly::zero(1);
  t10[{1, 0, 0}] = 1;
  t10[{0, 1, 0}] = 1;
  t10[{0, 0, 1}] = -2;
  CHECK(t10(BaryPointQ::make(0, 0, 1)) == Rational(-2));
  CHECK(t10(BaryPointQ::make(Rational(1, 3), Rational(1, 3), Rational(1, 3))) == Rational(0));
}

TEST_CASE("de Casteljau agrees with exact expansion") {
  std::mt19937 rng(3);
  for (int n = 0; n <= 8; ++n) {
    const BBPoly p = random_poly(n, rng);
    const BBPolyF pf = tricheb::to_float(p);
    for (const BaryPointQ& q : rational_points()) {
      const double exact = p(q).to_double();
      const double approx = pf(BaryPointF::make(q.u().to_double(), q.v().to_double(), q.w().to_double()));
      CHECK(approx == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("degree elevation preserves values") {
  const BBPoly one = BBPoly::constant(0, 1).elevate();
  CHECK(one == BBPoly::constant(1, 1));

  BBPoly t11 = BBPoly::zero(1);
  t11[{1, 0, 0}] = 1;
  t11[{0, 1, 0}] = -1;
  const BBPoly e = t11.elevate();
  CHECK(e.degree() == 2);
  CHECK(e(BaryPointQ::make(1, 0, 0)) == Rational(1));

  std::mt19937 rng(11);
  for (int n = 0; n <= 8; ++n) {
    const BBPoly p = random_poly(n, rng);
    const BBPoly up = p.elevate();
    for (const BaryPointQ& q : rational_points()) CHECK(up(q) == p(q));
    const BBPolyF pf = tricheb::to_float(p);
    const BBPolyF upf = pf.elevate();
    for (double u : {0.1, 0.33, 0.7}) {
      const auto x = BaryPointF::make(u, (1 - u) / 3, 1 - u - (1 - u) / 3);
      CHECK(std::abs(upf(x) - pf(x)) <= 1e-14 * std::max(1.0, std::abs(pf(x))));
    }
  }
}

TEST_CASE("product of BB polynomials matches the power-form oracle") {
  std::mt19937 rng(5);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const BBPoly p = random_poly(n, rng);
      const BBPoly q = random_poly(m, rng);
      CHECK(oracle::from_bb(tricheb::multiply(p, q)) == oracle::from_bb(p) * oracle::from_bb(q));
    }
  }
}

TEST_CASE("Bernstein integral") {
  CHECK(tricheb::bernstein_integral(0) == Rational(1));
  CHECK(tricheb::bernstein_integral(1) == Rational(1, 3));
  CHECK(tricheb::bernstein_integral(4) == Rational(1, 15));
  // Mean value over T (area 1/2) for every index, by the power-form oracle.
  for (int n = 0; n <= 6; ++n) {
    for (const TriIndex& z : tricheb::tri_indices(n)) {
      CHECK(oracle::from_bb(BBPoly::basis(z)).integrate() == tricheb::bernstein_integral(n) * Rational(1, 2));
    }
  }
}

TEST_CASE("monomial integrals") {
  const Rational h(-1, 2);
  CHECK(tricheb::integrate_monomial(0, 0, 0, 0, 0, 0) == PiRational(Rational(1, 2), 0));
  CHECK(tricheb::integrate_monomial(0, 0, 0, h, h, 1) == PiRational(0, Rational(1, 2)));
  CHECK(tricheb::integrate_monomial(1, 0, 0, 0, 0, 0) == PiRational(Rational(1, 6), 0));
  CHECK_THROWS_AS(tricheb::integrate_monomial(0, 0, 0, Rational(1, 3), 0, 0), std::domain_error);
  CHECK_THROWS_AS(tricheb::integrate_monomial(0, 0, 0, 0, 0, Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(tricheb::integrate_monomial(0, 0, 0, 0, 0, -1), std::domain_error);
  CHECK_THROWS_AS(tricheb::integrate_monomial(-1, 0, 0, 0, 0, 0), std::domain_error);

  // Against the oracle's closed forms, including the mixed exponent case.
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        const oracle::Poly mono = oracle::Poly::monomial(a, b) * oracle::Poly::w().pow(c);
        CHECK(tricheb::integrate_monomial(a, b, c, 0, 0, 0) == PiRational(mono.integrate(), 0));
        for (int g = 0; g <= 3; ++g) {
          const oracle::Poly with_w = mono * (oracle::Poly(1) - oracle::Poly::w()).pow(g);
          CHECK(tricheb::integrate_monomial(a, b, c, 0, 0, g) == PiRational(with_w.integrate(), 0));
          CHECK(tricheb::integrate_monomial(a, b, c, h, h, g) == PiRational(0, mono.weighted_pi_coefficient(g)));
        }
      }
    }
  }
  // u^(1/2) v^(-1/2) on T, by hand: B(3/2, 1/2) B(1, 2) = pi/2 * 1/2.
  const PiRational mixed = tricheb::integrate_monomial(1, 0, 0, h, h, 0);
  CHECK(mixed == PiRational(0, Rational(1, 4)));
  // u^0 v^(-1/2): B(1, 1/2) B(1, 3/2) = 2 * 2/3.
  CHECK(tricheb::integrate_monomial(0, 0, 0, 0, h, 0) == PiRational(Rational(4, 3), 0));
}

TEST_CASE("unweighted inner product") {
  const BBPoly one = BBPoly::constant(0, 1);
  CHECK(tricheb::inner_product_unweighted(one, one) == Rational(1, 2));
  for (int n = 0; n <= 5; ++n) {
    for (const TriIndex& z : tricheb::tri_indices(n)) {
      CHECK(tricheb::inner_product_unweighted(BBPoly::basis(z), one) ==
            tricheb::bernstein_integral(n) * Rational(1, 2));
    }
  }
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const BBPoly p = random_poly(trial % 5, rng);
    const BBPoly q = random_poly((trial * 3) % 4, rng);
    const BBPoly s = random_poly(trial % 5, rng);
    const Rational pq = tricheb::inner_product_unweighted(p, q);
    CHECK(pq == (oracle::from_bb(p) * oracle::from_bb(q)).integrate());
    CHECK(pq == tricheb::inner_product_unweighted(q, p));
    CHECK(tricheb::inner_product_unweighted(p + s * Rational(3), q) ==
          pq + Rational(3) * tricheb::inner_product_unweighted(s, q));
  }
}

TEST_CASE("unweighted norms are positive on a basis of degree 4") {
  for (const TriIndex& z : tricheb::tri_indices(4)) {
    const BBPoly b = BBPoly::basis(z);
    CHECK(tricheb::inner_product_unweighted(b, b) > Rational(0));
  }
  std::mt19937 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const BBPoly p = random_poly(4, rng);
    CHECK(tricheb::inner_product_unweighted(p, p) > Rational(0));
  }
}

TEST_CASE("closed-form inner product for members orthogonal to lower degrees") {
  // The recursive construction is orthogonal to all lower degrees in the
  // unweighted product, so it provides elements of each such space.
  std::mt19937 rng(17);
  for (int m = 0; m <= 4; ++m) {
    for (int r = 0; r <= m; ++r) {
      const BBPoly p_m = tricheb::coeffs_recursive(m, r).bb;
      for (int n = m; n <= m + 2; ++n) {
        const BBPoly p = p_m.elevate_to(n);
        const BBPoly q = random_poly(n, rng);
        const Rational closed = tricheb::inner_product_orthogonal_closed_form(p, m, q);
        CHECK(closed == tricheb::inner_product_unweighted(p, q));
        CHECK(closed == (oracle::from_bb(p) * oracle::from_bb(q)).integrate());
      }
    }
  }
}

TEST_CASE("orthogonality certificate against lower degrees") {
  CHECK_FALSE(tricheb::is_orthogonal_to_lower_degree(BBPoly::basis({1, 0, 0})));
  CHECK_FALSE(tricheb::is_orthogonal_to_lower_degree(BBPoly::basis({1, 1, 1})));
  BBPoly p = BBPoly::zero(1);
  p[{1, 0, 0}] = 1;
  p[{0, 1, 0}] = 1;
  p[{0, 0, 1}] = -2;
  CHECK(tricheb::is_orthogonal_to_lower_degree(p));
  CHECK(tricheb::is_orthogonal_to_lower_degree(BBPoly::zero(3)));
  CHECK(tricheb::is_orthogonal_to_lower_degree(BBPoly::constant(0, 5)));

  // Agreement with direct integration against every lower-degree basis function.
  std::mt19937 rng(23);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const BBPoly cand = trial == 0 ? tricheb::coeffs_recursive(n, n / 2).bb : random_poly(n, rng);
      bool orth = true;
      for (const TriIndex& e : tricheb::tri_indices(n - 1)) {
        orth = orth && tricheb::inner_product_unweighted(cand, BBPoly::basis(e)).is_zero();
      }
      CHECK(orth == tricheb::is_orthogonal_to_lower_degree(cand));
    }
  }
}
