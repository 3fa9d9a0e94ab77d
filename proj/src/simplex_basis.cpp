#include "tricheb/simplex_basis.hpp"

#include "tricheb/combinatorics.hpp"

#include <string>

namespace tricheb {

namespace {

void require_pair(int n, int r) {
  if (r < 0 || n < 0 || r > n) {
    throw std::domain_error("invalid basis index (n=" + std::to_string(n) +
                            ", r=" + std::to_string(r) + "): need 0 <= r <= n");
  }
}

BigInt pow2(int e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

// Univariate edge profile sum_i e_i B_i^d(u, v) placed on the k = 0 layer.
BBPoly edge_poly(const std::vector<Rational>& e) {
  const int d = static_cast<int>(e.size()) - 1;
  BBPoly p = BBPoly::zero(d);
  for (int i = 0; i <= d; ++i) p[{i, d - i, 0}] = e[i];
  return p;
}

// Univariate sum_j q_j B_j^d(w) with 1 - w = u + v, as a triangular BB poly.
BBPoly w_profile_poly(const std::vector<Rational>& q) {
  const int d = static_cast<int>(q.size()) - 1;
  BBPoly p = BBPoly::zero(d);
  for (const TriIndex& z : tri_indices(d)) p[z] = q[z.k];
  return p;
}

}  // namespace

QPoly q_poly(int n, int r) {
  require_pair(n, r);
  QPoly q{n, r, {}};
  for (int j = 0; j <= n - r; ++j) {
    Rational c(binom(n + r + 1, j));
    q.bern_coeffs.push_back(j % 2 == 0 ? c : -c);
  }
  return q;
}

Rational c_coeff(int i, int r) {
  if (r < 0 || i < 0 || i > r) throw std::out_of_range("c(i) needs 0 <= i <= r");
  Rational c(binom(2 * r, r) * binom(2 * r, 2 * i), pow2(2 * r) * binom(r, i));
  return (r - i) % 2 == 0 ? c : -c;
}

Rational scale_relation(int r) {
  if (r < 0) throw std::domain_error("negative Chebyshev degree");
  const Rational lambda(binom(2 * r, r), pow2(2 * r));
  const ChebBernCoeffs m = cheb_bernstein_coeffs(r, r);
  for (int i = 0; i <= r; ++i) {
    if (c_coeff(i, r) != lambda * m.values[i]) {
      throw std::logic_error("c(i) is not a multiple of the Chebyshev coefficients at r=" +
                             std::to_string(r));
    }
  }
  return lambda;
}

std::vector<BasisIndex> basis_indices(int n) {
  std::vector<BasisIndex> out;
  for (int m = 0; m <= n; ++m) {
    for (int r = 0; r <= m; ++r) out.push_back({m, r});
  }
  return out;
}

SimplexOrthoPoly coeffs_closed_form(int n, int r) {
  require_pair(n, r);
  BBPoly bb = BBPoly::zero(n);
  for (int k = 0; k <= n - r; ++k) {
    Rational scale(binom(n + r + 1, k) * binom(n - r, k), binom(n, k));
    if (k % 2 != 0) scale = -scale;
    const ChebBernCoeffs m = cheb_bernstein_coeffs(n - k, r);
    for (int i = 0; i <= n - k; ++i) bb[{i, n - k - i, k}] = scale * m.values[i];
  }
  return {n, r, std::move(bb), Provenance::kClosedForm};
}

SimplexOrthoPoly coeffs_recursive(int n, int r) {
  require_pair(n, r);
  BBPoly bb = BBPoly::zero(n);
  const ChebBernCoeffs seed = cheb_bernstein_coeffs(n, r);
  for (int i = 0; i <= n; ++i) bb[{i, n - i, 0}] = seed.values[i];
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= n - 1 - k; ++i) {
      const int j = n - 1 - k - i;
      bb[{i, j, k + 1}] =
          -(Rational(i + 1) * bb[{i + 1, j, k}] + Rational(j + 1) * bb[{i, j + 1, k}]) /
          Rational(k + 1);
    }
  }
  return {n, r, std::move(bb), Provenance::kRecursion};
}

SimplexOrthoPoly coeffs_product_form(int n, int r) {
  require_pair(n, r);
  std::vector<Rational> c;
  for (int i = 0; i <= r; ++i) c.push_back(c_coeff(i, r));
  BBPoly bb = multiply(edge_poly(c), w_profile_poly(q_poly(n, r).bern_coeffs));
  return {n, r, std::move(bb), Provenance::kProductForm};
}

std::vector<SimplexOrthoPoly> simplex_basis(int n) {
  std::vector<SimplexOrthoPoly> out;
  for (const BasisIndex& b : basis_indices(n)) out.push_back(coeffs_closed_form(b.m, b.r));
  return out;
}

BBPoly g_test_poly(int s, int m, int n) {
  if (s < 0 || s > m || m > n - 1) throw std::domain_error("need 0 <= s <= m <= n - 1");
  // T_s(u/(1-w)) (1-w)^m = sum_i M_{i,s}^m C(m,i) u^i v^(m-i) = sum_i M_{i,s}^m B_(i,m-i,0)^m
  const BBPoly edge = edge_poly(cheb_bernstein_coeffs(m, s).values);
  return multiply(edge, BBPoly::basis({0, 0, n - m - 1}));
}

}  // namespace tricheb
