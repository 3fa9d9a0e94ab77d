#ifndef TRICHEB_SIMPLEX_BASIS_HPP_
#define TRICHEB_SIMPLEX_BASIS_HPP_

#include "tricheb/bernstein.hpp"
#include "tricheb/chebyshev.hpp"
#include "tricheb/exactnum.hpp"

#include <compare>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace tricheb {

/// Q_{n,r}(w) = sum_j (-1)^j C(n+r+1, j) B_j^(n-r)(w), the w-profile of the
/// degree-n, index-r basis member.  Orthogonal to w^i (1-w)^(2r+1) on [0, 1]
/// for i < n - r.
struct QPoly {
  int n = 0;
  int r = 0;
  std::vector<Rational> bern_coeffs;  // degree n - r

  template <class T>
  T operator()(const T& w) const {
    std::vector<T> c;
    c.reserve(bern_coeffs.size());
    for (const Rational& q : bern_coeffs) {
      if constexpr (std::is_floating_point_v<T>) {
        c.push_back(q.to_double());
      } else {
        c.push_back(q);
      }
    }
    return eval_bernstein_uni<T>(c, w);
  }
};

/// Throws std::domain_error unless 0 <= r <= n.
QPoly q_poly(int n, int r);

/// (-1)^(r-i) C(2r,r) C(2r,2i) / (2^(2r) C(r,i)).  Throws std::out_of_range
/// unless 0 <= i <= r.
Rational c_coeff(int i, int r);

/// C(2r, r) / 2^(2r): the factor between sum_i c(i) B_i^r and the canonical
/// Bernstein form of T_r.  Verified exactly on every call.
Rational scale_relation(int r);

enum class Provenance { kClosedForm, kRecursion, kProductForm };

/// (degree, index) label of a basis member.
struct BasisIndex {
  int m = 0;
  int r = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// All (m, r) with 0 <= r <= m <= n, ordered by m then r.
std::vector<BasisIndex> basis_indices(int n);

struct SimplexOrthoPoly {
  int n = 0;
  int r = 0;
  BBPoly bb;
  Provenance provenance = Provenance::kClosedForm;
};

/// Explicit Bernstein-Bezier coefficients
///   a_{ijk} = (-1)^k C(n+r+1,k) C(n-r,k) / C(n,k) * M_{i,r}^(n-k),  k <= n - r,
/// and zero for k > n - r.
SimplexOrthoPoly coeffs_closed_form(int n, int r);

/// Seeds the k = 0 layer with M_{i,r}^n and fills layer k + 1 from layer k via
///   (i+1) a_{i+1,j,k} + (j+1) a_{i,j+1,k} + (k+1) a_{i,j,k+1} = 0.
/// The result is the unique polynomial with that edge row that is orthogonal to
/// all lower degrees in the unweighted inner product.  It agrees with
/// coeffs_closed_form only for r <= 1.
SimplexOrthoPoly coeffs_recursive(int n, int r);

/// The product sum_i c(i) B_i^r(u,v) * Q_{n,r}(w) expanded to Bernstein form.
/// Equals scale_relation(r) times coeffs_closed_form(n, r).
SimplexOrthoPoly coeffs_product_form(int n, int r);

/// Closed-form basis for all (m, r) with m <= n, in basis_indices order.
std::vector<SimplexOrthoPoly> simplex_basis(int n);

/// T_r(u/(1-w)) (1-w)^r Q_{n,r}(w), using u + v for 1 - w.  At w = 1 this is
/// the continuous limit: 0 for r >= 1 and Q_{n,0}(1) for r = 0.
template <class T>
T eval_factored(int n, int r, const BaryPoint<T>& p) {
  const QPoly q = q_poly(n, r);
  const T edge = p.u() + p.v();
  if (edge == T(0)) return r == 0 ? q(T(1)) : T(0);
  T scale(1);
  for (int e = 0; e < r; ++e) scale *= edge;
  return cheb_eval<T>(r, p.u() / edge) * scale * q(p.w());
}

/// T_s(u/(1-w)) (1-w)^m w^(n-m-1), the test family spanning all polynomials of
/// degree < n.  Throws std::domain_error unless 0 <= s <= m <= n - 1.
template <class T>
T g_test_function(int s, int m, int n, const BaryPoint<T>& p) {
  if (s < 0 || s > m || m > n - 1) throw std::domain_error("need 0 <= s <= m <= n - 1");
  T wpow(1);
  for (int e = 0; e < n - m - 1; ++e) wpow *= p.w();
  const T edge = p.u() + p.v();
  if (edge == T(0)) return m == 0 ? wpow : T(0);
  T scale(1);
  for (int e = 0; e < m; ++e) scale *= edge;
  return cheb_eval<T>(s, p.u() / edge) * scale * wpow;
}

/// g_{s,m} for degree n as an exact Bernstein-Bezier polynomial of degree n - 1.
BBPoly g_test_poly(int s, int m, int n);

}  // namespace tricheb

#endif  // TRICHEB_SIMPLEX_BASIS_HPP_
