#ifndef TRICHEB_CHEBYSHEV_HPP_
#define TRICHEB_CHEBYSHEV_HPP_

#include "tricheb/exactnum.hpp"

#include <vector>

namespace tricheb {

// Chebyshev polynomials of the first kind shifted to [0, 1]: T_r(2x - 1).

/// Three-term recurrence in s = 2x - 1; exact for Rational arguments.
template <class T>
T cheb_eval(int r, const T& x) {
  const T s = T(2) * x - T(1);
  T prev(1);
  if (r == 0) return prev;
  T cur = s;
  for (int d = 1; d < r; ++d) {
    T next = T(2) * s * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Bernstein coefficients M_{i,r}^n, i = 0..n, of T_r in the degree-n basis.
struct ChebBernCoeffs {
  int r = 0;
  int n = 0;
  std::vector<Rational> values;
};

/// M_{i,r}^n = C(n,i)^-1 sum_k (-1)^(r-k) C(n-r, i-k) C(2r, 2k).
/// Throws std::domain_error unless 0 <= r <= n.
ChebBernCoeffs cheb_bernstein_coeffs(int n, int r);

/// Degree-r Bernstein coefficients from the product formula
///   r!(2r-1)!!/(2^(2r)(2r)!!) C(2r,r)^2 (-1)^(r-i) i!(r-i)!/((2i)!(2r-2i)!)
/// taken literally, together with the scale sigma relating them to
/// cheb_bernstein_coeffs(r, r).  The formula is off by sigma_r = (C(2r,r)/4^r)^2.
struct ChebProductForm {
  std::vector<Rational> coeffs;
  Rational sigma;
};

/// Throws std::logic_error if the product formula is not a scalar multiple of
/// the canonical coefficients.
ChebProductForm cheb_bernstein_product_form(int r);

}  // namespace tricheb

#endif  // TRICHEB_CHEBYSHEV_HPP_
