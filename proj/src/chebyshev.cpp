#include "tricheb/chebyshev.hpp"

#include "tricheb/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tricheb {

ChebBernCoeffs cheb_bernstein_coeffs(int n, int r) {
  if (r < 0 || r > n) {
    throw std::domain_error("Chebyshev degree " + std::to_string(r) +
                            " not representable in Bernstein degree " + std::to_string(n));
  }
  ChebBernCoeffs out{r, n, {}};
  out.values.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    // binom() vanishes outside its range, so the sum runs over all k <= i.
    BigInt sum = 0;
    for (int k = 0; k <= std::min(i, r); ++k) {
      const BigInt term = binom(n - r, i - k) * binom(2 * r, 2 * k);
      if ((r - k) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out.values.emplace_back(sum, binom(n, i));
  }
  return out;
}

ChebProductForm cheb_bernstein_product_form(int r) {
  if (r < 0) throw std::domain_error("negative Chebyshev degree");
  BigInt pow4;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 2, static_cast<unsigned long>(2 * r));
  const BigInt central = binom(2 * r, r);
  const Rational prefactor(factorial(r) * double_factorial(2 * r - 1) * central * central,
                           pow4 * double_factorial(2 * r));

  ChebProductForm out;
  out.coeffs.reserve(static_cast<std::size_t>(r + 1));
  for (int i = 0; i <= r; ++i) {
    Rational c = prefactor * Rational(factorial(i) * factorial(r - i),
                                      factorial(2 * i) * factorial(2 * r - 2 * i));
    if ((r - i) % 2 != 0) c = -c;
    out.coeffs.push_back(std::move(c));
  }

  const ChebBernCoeffs canonical = cheb_bernstein_coeffs(r, r);
  // T_r(1) = 1, so the last canonical coefficient is 1.
  out.sigma = out.coeffs.back() / canonical.values.back();
  for (int i = 0; i <= r; ++i) {
    if (out.coeffs[i] != out.sigma * canonical.values[i]) {
      throw std::logic_error("product form is not proportional to T_" + std::to_string(r));
    }
  }
  return out;
}

}  // namespace tricheb
