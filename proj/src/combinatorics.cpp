#include "tricheb/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace tricheb {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::domain_error("double factorial undefined for " + std::to_string(n));
  if (n <= 0) return 1;
  if (n % 2 == 0) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n / 2));
    return power * factorial(n / 2);
  }
  const int h = (n - 1) / 2;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(h));
  return factorial(n) / (power * factorial(h));
}

BigInt binom(int n, int k) {
  if (n < 0) throw std::domain_error("binomial with negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt multinomial(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw std::domain_error("multinomial with negative index");
  return factorial(i + j + k) / (factorial(i) * factorial(j) * factorial(k));
}

Rational HalfFactorialValue::to_rational() const {
  if (sqrt_pi_power != 0) throw std::domain_error("value still carries a sqrt(pi) factor");
  return coeff;
}

HalfFactorialValue half_factorial(int n) {
  if (n < 0) throw std::domain_error("half factorial needs n >= 0");
  return {Rational(factorial(n) * double_factorial(2 * n - 1), double_factorial(2 * n)), 1};
}

HalfFactorialValue gamma_half_integer(int twice_x) {
  if (twice_x <= 0) throw std::domain_error("gamma argument must be positive");
  if (twice_x % 2 == 0) return {Rational(factorial(twice_x / 2 - 1)), 0};
  // Gamma(m + 1/2) = (m - 1/2)!
  return half_factorial((twice_x - 1) / 2);
}

HalfFactorialValue beta_half_integer(int twice_x, int twice_y) {
  return gamma_half_integer(twice_x) * gamma_half_integer(twice_y) /
         gamma_half_integer(twice_x + twice_y);
}

Rational half_binomial(int n, int m) {
  if (m < 0 || m > n) throw std::domain_error("half binomial index out of range");
  const HalfFactorialValue denom = HalfFactorialValue{Rational(factorial(m)), 0} * half_factorial(n - m);
  return (half_factorial(n) / denom).to_rational();
}

bool check_half_binomial_identity(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("identity requires 0 <= k <= n");
  const Rational lhs = half_binomial(n, n - k) * half_binomial(n, k);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
  const Rational rhs(binom(2 * n, n) * binom(2 * n, 2 * k), scale);
  return lhs == rhs;
}

}  // namespace tricheb
