#ifndef TRICHEB_COMBINATORICS_HPP_
#define TRICHEB_COMBINATORICS_HPP_

#include "tricheb/exactnum.hpp"

namespace tricheb {

BigInt factorial(int n);

/// n!! for n >= -1, with 0!! = (-1)!! = 1.  Throws std::domain_error below -1.
BigInt double_factorial(int n);

/// Binomial coefficient; zero whenever k < 0 or k > n.
BigInt binom(int n, int k);

/// Multinomial n!/(i! j! k!) with n = i + j + k.
BigInt multinomial(int i, int j, int k);

/// coeff * pi^(sqrt_pi_power / 2).
struct HalfFactorialValue {
  Rational coeff;
  int sqrt_pi_power = 0;

  /// Only valid when the sqrt(pi) factors have cancelled.
  Rational to_rational() const;

  friend HalfFactorialValue operator*(const HalfFactorialValue& a, const HalfFactorialValue& b) {
    return {a.coeff * b.coeff, a.sqrt_pi_power + b.sqrt_pi_power};
  }
  friend HalfFactorialValue operator/(const HalfFactorialValue& a, const HalfFactorialValue& b) {
    return {a.coeff / b.coeff, a.sqrt_pi_power - b.sqrt_pi_power};
  }
  friend bool operator==(const HalfFactorialValue&, const HalfFactorialValue&) = default;
};

/// (n - 1/2)! = n! (2n-1)!! / (2n)!! * sqrt(pi).
HalfFactorialValue half_factorial(int n);

/// Gamma(x) for x = twice_x / 2 > 0, i.e. integer or half-integer arguments.
HalfFactorialValue gamma_half_integer(int twice_x);

/// Euler Beta B(x, y) with x = twice_x / 2 and y = twice_y / 2, both > 0.
HalfFactorialValue beta_half_integer(int twice_x, int twice_y);

/// Binomial C(n - 1/2, m) = (n-1/2)! / (m! (n-m-1/2)!) for 0 <= m <= n.
Rational half_binomial(int n, int m);

/// C(n-1/2, n-k) C(n-1/2, k) == C(2n, n) C(2n, 2k) / 2^(2n), evaluated exactly.
bool check_half_binomial_identity(int n, int k);

}  // namespace tricheb

#endif  // TRICHEB_COMBINATORICS_HPP_
