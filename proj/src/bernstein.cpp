#include "tricheb/bernstein.hpp"

namespace tricheb {

std::vector<TriIndex> tri_indices(int n) {
  std::vector<TriIndex> out;
  out.reserve(tri_count(n));
  for (int i = n; i >= 0; --i) {
    for (int j = n - i; j >= 0; --j) out.push_back({i, j, n - i - j});
  }
  return out;
}

BBPolyF to_float(const BBPoly& p) {
  return p.map<double>([](const Rational& c) { return c.to_double(); });
}

BBPoly multiply(const BBPoly& p, const BBPoly& q) {
  const int n = p.degree();
  const int m = q.degree();
  BBPoly out = BBPoly::zero(n + m);
  // B_a^n B_b^m = C(n,a) C(m,b) / C(n+m,a+b) B_(a+b)^(n+m)
  for (const TriIndex& a : tri_indices(n)) {
    const Rational& ca = p[a];
    if (ca.is_zero()) continue;
    const BigInt wa = multinomial(a.i, a.j, a.k);
    for (const TriIndex& b : tri_indices(m)) {
      const Rational& cb = q[b];
      if (cb.is_zero()) continue;
      const TriIndex s{a.i + b.i, a.j + b.j, a.k + b.k};
      out[s] += ca * cb * Rational(wa * multinomial(b.i, b.j, b.k), multinomial(s.i, s.j, s.k));
    }
  }
  return out;
}

Rational bernstein_integral(int n) {
  if (n < 0) throw std::domain_error("negative degree");
  return Rational(BigInt(1), binom(n + 2, 2));
}

PiRational integrate_monomial(int a, int b, int c, const Rational& alpha, const Rational& beta,
                              const Rational& gamma_exp) {
  const Rational half(1, 2);
  auto supported = [&](const Rational& e) { return e.is_zero() || e == -half; };
  if (!supported(alpha) || !supported(beta)) {
    throw std::domain_error("u and v exponent shifts must be 0 or -1/2");
  }
  if (!gamma_exp.is_integer() || gamma_exp.sign() < 0) {
    throw std::domain_error("(1-w) exponent must be a non-negative integer");
  }
  if (a < 0 || b < 0 || c < 0) throw std::domain_error("monomial exponents must be non-negative");

  // u = t(1-w), v = (1-t)(1-w), dA = (1-w) dt dw:
  //   B(a+alpha+1, b+beta+1) * B(c+1, a+alpha+b+beta+gamma+2)
  const int twice_alpha = alpha.is_zero() ? 0 : -1;
  const int twice_beta = beta.is_zero() ? 0 : -1;
  const int g = static_cast<int>(gamma_exp.numerator().get_si());
  const HalfFactorialValue t_part =
      beta_half_integer(2 * a + twice_alpha + 2, 2 * b + twice_beta + 2);
  const HalfFactorialValue w_part =
      beta_half_integer(2 * c + 2, 2 * (a + b + g) + twice_alpha + twice_beta + 4);
  const HalfFactorialValue value = t_part * w_part;
  switch (value.sqrt_pi_power) {
    case 0: return PiRational::rational(value.coeff);
    case 2: return PiRational::pi_multiple(value.coeff);
    default: throw std::logic_error("monomial integral left the a + b*pi field");
  }
}

Rational inner_product_unweighted(const BBPoly& p, const BBPoly& q) {
  const BBPoly pq = multiply(p, q);
  Rational sum;
  for (const Rational& c : pq.coeffs()) sum += c;
  // Each B_zeta^N integrates to area(T) / C(N+2, 2) and area(T) = 1/2.
  return sum * bernstein_integral(pq.degree()) * Rational(1, 2);
}

Rational inner_product_orthogonal_closed_form(const BBPoly& p, int m, const BBPoly& q) {
  const int n = p.degree();
  if (q.degree() != n) throw std::invalid_argument("closed form needs equal degrees");
  if (m < 0 || m > n) throw std::invalid_argument("closed form needs 0 <= m <= n");
  Rational dot;
  for (std::size_t a = 0; a < p.coeffs().size(); ++a) dot += p.coeffs()[a] * q.coeffs()[a];
  const BigInt nf = factorial(n);
  return dot * Rational(nf * nf, factorial(n + m + 2) * factorial(n - m));
}

bool is_orthogonal_to_lower_degree(const BBPoly& p) {
  const int n = p.degree();
  if (n == 0) return true;
  for (const TriIndex& e : tri_indices(n - 1)) {
    const Rational s = Rational(e.i + 1) * p[{e.i + 1, e.j, e.k}] +
                       Rational(e.j + 1) * p[{e.i, e.j + 1, e.k}] +
                       Rational(e.k + 1) * p[{e.i, e.j, e.k + 1}];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace tricheb
