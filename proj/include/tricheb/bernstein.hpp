#ifndef TRICHEB_BERNSTEIN_HPP_
#define TRICHEB_BERNSTEIN_HPP_

#include "tricheb/combinatorics.hpp"
#include "tricheb/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace tricheb {

/// Multi-index (i, j, k) of a triangular Bernstein polynomial.
struct TriIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  constexpr int degree() const { return i + j + k; }
  friend auto operator<=>(const TriIndex&, const TriIndex&) = default;
};

/// Number of Bernstein polynomials of degree n on the triangle.
constexpr std::size_t tri_count(int n) {
  return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

/// Position of idx in the dense layout: i descending, then j descending.
constexpr std::size_t tri_offset(const TriIndex& idx) {
  const int n = idx.degree();
  const auto d = static_cast<std::size_t>(n - idx.i);
  return d * (d + 1) / 2 + static_cast<std::size_t>(n - idx.i - idx.j);
}

/// All indices of degree n in dense-layout order.
std::vector<TriIndex> tri_indices(int n);

/// Barycentric coordinates (u, v, w) with u, v, w >= 0 and u + v + w = 1.
/// Exact for Rational; within 1e-12 for double.
template <class T>
class BaryPoint {
 public:
  static BaryPoint make(T u, T v, T w) {
    if constexpr (std::is_floating_point_v<T>) {
      if (u < -1e-12 || v < -1e-12 || w < -1e-12) {
        throw std::invalid_argument("barycentric coordinates must be non-negative");
      }
      if (std::abs(u + v + w - 1.0) > 1e-12) {
        throw std::invalid_argument("barycentric coordinates must sum to 1");
      }
      u = std::max(u, T(0));
      v = std::max(v, T(0));
      w = std::max(w, T(0));
    } else {
      if (u < T(0) || v < T(0) || w < T(0)) {
        throw std::invalid_argument("barycentric coordinates must be non-negative");
      }
      if (u + v + w != T(1)) throw std::invalid_argument("barycentric coordinates must sum to 1");
    }
    return BaryPoint(std::move(u), std::move(v), std::move(w));
  }
  static BaryPoint from_uv(T u, T v) {
    T w = T(1) - u - v;
    return make(std::move(u), std::move(v), std::move(w));
  }

  const T& u() const { return u_; }
  const T& v() const { return v_; }
  const T& w() const { return w_; }

 private:
  BaryPoint(T u, T v, T w) : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}
  T u_, v_, w_;
};

using BaryPointF = BaryPoint<double>;
using BaryPointQ = BaryPoint<Rational>;

namespace detail {

template <class T>
T from_bigint(const BigInt& z) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(z.get_d());
  } else {
    return T(z);
  }
}

template <class T>
std::vector<T> powers(const T& x, int n) {
  std::vector<T> p(static_cast<std::size_t>(n + 1), T(1));
  for (int e = 1; e <= n; ++e) p[e] = p[e - 1] * x;
  return p;
}

}  // namespace detail

/// C(n,i) x^i (1-x)^(n-i).  Throws std::out_of_range unless 0 <= i <= n.
template <class T>
T bernstein_eval_uni(int i, int n, const T& x) {
  if (i < 0 || i > n) throw std::out_of_range("Bernstein index out of range");
  const T one_minus = T(1) - x;
  return detail::from_bigint<T>(binom(n, i)) * detail::powers(x, i)[i] *
         detail::powers(one_minus, n - i)[n - i];
}

/// Evaluates sum_i coeffs[i] B_i^n(x), n = coeffs.size() - 1.
template <class T>
T eval_bernstein_uni(std::span<const T> coeffs, const T& x) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
  std::vector<T> b(coeffs.begin(), coeffs.end());
  const T y = T(1) - x;
  for (std::size_t level = b.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) b[i] = y * b[i] + x * b[i + 1];
  }
  return b[0];
}

/// Univariate degree elevation n -> n+1.
template <class T>
std::vector<T> elevate_uni(std::span<const T> coeffs) {
  const auto n = static_cast<int>(coeffs.size()) - 1;
  std::vector<T> out(coeffs.size() + 1);
  out.front() = coeffs.front();
  out.back() = coeffs.back();
  for (int i = 1; i <= n; ++i) {
    out[i] = (T(i) * coeffs[i - 1] + T(n + 1 - i) * coeffs[i]) / T(n + 1);
  }
  return out;
}

/// (n!/(i!j!k!)) u^i v^j w^k.
template <class T>
T bernstein_eval_tri(const TriIndex& idx, const BaryPoint<T>& p) {
  if (idx.i < 0 || idx.j < 0 || idx.k < 0) throw std::out_of_range("negative Bernstein index");
  return detail::from_bigint<T>(multinomial(idx.i, idx.j, idx.k)) *
         detail::powers(p.u(), idx.i)[idx.i] * detail::powers(p.v(), idx.j)[idx.j] *
         detail::powers(p.w(), idx.k)[idx.k];
}

/// Polynomial over the triangle in degree-n Bernstein-Bezier form with dense
/// coefficient storage (see tri_offset for the layout).
template <class T>
class BernsteinPoly {
 public:
  BernsteinPoly() : degree_(0), coeffs_(1, T(0)) {}
  BernsteinPoly(int degree, std::vector<T> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    if (coeffs_.size() != tri_count(degree)) {
      throw std::invalid_argument("expected " + std::to_string(tri_count(degree)) +
                                  " coefficients for degree " + std::to_string(degree));
    }
  }

  static BernsteinPoly constant(int degree, const T& c) {
    return BernsteinPoly(degree, std::vector<T>(tri_count(degree), c));
  }
  static BernsteinPoly zero(int degree) { return constant(degree, T(0)); }
  static BernsteinPoly basis(const TriIndex& idx) {
    BernsteinPoly p = zero(idx.degree());
    p.coeffs_[tri_offset(idx)] = T(1);
    return p;
  }

  int degree() const { return degree_; }
  std::span<const T> coeffs() const { return coeffs_; }

  const T& operator[](const TriIndex& idx) const { return coeffs_[checked(idx)]; }
  T& operator[](const TriIndex& idx) { return coeffs_[checked(idx)]; }

  /// de Casteljau for floating point; direct expansion for exact scalars.
  T operator()(const BaryPoint<T>& p) const {
    if constexpr (std::is_floating_point_v<T>) {
      return de_casteljau(p);
    } else {
      return expand_at(p);
    }
  }

  /// Same polynomial in the degree-(n+1) basis.
  BernsteinPoly elevate() const {
    const int m = degree_ + 1;
    BernsteinPoly out = zero(m);
    for (const TriIndex& z : tri_indices(m)) {
      T acc(0);
      if (z.i > 0) acc += T(z.i) * (*this)[{z.i - 1, z.j, z.k}];
      if (z.j > 0) acc += T(z.j) * (*this)[{z.i, z.j - 1, z.k}];
      if (z.k > 0) acc += T(z.k) * (*this)[{z.i, z.j, z.k - 1}];
      out.coeffs_[tri_offset(z)] = acc / T(m);
    }
    return out;
  }

  BernsteinPoly elevate_to(int target) const {
    if (target < degree_) throw std::invalid_argument("cannot lower the degree by elevation");
    BernsteinPoly p = *this;
    while (p.degree_ < target) p = p.elevate();
    return p;
  }

  template <class U, class Convert>
  BernsteinPoly<U> map(Convert&& convert) const {
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const T& c : coeffs_) out.push_back(convert(c));
    return BernsteinPoly<U>(degree_, std::move(out));
  }

  BernsteinPoly& operator+=(const BernsteinPoly& o) {
    if (o.degree_ != degree_) *this = elevate_to(std::max(degree_, o.degree_));
    const BernsteinPoly rhs = o.elevate_to(degree_);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] += rhs.coeffs_[a];
    return *this;
  }
  BernsteinPoly& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    return *this;
  }
  friend BernsteinPoly operator+(BernsteinPoly a, const BernsteinPoly& b) { return a += b; }
  friend BernsteinPoly operator*(BernsteinPoly a, const T& s) { return a *= s; }
  friend BernsteinPoly operator*(const T& s, BernsteinPoly a) { return a *= s; }
  friend bool operator==(const BernsteinPoly&, const BernsteinPoly&) = default;

 private:
  std::size_t checked(const TriIndex& idx) const {
    if (idx.i < 0 || idx.j < 0 || idx.k < 0 || idx.degree() != degree_) {
      throw std::out_of_range("index does not belong to degree " + std::to_string(degree_));
    }
    return tri_offset(idx);
  }

  T de_casteljau(const BaryPoint<T>& p) const {
    std::vector<T> b = coeffs_;
    for (int level = degree_; level > 0; --level) {
      std::vector<T> next(tri_count(level - 1));
      for (const TriIndex& z : tri_indices(level - 1)) {
        next[tri_offset(z)] = p.u() * b[tri_offset({z.i + 1, z.j, z.k})] +
                              p.v() * b[tri_offset({z.i, z.j + 1, z.k})] +
                              p.w() * b[tri_offset({z.i, z.j, z.k + 1})];
      }
      b = std::move(next);
    }
    return b[0];
  }

  T expand_at(const BaryPoint<T>& p) const {
    const auto pu = detail::powers(p.u(), degree_);
    const auto pv = detail::powers(p.v(), degree_);
    const auto pw = detail::powers(p.w(), degree_);
    T acc(0);
    for (const TriIndex& z : tri_indices(degree_)) {
      const T& c = coeffs_[tri_offset(z)];
      if (c == T(0)) continue;
      acc += c * detail::from_bigint<T>(multinomial(z.i, z.j, z.k)) * pu[z.i] * pv[z.j] * pw[z.k];
    }
    return acc;
  }

  int degree_;
  std::vector<T> coeffs_;
};

using BBPoly = BernsteinPoly<Rational>;
using BBPolyF = BernsteinPoly<double>;

BBPolyF to_float(const BBPoly& p);

/// Exact product of two BB polynomials, expressed in degree n + m.
BBPoly multiply(const BBPoly& p, const BBPoly& q);

/// Integral of any B_zeta^n over T divided by the area of T: 1 / C(n+2, 2).
Rational bernstein_integral(int n);

/// (1/Delta) * integral over the reference triangle (Delta = 1) of
///   u^(a+alpha) v^(b+beta) w^c (1-w)^gamma_exp,
/// with alpha, beta in {0, -1/2} and integer gamma_exp >= 0.
PiRational integrate_monomial(int a, int b, int c, const Rational& alpha, const Rational& beta,
                              const Rational& gamma_exp);

/// Unweighted <p, q> = (1/Delta) * integral of p q over T, exact.
Rational inner_product_unweighted(const BBPoly& p, const BBPoly& q);

/// Closed form of <p, q> for p of degree n lying in the space of degree-m
/// polynomials orthogonal to every lower degree (m <= n), q of degree n.
Rational inner_product_orthogonal_closed_form(const BBPoly& p, int m, const BBPoly& q);

/// Finite certificate that p (degree n) is orthogonal, in the unweighted inner
/// product, to every polynomial of degree n - 1: each degree-elevated basis
/// function B_eta^(n-1) has zero coefficient-wise dot product with p.
/// Vacuously true for n = 0.
bool is_orthogonal_to_lower_degree(const BBPoly& p);

}  // namespace tricheb

#endif  // TRICHEB_BERNSTEIN_HPP_
