#ifndef TRICHEB_EXACTNUM_HPP_
#define TRICHEB_EXACTNUM_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tricheb {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : q_(std::is_signed_v<I> ? mpq_class(static_cast<long>(value))
                               : mpq_class(static_cast<unsigned long>(value))) {}
  explicit Rational(const BigInt& value) : q_(value) {}
  /// Throws std::domain_error when the denominator is zero.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on bad syntax.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Nearest double.  Throws std::overflow_error if out of range.
  double to_double() const;
  /// "p/q", or "p" for integers.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_{0};
};

Rational inverse(const Rational& a);
Rational pow(const Rational& base, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// Binary operation dispatch; kDiv by zero throws std::domain_error.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Exact value rat + pi * π.  Only linear expressions in π are representable:
/// multiplying two values that both carry a π part throws std::domain_error.
class PiRational {
 public:
  PiRational() = default;
  PiRational(Rational rat, Rational pi) : rat_(std::move(rat)), pi_(std::move(pi)) {}
  static PiRational rational(Rational r) { return {std::move(r), Rational{}}; }
  static PiRational pi_multiple(Rational r) { return {Rational{}, std::move(r)}; }

  const Rational& rat_part() const { return rat_; }
  const Rational& pi_part() const { return pi_; }
  bool is_zero() const { return rat_.is_zero() && pi_.is_zero(); }

  /// Correctly rounded double.  Throws std::overflow_error if out of range.
  double to_double() const;

  PiRational& operator+=(const PiRational& o) { rat_ += o.rat_; pi_ += o.pi_; return *this; }
  PiRational& operator-=(const PiRational& o) { rat_ -= o.rat_; pi_ -= o.pi_; return *this; }
  PiRational& operator*=(const Rational& s) { rat_ *= s; pi_ *= s; return *this; }

  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator-(const PiRational& a) { return {-a.rat_, -a.pi_}; }
  friend PiRational operator*(PiRational a, const Rational& s) { return a *= s; }
  friend PiRational operator*(const Rational& s, PiRational a) { return a *= s; }
  friend PiRational operator*(const PiRational& a, const PiRational& b);

  friend bool operator==(const PiRational& a, const PiRational& b) = default;

 private:
  Rational rat_;
  Rational pi_;
};

std::ostream& operator<<(std::ostream& os, const PiRational& x);

}  // namespace tricheb

#endif  // TRICHEB_EXACTNUM_HPP_
