#include "tricheb/exactnum.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tricheb {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

// Rounds an MPFR value to double, rejecting anything outside the finite range.
double checked_get_d(mpfr_t x) {
  const double d = mpfr_get_d(x, MPFR_RNDN);
  if (!std::isfinite(d)) throw std::overflow_error("value does not fit in a double");
  return d;
}

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

constexpr mpfr_prec_t kWorkingPrecision = 256;

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && den.front() == '-') {
    throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

double Rational::to_double() const {
  MpfrValue x(kWorkingPrecision);
  mpfr_set_q(x.get(), q_.get_mpq_t(), MPFR_RNDN);
  return checked_get_d(x.get());
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational inverse(const Rational& a) { return Rational(1) / a; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned e = 0; e < exponent; ++e) result *= base;
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

double PiRational::to_double() const {
  MpfrValue pi(kWorkingPrecision);
  MpfrValue acc(kWorkingPrecision);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_mul_q(acc.get(), pi.get(), pi_.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(acc.get(), acc.get(), rat_.raw().get_mpq_t(), MPFR_RNDN);
  return checked_get_d(acc.get());
}

PiRational operator*(const PiRational& a, const PiRational& b) {
  if (!a.pi_.is_zero() && !b.pi_.is_zero()) {
    throw std::domain_error("product of two pi-carrying values leaves the a + b*pi field");
  }
  return {a.rat_ * b.rat_, a.rat_ * b.pi_ + a.pi_ * b.rat_};
}

std::ostream& operator<<(std::ostream& os, const PiRational& x) {
  return os << x.rat_part() << " + " << x.pi_part() << "*pi";
}

}  // namespace tricheb
