#include "cambrep/exact/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace cambrep::exact {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number in '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad number '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad number '" + text + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

bool is_square_free(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

RadicandMismatch::RadicandMismatch(int d1, int d2)
    : std::domain_error("mixed radicands sqrt(" + std::to_string(d1) + ") and sqrt(" +
                        std::to_string(d2) + ")") {}

QuadraticScalar::QuadraticScalar(Rational a, Rational b, int radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (b_ != 0 && !is_square_free(d_)) {
    throw std::domain_error("radicand " + std::to_string(d_) + " is not square-free >= 2");
  }
  if (b_ == 0 && d_ != 0 && !is_square_free(d_)) d_ = 0;
}

QuadraticScalar QuadraticScalar::sqrt(int radicand) { return {Rational(0), Rational(1), radicand}; }

int QuadraticScalar::join_radicand(int d1, const Rational& b1, int d2, const Rational& b2) {
  if (d1 == d2) return d1;
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  // Two different fields may still meet when one side is actually rational.
  if (b1 == 0) return d2;
  if (b2 == 0) return d1;
  throw RadicandMismatch(d1, d2);
}

QuadraticScalar& QuadraticScalar::operator+=(const QuadraticScalar& o) {
  d_ = join_radicand(d_, b_, o.d_, o.b_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator-=(const QuadraticScalar& o) {
  d_ = join_radicand(d_, b_, o.d_, o.b_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator*=(const QuadraticScalar& o) {
  d_ = join_radicand(d_, b_, o.d_, o.b_);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticScalar& QuadraticScalar::operator/=(const QuadraticScalar& o) {
  d_ = join_radicand(d_, b_, o.d_, o.b_);
  Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero in Q(sqrt d)");
  // x / y = x * conj(y) / N(y)
  Rational a = (a_ * o.a_ - Rational(d_) * b_ * o.b_) / n;
  Rational b = (b_ * o.a_ - a_ * o.b_) / n;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

int QuadraticScalar::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with d b^2 (never equal, sqrt d is irrational)
  return (a_ * a_ > Rational(d_) * b_ * b_) ? sa : sb;
}

double QuadraticScalar::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticScalar::to_string() const {
  if (b_ == 0) return a_.str();
  std::ostringstream os;
  if (a_ != 0) os << a_.str() << (b_.sign() > 0 ? "+" : "");
  os << b_.str() << "*sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadraticScalar& x) { return os << x.to_string(); }

}  // namespace cambrep::exact
