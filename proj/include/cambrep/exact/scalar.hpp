#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace cambrep::exact {

using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "p", "-p/q" into a rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt d).
///
/// Pure rationals carry b == 0 and radicand 0. Once a non-rational value
/// enters a computation, every operand must agree on the radicand; mixing
/// Q(sqrt 2) with Q(sqrt 5) throws RadicandMismatch.
class QuadraticScalar {
 public:
  QuadraticScalar() = default;
  QuadraticScalar(int value) : a_(value) {}  // NOLINT(implicit)
  QuadraticScalar(const Rational& value) : a_(value) {}  // NOLINT(implicit)
  QuadraticScalar(Rational a, Rational b, int radicand);

  /// sqrt(d) itself; d must be square-free and >= 2.
  static QuadraticScalar sqrt(int radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  int radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticScalar& operator+=(const QuadraticScalar& o);
  QuadraticScalar& operator-=(const QuadraticScalar& o);
  QuadraticScalar& operator*=(const QuadraticScalar& o);
  QuadraticScalar& operator/=(const QuadraticScalar& o);
  QuadraticScalar operator-() const { return {-a_, -b_, d_}; }

  friend QuadraticScalar operator+(QuadraticScalar x, const QuadraticScalar& y) { return x += y; }
  friend QuadraticScalar operator-(QuadraticScalar x, const QuadraticScalar& y) { return x -= y; }
  friend QuadraticScalar operator*(QuadraticScalar x, const QuadraticScalar& y) { return x *= y; }
  friend QuadraticScalar operator/(QuadraticScalar x, const QuadraticScalar& y) { return x /= y; }

  friend bool operator==(const QuadraticScalar& x, const QuadraticScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadraticScalar& x, const QuadraticScalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadraticScalar& x, const QuadraticScalar& y) { return y < x; }
  friend bool operator<=(const QuadraticScalar& x, const QuadraticScalar& y) { return !(y < x); }
  friend bool operator>=(const QuadraticScalar& x, const QuadraticScalar& y) { return !(x < y); }

  /// Exact sign of a + b*sqrt(d).
  int sign() const;
  /// a^2 - d b^2, the field norm.
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  double to_double() const;
  std::string to_string() const;

 private:
  static int join_radicand(int d1, const Rational& b1, int d2, const Rational& b2);

  Rational a_{0};
  Rational b_{0};
  int d_{0};
};

class RadicandMismatch : public std::domain_error {
 public:
  RadicandMismatch(int d1, int d2);
};

inline int sign(const QuadraticScalar& x) { return x.sign(); }
std::ostream& operator<<(std::ostream& os, const QuadraticScalar& x);

bool is_square_free(int d);

}  // namespace cambrep::exact

namespace Eigen {

template <>
struct NumTraits<cambrep::exact::QuadraticScalar>
    : GenericNumTraits<cambrep::exact::QuadraticScalar> {
  using Real = cambrep::exact::QuadraticScalar;
  using NonInteger = cambrep::exact::QuadraticScalar;
  using Nested = cambrep::exact::QuadraticScalar;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
