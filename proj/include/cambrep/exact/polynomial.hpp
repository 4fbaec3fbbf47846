#pragma once

#include <string>
#include <vector>

#include "cambrep/exact/scalar.hpp"

namespace cambrep::exact {

/// Dense univariate polynomial with big-integer coefficients, stored from
/// the constant term upward. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int power) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Integer operator()(const Integer& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);

  /// "x^2 + x + 1" style rendering.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace cambrep::exact
