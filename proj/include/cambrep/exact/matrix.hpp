#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cambrep/exact/polynomial.hpp"
#include "cambrep/exact/scalar.hpp"

namespace cambrep::exact {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using ExactMatrix = Matrix<QuadraticScalar>;
using ExactVector = Vector<QuadraticScalar>;

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;     // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the field of `Scalar`.
template <typename Scalar>
RowEchelon<Scalar> row_reduce(Matrix<Scalar> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

/// Exact basis of {x : m x = 0}, one vector per free column.
template <typename Scalar>
std::vector<Vector<Scalar>> nullspace(const Matrix<Scalar>& m) {
  const auto ech = row_reduce(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v(ech.pivots[r]) = -ech.reduced(static_cast<Index>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  auto ech = row_reduce(std::move(aug));
  if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  return Matrix<Scalar>(ech.reduced.rightCols(n));
}

bool is_integral(const RationalMatrix& m);

/// Inverse of an integer matrix with determinant +-1; the result is checked
/// to be integral. Throws std::domain_error otherwise.
RationalMatrix inverse_unimodular(const RationalMatrix& m);

/// det(xI - m) for a square matrix with integer entries.
/// Throws std::invalid_argument for non-square or non-integral input.
IntPolynomial char_poly(const RationalMatrix& m);

enum class DefinitenessKind { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct Definiteness {
  DefinitenessKind kind;
  Index corank = 0;  // dimension of the kernel when PositiveSemidefinite
};

/// Classifies a symmetric matrix by symmetric Gaussian elimination.
///
/// A negative pivot, or a zero pivot with a nonzero entry left in its row,
/// proves indefiniteness. Zero pivots with empty rows count toward the corank,
/// which is cross-checked against the nullspace dimension.
template <typename Scalar>
Definiteness definiteness(const Matrix<Scalar>& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("definiteness: matrix is not square");
  const Index n = s.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (!(s(i, j) == s(j, i))) throw std::invalid_argument("definiteness: matrix is not symmetric");
    }
  }
  Matrix<Scalar> a = s;
  Index zero_pivots = 0;
  for (Index k = 0; k < n; ++k) {
    const int pivot_sign = sign(a(k, k));
    if (pivot_sign < 0) return {DefinitenessKind::Indefinite, 0};
    if (pivot_sign == 0) {
      for (Index j = k + 1; j < n; ++j) {
        if (!(a(k, j) == Scalar(0))) return {DefinitenessKind::Indefinite, 0};
      }
      ++zero_pivots;
      continue;
    }
    const Scalar p = a(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == Scalar(0)) continue;
      const Scalar f = a(i, k) / p;
      for (Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  if (zero_pivots == 0) return {DefinitenessKind::PositiveDefinite, 0};
  const auto kernel = static_cast<Index>(nullspace(s).size());
  if (kernel != zero_pivots) {
    throw std::logic_error("definiteness: zero-pivot count disagrees with nullspace dimension");
  }
  return {DefinitenessKind::PositiveSemidefinite, zero_pivots};
}

}  // namespace cambrep::exact
