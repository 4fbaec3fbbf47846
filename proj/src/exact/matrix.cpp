#include "cambrep/exact/matrix.hpp"

namespace cambrep::exact {

bool is_integral(const RationalMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1) return false;
    }
  }
  return true;
}

RationalMatrix inverse_unimodular(const RationalMatrix& m) {
  if (!is_integral(m)) throw std::domain_error("inverse_unimodular: non-integral input");
  auto inv = inverse(m);
  if (!inv) throw std::domain_error("inverse_unimodular: singular matrix");
  if (!is_integral(*inv)) throw std::domain_error("inverse_unimodular: determinant is not +-1");
  return *inv;
}

IntPolynomial char_poly(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  if (!is_integral(m)) throw std::invalid_argument("char_poly: entries must be integers");
  const Index n = m.rows();
  RationalMatrix h = m;

  // Similarity reduction to upper Hessenberg form.
  for (Index col = 0; col + 2 < n; ++col) {
    const Index target = col + 1;
    Index p = target;
    while (p < n && h(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != target) {
      h.row(p).swap(h.row(target));
      h.col(p).swap(h.col(target));
    }
    for (Index j = target + 1; j < n; ++j) {
      if (h(j, col) == 0) continue;
      const Rational u = h(j, col) / h(target, col);
      h.row(j) -= u * h.row(target);
      h.col(target) += u * h.col(j);
    }
  }

  // Characteristic polynomials of the leading principal blocks.
  std::vector<std::vector<Rational>> polys;
  polys.push_back({Rational(1)});
  for (Index k = 0; k < n; ++k) {
    const auto& prev = polys.back();
    std::vector<Rational> next(prev.size() + 1, Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] += prev[i];
      next[i] -= h(k, k) * prev[i];
    }
    Rational sub_product = 1;
    for (Index i = k - 1; i >= 0; --i) {
      sub_product *= h(i + 1, i);
      if (sub_product == 0) break;
      const Rational f = h(i, k) * sub_product;
      if (f == 0) continue;
      const auto& q = polys[static_cast<std::size_t>(i)];
      for (std::size_t t = 0; t < q.size(); ++t) next[t] -= f * q[t];
    }
    polys.push_back(std::move(next));
  }

  std::vector<Integer> coeffs;
  for (const Rational& c : polys.back()) {
    if (denominator(c) != 1) throw std::logic_error("char_poly: non-integral coefficient");
    coeffs.push_back(numerator(c));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cambrep::exact
