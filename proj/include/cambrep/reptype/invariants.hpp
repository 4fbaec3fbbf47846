#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "cambrep/exact/matrix.hpp"
#include "cambrep/exact/polynomial.hpp"
#include "cambrep/poset/poset.hpp"

namespace cambrep::reptype {

/// Zeta matrix C[i][j] = 1 iff e_i <= e_j, rows and columns in the order of
/// p.linear_extension(), so C is upper unitriangular.
exact::RationalMatrix cartan_matrix(const poset::Poset& p);
/// -C^{-T} C. Integral because C is unitriangular.
exact::RationalMatrix coxeter_matrix(const poset::Poset& p);
exact::IntPolynomial coxeter_polynomial(const poset::Poset& p);

struct Invariants {
  int size = 0;
  std::vector<int> degrees;
  std::optional<int> regular;
  bool lattice = false;
  bool path_unique = false;
  std::optional<exact::IntPolynomial> coxeter_polynomial;  // omitted above kMaxPolynomialSize
};

inline constexpr int kMaxPolynomialSize = 160;

Invariants compute_invariants(const poset::Poset& p, bool with_polynomial = true);
nlohmann::json invariants_to_json(const Invariants& inv);

}  // namespace cambrep::reptype
