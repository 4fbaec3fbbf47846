#include "cambrep/reptype/invariants.hpp"

namespace cambrep::reptype {

exact::RationalMatrix cartan_matrix(const poset::Poset& p) {
  const auto& order = p.linear_extension();
  const auto n = static_cast<exact::Index>(p.size());
  exact::RationalMatrix c = exact::RationalMatrix::Zero(n, n);
  for (exact::Index i = 0; i < n; ++i) {
    for (exact::Index j = i; j < n; ++j) {
      if (p.leq(order[i], order[j])) c(i, j) = 1;
    }
  }
  return c;
}

exact::RationalMatrix coxeter_matrix(const poset::Poset& p) {
  const auto c = cartan_matrix(p);
  const exact::RationalMatrix inv = exact::inverse_unimodular(c);
  return -(inv.transpose() * c);
}

exact::IntPolynomial coxeter_polynomial(const poset::Poset& p) { return exact::char_poly(coxeter_matrix(p)); }

Invariants compute_invariants(const poset::Poset& p, bool with_polynomial) {
  Invariants inv;
  inv.size = p.size();
  auto reg = poset::hasse_regularity(p);
  inv.degrees = std::move(reg.degrees);
  inv.regular = reg.uniform;
  inv.lattice = poset::is_lattice(p);
  inv.path_unique = poset::is_path_unique(p);
  if (with_polynomial && p.size() <= kMaxPolynomialSize) inv.coxeter_polynomial = coxeter_polynomial(p);
  return inv;
}

nlohmann::json invariants_to_json(const Invariants& inv) {
  nlohmann::json doc;
  doc["size"] = inv.size;
  doc["degrees"] = inv.degrees;
  doc["regular"] = inv.regular ? nlohmann::json(*inv.regular) : nlohmann::json(nullptr);
  doc["lattice"] = inv.lattice;
  doc["path_unique"] = inv.path_unique;
  if (inv.coxeter_polynomial) {
    std::vector<std::string> coeffs;
    for (int k = 0; k <= inv.coxeter_polynomial->degree(); ++k) coeffs.push_back(inv.coxeter_polynomial->coefficient(k).str());
    doc["coxeter_polynomial"] = inv.coxeter_polynomial->to_string();
    doc["coxeter_coefficients"] = coeffs;
  }
  return doc;
}

}  // namespace cambrep::reptype
