#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cambrep/exact/matrix.hpp"
#include "cambrep/poset/poset.hpp"
#include "cambrep/reptype/certificate.hpp"

namespace cambrep::quiverrep {

using exact::Rational;
using exact::RationalMatrix;
using poset::Cover;
using poset::Elem;
using poset::Poset;

/// Functor from a poset to finite-dimensional Q-vector spaces: a dimension
/// per element and a dims[y] x dims[x] matrix per cover (x, y), stored in the
/// order of base.covers().
struct PosetRep {
  Poset base;
  std::vector<int> dims;
  std::vector<RationalMatrix> maps;

  const RationalMatrix& map(Elem x, Elem y) const;
  RationalMatrix& map(Elem x, Elem y);
  int total_dim() const;
};

/// Identity maps everywhere, dimension d at every element.
PosetRep constant_rep(const Poset& p, int d = 1);

struct RepCheck {
  bool ok = true;
  std::optional<std::pair<Elem, Elem>> pair;  // first pair with two different path products
  explicit operator bool() const { return ok; }
};

/// Checks that all cover paths between two elements compose to the same
/// matrix. Throws std::invalid_argument on a dimension mismatch.
RepCheck validate_rep(const PosetRep& r);

/// Basis of Hom(M, N): tuples (f_x) with N(e) f_x = f_y M(e) on every cover.
struct HomSpace {
  std::vector<std::vector<RationalMatrix>> basis;  // basis[k][x] is N.dims[x] x M.dims[x]
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Throws std::invalid_argument unless M and N live on the same poset.
HomSpace hom_space(const PosetRep& m, const PosetRep& n);

/// True iff some element of Hom(M, N) is invertible at every vertex. For
/// Hom spaces of dimension > 1 every point of a grid {0..D}^k is tried, with
/// D the total dimension, which decides the question exactly; throws
/// std::length_error when that grid exceeds kMaxIsoGrid points.
bool is_isomorphic_reps(const PosetRep& m, const PosetRep& n);
inline constexpr std::size_t kMaxIsoGrid = 1'000'000;

/// Every vertex k, every cover the identity except alpha, which carries
/// lambda. Throws std::invalid_argument if y is not a cycle or alpha is not
/// a cover of y.
PosetRep build_M_lambda(const Poset& y, Cover alpha, const Rational& lambda);

/// The square-cycle pattern re-indexed on its own poset X = Y + omega.
struct SquareCyclePoset {
  Poset x;                  // induced subposet on cycle + omega, omega last
  std::vector<Elem> cycle;  // indices in x, cyclic order
  Elem omega, a, b, apex;   // indices in x
  std::vector<Elem> ambient;  // element of the original poset for each index of x
  bool omega_below() const { return x.less(omega, a); }
  /// The cycle alone, Y, with its own numbering (cycle[i] -> i).
  Poset cycle_poset() const;
};

/// Validates `c` on p and re-indexes it. Throws std::invalid_argument with
/// the validation diagnostic otherwise.
SquareCyclePoset square_cycle_poset(const Poset& p, const reptype::SquareCycle& c);

/// Cycle edge farthest (along the cycle) from the two square edges, as a
/// cover of s.x. Ties go to the smallest pair of ambient indices.
Cover default_alpha(const SquareCyclePoset& s);

/// dims 2 on the cycle and 1 at omega; alpha carries diag(lambda, mu), the
/// other cycle covers the identity, and the omega covers the diagonal (1,1)^T
/// (omega minimal) or the sum map (1 1) (omega maximal). Throws
/// std::invalid_argument if lambda == mu or alpha is not a cycle cover outside
/// the square.
PosetRep build_M_lambda_mu(const SquareCyclePoset& s, const Rational& lambda, const Rational& mu,
                           std::optional<Cover> alpha = std::nullopt);

/// {"poset": ..., "dims": [...], "maps": {"i->j": [["p/q", ...], ...]}}
nlohmann::json rep_to_json(const PosetRep& r);
PosetRep rep_from_json(const nlohmann::json& doc);

}  // namespace cambrep::quiverrep
