#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cambrep/poset/poset.hpp"
#include "cambrep/reptype/graph_class.hpp"

namespace cambrep::reptype {

using poset::Elem;
using poset::Poset;

enum class Verdict { Finite, Tame, Wild, Unknown };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct Certificate;

/// Path-unique induced subposet whose Hasse graph is wild.
struct HereditaryWild {
  std::vector<Elem> witness;
};

/// Cycle Y plus an extra vertex omega joined to a and b by covers, where
/// {omega, a, b, apex} is a commutative square and a, b are cycle vertices
/// adjacent to apex on the cycle.
struct SquareCycle {
  std::vector<Elem> cycle;  // in cyclic order
  Elem omega = -1;
  std::array<Elem, 4> square{};  // omega, a, b, apex
};

/// An element with at least five upper (or lower) covers.
struct Star5 {
  Elem center = -1;
  std::vector<Elem> leaves;
  bool upward = true;  // leaves are upper covers
};

/// Witness from the case split on the covers of the bottom of a 4-regular
/// lattice: case 1 is {a, b1..b4, c}, case 2 is {b1, b2, b3, c12, c23, c13, c14}.
struct FourRegular {
  int case_tag = 1;
  std::vector<Elem> witness;
};

/// Morphism with connected fibers onto a poset certified wild.
struct Contraction {
  poset::PosetMorphism morphism;
  std::shared_ptr<const Certificate> target;
};

/// Sequence of "flip" / "flip_dual" moves ending at a path-unique poset with
/// Dynkin graph.
struct FiniteViaFlipFlop {
  std::vector<std::string> moves;
  std::string shape;
};

/// The poset itself is path-unique with Dynkin graph.
struct FiniteHereditary {
  std::string shape;
};

/// Isomorphism onto cube(3) (map[x] is the cube element of x) and the six
/// middle elements, which form a path-unique affine ~A5 subposet. Tameness
/// itself is by citation.
struct TameCube {
  std::vector<Elem> iso;
  std::vector<Elem> middle;
  std::string citation;
};

/// Bottom, top and two chains of equal length between them: the weak order of
/// a rank 2 group, finite by citation.
struct CitedFinite {
  std::string citation;
};

using CertificateBody = std::variant<HereditaryWild, SquareCycle, Star5, FourRegular, Contraction,
                                     FiniteViaFlipFlop, FiniteHereditary, TameCube, CitedFinite>;

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  CertificateBody body;

  std::string variant_name() const;
  /// Elements of the poset the certificate points at (witness, cycle plus
  /// omega, star, middle layer); empty for whole-poset certificates.
  std::vector<Elem> witness() const;
};

inline constexpr const char* kCubeCitation = "lenzing-weighted-projective-line";
inline constexpr const char* kRank2Citation = "rank-2-weak-order-finite";

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Re-derives every claim of c from p. Nothing cached in c is trusted.
Validation validate_certificate(const Poset& p, const Certificate& c);

/// Checks shared by the hereditary variants: distinct in-range elements, the
/// induced subposet is path-unique and connected, and its graph class.
Validation check_hereditary(const Poset& p, const std::vector<Elem>& subset, GraphKind want);

/// Undirected Hasse graph of the induced subposet on `subset`.
Graph induced_graph(const Poset& p, const std::vector<Elem>& subset);

nlohmann::json certificate_to_json(const Certificate& c);
/// Inverse of certificate_to_json. Throws std::invalid_argument on a
/// malformed document.
Certificate certificate_from_json(const nlohmann::json& doc);

}  // namespace cambrep::reptype
