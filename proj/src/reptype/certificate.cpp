#include "cambrep/reptype/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cambrep/poset/constructions.hpp"

namespace cambrep::reptype {

namespace {

Validation fail(std::string why) { return {false, std::move(why)}; }

std::string list(const std::vector<Elem>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << "}";
  return out.str();
}

Validation check_subset(const Poset& p, const std::vector<Elem>& subset) {
  if (subset.empty()) return fail("empty witness");
  std::set<Elem> seen;
  for (Elem x : subset) {
    if (x < 0 || x >= p.size()) return fail("witness element " + std::to_string(x) + " out of range");
    if (!seen.insert(x).second) return fail("witness element " + std::to_string(x) + " repeated");
  }
  return {};
}

using Edge = std::pair<Elem, Elem>;

Edge edge(Elem x, Elem y) { return {std::min(x, y), std::max(x, y)}; }

// Hasse edges of the induced subposet, in the element numbering of p.
std::set<Edge> induced_edges(const Poset& p, const std::vector<Elem>& subset) {
  const Poset s = poset::induced_subposet(p, subset);
  std::set<Edge> out;
  for (const auto& [x, y] : s.covers()) out.insert(edge(subset[x], subset[y]));
  return out;
}

Verdict expected_verdict(const CertificateBody& body) {
  return std::visit(
      [](const auto& b) -> Verdict {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, TameCube>) return Verdict::Tame;
        if constexpr (std::is_same_v<T, FiniteViaFlipFlop> || std::is_same_v<T, FiniteHereditary> ||
                      std::is_same_v<T, CitedFinite>) {
          return Verdict::Finite;
        }
        return Verdict::Wild;
      },
      body);
}

std::optional<Elem> unique_min(const Poset& p) {
  auto m = p.minimal_elements();
  if (m.size() != 1) return std::nullopt;
  return m[0];
}

Validation validate_body(const Poset& p, const HereditaryWild& c) { return check_hereditary(p, c.witness, GraphKind::Wild); }

Validation validate_body(const Poset& p, const SquareCycle& c) {
  const auto& y = c.cycle;
  if (auto v = check_subset(p, y); !v) return v;
  if (y.size() < 4) return fail("cycle has fewer than 4 vertices");
  if (c.omega < 0 || c.omega >= p.size()) return fail("omega out of range");
  if (std::find(y.begin(), y.end(), c.omega) != y.end()) return fail("omega lies on the cycle");
  if (c.square[0] != c.omega) return fail("square does not start at omega");

  std::set<Edge> cycle_edges;
  for (std::size_t i = 0; i < y.size(); ++i) cycle_edges.insert(edge(y[i], y[(i + 1) % y.size()]));
  if (induced_edges(p, y) != cycle_edges) return fail("induced Hasse diagram on Y is not the listed cycle");
  if (!poset::is_path_unique(poset::induced_subposet(p, y))) return fail("Y is not path-unique");

  const Elem a = c.square[1], b = c.square[2], apex = c.square[3];
  auto pos = [&](Elem x) { return std::find(y.begin(), y.end(), x); };
  if (pos(a) == y.end() || pos(b) == y.end() || pos(apex) == y.end() || a == b) {
    return fail("square vertices a, b, apex must be distinct cycle vertices");
  }
  if (!cycle_edges.count(edge(a, apex)) || !cycle_edges.count(edge(b, apex))) {
    return fail("a and b are not both cycle neighbours of the apex");
  }

  std::vector<Elem> x = y;
  x.push_back(c.omega);
  auto want = cycle_edges;
  want.insert(edge(c.omega, a));
  want.insert(edge(c.omega, b));
  if (induced_edges(p, x) != want) return fail("omega is not joined to the cycle by exactly the two edges to a and b");

  const bool below = p.less(c.omega, a) && p.less(c.omega, b) && p.less(a, apex) && p.less(b, apex);
  const bool above = p.less(a, c.omega) && p.less(b, c.omega) && p.less(apex, a) && p.less(apex, b);
  if (!below && !above) return fail("{omega, a, b, apex} is not a square with omega extremal");

  // The only relation of X is the square itself.
  const Poset sx = poset::induced_subposet(p, x);
  const auto counts = poset::path_counts(sx);
  const auto n = static_cast<Elem>(x.size());
  const Elem iw = n - 1;
  const Elem iapex = static_cast<Elem>(pos(apex) - y.begin());
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      const bool square_pair = (below && i == iw && j == iapex) || (above && i == iapex && j == iw);
      const exact::Integer want_max = square_pair ? 2 : 1;
      if (square_pair ? counts[i][j] != 2 : counts[i][j] > want_max) {
        return fail("pair (" + std::to_string(x[i]) + "," + std::to_string(x[j]) + ") has " +
                    counts[i][j].str() + " paths in X");
      }
    }
  }
  return {};
}

Validation validate_body(const Poset& p, const Star5& c) {
  if (c.center < 0 || c.center >= p.size()) return fail("star centre out of range");
  if (c.leaves.size() < 5) return fail("star has fewer than 5 leaves");
  for (Elem l : c.leaves) {
    if (l < 0 || l >= p.size()) return fail("star leaf out of range");
    if (c.upward ? !p.covered_by(c.center, l) : !p.covered_by(l, c.center)) {
      return fail("leaf " + std::to_string(l) + " is not a cover of the centre");
    }
  }
  std::vector<Elem> s{c.center};
  s.insert(s.end(), c.leaves.begin(), c.leaves.end());
  return check_hereditary(p, s, GraphKind::Wild);
}

Validation validate_body(const Poset& p, const FourRegular& c) {
  if (!poset::is_lattice(p)) return fail("not a lattice");
  if (poset::hasse_regularity(p).uniform != 4) return fail("Hasse diagram is not 4-regular");
  const auto bottom = unique_min(p);
  const auto& w = c.witness;
  if (auto v = check_subset(p, w); !v) return v;
  if (c.case_tag == 1) {
    if (w.size() != 6 || w[0] != *bottom) return fail("case 1 witness must be {bottom, b1..b4, c}");
    std::vector<Elem> bs(w.begin() + 1, w.begin() + 5);
    std::vector<Elem> covers = p.upper_covers(*bottom);
    std::sort(bs.begin(), bs.end());
    std::sort(covers.begin(), covers.end());
    if (bs != covers) return fail("b1..b4 are not the covers of the bottom");
    const auto n_covered = std::count_if(bs.begin(), bs.end(), [&](Elem b) { return p.covered_by(b, w[5]); });
    if (n_covered != 1) return fail("c does not cover exactly one b_i");
  } else if (c.case_tag == 2) {
    if (w.size() != 7) return fail("case 2 witness must be {b1, b2, b3, c12, c23, c13, c14}");
    for (int i = 0; i < 3; ++i) {
      if (!p.covered_by(*bottom, w[i])) return fail("b" + std::to_string(i + 1) + " does not cover the bottom");
    }
    const std::array<std::array<int, 3>, 3> pattern{{{3, 0, 1}, {4, 1, 2}, {5, 0, 2}}};
    for (const auto& [cij, bi, bj] : pattern) {
      if (!p.covered_by(w[bi], w[cij]) || !p.covered_by(w[bj], w[cij])) return fail("c_ij does not cover b_i and b_j");
    }
    if (!p.covered_by(w[0], w[6])) return fail("c14 does not cover b1");
  } else {
    return fail("unknown case tag");
  }
  return check_hereditary(p, w, GraphKind::Wild);
}

Validation validate_body(const Poset& p, const Contraction& c) {
  const auto& f = c.morphism;
  if (!(f.source == p)) return fail("morphism source differs from the poset");
  if (static_cast<int>(f.map.size()) != p.size()) return fail("morphism map has the wrong length");
  for (Elem y : f.map) {
    if (y < 0 || y >= f.target.size()) return fail("morphism value out of range");
  }
  if (!poset::is_order_preserving(f)) return fail("morphism is not order-preserving");
  if (!poset::is_surjective(f)) return fail("morphism is not surjective");
  const auto fib = poset::fibers(f);
  for (std::size_t y = 0; y < fib.size(); ++y) {
    if (!poset::is_connected(poset::induced_subposet(p, fib[y]))) {
      return fail("fiber over " + std::to_string(y) + " " + list(fib[y]) + " is not connected");
    }
  }
  if (!c.target) return fail("missing target certificate");
  if (c.target->verdict != Verdict::Wild) return fail("target certificate is not a wild certificate");
  auto inner = validate_certificate(f.target, *c.target);
  if (!inner) return fail("target certificate: " + inner.diagnostic);
  return {};
}

Validation check_dynkin_shape(const Poset& q, const std::string& shape) {
  std::vector<Elem> all(static_cast<std::size_t>(q.size()));
  for (Elem x = 0; x < q.size(); ++x) all[x] = x;
  if (auto v = check_hereditary(q, all, GraphKind::Dynkin); !v) return v;
  const auto gc = graph_class(poset::hasse_graph(q));
  if (gc.shape != shape) return fail("graph is " + gc.to_string() + ", certificate says " + shape);
  return {};
}

Validation validate_body(const Poset& p, const FiniteViaFlipFlop& c) {
  if (c.moves.empty()) return fail("no moves recorded");
  Poset q = p;
  for (const auto& m : c.moves) {
    try {
      if (m == "flip") {
        q = poset::flip_flop(q);
      } else if (m == "flip_dual") {
        q = poset::flip_flop_dual(q);
      } else {
        return fail("unknown move '" + m + "'");
      }
    } catch (const poset::NotBoundedError& e) {
      return fail("move '" + m + "' not applicable: " + e.what());
    }
  }
  return check_dynkin_shape(q, c.shape);
}

Validation validate_body(const Poset& p, const FiniteHereditary& c) { return check_dynkin_shape(p, c.shape); }

Validation validate_body(const Poset& p, const TameCube& c) {
  const Poset cube = poset::cube(3);
  if (p.size() != cube.size() || c.iso.size() != static_cast<std::size_t>(p.size())) return fail("size differs from cube(3)");
  std::set<Elem> image(c.iso.begin(), c.iso.end());
  if (image.size() != c.iso.size() || *image.begin() < 0 || *image.rbegin() >= cube.size()) {
    return fail("map is not a bijection onto cube(3)");
  }
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != cube.leq(c.iso[x], c.iso[y])) return fail("map is not an order isomorphism");
    }
  }
  std::vector<Elem> middle;
  for (Elem x = 0; x < p.size(); ++x) {
    const Elem m = c.iso[x];
    if (!cube.lower_covers(m).empty() && !cube.upper_covers(m).empty()) middle.push_back(x);
  }
  std::vector<Elem> given = c.middle;
  std::sort(given.begin(), given.end());
  if (given != middle) return fail("middle layer is " + list(middle) + ", certificate says " + list(c.middle));
  if (auto v = check_hereditary(p, middle, GraphKind::Affine); !v) return v;
  if (graph_class(induced_graph(p, middle)).shape != "~A5") return fail("middle layer is not ~A5");
  if (c.citation.empty()) return fail("tameness needs a citation");
  return {};
}

Validation validate_body(const Poset& p, const CitedFinite& c) {
  if (c.citation.empty()) return fail("missing citation");
  const auto mins = p.minimal_elements();
  const auto maxs = p.maximal_elements();
  if (mins.size() != 1 || maxs.size() != 1 || p.size() < 4) return fail("not a bounded poset with at least 4 elements");
  const auto reg = hasse_regularity(p);
  if (reg.uniform != 2 || p.covers().size() != static_cast<std::size_t>(p.size())) {
    return fail("Hasse diagram is not a single cycle");
  }
  std::vector<int> lengths;
  for (Elem x : p.upper_covers(mins[0])) {
    int len = 1;
    while (x != maxs[0]) {
      if (p.upper_covers(x).size() != 1) return fail("branch between bottom and top");
      x = p.upper_covers(x)[0];
      ++len;
    }
    lengths.push_back(len);
  }
  if (lengths.size() != 2 || lengths[0] != lengths[1]) return fail("the two chains have different lengths");
  return {};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::Tame: return "Tame";
    case Verdict::Wild: return "Wild";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (auto v : {Verdict::Finite, Verdict::Tame, Verdict::Wild, Verdict::Unknown}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string Certificate::variant_name() const {
  static const char* names[] = {"HereditaryWild", "SquareCycle", "Star5",     "FourRegular", "Contraction",
                                "FiniteViaFlipFlop", "FiniteHereditary", "TameCube", "CitedFinite"};
  return names[body.index()];
}

std::vector<Elem> Certificate::witness() const {
  return std::visit(
      [](const auto& b) -> std::vector<Elem> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, HereditaryWild> || std::is_same_v<T, FourRegular>) {
          return b.witness;
        } else if constexpr (std::is_same_v<T, SquareCycle>) {
          auto w = b.cycle;
          w.push_back(b.omega);
          return w;
        } else if constexpr (std::is_same_v<T, Star5>) {
          std::vector<Elem> w{b.center};
          w.insert(w.end(), b.leaves.begin(), b.leaves.end());
          return w;
        } else if constexpr (std::is_same_v<T, TameCube>) {
          return b.middle;
        } else {
          return {};
        }
      },
      body);
}

Graph induced_graph(const Poset& p, const std::vector<Elem>& subset) {
  return poset::hasse_graph(poset::induced_subposet(p, subset));
}

Validation check_hereditary(const Poset& p, const std::vector<Elem>& subset, GraphKind want) {
  if (auto v = check_subset(p, subset); !v) return v;
  const Poset s = poset::induced_subposet(p, subset);
  if (!poset::is_connected(s)) return fail("induced subposet " + list(subset) + " is not connected");
  if (!poset::is_path_unique(s)) return fail("induced subposet " + list(subset) + " is not path-unique");
  const auto gc = graph_class(poset::hasse_graph(s));
  if (gc.kind != want) {
    return fail("graph of " + list(subset) + " is " + gc.to_string() + ", expected " + to_string(want));
  }
  return {};
}

Validation validate_certificate(const Poset& p, const Certificate& c) {
  if (c.verdict != expected_verdict(c.body)) {
    return fail(c.variant_name() + " cannot support verdict " + to_string(c.verdict));
  }
  try {
    return std::visit([&](const auto& b) { return validate_body(p, b); }, c.body);
  } catch (const std::exception& e) {
    return fail(std::string("validation error: ") + e.what());
  }
}

}  // namespace cambrep::reptype
