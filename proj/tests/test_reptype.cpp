#include <doctest.h>

#include <algorithm>

#include "cambrep/cli/fixtures.hpp"
#include "cambrep/coxeter/cambrian.hpp"
#include "cambrep/poset/constructions.hpp"
#include "cambrep/reptype/graph_class.hpp"
#include "cambrep/reptype/invariants.hpp"
#include "cambrep/reptype/search.hpp"
#include "cambrep/rootposets/root_poset.hpp"

using namespace cambrep;
using namespace cambrep::reptype;
using poset::Poset;

namespace {

Graph cycle_graph(int n) {
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    g[i].push_back((i + 1) % n);
    g[(i + 1) % n].push_back(i);
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g(static_cast<std::size_t>(leaves) + 1);
  for (int i = 1; i <= leaves; ++i) {
    g[0].push_back(i);
    g[i].push_back(0);
  }
  return g;
}

// Tree with one branch vertex and arms of the given lengths.
Graph arms_graph(const std::vector<int>& arms) {
  Graph g(1);
  for (int len : arms) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      const int v = static_cast<int>(g.size());
      g.emplace_back();
      g[prev].push_back(v);
      g[v].push_back(prev);
      prev = v;
    }
  }
  return g;
}

Poset cambrian_poset(const std::string& type, const std::string& c) {
  const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse(type));
  const auto ce = c.empty() ? coxeter::CoxeterElement::standard(g.rank()) : coxeter::CoxeterElement::parse(c, g.rank());
  return coxeter::cambrian(g, ce).poset;
}

// Graph of the witness: one cycle of length L plus one pendant vertex.
bool is_cycle_plus_pendant(const Graph& g, int cycle_length) {
  if (static_cast<int>(g.size()) != cycle_length + 1) return false;
  int edges2 = 0, ones = 0, threes = 0;
  for (const auto& nb : g) {
    edges2 += static_cast<int>(nb.size());
    ones += nb.size() == 1;
    threes += nb.size() == 3;
  }
  return edges2 == 2 * (cycle_length + 1) && ones == 1 && threes == 1;
}

}  // namespace

TEST_CASE("graph classes of named shapes") {
  CHECK(graph_class(arms_graph({4})) == GraphClass{GraphKind::Dynkin, "A5"});
  CHECK(graph_class(arms_graph({1, 1, 3})) == GraphClass{GraphKind::Dynkin, "D6"});
  CHECK(graph_class(arms_graph({1, 2, 2})) == GraphClass{GraphKind::Dynkin, "E6"});
  CHECK(graph_class(arms_graph({1, 2, 3})) == GraphClass{GraphKind::Dynkin, "E7"});
  CHECK(graph_class(arms_graph({1, 2, 4})) == GraphClass{GraphKind::Dynkin, "E8"});
  CHECK(graph_class(arms_graph({2, 2, 2})) == GraphClass{GraphKind::Affine, "~E6"});
  CHECK(graph_class(arms_graph({1, 3, 3})) == GraphClass{GraphKind::Affine, "~E7"});
  CHECK(graph_class(arms_graph({1, 2, 5})) == GraphClass{GraphKind::Affine, "~E8"});
  CHECK(graph_class(arms_graph({1, 2, 6})).kind == GraphKind::Wild);
  CHECK(graph_class(cycle_graph(6)) == GraphClass{GraphKind::Affine, "~A5"});
  CHECK(graph_class(star_graph(4)) == GraphClass{GraphKind::Affine, "~D4"});
  CHECK(graph_class(star_graph(5)).kind == GraphKind::Wild);
  CHECK(graph_class(star_graph(3)) == GraphClass{GraphKind::Dynkin, "D4"});
  auto pendant = cycle_graph(8);
  pendant.push_back({0});
  pendant[0].push_back(8);
  CHECK(graph_class(pendant).kind == GraphKind::Wild);
  CHECK(graph_class(pendant).to_string() == "Wild");
  CHECK(graph_class(cycle_graph(6)).to_string() == "Affine(~A5)");
  CHECK_THROWS_AS(graph_class(Graph{{}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_class(Graph{}), std::invalid_argument);
  CHECK_THROWS_AS(graph_class(Graph{{1, 1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("hereditary wild witnesses of the rank 3 Cambrian lattices") {
  struct Case {
    const char* type;
    int target;
  };
  for (const Case& c : {Case{"A3", 8}, Case{"B3", 10}, Case{"H3", 13}}) {
    const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse(c.type));
    for (const auto& ce : coxeter::distinct_coxeter_elements(g)) {
      INFO(c.type, " c=", ce.to_string());
      const auto p = coxeter::cambrian(g, ce).poset;
      SearchOptions opt;
      opt.target_cycle_length = c.target;
      const auto cert = hereditary_wild_cert(p, opt);
      REQUIRE(cert.has_value());
      CHECK(validate_certificate(p, *cert).ok);
      const auto w = cert->witness();
      CHECK(poset::is_path_unique(poset::induced_subposet(p, w)));
      CHECK(is_cycle_plus_pendant(induced_graph(p, w), c.target));
      // the default search also succeeds
      const auto any = hereditary_wild_cert(p);
      REQUIRE(any.has_value());
      CHECK(validate_certificate(p, *any).ok);
    }
  }
  CHECK_FALSE(hereditary_wild_cert(poset::cube(3)).has_value());
  CHECK_FALSE(hereditary_wild_cert(poset::chain(6)).has_value());
}

TEST_CASE("square-cycle certificates") {
  const auto& stokes = cli::fixture("stokes").poset;
  const auto given = cli::stokes_certificate();
  CHECK(validate_certificate(stokes, given).ok);
  auto w = given.witness();
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<poset::Elem>{0, 1, 2, 3, 5, 7, 8, 10, 11});
  // the marked set is not itself path-unique
  CHECK_FALSE(poset::is_path_unique(poset::induced_subposet(stokes, w)));
  const auto found = square_cycle_cert(stokes);
  REQUIRE(found.has_value());
  CHECK(validate_certificate(stokes, *found).ok);

  for (const char* t : {"A1xI2(3)", "A1xI2(4)", "A1xI2(5)"}) {
    INFO(t);
    const auto p = cambrian_poset(t, "");
    const auto cert = square_cycle_cert(p);
    REQUIRE(cert.has_value());
    CHECK(validate_certificate(p, *cert).ok);
  }
  CHECK_FALSE(square_cycle_cert(poset::chain(5)).has_value());
  CHECK_FALSE(square_cycle_cert(poset::cube(3)).has_value());
}

TEST_CASE("square-cycle validation rejects a third omega edge") {
  const auto& stokes = cli::fixture("stokes").poset;
  const auto cert = std::get<SquareCycle>(cli::stokes_certificate().body);
  // same pattern, plus omega < 8 as an extra cover
  std::vector<poset::Cover> pairs = stokes.covers();
  pairs.emplace_back(0, 8);
  const auto bad = Poset::from_covers(stokes.labels(), pairs);
  Certificate c{Verdict::Wild, cert};
  const auto v = validate_certificate(bad, c);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.diagnostic.empty());
  // a square that is not on the cycle
  auto moved = cert;
  moved.square[3] = 4;
  CHECK_FALSE(validate_certificate(stokes, Certificate{Verdict::Wild, moved}).ok);
  // the wrong verdict
  CHECK_FALSE(validate_certificate(stokes, Certificate{Verdict::Tame, cert}).ok);
}

TEST_CASE("hereditary validation rejects a non path-unique witness") {
  // the diamond of cube(2) inside a larger poset
  const auto p = poset::cube(3);
  CHECK_FALSE(validate_certificate(p, Certificate{Verdict::Wild, HereditaryWild{{0, 1, 2, 3}}}).ok);
  CHECK_FALSE(validate_certificate(p, Certificate{Verdict::Wild, HereditaryWild{{0, 0, 1}}}).ok);
  CHECK_FALSE(validate_certificate(p, Certificate{Verdict::Wild, HereditaryWild{{0, 99}}}).ok);
}

TEST_CASE("four-regular, star and contraction certificates") {
  const auto c4 = four_regular_cert(poset::cube(4));
  REQUIRE(c4.has_value());
  CHECK(validate_certificate(poset::cube(4), *c4).ok);
  const auto a4 = cambrian_poset("A4", "");
  const auto ca4 = four_regular_cert(a4);
  REQUIRE(ca4.has_value());
  CHECK(validate_certificate(a4, *ca4).ok);
  CHECK_FALSE(four_regular_cert(poset::cube(3)).has_value());

  const auto fan = poset::add_bottom(poset::antichain(5));
  const auto st = star_cert(fan);
  REQUIRE(st.has_value());
  CHECK(validate_certificate(fan, *st).ok);
  CHECK(std::get<Star5>(st->body).leaves.size() == 5);
  const auto down = star_cert(poset::dual(fan));
  REQUIRE(down.has_value());
  CHECK_FALSE(std::get<Star5>(down->body).upward);
  CHECK_FALSE(star_cert(poset::cube(4)).has_value());

  const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse("A3"));
  const auto f = coxeter::cambrian_projection(g, coxeter::CoxeterElement::standard(3));
  auto target = hereditary_wild_cert(f.target);
  REQUIRE(target.has_value());
  const auto contraction = contraction_cert(f, std::make_shared<const Certificate>(*target));
  CHECK(validate_certificate(f.source, contraction).ok);
  // collapsing everything to a point breaks surjectivity onto a wild target
  poset::PosetMorphism collapse{f.source, f.target, std::vector<poset::Elem>(static_cast<std::size_t>(f.source.size()), 0)};
  CHECK_THROWS_AS(contraction_cert(collapse, std::make_shared<const Certificate>(*target)), std::invalid_argument);
  // a non-wild target certificate is refused
  const auto finite = std::make_shared<const Certificate>(Certificate{Verdict::Finite, FiniteHereditary{"A2"}});
  CHECK_THROWS_AS(contraction_cert(f, finite), std::invalid_argument);
}

TEST_CASE("finite and tame certificates") {
  for (int h = 3; h <= 9; ++h) {
    INFO("h=", h);
    const auto p = cambrian_poset("I2(" + std::to_string(h) + ")", "");
    const auto cert = finite_cert(p);
    REQUIRE(cert.has_value());
    CHECK(validate_certificate(p, *cert).ok);
    CHECK(cert->verdict == Verdict::Finite);
    // one flip reaches a path-unique poset of type D_{h+2}
    const auto flipped = poset::flip_flop(p);
    CHECK(poset::is_path_unique(flipped));
    CHECK(graph_class(poset::hasse_graph(flipped)) == GraphClass{GraphKind::Dynkin, "D" + std::to_string(h + 2)});
  }
  const auto chain = finite_cert(poset::chain(3));
  REQUIRE(chain.has_value());
  CHECK(std::holds_alternative<FiniteHereditary>(chain->body));

  for (const auto& p : {poset::cube(3), cambrian_poset("A1xA1xA1", ""),
                        rootposets::nonnesting(coxeter::CoxeterType::parse("A1xA1xA1")).ideals.lattice}) {
    const auto t = tame_cube_cert(p);
    REQUIRE(t.has_value());
    CHECK(validate_certificate(p, *t).ok);
    CHECK(std::get<TameCube>(t->body).middle.size() == 6);
  }
  CHECK_FALSE(tame_cube_cert(poset::cube(4)).has_value());
  auto t = *tame_cube_cert(poset::cube(3));
  std::get<TameCube>(t.body).citation.clear();
  CHECK_FALSE(validate_certificate(poset::cube(3), t).ok);
}

TEST_CASE("classify and certificate JSON round trips") {
  struct Case {
    Poset p;
    Verdict want;
  };
  std::vector<Case> cases{{poset::chain(4), Verdict::Finite},
                          {cambrian_poset("I2(6)", ""), Verdict::Finite},
                          {poset::cube(3), Verdict::Tame},
                          {poset::cube(4), Verdict::Wild},
                          {cambrian_poset("A3", "2,1,3"), Verdict::Wild},
                          {cambrian_poset("H3", ""), Verdict::Wild},
                          {cli::fixture("stokes").poset, Verdict::Wild},
                          {poset::add_bottom(poset::antichain(5)), Verdict::Wild}};
  for (const auto& c : cases) {
    const auto r = classify(c.p);
    CHECK(r.verdict == c.want);
    REQUIRE(r.certificate.has_value());
    CHECK(validate_certificate(c.p, *r.certificate).ok);
    const auto back = certificate_from_json(certificate_to_json(*r.certificate));
    CHECK(back.variant_name() == r.certificate->variant_name());
    CHECK(certificate_to_json(back) == certificate_to_json(*r.certificate));
    CHECK(validate_certificate(c.p, back).ok);
  }
  // weak orders go through contraction
  const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse("A3"));
  const auto f = coxeter::cambrian_projection(g, coxeter::CoxeterElement::standard(3));
  const auto target = std::make_shared<const Certificate>(*classify(f.target).certificate);
  const auto contraction = contraction_cert(f, target);
  const auto back = certificate_from_json(certificate_to_json(contraction));
  CHECK(validate_certificate(f.source, back).ok);

  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"variant":"Nope","verdict":"Wild"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"([1,2])")), std::invalid_argument);
  CHECK(parse_verdict("Tame") == Verdict::Tame);
  CHECK_THROWS(parse_verdict("Mild"));
}

TEST_CASE("wild witnesses classify as wild on their own") {
  for (const char* t : {"A3", "B3"}) {
    const auto p = cambrian_poset(t, "");
    const auto cert = hereditary_wild_cert(p);
    REQUIRE(cert.has_value());
    const auto sub = poset::induced_subposet(p, cert->witness());
    CHECK(classify(sub).verdict == Verdict::Wild);
  }
  const auto& stokes = cli::fixture("stokes").poset;
  const auto sub = poset::induced_subposet(stokes, cli::stokes_certificate().witness());
  CHECK(classify(sub).verdict == Verdict::Wild);
}

TEST_CASE("built-in fixtures match the constructions") {
  struct Case {
    const char* fixture;
    const char* type;
    const char* c;
  };
  for (const Case& c : {Case{"cambrian-a3-first", "A3", "1,2,3"}, Case{"cambrian-a3-second", "A3", "1,3,2"},
                        Case{"cambrian-b3-first", "B3", "1,2,3"}, Case{"cambrian-b3-second", "B3", "1,3,2"},
                        Case{"cambrian-h3-first", "H3", "3,2,1"}, Case{"cambrian-h3-second", "H3", "1,3,2"},
                        Case{"cambrian-a1xi2-4", "A1xI2(4)", ""}}) {
    INFO(c.fixture);
    const auto& f = cli::fixture(c.fixture);
    CHECK(poset::is_isomorphic(f.poset, cambrian_poset(c.type, c.c)));
  }
  CHECK(poset::is_isomorphic(cli::fixture("nonnesting-a3").poset,
                             rootposets::nonnesting(coxeter::CoxeterType::parse("A3")).ideals.lattice));
  const auto& stokes = cli::fixture("stokes").poset;
  CHECK(stokes.size() == 12);
  CHECK(poset::is_lattice(stokes));
  CHECK(poset::hasse_regularity(stokes).uniform == 3);
  CHECK_THROWS_AS(cli::fixture("no-such-fixture"), std::invalid_argument);
}

TEST_CASE("Coxeter polynomial basics") {
  CHECK(coxeter_polynomial(poset::chain(2)).to_string() == "x^2 + x + 1");
  for (const auto& p : {poset::chain(3), poset::cube(3), cambrian_poset("A3", ""), cli::fixture("stokes").poset}) {
    const auto c = cartan_matrix(p);
    CHECK(exact::char_poly(c).coefficient(0) == (p.size() % 2 ? -1 : 1));  // det C = 1
    CHECK(coxeter_polynomial(p) == coxeter_polynomial(poset::dual(p)));
    CHECK(coxeter_polynomial(p).is_monic());
  }
}

TEST_CASE("flip-flop preserves the Coxeter polynomial") {
  std::vector<Poset> ps{poset::cube(3), poset::cube(4), poset::chain(5), cli::fixture("stokes").poset,
                        cli::fixture("nonnesting-a3").poset};
  for (const char* t : {"A3", "B3", "H3", "I2(5)", "A1xI2(4)", "A4"}) {
    const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse(t));
    for (const auto& ce : coxeter::distinct_coxeter_elements(g)) ps.push_back(coxeter::cambrian(g, ce).poset);
  }
  CHECK(ps.size() >= 10);
  for (const auto& p : ps) {
    CHECK(coxeter_polynomial(poset::flip_flop(p)) == coxeter_polynomial(p));
    CHECK(coxeter_polynomial(poset::flip_flop_dual(p)) == coxeter_polynomial(p));
  }
}

TEST_CASE("all Cambrian lattices of A3 share one Coxeter polynomial") {
  const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse("A3"));
  std::vector<Poset> lats;
  for (const auto& ce : coxeter::distinct_coxeter_elements(g)) lats.push_back(coxeter::cambrian(g, ce).poset);
  int classes = 0;
  for (std::size_t i = 0; i < lats.size(); ++i) {
    CHECK(coxeter_polynomial(lats[i]) == coxeter_polynomial(lats[0]));
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j) fresh &= !poset::is_isomorphic(lats[i], lats[j]);
    classes += fresh;
  }
  CHECK(classes == 3);
}

TEST_CASE("invariants report") {
  const auto inv = compute_invariants(poset::cube(3));
  CHECK(inv.size == 8);
  CHECK(inv.regular == 3);
  CHECK(inv.lattice);
  CHECK_FALSE(inv.path_unique);
  REQUIRE(inv.coxeter_polynomial.has_value());
  const auto j = invariants_to_json(inv);
  CHECK(j.at("size") == 8);
  CHECK(j.contains("coxeter_polynomial"));
}
