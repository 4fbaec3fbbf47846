#include <doctest.h>

#include <algorithm>

#include "cambrep/reptype/graph_class.hpp"
#include "cambrep/reptype/certificate.hpp"
#include "cambrep/rootposets/root_poset.hpp"

using namespace cambrep;
using namespace cambrep::rootposets;

TEST_CASE("root posets of small types") {
  struct Case {
    const char* type;
    int roots;
    int nonnesting;
  };
  for (const Case& c : {Case{"A2", 3, 5}, Case{"A3", 6, 14}, Case{"B3", 9, 20}, Case{"C3", 9, 20},
                        Case{"A4", 10, 42}, Case{"B4", 16, 70}, Case{"C4", 16, 70}, Case{"A1xA1xA1", 3, 8},
                        Case{"A1xA2", 4, 10}}) {
    INFO(c.type);
    const auto t = coxeter::CoxeterType::parse(c.type);
    const auto rp = root_poset(t);
    CHECK(rp.poset.size() == c.roots);
    auto minimal = rp.poset.minimal_elements();
    CHECK(minimal == rp.simples);
    CHECK(static_cast<int>(rp.simples.size()) == t.rank());
    const auto nn = nonnesting(t);
    CHECK(nn.ideals.lattice.size() == c.nonnesting);
    CHECK(poset::is_lattice(nn.ideals.lattice));
    // the ideals inside the simples form a Boolean lattice
    const auto cube = poset::induced_subposet(nn.ideals.lattice, simple_cube(nn));
    CHECK(poset::is_isomorphic(cube, poset::cube(t.rank())));
  }
}

TEST_CASE("root labels and order") {
  const auto rp = root_poset(coxeter::CoxeterType::parse("B2"));
  std::vector<std::string> labels = rp.poset.labels();
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"a1", "a1+2a2", "a1+a2", "a2"});
  CHECK_THROWS_AS(root_poset(coxeter::CoxeterType::parse("H3")), std::invalid_argument);
}

TEST_CASE("beta pattern and the rank 3 wild subset") {
  for (const char* name : {"A3", "B3", "C3"}) {
    INFO(name);
    const auto nn = nonnesting(coxeter::CoxeterType::parse(name));
    const auto beta = find_beta_certificate(nn.roots);
    REQUIRE(beta.has_value());
    CHECK(check_beta_pattern(nn.roots, *beta));
    const auto subset = nonnesting_rank3_wild_subset(nn, *beta);
    CHECK(subset.size() == 7);
    // without L(beta) the six elements form the affine hexagon
    std::vector<poset::Elem> six(subset.begin(), subset.end() - 1);
    CHECK(reptype::check_hereditary(nn.ideals.lattice, six, reptype::GraphKind::Affine).ok);
    CHECK(reptype::graph_class(reptype::induced_graph(nn.ideals.lattice, six)).shape == "~A5");
    // L(beta) covers L(a1, a2) inside the subset
    const auto sub = poset::induced_subposet(nn.ideals.lattice, subset);
    CHECK(sub.covered_by(3, 6));
  }
  const auto nn = nonnesting(coxeter::CoxeterType::parse("A1xA1xA1"));
  CHECK_FALSE(find_beta_certificate(nn.roots).has_value());
}

TEST_CASE("root poset fixtures") {
  const auto rp = root_poset(coxeter::CoxeterType::parse("A3"));
  const auto back = load_root_poset_fixture(root_poset_to_json(rp));
  CHECK(back.poset == rp.poset);
  CHECK(back.simples == rp.simples);
  CHECK(poset::is_isomorphic(nonnesting(back).ideals.lattice, nonnesting(rp).ideals.lattice));

  // beta above three simples: no pattern
  auto doc = nlohmann::json::parse(R"({"labels":["a","b","c","d"],"covers":[[0,3],[1,3],[2,3]],"simples":[0,1,2]})");
  const auto three = load_root_poset_fixture(doc);
  CHECK_FALSE(find_beta_certificate(three).has_value());
  CHECK_FALSE(check_beta_pattern(three, {0, 1, 3}));
  // a non-simple alpha is rejected
  auto doc2 = nlohmann::json::parse(R"({"labels":["a","b","c","d"],"covers":[[0,2],[1,2],[2,3]],"simples":[0,1]})");
  const auto chainy = load_root_poset_fixture(doc2);
  CHECK(check_beta_pattern(chainy, {0, 1, 2}));
  CHECK_FALSE(check_beta_pattern(chainy, {0, 2, 3}));

  auto bad = nlohmann::json::parse(R"({"labels":["a","b"],"covers":[[0,1]],"simples":[1]})");
  CHECK_THROWS_AS(load_root_poset_fixture(bad), std::invalid_argument);
  auto missing = nlohmann::json::parse(R"({"labels":["a"],"covers":[]})");
  CHECK_THROWS_AS(load_root_poset_fixture(missing), std::invalid_argument);
  auto range = nlohmann::json::parse(R"({"labels":["a"],"covers":[],"simples":[4]})");
  CHECK_THROWS_AS(load_root_poset_fixture(range), std::invalid_argument);
}

TEST_CASE("generators identify ideals") {
  const auto nn = nonnesting(coxeter::CoxeterType::parse("B3"));
  for (std::size_t i = 0; i < nn.ideals.ideals.size(); ++i) {
    CHECK(nn.ideal_of(nn.ideals.generators[i]) == static_cast<poset::Elem>(i));
  }
  CHECK(nn.ideal_of({}) == nn.ideals.lattice.minimal_elements().front());
}
