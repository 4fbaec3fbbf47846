#include <doctest.h>

#include <algorithm>
#include <map>

#include "cambrep/coxeter/cambrian.hpp"
#include "cambrep/poset/constructions.hpp"

using namespace cambrep;
using namespace cambrep::coxeter;

namespace {

// Coxeter number and exponents of an irreducible factor.
std::pair<long, std::vector<long>> degrees_of(const CoxeterFactor& f) {
  std::vector<long> e;
  switch (f.family) {
    case Family::A:
      for (long i = 1; i <= f.rank; ++i) e.push_back(i);
      return {f.rank + 1, e};
    case Family::B:
    case Family::C:
      for (long i = 1; i <= f.rank; ++i) e.push_back(2 * i - 1);
      return {2 * f.rank, e};
    case Family::H:
      return {10, {1, 5, 9}};
    case Family::I:
      return {f.h, {1, f.h - 1}};
  }
  return {0, {}};
}

// Product of (h + e + 1) / (e + 1) over exponents, multiplied over factors.
long coxeter_catalan(const CoxeterType& t) {
  long num = 1, den = 1;
  for (const auto& f : t.factors) {
    auto [h, exps] = degrees_of(f);
    for (long e : exps) {
      num *= h + e + 1;
      den *= e + 1;
    }
  }
  return num / den;
}

long group_order(const CoxeterType& t) {
  long order = 1;
  for (const auto& f : t.factors) {
    auto [h, exps] = degrees_of(f);
    for (long e : exps) order *= e + 1;
  }
  return order;
}

}  // namespace

TEST_CASE("type parsing") {
  CHECK(CoxeterType::parse("A1xI2(5)").rank() == 3);
  CHECK(CoxeterType::parse("A1xA1xA1").factors.size() == 3);
  CHECK(CoxeterType::parse("H3").name() == "H3");
  CHECK_FALSE(CoxeterType::parse("H3").crystallographic());
  CHECK(CoxeterType::parse("C3").crystallographic());
  for (const char* bad : {"", "E8", "A0", "B1", "I2(1)", "H5", "A3x", "xA2", "I2(x)", "A3 "}) {
    INFO(bad);
    CHECK_THROWS_AS(CoxeterType::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("group orders, lengths and reduced words") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "H3", "I2(5)", "I2(8)", "A1xI2(5)",
                           "A1xA1xA1"}) {
    INFO(name);
    const auto t = CoxeterType::parse(name);
    const auto g = CoxeterGroup::build(t);
    CHECK(g.order() == group_order(t));
    long positives = 0;
    for (const auto& f : t.factors) {
      auto [h, exps] = degrees_of(f);
      positives += static_cast<long>(exps.size()) * h / 2;
    }
    CHECK(g.num_positive_roots() == positives);
    CHECK(g.length(g.longest()) == positives);
    for (GroupElem w = 0; w < g.order(); ++w) {
      const auto word = g.reduced_word(w);
      CHECK(static_cast<int>(word.size()) == g.length(w));
      CHECK(g.from_word(word) == w);
      CHECK(g.multiply(w, g.inverse(w)) == g.identity());
      CHECK(static_cast<int>(g.inversions(w).count()) == g.length(w));
    }
  }
}

TEST_CASE("Coxeter matrices of the rank 3 types") {
  CHECK(CoxeterGroup::build(CoxeterType::parse("B3")).coxeter_matrix()[1][2] == 4);
  CHECK(CoxeterGroup::build(CoxeterType::parse("H3")).coxeter_matrix()[0][1] == 5);
  CHECK(CoxeterGroup::build(CoxeterType::parse("A1xI2(5)")).coxeter_matrix()[0][1] == 2);
  CHECK(CoxeterGroup::build(CoxeterType::parse("A1xI2(5)")).coxeter_matrix()[1][2] == 5);
}

TEST_CASE("weak order is graded by length") {
  const auto g = CoxeterGroup::build(CoxeterType::parse("B3"));
  const auto w = weak_order(g);
  CHECK(w.size() == 48);
  for (auto [x, y] : w.covers()) CHECK(g.length(y) == g.length(x) + 1);
  CHECK(poset::is_lattice(w));
  CHECK(poset::hasse_regularity(w).uniform == 3);
}

TEST_CASE("Coxeter element parsing") {
  CHECK(CoxeterElement::parse("2,1,3", 3).order == std::vector<int>{1, 0, 2});
  CHECK(CoxeterElement::parse("3,1,2", 3).to_string() == "3,1,2");
  for (const char* bad : {"1,1,2", "1,2", "a,b,c", "1,2,3,4", "", "1,,2"}) {
    INFO(bad);
    CHECK_THROWS_AS(CoxeterElement::parse(bad, 3), std::invalid_argument);
  }
}

TEST_CASE("c-sorting words in A2") {
  const auto g = CoxeterGroup::build(CoxeterType::parse("A2"));
  const auto c = CoxeterElement::standard(2);
  const auto s2s1 = g.from_word({1, 0});
  const auto sw = c_sorting_word(g, s2s1, c);
  REQUIRE(sw.passes.size() == 2);
  CHECK(sw.passes[0] == std::vector<int>{1});
  CHECK(sw.passes[1] == std::vector<int>{0});
  CHECK_FALSE(is_c_sortable(g, s2s1, c));
  CHECK(is_c_sortable(g, g.from_word({0, 1}), c));
  CHECK(is_c_sortable(g, g.longest(), c));
  CHECK(sortable_elements(g, c).size() == 5);
}

TEST_CASE("Cambrian lattice counts match the Coxeter-Catalan numbers") {
  for (const char* name : {"A2", "A3", "B3", "C3", "H3", "A4", "B4", "I2(3)", "I2(6)", "I2(9)", "A1xI2(4)",
                           "A1xA1xA1"}) {
    INFO(name);
    const auto t = CoxeterType::parse(name);
    const auto g = CoxeterGroup::build(t);
    const auto cs = distinct_coxeter_elements(g);
    for (const auto& c : cs) {
      INFO("c=", c.to_string());
      const auto lat = cambrian(g, c);
      CHECK(lat.poset.size() == coxeter_catalan(t));
      CHECK(poset::is_lattice(lat.poset));
      CHECK(poset::hasse_regularity(lat.poset).uniform == t.rank());
    }
  }
}

TEST_CASE("the Cambrian projection is an order-preserving surjection with interval fibers") {
  for (const char* name : {"A3", "B3", "A1xI2(4)"}) {
    const auto g = CoxeterGroup::build(CoxeterType::parse(name));
    for (const auto& c : distinct_coxeter_elements(g)) {
      INFO(name, " c=", c.to_string());
      const auto f = cambrian_projection(g, c);
      CHECK(poset::is_order_preserving(f));
      CHECK(poset::is_surjective(f));
      const auto lat = cambrian(g, c);
      for (std::size_t i = 0; i < lat.elements.size(); ++i) {
        // sortable elements are fixed
        CHECK(f.map[lat.elements[i]] == static_cast<poset::Elem>(i));
      }
      for (const auto& fiber : poset::fibers(f)) {
        // an interval [bottom, top] of the weak order
        poset::Elem lo = fiber.front(), hi = fiber.front();
        for (auto x : fiber) {
          if (g.length(x) < g.length(lo)) lo = x;
          if (g.length(x) > g.length(hi)) hi = x;
        }
        int between = 0;
        for (poset::Elem w = 0; w < g.order(); ++w) between += f.source.leq(lo, w) && f.source.leq(w, hi);
        CHECK(between == static_cast<int>(fiber.size()));
        for (auto x : fiber) CHECK((f.source.leq(lo, x) && f.source.leq(x, hi)));
      }
    }
  }
  const auto g = CoxeterGroup::build(CoxeterType::parse("A3"));
  CHECK(pi_down(g, CoxeterElement::standard(3), g.longest()) == g.longest());
}

TEST_CASE("distinct Coxeter elements") {
  // 2^(edges of the Coxeter graph) for trees
  CHECK(distinct_coxeter_elements(CoxeterGroup::build(CoxeterType::parse("A3"))).size() == 4);
  CHECK(distinct_coxeter_elements(CoxeterGroup::build(CoxeterType::parse("A4"))).size() == 8);
  CHECK(distinct_coxeter_elements(CoxeterGroup::build(CoxeterType::parse("A1xA1xA1"))).size() == 1);
}
