#include <doctest.h>

#include <random>

#include "cambrep/cli/fixtures.hpp"
#include "cambrep/poset/constructions.hpp"
#include "cambrep/quiverrep/rep.hpp"
#include "oracles.hpp"

using namespace cambrep;
using namespace cambrep::quiverrep;

namespace {

oracle::DenseRep dense(const PosetRep& r) {
  oracle::DenseRep d{r.dims, {}};
  for (const auto& m : r.maps) {
    oracle::Dense rows(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    }
    d.maps.push_back(std::move(rows));
  }
  return d;
}

PosetRep random_rep(const Poset& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(0, 2), entry(-1, 1);
  PosetRep r{p, {}, {}};
  for (int x = 0; x < p.size(); ++x) r.dims.push_back(dim(rng));
  for (auto [x, y] : p.covers()) {
    RationalMatrix m(r.dims[y], r.dims[x]);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

bool natural(const PosetRep& m, const PosetRep& n, const std::vector<RationalMatrix>& f) {
  for (std::size_t e = 0; e < m.base.covers().size(); ++e) {
    const auto [x, y] = m.base.covers()[e];
    if (!(n.maps[e] * f[x] - f[y] * m.maps[e]).isZero()) return false;
  }
  return true;
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("commutativity check") {
  const auto sq = poset::cube(2);
  auto r = constant_rep(sq, 1);
  CHECK(validate_rep(r).ok);
  r.map(0, 1)(0, 0) = 2;
  const auto chk = validate_rep(r);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.pair.has_value());
  CHECK(*chk.pair == std::pair<Elem, Elem>{0, 3});
  r.map(0, 1) = RationalMatrix::Zero(2, 1);
  CHECK_THROWS_AS(validate_rep(r), std::invalid_argument);
}

TEST_CASE("Hom dimension agrees with independent elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const auto p = oracle::random_poset(n, 0.5, rng);
    const auto m = random_rep(p, rng);
    const auto k = random_rep(p, rng);
    const auto hom = hom_space(m, k);
    INFO("trial ", trial);
    CHECK(hom.dim() == oracle::hom_dim(p, dense(m), dense(k)));
    for (const auto& f : hom.basis) CHECK(natural(m, k, f));
  }
  CHECK_THROWS_AS(hom_space(constant_rep(poset::chain(2)), constant_rep(poset::chain(3))), std::invalid_argument);
}

TEST_CASE("constant representations") {
  // Hom between constant reps: one scalar per connected component
  const auto p = poset::disjoint_union(poset::cube(2), poset::chain(3));
  CHECK(hom_space(constant_rep(p), constant_rep(p)).dim() == 2);
  CHECK(is_isomorphic_reps(constant_rep(poset::chain(3), 2), constant_rep(poset::chain(3), 2)));
  CHECK_FALSE(is_isomorphic_reps(constant_rep(poset::chain(3), 1), constant_rep(poset::chain(3), 2)));
}

TEST_CASE("the cycle family M(lambda)") {
  // 4-cycle 0 < 1, 0 < 2, 1 < 3, 2 < 3 is a diamond; use a crown instead
  const auto crown = Poset::from_covers(poset::index_labels(4), {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const Cover alpha{0, 2};
  for (int l = -2; l <= 2; ++l) {
    for (int mu = -2; mu <= 2; ++mu) {
      if (l == 0 || mu == 0) continue;
      const auto a = build_M_lambda(crown, alpha, l);
      const auto b = build_M_lambda(crown, alpha, mu);
      CHECK(hom_space(a, b).dim() == (l == mu ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(build_M_lambda(poset::chain(3), {0, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_M_lambda(crown, {0, 1}, 1), std::invalid_argument);
}

TEST_CASE("the square-cycle family on the Stokes witness") {
  const auto& stokes = cli::fixture("stokes").poset;
  const auto s = square_cycle_poset(stokes, std::get<reptype::SquareCycle>(cli::stokes_certificate().body));
  CHECK(s.x.size() == 9);
  CHECK(s.omega_below());
  const auto alpha = default_alpha(s);
  CHECK(s.ambient[alpha.first] == 8);
  CHECK(s.ambient[alpha.second] == 11);

  std::mt19937_64 rng(0);
  std::vector<std::pair<Rational, Rational>> pairs{{2, 3}, {4, 5}};
  while (pairs.size() < 7) {
    auto l = small_rational(rng), m = small_rational(rng);
    if (l != m) pairs.emplace_back(l, m);
  }
  std::vector<PosetRep> reps;
  for (const auto& [l, m] : pairs) {
    reps.push_back(build_M_lambda_mu(s, l, m));
    CHECK(validate_rep(reps.back()).ok);
    CHECK(hom_space(reps.back(), reps.back()).dim() == 1);
    const auto swapped = build_M_lambda_mu(s, m, l);
    CHECK(is_isomorphic_reps(reps.back(), swapped));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j) continue;
      const bool same = (pairs[i].first == pairs[j].first && pairs[i].second == pairs[j].second) ||
                        (pairs[i].first == pairs[j].second && pairs[i].second == pairs[j].first);
      if (same) continue;
      CHECK(hom_space(reps[i], reps[j]).dim() == 0);
    }
  }
  CHECK(hom_space(build_M_lambda_mu(s, 2, 3), build_M_lambda_mu(s, 3, 2)).dim() == 1);
  CHECK_FALSE(is_isomorphic_reps(build_M_lambda_mu(s, 2, 3), build_M_lambda_mu(s, 2, 5)));

  CHECK_THROWS_AS(build_M_lambda_mu(s, 1, 1), std::invalid_argument);
  // the square edge from a to apex may not carry the parameters
  const Cover square_edge = s.x.less(s.a, s.apex) ? Cover{s.a, s.apex} : Cover{s.apex, s.a};
  CHECK_THROWS_AS(build_M_lambda_mu(s, 1, 2, square_edge), std::invalid_argument);
}

TEST_CASE("the family on a square cycle with omega on top") {
  const auto& stokes = cli::fixture("stokes").poset;
  const auto base = std::get<reptype::SquareCycle>(cli::stokes_certificate().body);
  const auto dual = poset::dual(stokes);
  const reptype::Certificate c{reptype::Verdict::Wild, base};
  REQUIRE(reptype::validate_certificate(dual, c).ok);
  const auto s = square_cycle_poset(dual, base);
  CHECK_FALSE(s.omega_below());
  const auto m = build_M_lambda_mu(s, 2, 3);
  CHECK(validate_rep(m).ok);
  CHECK(hom_space(m, m).dim() == 1);
  CHECK(is_isomorphic_reps(m, build_M_lambda_mu(s, 3, 2)));
  CHECK(hom_space(m, build_M_lambda_mu(s, 4, 5)).dim() == 0);
}

TEST_CASE("representation JSON round trip") {
  const auto& stokes = cli::fixture("stokes").poset;
  const auto s = square_cycle_poset(stokes, std::get<reptype::SquareCycle>(cli::stokes_certificate().body));
  const auto m = build_M_lambda_mu(s, Rational(-1, 3), Rational(7, 2));
  const auto back = rep_from_json(rep_to_json(m));
  CHECK(back.dims == m.dims);
  CHECK(back.base == m.base);
  for (std::size_t e = 0; e < m.maps.size(); ++e) CHECK(back.maps[e] == m.maps[e]);
  auto doc = rep_to_json(m);
  doc["dims"][0] = 5;
  CHECK_THROWS_AS(rep_from_json(doc), std::invalid_argument);
}
