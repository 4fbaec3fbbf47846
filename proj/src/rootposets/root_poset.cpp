#include "cambrep/rootposets/root_poset.hpp"

#include <algorithm>
#include <set>

#include "cambrep/poset/io.hpp"

namespace cambrep::rootposets {

namespace {

// Integer Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>, so that
// s_i(alpha_j) = alpha_j - a[i][j] alpha_i. The short/long simple root of
// B_n/C_n is the last one.
std::vector<std::vector<int>> cartan(const coxeter::CoxeterFactor& f) {
  const int n = f.rank;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  if (n >= 2) {
    if (f.family == coxeter::Family::B) a[n - 1][n - 2] = -2;
    if (f.family == coxeter::Family::C) a[n - 2][n - 1] = -2;
  }
  return a;
}

std::vector<std::vector<int>> positive_roots(const coxeter::CoxeterFactor& f) {
  const auto a = cartan(f);
  const auto n = static_cast<std::size_t>(f.rank);
  std::vector<std::vector<int>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> v = roots[r];
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += a[i][j] * v[j];
      v[i] -= pairing;
      const bool positive = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
      if (positive && std::find(roots.begin(), roots.end(), v) == roots.end()) roots.push_back(std::move(v));
    }
  }
  return roots;
}

std::string root_label(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (v[i] != 1) s += std::to_string(v[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s;
}

}  // namespace

RootPoset root_poset(const coxeter::CoxeterType& type) {
  const int rank = type.rank();
  RootPoset rp;
  int offset = 0;
  for (const auto& f : type.factors) {
    if (f.family != coxeter::Family::A && f.family != coxeter::Family::B && f.family != coxeter::Family::C) {
      throw std::invalid_argument("root poset of " + f.name() +
                                  " is not crystallographic; load it from a fixture instead");
    }
    for (const auto& local : positive_roots(f)) {
      std::vector<int> global(static_cast<std::size_t>(rank), 0);
      std::copy(local.begin(), local.end(), global.begin() + offset);
      rp.coords.push_back(std::move(global));
    }
    offset += f.rank;
  }
  // Simple roots first, in generator order; then by height.
  std::stable_sort(rp.coords.begin(), rp.coords.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x > y;
  });
  std::vector<std::string> labels;
  for (const auto& v : rp.coords) labels.push_back(root_label(v));
  const auto& coords = rp.coords;
  rp.poset = poset::Poset::from_order(std::move(labels), [&](Elem x, Elem y) {
    if (x == y) return false;
    for (std::size_t i = 0; i < coords[x].size(); ++i) {
      if (coords[y][i] < coords[x][i]) return false;
    }
    return true;
  });
  for (int i = 0; i < rank; ++i) rp.simples.push_back(i);
  return rp;
}

RootPoset load_root_poset_fixture(const nlohmann::json& doc) {
  RootPoset rp;
  rp.poset = poset::poset_from_json(doc);
  if (!doc.contains("simples") || !doc.at("simples").is_array()) {
    throw std::invalid_argument("root poset fixture needs a \"simples\" array");
  }
  for (const auto& s : doc.at("simples")) {
    if (!s.is_number_integer()) throw std::invalid_argument("\"simples\" must hold element indices");
    const int x = s.get<int>();
    if (x < 0 || x >= rp.poset.size()) throw std::invalid_argument("simple root index out of range");
    rp.simples.push_back(x);
  }
  std::set<Elem> given(rp.simples.begin(), rp.simples.end());
  auto minimal = rp.poset.minimal_elements();
  if (given.size() != rp.simples.size() || given != std::set<Elem>(minimal.begin(), minimal.end())) {
    throw std::invalid_argument("designated simples must be exactly the minimal elements");
  }
  return rp;
}

nlohmann::json root_poset_to_json(const RootPoset& rp) {
  auto doc = poset::to_json(rp.poset);
  doc["simples"] = rp.simples;
  return doc;
}

bool check_beta_pattern(const RootPoset& rp, const BetaPattern& pattern) {
  const auto& simples = rp.simples;
  auto is_simple = [&](Elem x) { return std::find(simples.begin(), simples.end(), x) != simples.end(); };
  if (!is_simple(pattern.alpha1) || !is_simple(pattern.alpha2) || pattern.alpha1 == pattern.alpha2) return false;
  std::vector<Elem> lower = rp.poset.lower_covers(pattern.beta);
  std::sort(lower.begin(), lower.end());
  std::vector<Elem> want{pattern.alpha1, pattern.alpha2};
  std::sort(want.begin(), want.end());
  return lower == want;
}

std::optional<BetaPattern> find_beta_certificate(const RootPoset& rp) {
  for (Elem beta = 0; beta < rp.poset.size(); ++beta) {
    const auto& lower = rp.poset.lower_covers(beta);
    if (lower.size() != 2) continue;
    BetaPattern p{std::min(lower[0], lower[1]), std::max(lower[0], lower[1]), beta};
    if (check_beta_pattern(rp, p)) return p;
  }
  return std::nullopt;
}

Elem NonNesting::ideal_of(const std::vector<Elem>& generators) const {
  std::uint64_t mask = 0;
  for (Elem g : generators) {
    for (Elem x = 0; x < roots.poset.size(); ++x) {
      if (roots.poset.leq(x, g)) mask |= std::uint64_t{1} << x;
    }
  }
  auto it = std::find(ideals.ideals.begin(), ideals.ideals.end(), mask);
  if (it == ideals.ideals.end()) throw std::out_of_range("ideal not present in the lattice");
  return static_cast<Elem>(it - ideals.ideals.begin());
}

NonNesting nonnesting(RootPoset roots) {
  NonNesting nn{std::move(roots), {}};
  nn.ideals = poset::order_ideals_lattice(nn.roots.poset);
  return nn;
}

NonNesting nonnesting(const coxeter::CoxeterType& type) { return nonnesting(root_poset(type)); }

std::vector<Elem> nonnesting_rank3_wild_subset(const NonNesting& nn, const BetaPattern& pattern) {
  const auto& s = nn.roots.simples;
  if (s.size() != 3) throw std::invalid_argument("the NonNesting wild subset needs rank 3");
  Elem a3 = -1;
  for (Elem x : s) {
    if (x != pattern.alpha1 && x != pattern.alpha2) a3 = x;
  }
  const Elem a1 = pattern.alpha1;
  const Elem a2 = pattern.alpha2;
  return {nn.ideal_of({a1}),     nn.ideal_of({a2}),     nn.ideal_of({a3}),        nn.ideal_of({a1, a2}),
          nn.ideal_of({a1, a3}), nn.ideal_of({a2, a3}), nn.ideal_of({pattern.beta})};
}

std::vector<Elem> simple_cube(const NonNesting& nn) {
  std::uint64_t simples = 0;
  for (Elem x : nn.roots.simples) simples |= std::uint64_t{1} << x;
  std::vector<Elem> out;
  for (std::size_t i = 0; i < nn.ideals.ideals.size(); ++i) {
    if ((nn.ideals.ideals[i] & ~simples) == 0) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace cambrep::rootposets
