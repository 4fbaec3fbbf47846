#include "cambrep/quiverrep/rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "cambrep/poset/io.hpp"

namespace cambrep::quiverrep {

using exact::Index;

namespace {

std::size_t cover_slot(const Poset& p, Elem x, Elem y) {
  auto idx = p.cover_index(x, y);
  if (!idx) throw std::invalid_argument("(" + std::to_string(x) + ", " + std::to_string(y) + ") is not a cover");
  return *idx;
}

void check_shapes(const PosetRep& r) {
  if (static_cast<int>(r.dims.size()) != r.base.size()) throw std::invalid_argument("dims has the wrong length");
  if (r.maps.size() != r.base.covers().size()) throw std::invalid_argument("maps has the wrong length");
  for (std::size_t k = 0; k < r.maps.size(); ++k) {
    const auto [x, y] = r.base.covers()[k];
    if (r.dims[x] < 0 || r.dims[y] < 0) throw std::invalid_argument("negative dimension");
    if (r.maps[k].rows() != r.dims[y] || r.maps[k].cols() != r.dims[x]) {
      throw std::invalid_argument("map on cover " + std::to_string(x) + "->" + std::to_string(y) + " is " +
                                  std::to_string(r.maps[k].rows()) + "x" + std::to_string(r.maps[k].cols()) +
                                  ", expected " + std::to_string(r.dims[y]) + "x" + std::to_string(r.dims[x]));
    }
  }
}

bool invertible(const RationalMatrix& m) { return m.rows() == m.cols() && exact::rank(m) == m.rows(); }

bool invertible_everywhere(const std::vector<RationalMatrix>& f) {
  return std::all_of(f.begin(), f.end(), [](const RationalMatrix& m) { return invertible(m); });
}

RationalMatrix one_by_one(const Rational& v) {
  RationalMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

const RationalMatrix& PosetRep::map(Elem x, Elem y) const { return maps[cover_slot(base, x, y)]; }
RationalMatrix& PosetRep::map(Elem x, Elem y) { return maps[cover_slot(base, x, y)]; }

int PosetRep::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

PosetRep constant_rep(const Poset& p, int d) {
  PosetRep r{p, std::vector<int>(static_cast<std::size_t>(p.size()), d), {}};
  for (std::size_t k = 0; k < p.covers().size(); ++k) r.maps.push_back(RationalMatrix::Identity(d, d));
  return r;
}

RepCheck validate_rep(const PosetRep& r) {
  check_shapes(r);
  const Poset& p = r.base;
  const auto& topo = p.linear_extension();
  for (Elem x : topo) {
    std::vector<std::optional<RationalMatrix>> prod(static_cast<std::size_t>(p.size()));
    prod[x] = RationalMatrix::Identity(r.dims[x], r.dims[x]);
    for (Elem y : topo) {
      if (y == x || !p.leq(x, y)) continue;
      for (Elem z : p.lower_covers(y)) {
        if (!prod[z]) continue;
        RationalMatrix m = r.map(z, y) * *prod[z];
        if (!prod[y]) {
          prod[y] = std::move(m);
        } else if (*prod[y] != m) {
          return {false, std::make_pair(x, y)};
        }
      }
    }
  }
  return {};
}

HomSpace hom_space(const PosetRep& m, const PosetRep& n) {
  if (!(m.base == n.base)) throw std::invalid_argument("hom_space: representations live on different posets");
  check_shapes(m);
  check_shapes(n);
  const Poset& p = m.base;
  std::vector<Index> off(static_cast<std::size_t>(p.size()) + 1, 0);
  for (Elem x = 0; x < p.size(); ++x) off[x + 1] = off[x] + Index{n.dims[x]} * m.dims[x];
  auto var = [&](Elem x, int row, int col) { return off[x] + Index{row} * m.dims[x] + col; };

  Index eqs = 0;
  for (const auto& [x, y] : p.covers()) eqs += Index{n.dims[y]} * m.dims[x];
  RationalMatrix sys = RationalMatrix::Zero(eqs, off.back());
  Index row = 0;
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    const auto [x, y] = p.covers()[k];
    const auto& ne = n.maps[k];
    const auto& me = m.maps[k];
    for (int i = 0; i < n.dims[y]; ++i) {
      for (int j = 0; j < m.dims[x]; ++j, ++row) {
        for (int t = 0; t < n.dims[x]; ++t) sys(row, var(x, t, j)) += ne(i, t);
        for (int t = 0; t < m.dims[y]; ++t) sys(row, var(y, i, t)) -= me(t, j);
      }
    }
  }

  HomSpace h;
  for (const auto& v : exact::nullspace(sys)) {
    std::vector<RationalMatrix> f;
    for (Elem x = 0; x < p.size(); ++x) {
      RationalMatrix fx(n.dims[x], m.dims[x]);
      for (int i = 0; i < n.dims[x]; ++i) {
        for (int j = 0; j < m.dims[x]; ++j) fx(i, j) = v(var(x, i, j));
      }
      f.push_back(std::move(fx));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

bool is_isomorphic_reps(const PosetRep& m, const PosetRep& n) {
  if (!(m.base == n.base) || m.dims != n.dims) return false;
  const auto h = hom_space(m, n);
  const int k = h.dim();
  if (m.total_dim() == 0) return true;
  if (k == 0) return false;
  if (k == 1) return invertible_everywhere(h.basis[0]);

  const auto side = static_cast<std::size_t>(m.total_dim()) + 1;
  std::size_t points = 1;
  for (int i = 0; i < k; ++i) {
    if (points > kMaxIsoGrid / side) throw std::length_error("is_isomorphic_reps: search grid too large");
    points *= side;
  }
  std::vector<std::size_t> coef(static_cast<std::size_t>(k), 0);
  for (std::size_t pt = 0; pt < points; ++pt) {
    std::size_t rest = pt;
    for (auto& c : coef) {
      c = rest % side;
      rest /= side;
    }
    std::vector<RationalMatrix> f;
    for (std::size_t x = 0; x < m.dims.size(); ++x) {
      RationalMatrix fx = RationalMatrix::Zero(n.dims[x], m.dims[x]);
      for (int b = 0; b < k; ++b) fx += Rational(static_cast<long>(coef[b])) * h.basis[b][x];
      f.push_back(std::move(fx));
    }
    if (invertible_everywhere(f)) return true;
  }
  return false;
}

PosetRep build_M_lambda(const Poset& y, Cover alpha, const Rational& lambda) {
  const auto reg = poset::hasse_regularity(y);
  if (reg.uniform != 2 || y.covers().size() != static_cast<std::size_t>(y.size()) || !poset::is_connected(y)) {
    throw std::invalid_argument("build_M_lambda: Hasse diagram is not a cycle");
  }
  if (!y.cover_index(alpha.first, alpha.second)) throw std::invalid_argument("build_M_lambda: alpha is not a cover");
  PosetRep r = constant_rep(y, 1);
  r.map(alpha.first, alpha.second) = one_by_one(lambda);
  return r;
}

Poset SquareCyclePoset::cycle_poset() const { return poset::induced_subposet(x, cycle); }

SquareCyclePoset square_cycle_poset(const Poset& p, const reptype::SquareCycle& c) {
  const reptype::Certificate cert{reptype::Verdict::Wild, c};
  if (auto v = reptype::validate_certificate(p, cert); !v) {
    throw std::invalid_argument("not a square-cycle pattern: " + v.diagnostic);
  }
  SquareCyclePoset s;
  s.ambient = c.cycle;
  s.ambient.push_back(c.omega);
  s.x = poset::induced_subposet(p, s.ambient);
  auto local = [&](Elem e) { return static_cast<Elem>(std::find(s.ambient.begin(), s.ambient.end(), e) - s.ambient.begin()); };
  for (std::size_t i = 0; i < c.cycle.size(); ++i) s.cycle.push_back(static_cast<Elem>(i));
  s.omega = local(c.omega);
  s.a = local(c.square[1]);
  s.b = local(c.square[2]);
  s.apex = local(c.square[3]);
  return s;
}

namespace {

Cover oriented(const Poset& x, Elem u, Elem v) { return x.less(u, v) ? Cover{u, v} : Cover{v, u}; }

// Index i of cycle edge (cycle[i], cycle[i+1]) for the unordered edge {u, v}.
std::optional<std::size_t> cycle_edge(const SquareCyclePoset& s, Elem u, Elem v) {
  const auto n = s.cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Elem p = s.cycle[i], q = s.cycle[(i + 1) % n];
    if ((p == u && q == v) || (p == v && q == u)) return i;
  }
  return std::nullopt;
}

}  // namespace

Cover default_alpha(const SquareCyclePoset& s) {
  const auto n = s.cycle.size();
  const auto e1 = *cycle_edge(s, s.a, s.apex);
  const auto e2 = *cycle_edge(s, s.b, s.apex);
  auto dist = [&](std::size_t i, std::size_t j) {
    const auto d = i > j ? i - j : j - i;
    return std::min(d, n - d);
  };
  // ties go to the smallest (lower, upper) pair of ambient indices, so the
  // choice does not depend on where the cycle listing starts
  std::optional<Cover> best;
  std::pair<Elem, Elem> best_key;
  std::size_t best_d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = std::min(dist(i, e1), dist(i, e2));
    const Cover e = oriented(s.x, s.cycle[i], s.cycle[(i + 1) % n]);
    const std::pair<Elem, Elem> key{s.ambient[e.first], s.ambient[e.second]};
    if (!best || d > best_d || (d == best_d && key < best_key)) {
      best = e;
      best_d = d;
      best_key = key;
    }
  }
  return *best;
}

PosetRep build_M_lambda_mu(const SquareCyclePoset& s, const Rational& lambda, const Rational& mu, std::optional<Cover> alpha) {
  if (lambda == mu) throw std::invalid_argument("build_M_lambda_mu: lambda and mu must differ");
  const Cover al = alpha ? *alpha : default_alpha(s);
  const auto idx = cycle_edge(s, al.first, al.second);
  if (!idx || !s.x.cover_index(al.first, al.second)) throw std::invalid_argument("build_M_lambda_mu: alpha is not a cycle cover");
  if (*idx == *cycle_edge(s, s.a, s.apex) || *idx == *cycle_edge(s, s.b, s.apex)) {
    throw std::invalid_argument("build_M_lambda_mu: alpha lies in the commutative square");
  }
  PosetRep r = constant_rep(s.x, 2);
  r.dims[s.omega] = 1;
  RationalMatrix diag = RationalMatrix::Zero(2, 2);
  diag(0, 0) = lambda;
  diag(1, 1) = mu;
  r.map(al.first, al.second) = diag;
  const bool below = s.omega_below();
  for (Elem v : {s.a, s.b}) {
    if (below) {
      r.map(s.omega, v) = RationalMatrix::Ones(2, 1);
    } else {
      r.map(v, s.omega) = RationalMatrix::Ones(1, 2);
    }
  }
  return r;
}

nlohmann::json rep_to_json(const PosetRep& r) {
  nlohmann::json maps = nlohmann::json::object();
  for (std::size_t k = 0; k < r.maps.size(); ++k) {
    const auto [x, y] = r.base.covers()[k];
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < r.maps[k].rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Index j = 0; j < r.maps[k].cols(); ++j) row.push_back(exact::to_string(r.maps[k](i, j)));
      rows.push_back(std::move(row));
    }
    maps[std::to_string(x) + "->" + std::to_string(y)] = std::move(rows);
  }
  return {{"poset", poset::to_json(r.base)}, {"dims", r.dims}, {"maps", std::move(maps)}};
}

PosetRep rep_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("poset") || !doc.contains("dims") || !doc.contains("maps")) {
    throw std::invalid_argument("representation needs \"poset\", \"dims\" and \"maps\"");
  }
  PosetRep r;
  r.base = poset::poset_from_json(doc.at("poset"));
  try {
    r.dims = doc.at("dims").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("\"dims\": ") + e.what());
  }
  if (static_cast<int>(r.dims.size()) != r.base.size()) throw std::invalid_argument("\"dims\" has the wrong length");
  const auto& maps = doc.at("maps");
  if (!maps.is_object() || maps.size() != r.base.covers().size()) {
    throw std::invalid_argument("\"maps\" must hold exactly one matrix per cover");
  }
  for (const auto& [x, y] : r.base.covers()) {
    const auto key = std::to_string(x) + "->" + std::to_string(y);
    if (!maps.contains(key)) throw std::invalid_argument("missing map for cover " + key);
    const auto& rows = maps.at(key);
    RationalMatrix m(r.dims[y], r.dims[x]);
    if (!rows.is_array() || static_cast<int>(rows.size()) != r.dims[y]) throw std::invalid_argument("map " + key + " has the wrong shape");
    for (int i = 0; i < r.dims[y]; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != r.dims[x]) throw std::invalid_argument("map " + key + " has the wrong shape");
      for (int j = 0; j < r.dims[x]; ++j) {
        const auto& e = rows[i][j];
        m(i, j) = e.is_string() ? exact::parse_rational(e.get<std::string>())
                                : e.is_number_integer() ? Rational(e.get<long>()) : throw std::invalid_argument("bad entry in " + key);
      }
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

}  // namespace cambrep::quiverrep
