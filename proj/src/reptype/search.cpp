#include "cambrep/reptype/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>

#include "cambrep/poset/constructions.hpp"

namespace cambrep::reptype {

namespace {

std::optional<Certificate> accept(const Poset& p, Certificate c) {
  if (validate_certificate(p, c)) return c;
  return std::nullopt;
}

// Chordless simple cycles of exactly `len` vertices, each reported once with
// its smallest vertex first. Stops when the step budget runs out.
std::vector<std::vector<int>> chordless_cycles(const Graph& g, int len, std::uint64_t& steps) {
  const auto n = static_cast<int>(g.size());
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<int> adj(static_cast<std::size_t>(n), 0);  // path vertices adjacent to v
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  auto push = [&](int v) {
    path.push_back(v);
    on_path[v] = 1;
    for (int w : g[v]) ++adj[w];
  };
  auto pop = [&]() {
    const int v = path.back();
    path.pop_back();
    on_path[v] = 0;
    for (int w : g[v]) --adj[w];
  };
  std::function<void(int)> extend = [&](int s) {
    if (steps == 0) return;
    const int last = path.back();
    const auto k = static_cast<int>(path.size());
    for (int w : g[last]) {
      if (w <= s || on_path[w]) continue;
      const bool touches_start = std::find(g[w].begin(), g[w].end(), s) != g[w].end();
      if (k == len - 1) {
        // closing vertex: adjacent to last and s only
        if (!touches_start || adj[w] != (k == 1 ? 1 : 2)) continue;
        if (path[1] < w) {
          path.push_back(w);
          out.push_back(path);
          path.pop_back();
        }
        continue;
      }
      if ((k >= 2 && touches_start) || adj[w] != 1) continue;
      if (--steps == 0) return;
      push(w);
      extend(s);
      pop();
      if (steps == 0) return;
    }
  };
  for (int s = 0; s < n && steps > 0; ++s) {
    push(s);
    extend(s);
    pop();
  }
  return out;
}

void maybe_shuffle(std::vector<std::vector<int>>& xs, std::uint64_t seed) {
  if (seed == 0) return;
  std::mt19937_64 rng(seed);
  std::shuffle(xs.begin(), xs.end(), rng);
}

// True iff the induced subposet on `cycle` is path-unique with Hasse graph
// exactly the cycle.
bool is_clean_cycle(const Poset& p, const std::vector<int>& cycle) {
  const Poset s = poset::induced_subposet(p, cycle);
  return s.covers().size() == cycle.size() && poset::is_path_unique(s);
}

std::optional<Certificate> cycle_plus_vertex(const Poset& p, const SearchOptions& opt) {
  const Graph g = poset::hasse_graph(p);
  std::uint64_t steps = opt.max_steps;
  const int lo = opt.target_cycle_length ? *opt.target_cycle_length : 4;
  const int hi = opt.target_cycle_length ? *opt.target_cycle_length : opt.max_cycle_length;
  for (int len = lo; len <= hi && steps > 0; ++len) {
    auto cycles = chordless_cycles(g, len, steps);
    maybe_shuffle(cycles, opt.seed);
    for (const auto& cyc : cycles) {
      if (!is_clean_cycle(p, cyc)) continue;
      std::vector<char> in(static_cast<std::size_t>(p.size()), 0);
      for (int x : cyc) in[x] = 1;
      for (Elem v = 0; v < p.size(); ++v) {
        if (in[v]) continue;
        if (std::none_of(cyc.begin(), cyc.end(), [&](int x) { return p.comparable(x, v); })) continue;
        std::vector<Elem> w(cyc.begin(), cyc.end());
        w.push_back(v);
        if (opt.target_cycle_length) {
          const Poset s = poset::induced_subposet(p, w);
          if (s.covers().size() != w.size()) continue;  // pendant: exactly one new edge
        }
        if (auto c = accept(p, {Verdict::Wild, HereditaryWild{w}})) return c;
      }
    }
  }
  return std::nullopt;
}

// Sum over comparable pairs of (number of paths - 1).
exact::Integer excess_paths(const Poset& s) {
  exact::Integer total = 0;
  for (const auto& row : poset::path_counts(s)) {
    for (const auto& c : row) {
      if (c > 1) total += c - 1;
    }
  }
  return total;
}

std::optional<Certificate> greedy_peel(const Poset& p) {
  std::vector<Elem> s(static_cast<std::size_t>(p.size()));
  std::iota(s.begin(), s.end(), 0);
  while (s.size() >= 5) {
    const Poset sub = poset::induced_subposet(p, s);
    if (poset::is_path_unique(sub)) {
      return accept(p, {Verdict::Wild, HereditaryWild{s}});
    }
    auto ext = sub.minimal_elements();
    for (Elem m : sub.maximal_elements()) ext.push_back(m);
    std::optional<std::size_t> best;
    exact::Integer best_excess;
    for (Elem e : ext) {
      std::vector<Elem> t;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (static_cast<Elem>(i) != e) t.push_back(s[i]);
      }
      const Poset tp = poset::induced_subposet(p, t);
      if (!poset::is_connected(tp)) continue;
      const auto ex = excess_paths(tp);
      if (!best || ex < best_excess) {
        best = static_cast<std::size_t>(e);
        best_excess = ex;
      }
    }
    if (!best) return std::nullopt;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(*best));
  }
  return std::nullopt;
}

std::optional<Certificate> exhaustive(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto m : masks) {
    if (__builtin_popcount(m) < 5) continue;
    std::vector<Elem> w;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) w.push_back(i);
    }
    if (auto c = accept(p, {Verdict::Wild, HereditaryWild{w}})) return c;
  }
  return std::nullopt;
}

bool is_dynkin_hereditary(const Poset& q, std::string& shape) {
  if (q.empty() || !poset::is_connected(q) || !poset::is_path_unique(q)) return false;
  const auto gc = graph_class(poset::hasse_graph(q));
  if (gc.kind != GraphKind::Dynkin) return false;
  shape = gc.shape;
  return true;
}

}  // namespace

std::optional<Certificate> hereditary_wild_cert(const Poset& p, const SearchOptions& opt) {
  if (auto c = cycle_plus_vertex(p, opt)) return c;
  if (opt.target_cycle_length) return std::nullopt;
  if (auto c = greedy_peel(p)) return c;
  if (p.size() <= opt.exhaustive_limit) return exhaustive(p);
  return std::nullopt;
}

std::optional<Certificate> square_cycle_cert(const Poset& p, const SearchOptions& opt) {
  const Graph g = poset::hasse_graph(p);
  const int n = p.size();
  std::uint64_t steps = opt.max_steps;
  std::vector<int> adj(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto mark = [&](int v, int d) {
    used[v] = static_cast<char>(d > 0);
    for (int w : g[v]) adj[w] += d;
  };

  for (int len = 4; len <= opt.max_cycle_length && steps > 0; ++len) {
    for (Elem omega = 0; omega < n; ++omega) {
      for (bool up : {true, false}) {
        const auto& nb = up ? p.upper_covers(omega) : p.lower_covers(omega);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            const Elem a = nb[i], b = nb[j];
            for (Elem apex : up ? p.upper_covers(a) : p.lower_covers(a)) {
              if (!(up ? p.covered_by(b, apex) : p.covered_by(apex, b))) continue;
              // path b = q0, q1, ..., q_{len-2} = a avoiding omega and apex
              std::vector<int> path{b};
              std::optional<Certificate> found;
              mark(omega, 1);
              mark(apex, 1);
              mark(b, 1);
              std::function<void()> extend = [&]() {
                if (found || steps == 0) return;
                const int last = path.back();
                const auto k = static_cast<int>(path.size());
                for (int w : g[last]) {
                  if (used[w]) continue;
                  if (k == len - 2) {
                    if (w != a || adj[w] != 3) continue;  // last, apex, omega
                    std::vector<Elem> cycle{apex};
                    cycle.insert(cycle.end(), path.begin(), path.end());
                    cycle.push_back(a);
                    found = accept(p, {Verdict::Wild, SquareCycle{cycle, omega, {omega, a, b, apex}}});
                    if (found) return;
                    continue;
                  }
                  if (w == a || adj[w] != 1) continue;
                  if (--steps == 0) return;
                  path.push_back(w);
                  mark(w, 1);
                  extend();
                  mark(w, -1);
                  path.pop_back();
                  if (found || steps == 0) return;
                }
              };
              extend();
              mark(b, -1);
              mark(apex, -1);
              mark(omega, -1);
              if (found) return found;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> four_regular_cert(const Poset& p) {
  const auto tables = poset::lattice_tables(p);
  if (!tables || poset::hasse_regularity(p).uniform != 4) return std::nullopt;
  const Elem bottom = p.minimal_elements().front();
  std::vector<Elem> bs = p.upper_covers(bottom);
  for (Elem c = 0; c < p.size(); ++c) {
    const auto k = std::count_if(bs.begin(), bs.end(), [&](Elem b) { return p.covered_by(b, c); });
    if (k != 1) continue;
    std::vector<Elem> w{bottom};
    w.insert(w.end(), bs.begin(), bs.end());
    w.push_back(c);
    if (auto cert = accept(p, {Verdict::Wild, FourRegular{1, w}})) return cert;
  }
  std::sort(bs.begin(), bs.end());
  do {
    auto join = [&](int i, int j) { return tables->join[bs[i]][bs[j]]; };
    std::vector<Elem> w{bs[0], bs[1], bs[2], join(0, 1), join(1, 2), join(0, 2), join(0, 3)};
    if (auto cert = accept(p, {Verdict::Wild, FourRegular{2, w}})) return cert;
  } while (std::next_permutation(bs.begin(), bs.end()));
  return std::nullopt;
}

std::optional<Certificate> star_cert(const Poset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).size() >= 5) {
      if (auto c = accept(p, {Verdict::Wild, Star5{x, p.upper_covers(x), true}})) return c;
    }
    if (p.lower_covers(x).size() >= 5) {
      if (auto c = accept(p, {Verdict::Wild, Star5{x, p.lower_covers(x), false}})) return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> finite_cert(const Poset& p, int max_depth) {
  std::string shape;
  if (is_dynkin_hereditary(p, shape)) return accept(p, {Verdict::Finite, FiniteHereditary{shape}});
  std::deque<std::pair<Poset, std::vector<std::string>>> queue{{p, {}}};
  while (!queue.empty()) {
    auto [q, moves] = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(moves.size()) >= max_depth) continue;
    for (const char* move : {"flip", "flip_dual"}) {
      Poset next;
      try {
        next = std::string(move) == "flip" ? poset::flip_flop(q) : poset::flip_flop_dual(q);
      } catch (const poset::NotBoundedError&) {
        continue;
      }
      auto seq = moves;
      seq.emplace_back(move);
      if (is_dynkin_hereditary(next, shape)) {
        if (auto c = accept(p, {Verdict::Finite, FiniteViaFlipFlop{seq, shape}})) return c;
      }
      queue.emplace_back(std::move(next), std::move(seq));
    }
  }
  return accept(p, {Verdict::Finite, CitedFinite{kRank2Citation}});
}

std::optional<Certificate> tame_cube_cert(const Poset& p) {
  const Poset cube = poset::cube(3);
  if (p.size() != cube.size()) return std::nullopt;
  auto iso = poset::find_isomorphism(p, cube);
  if (!iso) return std::nullopt;
  std::vector<Elem> middle;
  for (Elem x = 0; x < p.size(); ++x) {
    const Elem m = (*iso)[x];
    if (!cube.lower_covers(m).empty() && !cube.upper_covers(m).empty()) middle.push_back(x);
  }
  return accept(p, {Verdict::Tame, TameCube{*iso, middle, kCubeCitation}});
}

Certificate contraction_cert(const poset::PosetMorphism& f, std::shared_ptr<const Certificate> target) {
  Certificate c{Verdict::Wild, Contraction{f, std::move(target)}};
  auto v = validate_certificate(f.source, c);
  if (!v) throw std::invalid_argument("contraction rejected: " + v.diagnostic);
  return c;
}

ClassifyReport classify(const Poset& p, const SearchOptions& opt) {
  ClassifyReport r;
  r.invariants = compute_invariants(p);
  const std::function<std::optional<Certificate>()> stages[] = {
      [&] { return finite_cert(p); },
      [&] { return tame_cube_cert(p); },
      [&] { return star_cert(p); },
      [&] { return square_cycle_cert(p, opt); },
      [&] { return hereditary_wild_cert(p, opt); },
      [&] { return four_regular_cert(p); },
  };
  for (const auto& stage : stages) {
    if (auto c = stage()) {
      r.verdict = c->verdict;
      r.certificate = std::move(c);
      return r;
    }
  }
  return r;
}

nlohmann::json report_to_json(const ClassifyReport& r) {
  nlohmann::json doc;
  doc["verdict"] = to_string(r.verdict);
  doc["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : nlohmann::json(nullptr);
  doc["invariants"] = invariants_to_json(r.invariants);
  return doc;
}

}  // namespace cambrep::reptype
