#include "cambrep/cli/verify.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <thread>

#include "cambrep/cli/fixtures.hpp"
#include "cambrep/coxeter/cambrian.hpp"
#include "cambrep/poset/constructions.hpp"
#include "cambrep/reptype/search.hpp"
#include "cambrep/rootposets/root_poset.hpp"

namespace cambrep::cli {

using reptype::Verdict;

std::string VerificationRow::name() const {
  std::string s = spec.family;
  if (!spec.type.empty()) s += " " + spec.type;
  if (spec.c) s += " c=" + *spec.c;
  return s;
}

std::vector<VerificationRow> verification_matrix() {
  std::vector<VerificationRow> rows;
  auto cambrian_rows = [&](const std::string& type, Verdict v, int size, std::optional<int> target) {
    const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse(type));
    for (const auto& c : coxeter::distinct_coxeter_elements(g)) {
      rows.push_back({{"cambrian", type, c.to_string(), {}}, v, RowMode::Classify, size, target, g.rank()});
    }
  };
  auto plain = [&](const std::string& family, const std::string& type, Verdict v, std::optional<int> size = {}) {
    rows.push_back({{family, type, {}, {}}, v, RowMode::Classify, size, {}, {}});
  };

  cambrian_rows("A1", Verdict::Finite, 2, {});
  for (int h = 3; h <= 9; ++h) cambrian_rows("I2(" + std::to_string(h) + ")", Verdict::Finite, h + 2, {});
  for (const char* t : {"A1", "A2", "B2", "C2", "A1xA1"}) plain("nonnesting", t, Verdict::Finite);
  plain("weak-order", "I2(4)", Verdict::Finite, 8);

  plain("cube", "3", Verdict::Tame, 8);
  cambrian_rows("A1xA1xA1", Verdict::Tame, 8, {});
  plain("nonnesting", "A1xA1xA1", Verdict::Tame, 8);

  for (int h = 3; h <= 5; ++h) cambrian_rows("A1xI2(" + std::to_string(h) + ")", Verdict::Wild, 2 * (h + 2), {});
  cambrian_rows("A3", Verdict::Wild, 14, 8);
  cambrian_rows("B3", Verdict::Wild, 20, 10);
  cambrian_rows("H3", Verdict::Wild, 32, 13);
  plain("nonnesting", "A3", Verdict::Wild, 14);
  plain("nonnesting", "B3", Verdict::Wild, 20);
  plain("nonnesting", "C3", Verdict::Wild, 20);
  plain("cube", "4", Verdict::Wild, 16);
  rows.push_back({{"cambrian", "A4", std::string("1,2,3,4"), {}}, Verdict::Wild, RowMode::Classify, 42, {}, 4});
  rows.push_back({{"stokes-fixture", "", {}, {}}, Verdict::Wild, RowMode::Classify, 12, {}, 3});
  for (auto [t, n] : {std::pair{"A3", 24}, {"B3", 48}, {"H3", 120}}) {
    rows.push_back({{"weak-order", t, {}, {}}, Verdict::Wild, RowMode::Contraction, n, {}, {}});
  }
  return rows;
}

namespace {

void append(std::string& note, const std::string& s) { note += (note.empty() ? "" : "; ") + s; }

}  // namespace

RowResult run_row(const VerificationRow& row, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  RowResult r;
  r.name = row.name();
  r.expected = row.expected;
  bool ok = true;
  try {
    const poset::Poset p = build_poset(row.spec);
    r.size = p.size();
    if (row.expected_size && p.size() != *row.expected_size) {
      ok = false;
      append(r.note, "size " + std::to_string(p.size()) + " != " + std::to_string(*row.expected_size));
    }
    if (row.regular) {
      if (!poset::is_lattice(p)) {
        ok = false;
        append(r.note, "not a lattice");
      }
      if (poset::hasse_regularity(p).uniform != row.regular) {
        ok = false;
        append(r.note, "Hasse diagram not " + std::to_string(*row.regular) + "-regular");
      }
    }

    reptype::SearchOptions opt;
    opt.seed = seed;
    if (row.mode == RowMode::Classify) {
      const auto rep = reptype::classify(p, opt);
      r.verdict = rep.verdict;
      if (rep.certificate) {
        r.variant = rep.certificate->variant_name();
        r.witness_size = static_cast<int>(rep.certificate->witness().size());
      }
    } else {
      const auto g = coxeter::CoxeterGroup::build(coxeter::CoxeterType::parse(row.spec.type));
      auto f = coxeter::cambrian_projection(g, coxeter::CoxeterElement::standard(g.rank()));
      const auto target = reptype::classify(f.target, opt);
      if (target.verdict == Verdict::Wild) {
        const auto cert = reptype::contraction_cert(f, std::make_shared<const reptype::Certificate>(*target.certificate));
        r.verdict = cert.verdict;
        r.variant = "Contraction(" + target.certificate->variant_name() + ")";
        r.witness_size = static_cast<int>(target.certificate->witness().size());
      } else {
        append(r.note, "Cambrian quotient is " + reptype::to_string(target.verdict));
      }
    }

    if (row.target_cycle) {
      auto topt = opt;
      topt.target_cycle_length = row.target_cycle;
      const auto cert = reptype::hereditary_wild_cert(p, topt);
      if (!cert) {
        ok = false;
        append(r.note, "no " + std::to_string(*row.target_cycle) + "-cycle + pendant witness");
      } else {
        r.witness_size = static_cast<int>(cert->witness().size());
        r.variant += " + HereditaryWild";
        append(r.note, std::to_string(*row.target_cycle) + "-cycle + pendant witness");
      }
    }
    if (row.spec.family == "stokes-fixture") {
      const auto v = reptype::validate_certificate(p, stokes_certificate());
      if (!v) {
        ok = false;
        append(r.note, "marked square-cycle pattern rejected: " + v.diagnostic);
      } else {
        append(r.note, "marked pattern {0,1,2,3,5,7,8,10,11} square (0,2,10,7) validated");
      }
    }
    if (row.spec.family == "nonnesting" && row.expected == Verdict::Wild) {
      const auto nn = rootposets::nonnesting(coxeter::CoxeterType::parse(row.spec.type));
      const auto beta = rootposets::find_beta_certificate(nn.roots);
      if (!beta) {
        ok = false;
        append(r.note, "no beta pattern");
      } else {
        const auto subset = rootposets::nonnesting_rank3_wild_subset(nn, *beta);
        const auto v = reptype::check_hereditary(p, subset, reptype::GraphKind::Wild);
        ok = ok && v.ok;
        append(r.note, v ? "L(beta) subset validated" : "L(beta) subset rejected: " + v.diagnostic);
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    append(r.note, std::string("error: ") + e.what());
  }
  r.pass = ok && r.verdict == r.expected;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<RowResult> run_matrix(const std::vector<VerificationRow>& rows, unsigned jobs, std::uint64_t seed) {
  std::vector<RowResult> results(rows.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) results[i] = run_row(rows[i], seed);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Label isomorphism classes among the Cambrian rows of each type.
  std::map<std::string, std::vector<std::pair<std::size_t, poset::Poset>>> by_type;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].spec.family != "cambrian") continue;
    try {
      by_type[rows[i].spec.type].emplace_back(i, build_poset(rows[i].spec));
    } catch (const std::exception&) {
    }
  }
  for (auto& [type, members] : by_type) {
    if (members.size() < 2) continue;
    // classes up to isomorphism, and up to isomorphism or order reversal
    auto classify_by = [&](auto&& same) {
      std::vector<int> cls(members.size(), -1);
      int classes = 0;
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < a && cls[a] < 0; ++b) {
          if (same(members[a].second, members[b].second)) cls[a] = cls[b];
        }
        if (cls[a] < 0) cls[a] = classes++;
      }
      return std::make_pair(cls, classes);
    };
    const auto [iso, n_iso] = classify_by([](const poset::Poset& x, const poset::Poset& y) { return poset::is_isomorphic(x, y); });
    const auto [dual, n_dual] = classify_by([](const poset::Poset& x, const poset::Poset& y) {
      return poset::is_isomorphic(x, y) || poset::is_isomorphic(x, poset::dual(y));
    });
    for (std::size_t a = 0; a < members.size(); ++a) {
      append(results[members[a].first].note, "iso class " + std::to_string(iso[a] + 1) + "/" + std::to_string(n_iso) +
                                                 ", up to duality " + std::to_string(dual[a] + 1) + "/" +
                                                 std::to_string(n_dual));
    }
  }
  return results;
}

nlohmann::json row_to_json(const RowResult& r) {
  return {{"row", r.name},
          {"expected", reptype::to_string(r.expected)},
          {"verdict", reptype::to_string(r.verdict)},
          {"variant", r.variant},
          {"size", r.size},
          {"witness_size", r.witness_size},
          {"seconds", r.seconds},
          {"pass", r.pass},
          {"note", r.note}};
}

}  // namespace cambrep::cli
