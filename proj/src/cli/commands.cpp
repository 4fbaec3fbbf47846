#include "cambrep/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cambrep/cli/fixtures.hpp"
#include "cambrep/cli/verify.hpp"
#include "cambrep/coxeter/cambrian.hpp"
#include "cambrep/poset/constructions.hpp"
#include "cambrep/poset/io.hpp"
#include "cambrep/quiverrep/rep.hpp"
#include "cambrep/reptype/search.hpp"
#include "cambrep/rootposets/root_poset.hpp"

namespace cambrep::cli {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path || *path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(*path);
  if (!f) throw InputError("cannot write '" + *path + "'");
  f << text << '\n';
}

coxeter::CoxeterType parse_type(const std::string& text) {
  try {
    return coxeter::CoxeterType::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string summary(const poset::Poset& p) {
  const auto reg = poset::hasse_regularity(p);
  std::ostringstream s;
  s << "size " << p.size() << ", "
    << (reg.uniform ? std::to_string(*reg.uniform) + "-regular" : std::string("not regular")) << ", "
    << (poset::is_lattice(p) ? "lattice" : "not a lattice");
  return s.str();
}

exact::Rational parse_q(const std::string& s) {
  try {
    return exact::parse_rational(s);
  } catch (const std::exception&) {
    throw InputError("'" + s + "' is not a rational number");
  }
}

}  // namespace

poset::Poset build_poset(const BuildSpec& spec) {
  const auto& f = spec.family;
  if (f == "cube") {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(spec.type, &used);
      if (used != spec.type.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("cube needs a dimension, got '" + spec.type + "'");
    }
    if (n < 0 || n > 10) throw InputError("cube dimension must be between 0 and 10");
    return poset::cube(n);
  }
  if (f == "stokes-fixture") return fixture("stokes").poset;
  if (f == "fixture") {
    if (!spec.fixture) throw InputError("family 'fixture' needs --fixture NAME");
    try {
      return fixture(*spec.fixture).poset;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (f == "nonnesting") {
    if (spec.fixture) {
      try {
        return rootposets::nonnesting(rootposets::load_root_poset_fixture(read_json_file(*spec.fixture))).ideals.lattice;
      } catch (const InputError&) {
        throw;
      } catch (const std::exception& e) {
        throw InputError("root poset fixture: " + std::string(e.what()));
      }
    }
    const auto t = parse_type(spec.type);
    if (!t.crystallographic()) {
      throw InputError("nonnesting " + t.name() + " needs a root poset fixture (--fixture FILE)");
    }
    return rootposets::nonnesting(t).ideals.lattice;
  }
  if (f == "cambrian" || f == "weak-order") {
    const auto t = parse_type(spec.type);
    coxeter::CoxeterGroup g;
    try {
      g = coxeter::CoxeterGroup::build(t);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    if (f == "weak-order") return coxeter::weak_order(g);
    coxeter::CoxeterElement c = coxeter::CoxeterElement::standard(g.rank());
    if (spec.c) {
      try {
        c = coxeter::CoxeterElement::parse(*spec.c, g.rank());
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    return coxeter::cambrian(g, c).poset;
  }
  throw InputError("unknown family '" + f + "' (cambrian, weak-order, nonnesting, cube, stokes-fixture, fixture)");
}

poset::Poset load_poset(const std::optional<std::string>& path, const std::optional<std::string>& fixture_name) {
  if (fixture_name) {
    if (path) throw InputError("give either a poset file or --fixture, not both");
    try {
      return fixture(*fixture_name).poset;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (!path) throw InputError("no poset given (file argument or --fixture NAME)");
  const json doc = read_json_file(*path);
  try {
    return poset::poset_from_json(doc);
  } catch (const std::exception& e) {
    throw InputError("'" + *path + "': " + e.what());
  }
}

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "json" && args.format != "dot") throw InputError("--format must be json or dot");
  const auto p = build_poset(args.spec);
  const std::string text = args.format == "json" ? poset::to_json(p).dump(2) : poset::to_dot(p);
  write_text(args.out, text, out);
  (args.out ? out : err) << summary(p) << '\n';
  return kExitOk;
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream&) {
  const auto p = load_poset(args.input, args.fixture);
  reptype::SearchOptions opt;
  opt.seed = args.seed;
  const auto report = reptype::classify(p, opt);
  write_text(args.out, reptype::report_to_json(report).dump(2), out);
  return kExitOk;
}

int cmd_invariants(const InvariantsArgs& args, std::ostream& out, std::ostream&) {
  std::vector<std::pair<std::string, poset::Poset>> items;
  if (args.fixture) items.emplace_back(*args.fixture, load_poset(std::nullopt, args.fixture));
  for (const auto& in : args.inputs) items.emplace_back(in, load_poset(in, std::nullopt));
  if (items.empty()) throw InputError("no poset given (file arguments or --fixture NAME)");
  if (args.with_flip) {
    const auto n = items.size();
    for (std::size_t i = 0; i < n; ++i) {
      try {
        items.emplace_back("flip_flop(" + items[i].first + ")", poset::flip_flop(items[i].second));
      } catch (const poset::NotBoundedError& e) {
        throw InputError(items[i].first + ": " + e.what());
      }
    }
  }
  json list = json::array();
  std::set<std::string> polys;
  for (const auto& [name, p] : items) {
    auto doc = reptype::invariants_to_json(reptype::compute_invariants(p));
    doc["input"] = name;
    if (doc.contains("coxeter_polynomial")) polys.insert(doc["coxeter_polynomial"].get<std::string>());
    list.push_back(std::move(doc));
  }
  json result{{"posets", list}};
  if (items.size() > 1) result["equal_coxeter_polynomials"] = polys.size() == 1;
  out << result.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify_paper(const VerifyArgs& args, std::ostream& out, std::ostream&) {
  const auto rows = verification_matrix();
  const auto results = run_matrix(rows, args.jobs, args.seed);
  int failures = 0;
  json doc = json::array();
  out << std::left << std::setw(4) << "#" << std::setw(30) << "row" << std::setw(9) << "expect" << std::setw(9)
      << "verdict" << std::setw(34) << "certificate" << std::setw(6) << "|P|" << std::setw(5) << "|W|" << std::setw(10)
      << "seconds"
      << "result\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.pass) ++failures;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    out << std::left << std::setw(4) << i + 1 << std::setw(30) << r.name << std::setw(9) << reptype::to_string(r.expected)
        << std::setw(9) << reptype::to_string(r.verdict) << std::setw(34) << r.variant << std::setw(6) << r.size
        << std::setw(5) << r.witness_size << std::setw(10) << secs.str() << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) out << "  " << r.note;
    out << '\n';
    doc.push_back(row_to_json(r));
  }
  out << results.size() - static_cast<std::size_t>(failures) << "/" << results.size() << " rows pass\n";
  if (args.out) write_text(args.out, doc.dump(2), out);
  return failures ? kExitMismatch : kExitOk;
}

int cmd_rep_family(const RepFamilyArgs& args, std::ostream& out, std::ostream&) {
  const auto p = load_poset(args.input, args.fixture);
  std::vector<std::pair<exact::Rational, exact::Rational>> pairs;
  for (const auto& s : args.pairs) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("pair '" + s + "' must look like l,m");
    pairs.emplace_back(parse_q(s.substr(0, comma)), parse_q(s.substr(comma + 1)));
  }
  std::mt19937_64 rng(args.seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  while (static_cast<int>(pairs.size()) < static_cast<int>(args.pairs.size()) + args.trials) {
    exact::Rational l(num(rng), den(rng)), m(num(rng), den(rng));
    if (l != m) pairs.emplace_back(l, m);
  }
  if (pairs.empty()) throw InputError("no (lambda, mu) pairs given (--pair or --trials)");
  for (const auto& [l, m] : pairs) {
    if (l == m) throw InputError("lambda and mu must differ (got " + exact::to_string(l) + " twice)");
  }

  const auto found = reptype::square_cycle_cert(p);
  if (!found) throw InputError("no square-cycle pattern found in the poset");
  const auto& pattern = std::get<reptype::SquareCycle>(found->body);
  const auto shape = quiverrep::square_cycle_poset(p, pattern);
  const auto alpha = quiverrep::default_alpha(shape);

  std::vector<quiverrep::PosetRep> reps;
  for (const auto& [l, m] : pairs) reps.push_back(quiverrep::build_M_lambda_mu(shape, l, m, alpha));

  bool consistent = true;
  json samples = json::array();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const int end = quiverrep::hom_space(reps[i], reps[i]).dim();
    const bool valid = quiverrep::validate_rep(reps[i]).ok;
    consistent = consistent && valid && end == 1;
    samples.push_back({{"lambda", exact::to_string(pairs[i].first)},
                       {"mu", exact::to_string(pairs[i].second)},
                       {"valid", valid},
                       {"end_dim", end}});
  }
  json hom = json::array(), iso = json::array();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    json hrow = json::array(), irow = json::array();
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const int h = quiverrep::hom_space(reps[i], reps[j]).dim();
      const bool is = quiverrep::is_isomorphic_reps(reps[i], reps[j]);
      const bool same = std::set{pairs[i].first, pairs[i].second} == std::set{pairs[j].first, pairs[j].second};
      consistent = consistent && is == same && (same || h == 0);
      hrow.push_back(h);
      irow.push_back(is);
    }
    hom.push_back(hrow);
    iso.push_back(irow);
  }
  json doc{{"witness", found->witness()},
           {"square", pattern.square},
           {"alpha", {shape.ambient[alpha.first], shape.ambient[alpha.second]}},
           {"samples", samples},
           {"hom_dims", hom},
           {"isomorphic", iso},
           {"consistent", consistent}};
  write_text(args.out, doc.dump(2), out);
  return consistent ? kExitOk : kExitMismatch;
}

int cmd_search_wild(const SearchWildArgs& args, std::ostream& out, std::ostream&) {
  const auto p = load_poset(args.input, args.fixture);
  reptype::SearchOptions opt;
  opt.seed = args.seed;
  opt.target_cycle_length = args.target_cycle;
  std::optional<reptype::Certificate> cert;
  const auto& s = args.strategy;
  if (args.target_cycle && s != "hereditary" && s != "all") throw InputError("--target-cycle only applies to the hereditary search");
  if (s == "hereditary" || (s == "all" && args.target_cycle)) {
    cert = reptype::hereditary_wild_cert(p, opt);
  } else if (s == "square") {
    cert = reptype::square_cycle_cert(p, opt);
  } else if (s == "star") {
    cert = reptype::star_cert(p);
  } else if (s == "four-regular") {
    cert = reptype::four_regular_cert(p);
  } else if (s == "all") {
    for (auto stage : {0, 1, 2, 3}) {
      if (stage == 0) cert = reptype::star_cert(p);
      if (stage == 1) cert = reptype::square_cycle_cert(p, opt);
      if (stage == 2) cert = reptype::hereditary_wild_cert(p, opt);
      if (stage == 3) cert = reptype::four_regular_cert(p);
      if (cert) break;
    }
  } else {
    throw InputError("unknown strategy '" + s + "' (all, hereditary, square, star, four-regular)");
  }
  json doc{{"found", cert.has_value()}, {"certificate", cert ? reptype::certificate_to_json(*cert) : json(nullptr)}};
  write_text(args.out, doc.dump(2), out);
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cambrian lattices and the representation type of their incidence algebras"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  BuildArgs build;
  std::string build_type_flag;
  auto* b = app.add_subcommand("build", "construct a poset and write it as JSON or DOT");
  b->add_option("family", build.spec.family, "cambrian, weak-order, nonnesting, cube, stokes-fixture, fixture")->required();
  b->add_option("coxeter-type", build.spec.type, "Coxeter type (A3, B3, H3, I2(5), A1xI2(4), ...) or cube dimension");
  b->add_option("--type", build_type_flag, "same as the positional type");
  b->add_option("--c", build.spec.c, "Coxeter element as a generator order, e.g. 1,2,3");
  b->add_option("--fixture", build.spec.fixture, "built-in fixture name, or a root poset JSON file for nonnesting");
  b->add_option("--out", build.out, "output file (default stdout)");
  b->add_option("--format", build.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "classify the representation type and print a certificate");
  c->add_option("poset", classify.input, "poset JSON file ('-' for stdin)");
  c->add_option("--fixture", classify.fixture, "built-in fixture instead of a file");
  c->add_option("--seed", classify.seed, "seed for candidate ordering");
  c->add_option("--out", classify.out, "output file (default stdout)");

  InvariantsArgs inv;
  auto* i = app.add_subcommand("invariants", "size, degrees, lattice flag and Coxeter polynomial");
  i->add_option("posets", inv.inputs, "poset JSON files");
  i->add_option("--fixture", inv.fixture, "built-in fixture");
  i->add_flag("--with-flip", inv.with_flip, "also compare with flip_flop of each input");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-paper", "run the full verification matrix");
  v->add_option("--jobs", verify.jobs, "worker threads (default: hardware concurrency)");
  v->add_option("--seed", verify.seed, "seed for candidate ordering");
  v->add_option("--out", verify.out, "also write the table as JSON");

  RepFamilyArgs rep;
  auto* r = app.add_subcommand("rep-family", "build M(lambda, mu) on a square-cycle pattern and compare");
  r->add_option("poset", rep.input, "poset JSON file");
  r->add_option("--fixture", rep.fixture, "built-in fixture");
  r->add_option("--pair", rep.pairs, "lambda,mu (rationals); repeatable");
  r->add_option("--trials", rep.trials, "number of extra seeded random pairs")->check(CLI::Range(0, 1000));
  r->add_option("--seed", rep.seed, "seed for random pairs");
  r->add_option("--out", rep.out, "output file (default stdout)");

  SearchWildArgs search;
  auto* s = app.add_subcommand("search-wild", "search for a wild certificate only");
  s->add_option("poset", search.input, "poset JSON file");
  s->add_option("--fixture", search.fixture, "built-in fixture");
  s->add_option("--strategy", search.strategy, "all, hereditary, square, star, four-regular");
  s->add_option("--target-cycle", search.target_cycle, "hereditary: cycle length of the witness");
  s->add_option("--seed", search.seed, "seed for candidate ordering");
  s->add_option("--out", search.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*b) {
      if (!build_type_flag.empty()) {
        if (!build.spec.type.empty() && build.spec.type != build_type_flag) throw InputError("conflicting types");
        build.spec.type = build_type_flag;
      }
      return cmd_build(build, out, err);
    }
    if (*c) return cmd_classify(classify, out, err);
    if (*i) return cmd_invariants(inv, out, err);
    if (*v) return cmd_verify_paper(verify, out, err);
    if (*r) return cmd_rep_family(rep, out, err);
    if (*s) return cmd_search_wild(search, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace cambrep::cli
