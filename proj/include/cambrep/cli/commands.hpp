#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cambrep/poset/poset.hpp"
#include "cambrep/reptype/certificate.hpp"

namespace cambrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

/// Bad user input: maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// family in {cambrian, weak-order, nonnesting, cube, stokes-fixture,
/// fixture}; `type` is a Coxeter type, or n for cube; `c` is "1,2,3" for
/// cambrian (default: standard); `fixture` names a built-in fixture for
/// family "fixture", or a root-poset JSON file for nonnesting.
struct BuildSpec {
  std::string family;
  std::string type;
  std::optional<std::string> c;
  std::optional<std::string> fixture;
};

/// Throws InputError on anything the user got wrong.
poset::Poset build_poset(const BuildSpec& spec);

/// Reads poset JSON from `path` ("-" for stdin) or, if `fixture` is set,
/// returns that built-in fixture. Throws InputError.
poset::Poset load_poset(const std::optional<std::string>& path, const std::optional<std::string>& fixture);

struct BuildArgs {
  BuildSpec spec;
  std::optional<std::string> out;
  std::string format = "json";
};
int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err);

struct ClassifyArgs {
  std::optional<std::string> input;
  std::optional<std::string> fixture;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);

struct InvariantsArgs {
  std::vector<std::string> inputs;
  std::optional<std::string> fixture;
  bool with_flip = false;  // also report flip_flop(P) and compare
};
int cmd_invariants(const InvariantsArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 0;
  std::optional<std::string> out;  // JSON copy of the table
};
int cmd_verify_paper(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct RepFamilyArgs {
  std::optional<std::string> input;
  std::optional<std::string> fixture;
  std::vector<std::string> pairs;  // "l,m" with rational entries
  int trials = 0;                  // extra random pairs
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};
int cmd_rep_family(const RepFamilyArgs& args, std::ostream& out, std::ostream& err);

struct SearchWildArgs {
  std::optional<std::string> input;
  std::optional<std::string> fixture;
  std::string strategy = "all";  // all, hereditary, square, star, four-regular
  std::optional<int> target_cycle;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};
int cmd_search_wild(const SearchWildArgs& args, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cambrep::cli
