#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cambrep/cli/commands.hpp"
#include "cambrep/reptype/certificate.hpp"

namespace cambrep::cli {

enum class RowMode {
  Classify,     // classify, compare the verdict
  Contraction,  // weak order: contraction onto the standard Cambrian lattice
};

struct VerificationRow {
  BuildSpec spec;
  reptype::Verdict expected;
  RowMode mode = RowMode::Classify;
  std::optional<int> expected_size;
  /// Also require a hereditary witness on a cycle of this length + pendant.
  std::optional<int> target_cycle;
  /// Cambrian rows: lattice with rank-regular Hasse diagram.
  std::optional<int> regular;
  std::string name() const;
};

struct RowResult {
  std::string name;
  reptype::Verdict expected = reptype::Verdict::Unknown;
  reptype::Verdict verdict = reptype::Verdict::Unknown;
  std::string variant;
  int size = 0;
  int witness_size = 0;
  double seconds = 0;
  bool pass = false;
  std::string note;
};

/// The trichotomy rows: finite for rank <= 2, tame for the cube, wild for
/// everything else constructed.
std::vector<VerificationRow> verification_matrix();

RowResult run_row(const VerificationRow& row, std::uint64_t seed);
/// Runs rows on `jobs` threads; results come back in row order.
std::vector<RowResult> run_matrix(const std::vector<VerificationRow>& rows, unsigned jobs, std::uint64_t seed);

nlohmann::json row_to_json(const RowResult& r);

}  // namespace cambrep::cli
