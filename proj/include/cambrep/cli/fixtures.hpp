#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cambrep/poset/poset.hpp"
#include "cambrep/reptype/certificate.hpp"

namespace cambrep::cli {

using poset::Elem;

/// Hand-transcribed reference poset, element i labelled "i",
/// together with the vertices marked red and blue in the drawing.
struct Fixture {
  std::string name;
  std::string description;
  /// Construction the fixture should be isomorphic to ("cambrian A3"), or
  /// empty when there is none.
  std::string isomorphic_to;
  poset::Poset poset;
  std::vector<Elem> red;
  std::vector<Elem> blue;

  /// red followed by blue.
  std::vector<Elem> marked() const;
};

const std::vector<Fixture>& fixtures();
/// Throws std::invalid_argument listing the known names.
const Fixture& fixture(const std::string& name);

/// Poset JSON plus "name", "description", "red", "blue".
nlohmann::json fixture_to_json(const Fixture& f);

/// The square-cycle pattern highlighted on the Stokes fixture: cycle
/// 2-1-8-11-5-3-10-7, omega = 0, square (0, 2, 10, 7).
reptype::Certificate stokes_certificate();

}  // namespace cambrep::cli
