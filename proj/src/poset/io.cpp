#include "cambrep/poset/io.hpp"

#include <sstream>

namespace cambrep::poset {

nlohmann::json to_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : p.covers()) covers.push_back({x, y});
  return {{"labels", p.labels()}, {"covers", covers}};
}

Poset poset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("covers")) {
    throw std::invalid_argument("poset JSON must be an object with a \"covers\" array");
  }
  const auto& covers_doc = doc.at("covers");
  if (!covers_doc.is_array()) throw std::invalid_argument("\"covers\" must be an array");
  std::vector<Cover> covers;
  int max_index = -1;
  for (const auto& c : covers_doc) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw std::invalid_argument("each cover must be a pair of integers, got " + c.dump());
    }
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    max_index = std::max({max_index, covers.back().first, covers.back().second});
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc.at("labels");
    if (!l.is_array()) throw std::invalid_argument("\"labels\" must be an array");
    for (const auto& s : l) {
      if (s.is_string()) {
        labels.push_back(s.get<std::string>());
      } else if (s.is_number_integer()) {
        labels.push_back(std::to_string(s.get<long long>()));
      } else {
        throw std::invalid_argument("labels must be strings");
      }
    }
  } else if (doc.contains("size")) {
    labels = index_labels(doc.at("size").get<int>());
  } else {
    labels = index_labels(max_index + 1);
  }
  for (auto [x, y] : covers) {
    if (x < 0 || y < 0 || x >= static_cast<int>(labels.size()) || y >= static_cast<int>(labels.size())) {
      throw std::invalid_argument("cover [" + std::to_string(x) + ", " + std::to_string(y) +
                                  "] refers to a missing element");
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (Elem x = 0; x < p.size(); ++x) {
    os << "  " << x << " [label=" << nlohmann::json(p.label(x)).dump() << "];\n";
  }
  for (auto [x, y] : p.covers()) os << "  " << x << " -> " << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cambrep::poset
