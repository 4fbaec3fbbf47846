#include <stdexcept>

#include "cambrep/poset/io.hpp"
#include "cambrep/reptype/certificate.hpp"

namespace cambrep::reptype {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("certificate is missing \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json doc;
  doc["verdict"] = to_string(c.verdict);
  doc["variant"] = c.variant_name();
  doc["witness"] = c.witness();
  doc["moves"] = json::array();
  doc["citation"] = "";
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SquareCycle>) {
          doc["cycle"] = b.cycle;
          doc["omega"] = b.omega;
          doc["square"] = b.square;
        } else if constexpr (std::is_same_v<T, Star5>) {
          doc["center"] = b.center;
          doc["leaves"] = b.leaves;
          doc["upward"] = b.upward;
        } else if constexpr (std::is_same_v<T, FourRegular>) {
          doc["case"] = b.case_tag;
        } else if constexpr (std::is_same_v<T, Contraction>) {
          doc["morphism"] = {{"source", poset::to_json(b.morphism.source)},
                             {"target", poset::to_json(b.morphism.target)},
                             {"map", b.morphism.map}};
          doc["target_certificate"] = b.target ? certificate_to_json(*b.target) : json(nullptr);
        } else if constexpr (std::is_same_v<T, FiniteViaFlipFlop>) {
          doc["moves"] = b.moves;
          doc["shape"] = b.shape;
        } else if constexpr (std::is_same_v<T, FiniteHereditary>) {
          doc["shape"] = b.shape;
        } else if constexpr (std::is_same_v<T, TameCube>) {
          doc["iso"] = b.iso;
          doc["citation"] = b.citation;
        } else if constexpr (std::is_same_v<T, CitedFinite>) {
          doc["citation"] = b.citation;
        }
      },
      c.body);
  return doc;
}

Certificate certificate_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  Certificate c;
  c.verdict = parse_verdict(field<std::string>(doc, "verdict"));
  const auto variant = field<std::string>(doc, "variant");
  if (variant == "HereditaryWild") {
    c.body = HereditaryWild{field<std::vector<Elem>>(doc, "witness")};
  } else if (variant == "SquareCycle") {
    c.body = SquareCycle{field<std::vector<Elem>>(doc, "cycle"), field<Elem>(doc, "omega"),
                         field<std::array<Elem, 4>>(doc, "square")};
  } else if (variant == "Star5") {
    c.body = Star5{field<Elem>(doc, "center"), field<std::vector<Elem>>(doc, "leaves"), field<bool>(doc, "upward")};
  } else if (variant == "FourRegular") {
    c.body = FourRegular{field<int>(doc, "case"), field<std::vector<Elem>>(doc, "witness")};
  } else if (variant == "Contraction") {
    const auto m = field<json>(doc, "morphism");
    Contraction body;
    body.morphism.source = poset::poset_from_json(field<json>(m, "source"));
    body.morphism.target = poset::poset_from_json(field<json>(m, "target"));
    body.morphism.map = field<std::vector<Elem>>(m, "map");
    body.target = std::make_shared<const Certificate>(certificate_from_json(field<json>(doc, "target_certificate")));
    c.body = std::move(body);
  } else if (variant == "FiniteViaFlipFlop") {
    c.body = FiniteViaFlipFlop{field<std::vector<std::string>>(doc, "moves"), field<std::string>(doc, "shape")};
  } else if (variant == "FiniteHereditary") {
    c.body = FiniteHereditary{field<std::string>(doc, "shape")};
  } else if (variant == "TameCube") {
    c.body = TameCube{field<std::vector<Elem>>(doc, "iso"), field<std::vector<Elem>>(doc, "witness"),
                      field<std::string>(doc, "citation")};
  } else if (variant == "CitedFinite") {
    c.body = CitedFinite{field<std::string>(doc, "citation")};
  } else {
    throw std::invalid_argument("unknown certificate variant '" + variant + "'");
  }
  return c;
}

}  // namespace cambrep::reptype
