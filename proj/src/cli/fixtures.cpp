#include "cambrep/cli/fixtures.hpp"

#include <stdexcept>

#include "cambrep/poset/io.hpp"

namespace cambrep::cli {

namespace {

struct Raw {
  const char* name;
  const char* description;
  const char* isomorphic_to;
  int size;
  std::vector<poset::Cover> covers;  // (lower, upper)
  std::vector<Elem> red;
  std::vector<Elem> blue;
};

const std::vector<Raw>& raw_fixtures() {
  static const std::vector<Raw> raw{
    {"cambrian-a1xi2-4", "Cambrian lattice of A1 x I2(4), drawn as a prism", "cambrian A1xI2(4)", 12,
     {{4, 11}, {3, 6}, {0, 3}, {9, 11}, {3, 5}, {2, 4}, {10, 11}, {6, 7}, {1, 9}, {5, 7}, {6, 8}, {0, 2}, {8, 10}, {0, 1}, {2, 5}, {7, 10}, {1, 4}, {8, 9}},
     {1, 2, 3, 4, 5, 6, 7, 8, 9}, {}},
    {"cambrian-a3-first", "first Cambrian lattice of A3 with a marked witness", "cambrian A3", 14,
     {{12, 6}, {4, 7}, {4, 5}, {1, 5}, {7, 2}, {1, 3}, {2, 11}, {11, 13}, {8, 9}, {3, 13}, {7, 12}, {0, 4}, {5, 11}, {10, 8}, {8, 3}, {9, 13}, {2, 6}, {0, 1}, {6, 9}, {0, 10}, {10, 12}},
     {1, 3, 4, 5, 7, 8, 10, 12}, {2}},
    {"cambrian-a3-second", "second Cambrian lattice of A3 with a marked witness", "cambrian A3", 14,
     {{10, 3}, {8, 11}, {6, 1}, {2, 12}, {7, 13}, {3, 2}, {9, 3}, {11, 12}, {5, 9}, {8, 4}, {5, 13}, {1, 12}, {10, 4}, {0, 7}, {0, 5}, {7, 8}, {0, 6}, {6, 11}, {9, 1}, {13, 10}, {4, 2}},
     {1, 3, 4, 6, 8, 9, 10, 11}, {13}},
    {"cambrian-b3-first", "first Cambrian lattice of B3 with a marked witness", "cambrian B3", 20,
     {{3, 10}, {2, 11}, {8, 19}, {18, 11}, {10, 15}, {18, 8}, {7, 6}, {12, 17}, {14, 0}, {0, 3}, {7, 12}, {6, 17}, {15, 9}, {15, 13}, {8, 3}, {4, 12}, {19, 1}, {5, 17}, {1, 5}, {9, 4}, {1, 9}, {0, 16}, {14, 2}, {14, 18}, {11, 5}, {13, 4}, {2, 6}, {19, 10}, {16, 7}, {16, 13}},
     {1, 2, 5, 6, 7, 9, 11, 13, 15, 16}, {10}},
    {"cambrian-b3-second", "second Cambrian lattice of B3 with a marked witness", "cambrian B3", 20,
     {{6, 12}, {9, 5}, {17, 12}, {15, 5}, {4, 17}, {16, 17}, {7, 6}, {15, 1}, {10, 6}, {8, 4}, {11, 7}, {0, 3}, {7, 1}, {19, 9}, {3, 13}, {11, 18}, {11, 2}, {0, 10}, {9, 13}, {8, 16}, {2, 0}, {10, 4}, {18, 14}, {5, 16}, {2, 14}, {13, 8}, {1, 12}, {18, 15}, {19, 3}, {14, 19}},
     {0, 1, 3, 5, 6, 7, 9, 10, 13, 15}, {8}},
    {"cambrian-h3-first", "first Cambrian lattice of H3 with a marked witness", "cambrian H3", 32,
     {{29, 25}, {19, 14}, {14, 29}, {15, 10}, {22, 5}, {31, 7}, {21, 19}, {13, 30}, {23, 13}, {18, 30}, {15, 31}, {2, 3}, {4, 27}, {7, 12}, {1, 26}, {6, 9}, {16, 7}, {17, 25}, {28, 4}, {23, 29}, {10, 16}, {26, 11}, {11, 6}, {3, 1}, {27, 8}, {24, 0}, {2, 0}, {21, 22}, {5, 28}, {31, 21}, {9, 8}, {0, 1}, {30, 25}, {8, 17}, {12, 2}, {10, 13}, {24, 18}, {3, 22}, {26, 5}, {20, 12}, {11, 28}, {14, 17}, {16, 20}, {15, 23}, {20, 24}, {19, 27}, {4, 9}, {18, 6}},
     {0, 1, 3, 13, 14, 18, 19, 21, 22, 23, 24, 29, 30}, {26}},
    {"cambrian-h3-second", "second Cambrian lattice of H3 with a marked witness", "cambrian H3", 32,
     {{5, 29}, {26, 4}, {22, 13}, {28, 10}, {10, 21}, {11, 24}, {28, 31}, {17, 16}, {27, 25}, {26, 23}, {19, 20}, {8, 0}, {24, 10}, {11, 18}, {17, 15}, {7, 30}, {16, 14}, {12, 25}, {31, 19}, {6, 25}, {14, 12}, {7, 11}, {8, 1}, {1, 5}, {9, 2}, {16, 0}, {0, 22}, {15, 12}, {3, 19}, {29, 27}, {1, 13}, {18, 28}, {29, 2}, {20, 6}, {23, 3}, {31, 21}, {15, 27}, {4, 7}, {17, 8}, {5, 24}, {23, 30}, {13, 4}, {9, 20}, {2, 6}, {21, 9}, {30, 18}, {14, 3}, {22, 26}},
     {3, 5, 7, 11, 12, 14, 15, 23, 24, 27, 29, 30}, {4}},
    {"nonnesting-a3", "order ideals of the A3 root poset", "nonnesting A3", 14,
     {{2, 3}, {0, 2}, {3, 4}, {10, 12}, {4, 10}, {6, 7}, {5, 11}, {1, 8}, {12, 13}, {11, 12}, {1, 3}, {4, 11}, {8, 9}, {2, 7}, {0, 6}, {3, 5}, {0, 1}, {8, 4}, {9, 10}, {7, 4}, {6, 8}},
     {1, 2, 3, 5, 6, 7, 8}, {}},
    {"stokes", "12-vertex Stokes lattice of rank 3", "", 12,
     {{9, 0}, {9, 3}, {9, 8}, {0, 2}, {0, 10}, {3, 10}, {3, 5}, {8, 1}, {8, 11}, {2, 1}, {2, 7}, {10, 7}, {11, 5}, {11, 6}, {1, 6}, {5, 4}, {6, 4}, {7, 4}},
     {0, 1, 2, 3, 5, 7, 8, 10, 11}, {}},
  };
  return raw;
}

}  // namespace

std::vector<Elem> Fixture::marked() const {
  std::vector<Elem> out = red;
  out.insert(out.end(), blue.begin(), blue.end());
  return out;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    for (const auto& r : raw_fixtures()) {
      out.push_back({r.name, r.description, r.isomorphic_to, poset::Poset::from_covers(poset::index_labels(r.size), r.covers),
                     r.red, r.blue});
    }
    return out;
  }();
  return all;
}

const Fixture& fixture(const std::string& name) {
  std::string known;
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
    known += (known.empty() ? "" : ", ") + f.name;
  }
  throw std::invalid_argument("unknown fixture '" + name + "' (known: " + known + ")");
}

nlohmann::json fixture_to_json(const Fixture& f) {
  auto doc = poset::to_json(f.poset);
  doc["name"] = f.name;
  doc["description"] = f.description;
  doc["red"] = f.red;
  doc["blue"] = f.blue;
  return doc;
}

reptype::Certificate stokes_certificate() {
  return {reptype::Verdict::Wild, reptype::SquareCycle{{2, 1, 8, 11, 5, 3, 10, 7}, 0, {0, 2, 10, 7}}};
}

}  // namespace cambrep::cli
