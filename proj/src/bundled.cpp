#include "lfq/triangulation.hpp"

namespace lfq {

namespace {

struct Bundled {
  const char* name;
  const char* doc;
};

// The printed m237 face table lists face 3 in slot 123 of tetrahedron 0, which
// makes face 3 occur three times; slot value 0 reproduces the published Q matrix.
// Meridians for 5_2 and m237 are chosen so that their dot parts equal the
// t-coefficient of the reduced gluing data.
const Bundled kBundled[] = {
    {"3_1", R"({
  "name": "3_1",
  "note": "trefoil, two positively oriented tetrahedra",
  "tetrahedra": [
    {"sign": 1, "edges": [0, 0, 1, 0, 0, 0], "faces": [0, 1, 2, 3]},
    {"sign": 1, "edges": [0, 0, 1, 0, 0, 0], "faces": [3, 2, 1, 0]}
  ],
  "peripheral": {
    "lambda": {"terms": [[0, "a", 2], [1, "a", -2], [0, "c", -1]], "varpi": 0},
    "mu": {"terms": [[0, "a", -1], [1, "a", 1]], "varpi": 0}
  }
})"},
    {"4_1", R"({
  "name": "4_1",
  "note": "figure-eight knot",
  "tetrahedra": [
    {"sign": 1, "edges": [0, 1, 0, 1, 1, 0], "faces": [0, 1, 2, 3]},
    {"sign": -1, "edges": [1, 0, 1, 0, 0, 1], "faces": [2, 3, 0, 1]}
  ],
  "peripheral": {
    "lambda": {"terms": [[0, "a", 2], [0, "c", 1]], "varpi": -1},
    "mu": {"terms": [[0, "a", 1], [1, "a", -1]], "varpi": 0}
  }
})"},
    {"5_2", R"({
  "name": "5_2",
  "note": "three-twist knot",
  "tetrahedra": [
    {"sign": 1, "edges": [0, 1, 1, 0, 2, 2], "faces": [0, 1, 2, 3]},
    {"sign": 1, "edges": [2, 0, 1, 1, 1, 2], "faces": [4, 5, 1, 2]},
    {"sign": 1, "edges": [0, 2, 1, 2, 0, 1], "faces": [3, 0, 5, 4]}
  ],
  "peripheral": {
    "lambda": {"terms": [[0, "a", 2], [1, "a", 4], [2, "a", -3], [1, "c", -1]], "varpi": 0},
    "mu": {"terms": [[1, "a", -1], [2, "a", 1]], "varpi": 0}
  }
})"},
    {"m237", R"({
  "name": "m237",
  "note": "(-2,3,7) pretzel knot; isometry signature eLAkaccddjgnqw",
  "tetrahedra": [
    {"sign": 1, "edges": [0, 1, 2, 0, 1, 0], "faces": [0, 1, 2, 0]},
    {"sign": 1, "edges": [3, 0, 2, 1, 3, 1], "faces": [3, 4, 1, 5]},
    {"sign": 1, "edges": [1, 3, 2, 1, 0, 3], "faces": [5, 2, 4, 6]},
    {"sign": 1, "edges": [3, 1, 0, 3, 1, 3], "faces": [7, 3, 6, 7]}
  ],
  "peripheral": {
    "lambda": {"terms": [[0, "a", 1], [1, "a", 8], [2, "a", -9], [3, "a", -1], [1, "c", -1]], "varpi": 0},
    "mu": {"terms": [[1, "a", -1], [2, "a", 1]], "varpi": 0}
  }
})"},
};

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : kBundled) out.emplace_back(b.name);
  return out;
}

std::optional<Triangulation> builtin(std::string_view name) {
  for (const auto& b : kBundled)
    if (name == b.name) return parse_triangulation(b.doc);
  return std::nullopt;
}

std::vector<std::string> bundled_examples() {
  std::vector<std::string> out;
  for (const auto& b : kBundled) out.emplace_back(b.doc);
  return out;
}

}  // namespace lfq
