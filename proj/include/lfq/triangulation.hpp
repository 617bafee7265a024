#pragma once
// Ordered ideal triangulations with face/edge identifications and peripheral angle data.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lfq {

enum class Letter { a, b, c };

char letter_char(Letter l);
Letter letter_from_char(char c);

// Edge slots are ordered 01,02,03,12,13,23; opposite edges carry the same shape letter.
inline constexpr std::array<Letter, 6> kEdgeLetter = {Letter::a, Letter::b, Letter::c,
                                                      Letter::c, Letter::b, Letter::a};
// Face slots are ordered 012,013,023,123; the face opposite vertex i sits in slot 3-i.
inline constexpr int face_slot_opposite(int vertex) { return 3 - vertex; }

struct Tetrahedron {
  int sign = 1;
  std::array<int, 6> edges{};
  std::array<int, 4> faces{};
};

struct AngleTerm {
  int tet = 0;
  Letter letter = Letter::a;
  std::int64_t coeff = 0;
};

// Integer combination of per-tetrahedron angle symbols plus a multiple of varpi = (1,-1).
struct LinearAngle {
  std::vector<AngleTerm> terms;
  std::int64_t varpi = 0;
};

struct PeripheralSpec {
  LinearAngle lambda;
  LinearAngle mu;
};

struct Triangulation {
  std::string name;
  std::vector<Tetrahedron> tets;
  int num_edges = 0;
  int num_faces = 0;
  PeripheralSpec peripheral;
  std::string note;
  // Optional preference list for free angle symbols ("a0", "c1", ...).
  std::vector<std::string> free_order;

  int size() const { return static_cast<int>(tets.size()); }
};

// Parses and validates the JSON document format described in README.md.
Triangulation parse_triangulation(std::string_view text);
std::string serialize_triangulation(const Triangulation& t);
// Structural checks; returns the list of problems (empty when valid).
std::vector<std::string> validate(const Triangulation& t);

std::string format_linear_angle(const LinearAngle& a);
LinearAngle parse_linear_angle(std::string_view text);  // e.g. "2a0 + c0 - varpi"

std::vector<std::string> builtin_names();
std::optional<Triangulation> builtin(std::string_view name);
std::vector<std::string> bundled_examples();

}  // namespace lfq
