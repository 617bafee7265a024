#include "lfq/triangulation.hpp"

#include "lfq/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lfq {

using nlohmann::json;

char letter_char(Letter l) {
  switch (l) {
    case Letter::a: return 'a';
    case Letter::b: return 'b';
    case Letter::c: return 'c';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    default: throw Error(std::string("unknown angle letter '") + c + "'");
  }
}

namespace {

LinearAngle linear_angle_from_json(const json& j, std::vector<std::string>& errors, const std::string& what) {
  LinearAngle out;
  if (j.is_string()) return parse_linear_angle(j.get<std::string>());
  if (!j.is_object()) {
    errors.push_back(what + ": expected an object with 'terms' and 'varpi'");
    return out;
  }
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_string() ||
          !t[2].is_number_integer()) {
        errors.push_back(what + ": each term must be [tet_index, letter, coeff]");
        continue;
      }
      const auto l = t[1].get<std::string>();
      if (l.size() != 1 || (l[0] != 'a' && l[0] != 'b' && l[0] != 'c')) {
        errors.push_back(what + ": bad angle letter '" + l + "'");
        continue;
      }
      out.terms.push_back({t[0].get<int>(), letter_from_char(l[0]), t[2].get<std::int64_t>()});
    }
  }
  if (j.contains("varpi")) out.varpi = j.at("varpi").get<std::int64_t>();
  return out;
}

json linear_angle_to_json(const LinearAngle& a) {
  json terms = json::array();
  for (const auto& t : a.terms) terms.push_back({t.tet, std::string(1, letter_char(t.letter)), t.coeff});
  return {{"terms", terms}, {"varpi", a.varpi}};
}

}  // namespace

std::vector<std::string> validate(const Triangulation& t) {
  std::vector<std::string> errors;
  const int n = t.size();
  if (n == 0) {
    errors.push_back("no tetrahedra");
    return errors;
  }
  std::map<int, int> face_count;
  std::map<int, int> edge_seen;
  for (int i = 0; i < n; ++i) {
    const auto& tet = t.tets[i];
    if (tet.sign != 1 && tet.sign != -1)
      errors.push_back("tetrahedron " + std::to_string(i) + ": sign must be +1 or -1");
    for (int e : tet.edges) {
      if (e < 0) errors.push_back("tetrahedron " + std::to_string(i) + ": negative edge label");
      ++edge_seen[e];
    }
    for (int f : tet.faces) {
      if (f < 0) errors.push_back("tetrahedron " + std::to_string(i) + ": negative face label");
      ++face_count[f];
    }
  }
  for (const auto& [f, c] : face_count)
    if (c != 2) errors.push_back("face " + std::to_string(f) + " occurs " + std::to_string(c) + " times, expected 2");
  if (static_cast<int>(face_count.size()) != 2 * n)
    errors.push_back("expected " + std::to_string(2 * n) + " distinct faces, found " +
                     std::to_string(face_count.size()));
  if (!face_count.empty() && face_count.rbegin()->first != static_cast<int>(face_count.size()) - 1)
    errors.push_back("face labels must be 0..F-1");
  if (!edge_seen.empty() && edge_seen.rbegin()->first != static_cast<int>(edge_seen.size()) - 1)
    errors.push_back("edge labels must be 0..E-1");
  if (t.num_faces != static_cast<int>(face_count.size()))
    errors.push_back("num_faces mismatch");
  if (t.num_edges != static_cast<int>(edge_seen.size()))
    errors.push_back("num_edges mismatch");
  for (const auto* la : {&t.peripheral.lambda, &t.peripheral.mu})
    for (const auto& term : la->terms)
      if (term.tet < 0 || term.tet >= n)
        errors.push_back("peripheral term references tetrahedron " + std::to_string(term.tet));
  return errors;
}

Triangulation parse_triangulation(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("triangulation document is not valid JSON: ") + e.what());
  }
  std::vector<std::string> errors;
  Triangulation t;
  if (!doc.is_object()) throw Error("triangulation document must be a JSON object");
  t.name = doc.value("name", std::string("unnamed"));
  t.note = doc.value("note", std::string());
  if (doc.contains("free_order"))
    for (const auto& s : doc.at("free_order")) t.free_order.push_back(s.get<std::string>());
  if (!doc.contains("tetrahedra") || !doc.at("tetrahedra").is_array()) throw Error("no tetrahedra");
  int idx = 0;
  for (const auto& jt : doc.at("tetrahedra")) {
    const std::string where = "tetrahedron " + std::to_string(idx++);
    Tetrahedron tet;
    if (!jt.is_object()) {
      errors.push_back(where + ": expected an object");
      continue;
    }
    if (!jt.contains("sign") || !jt.at("sign").is_number_integer()) {
      errors.push_back(where + ": missing integer sign");
    } else {
      tet.sign = jt.at("sign").get<int>();
    }
    const auto& je = jt.value("edges", json::array());
    const auto& jf = jt.value("faces", json::array());
    if (je.size() != 6) errors.push_back(where + ": expected 6 edge slots, got " + std::to_string(je.size()));
    if (jf.size() != 4) errors.push_back(where + ": expected 4 face slots, got " + std::to_string(jf.size()));
    for (std::size_t k = 0; k < std::min<std::size_t>(6, je.size()); ++k) tet.edges[k] = je[k].get<int>();
    for (std::size_t k = 0; k < std::min<std::size_t>(4, jf.size()); ++k) tet.faces[k] = jf[k].get<int>();
    t.tets.push_back(tet);
  }
  if (doc.contains("peripheral")) {
    const auto& jp = doc.at("peripheral");
    if (jp.contains("lambda")) t.peripheral.lambda = linear_angle_from_json(jp.at("lambda"), errors, "lambda");
    if (jp.contains("mu")) t.peripheral.mu = linear_angle_from_json(jp.at("mu"), errors, "mu");
  }
  int max_edge = -1, max_face = -1;
  for (const auto& tet : t.tets) {
    for (int e : tet.edges) max_edge = std::max(max_edge, e);
    for (int f : tet.faces) max_face = std::max(max_face, f);
  }
  t.num_edges = doc.value("num_edges", max_edge + 1);
  t.num_faces = doc.value("num_faces", max_face + 1);
  for (auto& e : validate(t)) errors.push_back(std::move(e));
  if (!errors.empty()) {
    std::ostringstream os;
    os << "invalid triangulation '" << t.name << "':";
    for (const auto& e : errors) os << "\n  - " << e;
    throw Error(os.str());
  }
  return t;
}

std::string serialize_triangulation(const Triangulation& t) {
  json doc;
  doc["name"] = t.name;
  if (!t.note.empty()) doc["note"] = t.note;
  json tets = json::array();
  for (const auto& tet : t.tets)
    tets.push_back({{"sign", tet.sign}, {"edges", tet.edges}, {"faces", tet.faces}});
  doc["tetrahedra"] = tets;
  doc["num_edges"] = t.num_edges;
  doc["num_faces"] = t.num_faces;
  doc["peripheral"] = {{"lambda", linear_angle_to_json(t.peripheral.lambda)},
                       {"mu", linear_angle_to_json(t.peripheral.mu)}};
  if (!t.free_order.empty()) doc["free_order"] = t.free_order;
  return doc.dump(2);
}

std::string format_linear_angle(const LinearAngle& a) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const auto m = c < 0 ? -c : c;
    if (m != 1) os << m;
    os << sym;
    first = false;
  };
  for (const auto& t : a.terms) put(t.coeff, std::string(1, letter_char(t.letter)) + std::to_string(t.tet));
  put(a.varpi, "varpi");
  if (first) os << "0";
  return os.str();
}

LinearAngle parse_linear_angle(std::string_view text) {
  LinearAngle out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> LinearAngle {
    throw Error("cannot parse angle combination '" + std::string(text) + "': " + why);
  };
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    std::int64_t coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (text.substr(i, 5) == "varpi") {
      out.varpi += sign * coeff;
      i += 5;
    } else if (i < text.size() && (text[i] == 'a' || text[i] == 'b' || text[i] == 'c')) {
      const Letter l = letter_from_char(text[i++]);
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("missing tetrahedron index");
      int tet = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) tet = tet * 10 + (text[i++] - '0');
      out.terms.push_back({tet, l, sign * coeff});
    } else {
      fail("expected an angle symbol or varpi");
    }
    first = false;
  }
  return out;
}

}  // namespace lfq
