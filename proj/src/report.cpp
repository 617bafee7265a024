#include "lfq/report.hpp"

#include "lfq/angles.hpp"
#include "lfq/error.hpp"

#include <algorithm>
#include <sstream>

namespace lfq {

json to_json(const MatI& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const MatQ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

json fibers_json(const std::map<std::uint32_t, FiberCount>& fibers) {
  json out = json::array();
  for (const auto& [eps, f] : fibers)
    out.push_back({{"eps", eps}, {"nondegenerate", f.nondegenerate}, {"degenerate", f.degenerate}});
  return out;
}

json point_json(const PointRecord& p) {
  return {{"eps", p.eps}, {"coords", p.coords}, {"jacobian", p.jacobian}, {"degenerate", p.degenerate}};
}

json rats(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

json to_json(const QuadratureResult& q) {
  json j = {{"value", q.value.real()}};
  if (q.value.imag() != 0) j["imag"] = q.value.imag();
  j["abs_error"] = q.abs_error;
  j["evaluations"] = q.evaluations;
  j["method"] = q.method;
  j["domain"] = q.domain;
  return j;
}

json to_json(const CountReport& r, bool with_points) {
  std::size_t nondeg = 0, deg = 0;
  for (const auto& [eps, f] : r.fibers) {
    nondeg += f.nondegenerate;
    deg += f.degenerate;
  }
  json j = {{"p", r.p}, {"s", r.s}, {"t", r.t}, {"invariant", r.invariant}, {"total_points", r.total_points},
            {"total_nondegenerate", nondeg}, {"total_degenerate", deg}, {"fibers", fibers_json(r.fibers)}};
  if (with_points) {
    json d = json::array();
    for (const auto& p : r.degenerate_points) d.push_back(point_json(p));
    j["degenerate_points"] = d;
  }
  return j;
}

json to_json(const FiberHistogram& h) {
  return {{"p", h.p}, {"max_nondegenerate", h.max_nondegenerate}, {"max_total", h.max_total},
          {"fibers", fibers_json(h.fibers)}};
}

json to_json(const SuiteReport& s) {
  json failures = json::object();
  for (const auto& [k, v] : s.check_failures) failures[k] = v;
  return {{"suite", s.suite}, {"samples", s.samples}, {"passed", s.passed}, {"rejected", s.rejected},
          {"check_failures", failures}, {"counterexamples", s.counterexamples}, {"ok", s.ok()}};
}

json to_json(const FinitePentagonReport& r) {
  json cex = json::array();
  for (const auto& t : r.counterexamples) cex.push_back({{"alpha", t[0]}, {"beta", t[1]}, {"x", t[2]}, {"y", t[3]}});
  return {{"suite", "pentagon-finite"},
          {"p", r.p},
          {"convention", convention_name(r.convention)},
          {"tuples", r.tuples},
          {"failing_tuples", r.failing_tuples},
          {"tolerance", kPentagonTolerance},
          {"max_residual", r.max_residual},
          {"max_residual_generic", r.max_residual_generic},
          {"max_residual_x_plus_y_eq_1", r.max_residual_special},
          {"failures_on_x_plus_y_eq_1_only", r.failures_on_special_locus_only},
          {"counterexamples", cex},
          {"ok", r.failing_tuples == 0}};
}

json to_json(const RealSuite& s) {
  return {{"suite", s.name}, {"samples", s.samples}, {"tolerance", s.tolerance}, {"max_residual", s.max_residual},
          {"worst_sample", s.worst}, {"ok", s.ok()}};
}

json to_json(const IgusaRow& row) {
  json j = {{"p", row.p}, {"s", row.s}, {"n", row.n}, {"exact", row.exact}};
  if (row.exact) {
    j["partial"] = row.partial;
    j["closed"] = row.closed;
    j["limit"] = row.limit;
  }
  j["partial_value"] = row.partial_value;
  j["limit_value"] = row.limit_value;
  j["tail_bound"] = row.tail_bound;
  j["agree"] = row.agree;
  return j;
}

json derive_report(const Triangulation& t, const std::vector<std::string>& free_order) {
  const KinematicalData k = kinematical_data(t);
  const NZMatrices nz = nz_matrices(t);
  const AngleFamily f = balance_angles(t, free_order);
  const GluingSystem g = gluing_system(t, k, f);

  json tets = json::array();
  for (const auto& tet : t.tets) tets.push_back({{"sign", tet.sign}, {"edges", tet.edges}, {"faces", tet.faces}});
  json angles = json::array();
  for (int j = 0; j < f.num_tets; ++j)
    angles.push_back({{"a", f.format(f.a[j])}, {"b", f.format(f.b[j])}, {"c", f.format(f.c[j])}});
  json equations = json::array();
  for (int i = 0; i < g.r; ++i) equations.push_back(format_equation(g, i));

  json sigma = json::array(), m = json::array();
  for (int i = 0; i < g.r; ++i) {
    sigma.push_back(g.sigma[i]);
    m.push_back(g.m(i));
  }
  return {{"triangulation",
           {{"name", t.name}, {"note", t.note}, {"num_tetrahedra", t.size()}, {"num_edges", t.num_edges},
            {"num_faces", t.num_faces}, {"tetrahedra", tets}}},
          {"kinematics", {{"face_solution", to_json(k.face_solution)}, {"Q", to_json(k.Q)}}},
          {"nz", {{"A", to_json(nz.A)}, {"B", to_json(nz.B)}, {"C", to_json(nz.C)}}},
          {"angles",
           {{"free", f.free_names()},
            {"tetrahedra", angles},
            {"lambda", f.format(f.lambda)},
            {"mu", f.format(f.mu)},
            {"balancing_ok", [&] {
               for (const auto& r : balancing_residuals(t, f))
                 if (!r.is_zero()) return false;
               return true;
             }()}}},
          {"gluing",
           {{"r", g.r}, {"sigma", sigma}, {"m", m}, {"N", to_json(g.N)}, {"equations", equations},
            {"exponent_slope", rats(g.v)}, {"exponent_offset", rats(g.w)}, {"exponents", format_exponents(g)},
            {"t", g.t_text}, {"t_equals_mu", g.t_equals_mu}}}};
}

json envelope(const std::string& command, const json& config, const json& result, bool ok, double seconds,
              const json& extra_timings) {
  json timings = {{"seconds", seconds}};
  for (const auto& [k, v] : extra_timings.items()) timings[k] = v;
  return {{"tool", "lfq"}, {"version", kToolVersion}, {"command", command}, {"config", config},
          {"result", result}, {"ok", ok}, {"timings", timings}};
}

namespace {

void render(std::ostringstream& os, const json& j, int indent, const std::string& key) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const bool flat_array = j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) {
                            return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) {
                                                          return x.is_primitive();
                                                        }));
                          });
  if (j.is_primitive() || flat_array) {
    os << pad << key << (key.empty() ? "" : ": ") << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    return;
  }
  if (!key.empty()) os << pad << key << ":\n";
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(os, v, indent + 1, k);
  } else {
    std::size_t i = 0;
    for (const auto& v : j) render(os, v, indent + 1, "[" + std::to_string(i++) + "]");
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const auto& [k, v] : report.items()) render(os, v, 0, k);
  return os.str();
}

std::vector<std::string> validate_report(const json& report) {
  std::vector<std::string> problems;
  auto need = [&](const json& obj, const std::string& path, const char* key, json::value_t type) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back("missing " + path + key);
      return;
    }
    const json& v = obj.at(key);
    const bool numeric = type == json::value_t::number_float && v.is_number();
    const bool integral = type == json::value_t::number_unsigned && v.is_number_integer() && !(v.get<std::int64_t>() < 0);
    if (v.type() != type && !numeric && !integral) problems.push_back("wrong type for " + path + key);
  };
  using vt = json::value_t;
  need(report, "", "tool", vt::string);
  need(report, "", "version", vt::string);
  need(report, "", "command", vt::string);
  need(report, "", "config", vt::object);
  need(report, "", "ok", vt::boolean);
  need(report, "", "timings", vt::object);
  if (!problems.empty()) return problems;
  if (!report.contains("result")) {
    problems.push_back("missing result");
    return problems;
  }
  const json& r = report.at("result");
  const std::string cmd = report.at("command");
  if (cmd == "derive") {
    need(r, "result.", "triangulation", vt::object);
    need(r, "result.", "kinematics", vt::object);
    need(r, "result.", "angles", vt::object);
    need(r, "result.", "gluing", vt::object);
    if (problems.empty()) {
      need(r.at("kinematics"), "result.kinematics.", "Q", vt::array);
      for (const char* k : {"sigma", "m", "N", "exponent_slope", "exponent_offset"})
        need(r.at("gluing"), "result.gluing.", k, vt::array);
    }
  } else if (cmd == "count") {
    need(r, "result.", "runs", vt::array);
    if (problems.empty())
      for (const auto& run : r.at("runs")) {
        need(run, "result.runs[].", "p", vt::number_unsigned);
        need(run, "result.runs[].", "fibers", vt::array);
      }
  } else if (cmd == "real") {
    need(r, "result.", "value", vt::number_float);
    need(r, "result.", "abs_error", vt::number_float);
    need(r, "result.", "evaluations", vt::number_unsigned);
  } else if (cmd == "verify-real" || cmd == "verify") {
    need(r, "result.", "suites", vt::array);
    if (problems.empty())
      for (const auto& s : r.at("suites")) {
        need(s, "result.suites[].", "suite", vt::string);
        need(s, "result.suites[].", "ok", vt::boolean);
      }
  } else if (cmd == "igusa") {
    need(r, "result.", "rows", vt::array);
  } else {
    problems.push_back("unknown command " + cmd);
  }
  return problems;
}

}  // namespace lfq
