#pragma once
// JSON report documents emitted by the command-line tool.

#include "lfq/fqcount.hpp"
#include "lfq/gluing.hpp"
#include "lfq/ident.hpp"
#include "lfq/igusa.hpp"
#include "lfq/kinematics.hpp"
#include "lfq/quadrature.hpp"
#include "lfq/realnum.hpp"

#include <json.hpp>

#include <string>

namespace lfq {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

json to_json(const MatI& m);
json to_json(const MatQ& m);
json to_json(const QuadratureResult& q);
json to_json(const CountReport& r, bool with_points = true);
json to_json(const FiberHistogram& h);
json to_json(const SuiteReport& s);
json to_json(const FinitePentagonReport& r);
json to_json(const RealSuite& s);
json to_json(const IgusaRow& row);

// Triangulation summary, Q, face solution, NZ matrices, balanced angles and gluing data.
json derive_report(const Triangulation& t, const std::vector<std::string>& free_order = {});

// {tool, version, command, config, result, ok, timings}; timings are the only
// field that may differ between identical runs.
json envelope(const std::string& command, const json& config, const json& result, bool ok, double seconds,
              const json& extra_timings = json::object());

// Indented key/value rendering of a report for terminals.
std::string render_text(const json& report);

// Required keys per command; returns the list of problems (empty when the document conforms).
std::vector<std::string> validate_report(const json& report);

}  // namespace lfq
