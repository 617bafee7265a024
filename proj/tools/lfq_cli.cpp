// lfq: derive gluing data, count points over F_p, evaluate real-field integrals and
// run the identity suites. Exit status: 0 pass, 1 check failure, 2 usage or input error.

#include "lfq/error.hpp"
#include "lfq/field.hpp"
#include "lfq/gluing.hpp"
#include "lfq/report.hpp"
#include "lfq/triangulation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lfq;

struct Common {
  std::string out;
  std::string format = "json";
  int threads = 1;
};

struct DeriveOpts {
  std::string knot;
  std::vector<std::string> free_order;
  std::string x_exponent_237 = "1";
};

struct CountOpts {
  std::string knot;
  std::uint32_t p = 0;
  std::string p_range;
  std::uint32_t eps = 0;
  bool all_eps = false;
  std::string s = "s", t = "t";
  bool brute_force = false;
  bool histogram = false;
  bool cross_check = false;
};

struct RealOpts {
  std::string knot = "4_1";
  double lambda_dot = 0, mu_dot = 0;
  double tol = 1e-13;
  std::size_t max_evals = 0;
  std::string method = "mb";
};

struct VerifyOpts {
  std::string suite = "all";
  std::vector<std::uint32_t> p;
  std::string convention = "exclude";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

struct IgusaOpts {
  std::vector<std::uint32_t> p = {2, 3, 5};
  std::vector<std::string> s = {"1", "2"};
  int n = kMaxIgusaN;
  std::vector<std::string> polys;
};

Triangulation load_knot(const std::string& knot) {
  if (auto t = builtin(knot == "237" ? "m237" : knot)) return *t;
  std::ifstream in(knot);
  if (!in) throw Error("unknown knot '" + knot + "': not a builtin (3_1, 4_1, 5_2, m237) and not a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

std::vector<std::uint32_t> primes_in(const std::string& range) {
  const auto colon = range.find(':');
  if (colon == std::string::npos) throw Error("--p-range expects LO:HI, got '" + range + "'");
  std::uint32_t lo = 0, hi = 0;
  try {
    lo = static_cast<std::uint32_t>(std::stoul(range.substr(0, colon)));
    hi = static_cast<std::uint32_t>(std::stoul(range.substr(colon + 1)));
  } catch (const std::exception&) {
    throw Error("--p-range expects LO:HI, got '" + range + "'");
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = std::max(lo, 3u); q <= hi; ++q)
    if (is_prime(q)) out.push_back(q);
  if (out.empty()) throw Error("--p-range " + range + " contains no odd prime");
  return out;
}

json run_derive(const DeriveOpts& o, bool& ok) {
  const Triangulation t = load_knot(o.knot);
  json r = derive_report(t, o.free_order);
  if (t.name == "m237" && o.x_exponent_237 != "1") {
    r["gluing"]["exponent_offset"][0] = to_string(parse_rational(o.x_exponent_237));
    r["gluing"]["x_exponent_override"] = o.x_exponent_237;
  }
  ok = r["angles"]["balancing_ok"].get<bool>();
  return r;
}

json run_count(const CountOpts& o, int threads, bool& ok, json& timings) {
  const Triangulation t = load_knot(o.knot);
  const GluingSystem g = derive(t);
  std::vector<std::uint32_t> primes;
  if (!o.p_range.empty())
    primes = primes_in(o.p_range);
  else if (o.p)
    primes = {o.p};
  else
    throw Error("count needs --p or --p-range");
  const CountMethod method = o.brute_force ? CountMethod::brute_force : CountMethod::propagate;
  json runs = json::array();
  ok = true;
  for (std::uint32_t p : primes) {
    const PrimeField F(p);
    if (o.eps && o.eps % p == 0) throw Error("--eps must be a unit mod p");
    const std::uint32_t eps = o.all_eps ? 0 : o.eps % p;
    std::cerr << "count " << t.name << " p=" << p << (eps ? " eps=" + std::to_string(eps) : " all eps") << "\n";
    const CountReport rep = invariant_sum(g, F, eps, o.s, o.t, method, threads);
    json run = to_json(rep);
    if (o.histogram) run["histogram"] = to_json(fiber_histogram(g, F, method, threads));
    if (o.cross_check) {
      const CountMethod other = method == CountMethod::propagate ? CountMethod::brute_force : CountMethod::propagate;
      const bool same = rep.same_payload(invariant_sum(g, F, eps, o.s, o.t, other, threads));
      run["cross_check"] = {{"method", other == CountMethod::brute_force ? "brute-force" : "propagate"}, {"equal", same}};
      ok = ok && same;
    }
    timings["p=" + std::to_string(p)] = rep.seconds;
    runs.push_back(run);
  }
  return {{"knot", t.name}, {"method", o.brute_force ? "brute-force" : "propagate"}, {"runs", runs}};
}

json run_real(const RealOpts& o, bool& ok) {
  QuadratureResult q;
  if (o.knot == "4_1") {
    if (o.method == "mb")
      q = mb_41(o.lambda_dot, o.mu_dot);
    else if (o.method == "period")
      q = period_41(o.lambda_dot, o.mu_dot, o.tol);
    else if (o.method == "alt-period")
      q = period_41_alt(o.lambda_dot, o.mu_dot, AltForm::derived, o.tol);
    else
      throw Error("--method must be mb, period or alt-period");
  } else if (o.knot == "5_2-hks" || o.knot == "5_2") {
    q = hks_52(std::max(o.tol, 1e-12));
  } else {
    throw Error("real supports --knot 4_1 or 5_2-hks");
  }
  if (o.max_evals && q.evaluations > o.max_evals)
    throw ComputeError("evaluation budget exceeded: " + std::to_string(q.evaluations) + " > --max-evals " +
                       std::to_string(o.max_evals) + "; raise --max-evals or loosen --tol");
  ok = std::isfinite(q.value.real());
  json r = to_json(q);
  r["knot"] = o.knot;
  if (o.knot == "4_1") {
    r["lambda_dot"] = o.lambda_dot;
    r["mu_dot"] = o.mu_dot;
  }
  return r;
}

json run_verify_real(const VerifyOpts& o, bool& ok) {
  json suites = json::array();
  ok = true;
  auto add = [&](json s, bool counts = true) {
    if (counts) ok = ok && s["ok"].get<bool>();
    if (!counts) s["informational"] = true;
    suites.push_back(std::move(s));
  };
  add(to_json(gamma_inversion_suite(o.samples, o.seed)));
  const HacSuite h = h_ac_suite(o.samples, o.seed + 1);
  add(to_json(h.triple_vs_gamma));
  add(to_json(h.bc_vs_gamma));
  add(to_json(h.bc_printed_vs_gamma), false);
  add(to_json(h.cyclic));
  add(to_json(fourier_gamma_suite(20, o.seed + 2)));
  const double mb = mb_41(0, 0).real(), per = period_41(0, 0).real(), alt = period_41_alt(0, 0).real();
  const double spread = std::max({std::abs(mb - per), std::abs(mb - alt), std::abs(per - alt)});
  add({{"suite", "4_1 mb = period = alt-period at (0,0)"}, {"samples", 3}, {"tolerance", 1e-6},
       {"max_residual", spread}, {"values", {mb, per, alt}}, {"ok", spread <= 1e-6}});
  return {{"suites", suites}};
}

MinusOneConvention parse_convention(const std::string& s) {
  if (s == "exclude") return MinusOneConvention::exclude;
  if (s == "one") return MinusOneConvention::one;
  if (s == "sign") return MinusOneConvention::sign;
  throw Error("--convention must be exclude, one or sign");
}

json run_verify(const VerifyOpts& o, bool& ok) {
  const std::vector<std::string> all = {"pentagon-finite", "residue", "angled", "weil", "symm", "inversion"};
  std::vector<std::string> names = o.suite == "all" ? all : std::vector<std::string>{o.suite};
  json suites = json::array();
  ok = true;
  for (const auto& name : names) {
    std::cerr << "verify " << name << "\n";
    if (name == "pentagon-finite") {
      const std::vector<std::uint32_t> ps = o.p.empty() ? std::vector<std::uint32_t>{3, 5, 7} : o.p;
      for (std::uint32_t p : ps) {
        json s = to_json(finite_pentagon_check(p, parse_convention(o.convention)));
        ok = ok && s["ok"].get<bool>();
        suites.push_back(s);
      }
      continue;
    }
    SuiteReport rep;
    if (name == "residue")
      rep = residue_support_check(o.samples, o.seed);
    else if (name == "angled")
      rep = angled_pentagon_support_check(o.samples, o.seed);
    else if (name == "weil")
      rep = weil_symmetry_check(o.samples, o.seed);
    else if (name == "symm")
      rep = symm23_check(o.samples, o.seed);
    else if (name == "inversion")
      rep = inversion_suite(o.p.empty() ? std::vector<std::uint32_t>{3, 5, 7, 11, 13} : o.p);
    else
      throw Error("unknown suite '" + name + "'");
    ok = ok && rep.ok();
    suites.push_back(to_json(rep));
  }
  return {{"suites", suites}};
}

json run_igusa(const IgusaOpts& o, bool& ok) {
  json rows = json::array(), counts = json::array();
  ok = true;
  for (std::uint32_t p : o.p)
    for (const auto& row : igusa_I(p, o.s, o.n)) {
      ok = ok && row.agree;
      rows.push_back(to_json(row));
    }
  for (const auto& text : o.polys) {
    const IntPoly g = IntPoly::parse(text);
    for (std::uint32_t p : o.p)
      for (int n = 1; n <= o.n; ++n) {
        if (std::pow(double(p), double(n) * double(g.variables().size())) > kCountBudget) break;
        const std::uint64_t lifted = count_mod_pn(g, p, n), scanned = count_mod_pn_scan(g, p, n);
        ok = ok && lifted == scanned;
        counts.push_back({{"poly", g.str()}, {"p", p}, {"n", n}, {"count", lifted}, {"scan", scanned}});
      }
  }
  return {{"rows", rows}, {"counts", counts}};
}

void emit(const Common& c, const json& doc) {
  const std::string text = c.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error("cannot write --out file '" + c.out + "'");
  f << text;
  std::cerr << "report written to " << c.out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-field invariants of knot complements: derivation, point counts, real integrals, identities"};
  app.fallthrough();
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "Write the report to this file instead of stdout");
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", common.threads, "Worker threads for point counting")->check(CLI::PositiveNumber);

  DeriveOpts d;
  auto* derive_cmd = app.add_subcommand("derive", "Q matrix, balanced angles and gluing system");
  derive_cmd->add_option("--knot", d.knot, "Builtin name (3_1, 4_1, 5_2, m237) or triangulation file")->required();
  derive_cmd->add_option("--free-order", d.free_order, "Preferred free angle symbols, e.g. a1,c0")->delimiter(',');
  derive_cmd->add_option("--x-exponent-237", d.x_exponent_237, "Norm exponent reported for x in m237");

  CountOpts c;
  auto* count_cmd = app.add_subcommand("count", "Points of the gluing system over F_p");
  count_cmd->add_option("--knot", c.knot, "Builtin name or triangulation file")->required();
  auto* p_opt = count_cmd->add_option("--p", c.p, "Odd prime");
  auto* range_opt = count_cmd->add_option("--p-range", c.p_range, "Primes in LO:HI");
  p_opt->excludes(range_opt);
  auto* eps_opt = count_cmd->add_option("--eps", c.eps, "Single fiber eps");
  auto* all_opt = count_cmd->add_flag("--all-eps", c.all_eps, "Every eps in F_p^x (default)");
  eps_opt->excludes(all_opt);
  count_cmd->add_option("--s", c.s, "Symbolic weight s");
  count_cmd->add_option("--t", c.t, "Symbolic weight t");
  count_cmd->add_flag("--brute-force", c.brute_force, "Exhaustive scan instead of propagation");
  count_cmd->add_flag("--histogram", c.histogram, "Include the fiber histogram");
  count_cmd->add_flag("--cross-check", c.cross_check, "Compare against the other enumeration method");

  RealOpts r;
  auto* real_cmd = app.add_subcommand("real", "Real-field state integrals");
  real_cmd->add_option("--knot", r.knot, "4_1 or 5_2-hks")->check(CLI::IsMember({"4_1", "5_2", "5_2-hks"}));
  real_cmd->add_option("--lambda-dot", r.lambda_dot, "lambda-dot");
  real_cmd->add_option("--mu-dot", r.mu_dot, "mu-dot");
  real_cmd->add_option("--tol", r.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  real_cmd->add_option("--max-evals", r.max_evals, "Fail when the quadrature needs more evaluations");
  real_cmd->add_option("--method", r.method, "4_1 route: mb, period or alt-period");

  VerifyOpts v;
  auto* verify_cmd = app.add_subcommand("verify", "Exact identity suites");
  verify_cmd->add_option("--suite", v.suite, "pentagon-finite, residue, angled, weil, symm, inversion or all")
      ->check(CLI::IsMember({"all", "pentagon-finite", "residue", "angled", "weil", "symm", "inversion"}));
  verify_cmd->add_option("--p", v.p, "Primes for the finite suites")->delimiter(',');
  verify_cmd->add_option("--convention", v.convention, "phi(alpha,-1): exclude, one or sign");
  verify_cmd->add_option("--samples", v.samples, "Samples per seeded suite");
  verify_cmd->add_option("--seed", v.seed, "Random seed");

  VerifyOpts vr;
  auto* verify_real_cmd = app.add_subcommand("verify-real", "Real-field identity suites");
  verify_real_cmd->add_option("--samples", vr.samples, "Samples per suite");
  verify_real_cmd->add_option("--seed", vr.seed, "Random seed");

  IgusaOpts ig;
  auto* igusa_cmd = app.add_subcommand("igusa", "Truncated p-adic integrals and mod p^n counts");
  igusa_cmd->add_option("--p", ig.p, "Primes")->delimiter(',');
  igusa_cmd->add_option("--s", ig.s, "s samples (integers exact, others numeric)")->delimiter(',');
  igusa_cmd->add_option("--n", ig.n, "Truncation level")->check(CLI::Range(1, 64));
  igusa_cmd->add_option("--poly", ig.polys, "Integer polynomial to count mod p^n, e.g. x*(x-1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    json config, result, timings = json::object();
    bool ok = true;
    std::string command;
    if (*derive_cmd) {
      command = "derive";
      config = {{"knot", d.knot}, {"free_order", d.free_order}, {"x_exponent_237", d.x_exponent_237}};
      result = run_derive(d, ok);
    } else if (*count_cmd) {
      command = "count";
      config = {{"knot", c.knot}, {"p", c.p}, {"p_range", c.p_range}, {"eps", c.eps}, {"all_eps", !c.eps},
                {"s", c.s}, {"t", c.t}, {"brute_force", c.brute_force}, {"histogram", c.histogram},
                {"cross_check", c.cross_check}, {"threads", common.threads}};
      if (!c.eps) c.all_eps = true;
      result = run_count(c, common.threads, ok, timings);
    } else if (*real_cmd) {
      command = "real";
      config = {{"knot", r.knot}, {"lambda_dot", r.lambda_dot}, {"mu_dot", r.mu_dot}, {"tol", r.tol},
                {"max_evals", r.max_evals}, {"method", r.method}};
      result = run_real(r, ok);
    } else if (*verify_cmd) {
      command = "verify";
      config = {{"suite", v.suite}, {"p", v.p}, {"convention", v.convention}, {"samples", v.samples}, {"seed", v.seed}};
      result = run_verify(v, ok);
    } else if (*verify_real_cmd) {
      command = "verify-real";
      config = {{"samples", vr.samples}, {"seed", vr.seed}};
      result = run_verify_real(vr, ok);
    } else {
      command = "igusa";
      config = {{"p", ig.p}, {"s", ig.s}, {"n", ig.n}, {"poly", ig.polys}};
      result = run_igusa(ig, ok);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(common, envelope(command, config, result, ok, seconds, timings));
    if (!ok) std::cerr << "lfq: " << command << ": at least one check failed\n";
    return ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "lfq: error: " << e.what() << "\n";
    return 2;
  } catch (const ComputeError& e) {
    std::cerr << "lfq: computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lfq: error: " << e.what() << "\n";
    return 2;
  }
}
