// Command-line scenario runner: distances, region checks, curve
// classification, Julia/JWC/Lindelof analyses, growth bounds, and the full
// acceptance suite, with deterministic JSON reports and optional CSV tails.
//
// Exit codes: 0 pass, 2 invalid input, 3 verification failure, 4 undecided
// (precision exhausted).

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polydisk/report.hpp"
#include "polydisk/suite.hpp"

using namespace polydisk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitUndecided = 4;

constexpr const char* kVersion = "1.0.0";

struct GlobalOptions {
  std::string report_path;
  std::string csv_dir;
  int depth = 40;
  std::uint64_t seed = 0x5eedULL;
};

ordered_json versions_block(const GlobalOptions& g) {
  ordered_json j;
  j["polydisk"] = kVersion;
  j["schedule"] = "eps_k = 2^-k, k = 1.." + std::to_string(g.depth);
  j["seed"] = g.seed;
  j["tolerances"] = {{"limit", kLimitTol},
                     {"curve_class", kCurveTol},
                     {"bound_slack", 1e-9},
                     {"aitken_denominator_floor", kAitkenDenomFloor},
                     {"infinity_threshold", kInfinityThreshold}};
  return j;
}

void emit(const GlobalOptions& g, const std::string& subcommand, ordered_json scenario,
          ordered_json verdicts, ordered_json diagnostics) {
  ordered_json doc;
  scenario["subcommand"] = subcommand;
  scenario["depth"] = g.depth;
  scenario["seed"] = g.seed;
  doc["scenario"] = scenario;
  doc["verdicts"] = verdicts;
  doc["diagnostics"] = diagnostics;
  doc["versions"] = versions_block(g);
  const std::string text = doc.dump(2) + "\n";
  std::fputs(text.c_str(), stdout);
  if (!g.report_path.empty()) {
    std::ofstream out(g.report_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report to '" + g.report_path + "'");
    out << text;
  }
}

std::map<std::string, double> scalar_params(const std::string& spec,
                                            std::vector<int>* exponents) {
  std::map<std::string, double> out;
  std::string key;
  std::string tok;
  const auto flush = [&](const std::string& t) {
    if (t.empty()) return;
    const std::size_t eq = t.find('=');
    if (eq != std::string::npos) {
      key = t.substr(0, eq);
      tok = t.substr(eq + 1);
    } else if (!key.empty()) {
      tok = t;  // continuation of a list-valued parameter
    } else {
      throw std::invalid_argument("malformed parameter token '" + t + "'");
    }
    if (key == "k" && exponents) {
      exponents->push_back(static_cast<int>(parse_double_strict(tok)));
    } else {
      out[key] = parse_double_strict(tok);
    }
  };
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      flush(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  flush(cur);
  return out;
}

BoundaryPoint boundary_from(const std::string& s, double tol) {
  return BoundaryPoint::decompose(parse_point(s), tol);
}

HoloMap resolve_function(const std::string& name, const std::string& params_spec, int arity) {
  FuncParams p;
  p.scalars = scalar_params(params_spec, &p.exponents);
  auto itc = p.scalars.find("c");
  if (itc != p.scalars.end()) p.constant = cplx{itc->second, 0.0};
  return function_gallery(name, p, arity);
}

Curve resolve_curve(const std::string& name, const std::string& params_spec,
                    const std::optional<BoundaryPoint>& point, const std::string& v_spec,
                    int depth) {
  std::vector<int> ignored;
  const std::map<std::string, double> params = scalar_params(params_spec, &ignored);
  std::vector<cplx> v;
  if (!v_spec.empty()) v = parse_point(v_spec);
  return curve_gallery(name, params, point, v, depth);
}

ordered_json boundary_echo(const BoundaryPoint& x) {
  ordered_json j;
  j["coords"] = to_json(x.coords());
  ordered_json silov = ordered_json::array();
  for (std::size_t s : x.silov_indices()) silov.push_back(s + 1);
  j["silov_indices"] = silov;
  j["degree"] = x.degree();
  j["normalization_adjustment"] = x.adjustment();
  return j;
}

int run_dist(const GlobalOptions& g, const std::string& zs, const std::string& ws,
             const std::string& vs) {
  const Point z{parse_point(zs)};
  ordered_json verdicts, diag;
  ordered_json scenario{{"z", zs}};
  if (!ws.empty()) {
    const Point w{parse_point(ws)};
    verdicts["kobayashi_distance"] = kobayashi_distance(z, w);
    ordered_json per = ordered_json::array();
    for (std::size_t j = 0; j < z.dim(); ++j)
      per.push_back(poincare_distance(DiskPoint{z[j]}, DiskPoint{w[j]}));
    verdicts["poincare_per_component"] = per;
    verdicts["automorphism_image"] = to_json(polydisk_automorphism(z, w));
    scenario["w"] = ws;
  }
  if (!vs.empty()) {
    const Tangent v{parse_point(vs)};
    verdicts["kobayashi_metric"] = kobayashi_metric(z, v);
    scenario["v"] = vs;
  }
  emit(g, "dist", scenario, verdicts, diag);
  return kExitOk;
}

int run_region(const GlobalOptions& g, const std::string& xs, const std::string& zs, double M,
               double R, const std::vector<std::string>& checks, int samples, double tol) {
  const BoundaryPoint x = boundary_from(xs, tol);
  ordered_json verdicts, diag;
  diag["boundary_point"] = boundary_echo(x);
  int exit_code = kExitOk;
  if (!zs.empty()) {
    const std::vector<cplx> z = parse_point(zs);
    const Membership me = horosphere_contains(Horosphere{x, R}, z);
    const Membership mh = koranyi_contains(KoranyiRegion{x, M}, z);
    verdicts["horosphere"] = {{"inside", me.inside}, {"boundary", me.boundary},
                              {"value", me.value}, {"radius", R}};
    verdicts["koranyi"] = {{"inside", mh.inside}, {"boundary", mh.boundary},
                           {"value_sq", mh.value}, {"amplitude", M}};
    verdicts["boundary_limsup"] = boundary_limsup(x, z);
  }
  Rng rng(g.seed);
  for (const std::string& check : checks) {
    if (check == "sandwich") {
      const SandwichReport rep = check_sandwich(x, M, samples, rng);
      verdicts["sandwich"] = {{"pass", rep.pass()},
                              {"ball_samples", rep.ball_samples},
                              {"ball_violations", rep.ball_violations},
                              {"region_samples", rep.region_samples},
                              {"stolz_violations", rep.stolz_violations},
                              {"witness_samples", rep.witness_samples},
                              {"witness_violations", rep.witness_violations},
                              {"max_internal_modulus", rep.max_internal_modulus}};
      if (!rep.pass()) exit_code = kExitVerification;
    } else if (check == "trace") {
      const TraceReport rep = geodesic_trace_check(x, R, M, samples, rng);
      verdicts["trace"] = {{"pass", rep.pass()},
                           {"samples", rep.samples},
                           {"horocycle_disagreements", rep.horocycle_disagreements},
                           {"stolz_disagreements", rep.stolz_disagreements},
                           {"boundary_flagged", rep.boundary_flagged}};
      if (!rep.pass()) exit_code = kExitVerification;
    } else if (check == "inclusion") {
      const InclusionReport rep = koranyi_horosphere_inclusion(x, M, R, samples, rng);
      verdicts["inclusion"] = {{"pass", rep.pass()},
                               {"samples", rep.samples},
                               {"applicable", rep.applicable},
                               {"violations", rep.violations}};
      if (!rep.pass()) exit_code = kExitVerification;
    } else {
      throw CLI::ValidationError("--check", "unknown check '" + check + "'");
    }
  }
  emit(g, "region", ordered_json{{"point", xs}, {"M", M}, {"R", R}, {"samples", samples}},
       verdicts, diag);
  return exit_code;
}

int run_curve(const GlobalOptions& g, const std::string& name, const std::string& params,
              const std::string& xs, const std::string& vs, double tol) {
  std::optional<BoundaryPoint> pt;
  if (!xs.empty()) pt = boundary_from(xs, tol);
  const Curve c = resolve_curve(name, params, pt, vs, g.depth);
  const Classification cl = classify(c);
  ordered_json diag;
  diag["curve"] = c.label;
  diag["target"] = boundary_echo(c.target);
  if (!g.csv_dir.empty()) {
    write_csv_real(g.csv_dir + "/curve_special_ratio.csv", cl.schedule, cl.special_ratio_seq);
    write_csv_real(g.csv_dir + "/curve_restricted.csv", cl.schedule, cl.restricted_seq);
    write_csv_real(g.csv_dir + "/curve_peculiar.csv", cl.schedule, cl.peculiar_seq);
    write_csv_real(g.csv_dir + "/curve_koranyi.csv", cl.schedule, cl.koranyi_seq);
  }
  emit(g, "curve", ordered_json{{"name", name}, {"params", params}, {"point", xs}},
       to_json(cl, true), diag);
  const bool undecided = cl.special == Verdict::undecided ||
                         cl.restricted == Verdict::undecided ||
                         cl.peculiar == Verdict::undecided;
  return undecided ? kExitUndecided : kExitOk;
}

int run_julia(const GlobalOptions& g, const std::string& fname, const std::string& params,
              const std::string& xs, const std::string& radii_spec, int samples, double tol) {
  const BoundaryPoint x = boundary_from(xs, tol);
  const HoloMap f = resolve_function(fname, params, static_cast<int>(x.dim()));
  ordered_json verdicts, diag;
  diag["boundary_point"] = boundary_echo(x);
  int exit_code = kExitOk;

  if (f.codomain() == 1) {
    const JuliaReport jr = julia_coefficient(f, x, g.depth);
    verdicts["julia"] = to_json(jr, true);
    if (!g.csv_dir.empty())
      write_csv_real(g.csv_dir + "/julia_radial_ratio.csv", jr.schedule, jr.radial_ratio);
    if (jr.alpha_finite()) {
      std::vector<double> radii;
      for (const cplx& r : parse_point(radii_spec)) radii.push_back(r.real());
      Rng rng(g.seed);
      const JuliaInclusionReport inc =
          julia_inclusion_check(f, x, jr, radii, samples, rng);
      verdicts["inclusion"] = {{"pass", inc.pass()},
                               {"samples", inc.samples},
                               {"findings", inc.findings.size()},
                               {"max_image_value_ratio", inc.max_image_value_ratio}};
      if (!inc.pass()) exit_code = kExitVerification;
    } else if (!jr.diagnostics.empty() &&
               jr.diagnostics.find("undecided") != std::string::npos) {
      exit_code = kExitUndecided;
    }
  } else {
    const std::vector<ComponentJulia> comps = polydisk_target_julia(f, x, g.depth);
    ordered_json arr = ordered_json::array();
    for (const ComponentJulia& c : comps) {
      ordered_json j;
      j["component"] = c.component + 1;
      j["julia"] = c.julia;
      if (c.julia) {
        j["alpha"] = c.alpha;
        j["tau"] = to_json(c.tau);
      }
      j["radial_verdict"] = to_string(c.radial_verdict);
      arr.push_back(j);
    }
    verdicts["components"] = arr;
  }
  emit(g, "julia",
       ordered_json{{"function", fname}, {"params", params}, {"point", xs},
                    {"radii", radii_spec}, {"samples", samples}},
       verdicts, diag);
  return exit_code;
}

int run_jwc(const GlobalOptions& g, const std::string& fname, const std::string& params,
            const std::string& xs, double tol) {
  const BoundaryPoint x = boundary_from(xs, tol);
  const HoloMap f = resolve_function(fname, params, static_cast<int>(x.dim()));
  const JwcReport rep = jwc_suite(f, x, 8, kLimitTol, g.depth);
  ordered_json diag;
  diag["boundary_point"] = boundary_echo(x);
  if (!g.csv_dir.empty() && !rep.part_i.tail.empty())
    write_csv_complex(g.csv_dir + "/jwc_part_i.csv", default_schedule(g.depth),
                      rep.part_i.tail);
  emit(g, "jwc", ordered_json{{"function", fname}, {"params", params}, {"point", xs}},
       to_json(rep), diag);
  if (rep.pass()) return kExitOk;
  bool only_unconverged = true;
  for (const std::string& v : rep.violations)
    if (v.find("not converged") == std::string::npos) only_unconverged = false;
  return only_unconverged ? kExitUndecided : kExitVerification;
}

int run_lindelof(const GlobalOptions& g, const std::string& fname, const std::string& params,
                 const std::string& xs, const std::string& pilot_name,
                 const std::string& pilot_params, const std::string& pilot_v, double tol) {
  const BoundaryPoint x = boundary_from(xs, tol);
  const HoloMap f = resolve_function(fname, params, static_cast<int>(x.dim()));
  const Curve pilot = resolve_curve(pilot_name, pilot_params, x, pilot_v, g.depth);
  const LindelofReport rep = lindelof_check(f, x, pilot);
  ordered_json verdicts;
  verdicts["pilot"] = to_json(rep.pilot);
  verdicts["pilot_limit"] = to_json(rep.pilot_limit);
  verdicts["k_bounded_route"] = rep.k_bounded_route;
  if (rep.k_bounded_route) verdicts["empirical_k_bound"] = rep.empirical_k_bound;
  verdicts["family"] = to_json(rep.family.overall);
  verdicts["findings"] = rep.findings;
  verdicts["pass"] = rep.pass();
  emit(g, "lindelof",
       ordered_json{{"function", fname}, {"params", params}, {"point", xs},
                    {"pilot", pilot_name}, {"pilot_params", pilot_params}},
       verdicts, ordered_json{{"boundary_point", boundary_echo(x)}});
  if (rep.pass()) return kExitOk;
  return rep.pilot_limit.verdict == LimitVerdict::undecided ? kExitUndecided
                                                            : kExitVerification;
}

int run_bounds(const GlobalOptions& g, const std::string& fname, const std::string& params,
               const std::string& xs, double M, double M1, int samples, double tol) {
  const BoundaryPoint x = boundary_from(xs, tol);
  const HoloMap f = resolve_function(fname, params, static_cast<int>(x.dim()));
  const JuliaReport jr = julia_coefficient(f, x, g.depth);
  if (!jr.alpha_finite())
    throw PreconditionError("bounds: the function carries no finite Julia coefficient here");
  ordered_json verdicts;
  int violations = 0;
  {
    const BoundCheckReport r = incremental_ratio_bound_check(f, x, jr, M, samples, g.seed);
    verdicts["incremental_ratio_2aM2"] = {{"pass", r.pass()},
                                          {"samples", r.samples},
                                          {"violations", r.violations},
                                          {"worst_fraction", r.worst_ratio}};
    violations += r.violations;
  }
  {
    const BoundCheckReport r =
        geodesic_disk_check(x, M, M1, std::max(1, samples / 20), 20, g.seed);
    verdicts["geodesic_disk"] = {{"pass", r.pass()},
                                 {"samples", r.samples},
                                 {"violations", r.violations},
                                 {"disk_radius", (M1 - M) / (M1 + M)}};
    violations += r.violations;
  }
  {
    const BoundCheckReport r = metric_bound_check(x, M, samples, g.seed);
    verdicts["metric_2M3"] = {{"pass", r.pass()},
                              {"samples", r.samples},
                              {"violations", r.violations},
                              {"worst_fraction", r.worst_ratio}};
    violations += r.violations;
  }
  {
    const BoundCheckReport r = derivative_envelope_check(f, x, jr, M, samples, g.seed);
    verdicts["derivative_envelope"] = {{"pass", r.pass()},
                                       {"samples", r.samples},
                                       {"violations", r.violations},
                                       {"constant", kDerivativeEnvelopeConstant},
                                       {"worst_fraction", r.worst_ratio}};
    violations += r.violations;
  }
  emit(g, "bounds",
       ordered_json{{"function", fname}, {"params", params}, {"point", xs}, {"M", M},
                    {"M1", M1}, {"samples", samples}},
       verdicts, ordered_json{{"julia", to_json(jr)}});
  return violations ? kExitVerification : kExitOk;
}

int run_gallery(const GlobalOptions& g) {
  ordered_json verdicts;
  ordered_json fs = ordered_json::array();
  for (const FuncGalleryEntry& e : function_gallery_list())
    fs.push_back({{"name", e.name}, {"params", e.params}, {"expected", e.expected}});
  ordered_json cs = ordered_json::array();
  for (const CurveGalleryEntry& e : curve_gallery_list())
    cs.push_back({{"name", e.name}, {"params", e.params}, {"expected", e.expected}});
  verdicts["functions"] = fs;
  verdicts["curves"] = cs;
  emit(g, "gallery", ordered_json{{"action", "list"}}, verdicts, ordered_json{});
  return kExitOk;
}

int run_paper_suite(const GlobalOptions& g) {
  const std::vector<CriterionResult> results = run_acceptance();
  ordered_json verdicts = ordered_json::array();
  int failures = 0;
  long long assertions = 0;
  for (const CriterionResult& r : results) {
    ordered_json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["details"] = r.details;
    ordered_json m = ordered_json::array();
    for (const auto& [k, v] : r.metrics) m.push_back({{k, v}});
    j["metrics"] = m;
    verdicts.push_back(j);
    if (!r.pass) ++failures;
    ++assertions;
    std::fprintf(stderr, "C%02d %s — %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str());
  }
  emit(g, "paper-suite", ordered_json{},
       ordered_json{{"criteria", verdicts},
                    {"executed", assertions},
                    {"failures", failures}},
       ordered_json{});
  return failures ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kobayashi geometry of the unit polydisk: distances, boundary regions, "
               "curve classes, and boundary-limit verification"};
  app.require_subcommand(1);

  GlobalOptions g;
  if (const char* env = std::getenv("POLYDISK_DEPTH")) g.depth = std::atoi(env);
  app.add_option("--report", g.report_path, "write the JSON report to this path");
  app.add_option("--csv", g.csv_dir, "write CSV tail files into this directory");
  app.add_option("--depth", g.depth, "schedule depth: eps_k = 2^-k, k = 1..depth")
      ->check(CLI::Range(8, 48));
  app.add_option("--seed", g.seed, "seed for all samplers");
  double tol = kSilovTol;
  app.add_option("--silov-tol", tol, "unimodularity tolerance for boundary points");

  std::string zs, ws, vs, xs, name, params, radii = "0.5,1,2", pilot, pilot_params, pilot_v;
  std::vector<std::string> checks;
  double M = 3.0, R = 1.0, M1 = 0.0;
  int samples = 1000;

  CLI::App* dist = app.add_subcommand("dist", "Kobayashi/Poincare distances and metric");
  dist->add_option("--z", zs, "base point, comma-separated complex entries")->required();
  dist->add_option("--w", ws, "second point");
  dist->add_option("--v", vs, "tangent vector");

  CLI::App* region = app.add_subcommand("region", "membership and region structure checks");
  region->add_option("--point", xs, "boundary point")->required();
  region->add_option("--z", zs, "interior point to test");
  region->add_option("--M", M, "Koranyi amplitude");
  region->add_option("--R", R, "horosphere radius");
  region->add_option("--check", checks, "sandwich|trace|inclusion (repeatable)");
  region->add_option("--samples", samples, "samples per check");

  CLI::App* curve = app.add_subcommand("curve", "classify a curve approaching the boundary");
  curve->add_option("--name", name, "curve gallery entry")->required();
  curve->add_option("--params", params, "comma-separated key=value parameters");
  curve->add_option("--point", xs, "boundary point (for curves that need one)");
  curve->add_option("--v", vs, "direction vector (for curves that need one)");

  CLI::App* julia = app.add_subcommand("julia", "Julia coefficient and horosphere images");
  julia->add_option("--function", name, "function gallery entry")->required();
  julia->add_option("--params", params, "comma-separated key=value parameters");
  julia->add_option("--point", xs, "boundary point")->required();
  julia->add_option("--radii", radii, "horosphere radii for the inclusion check");
  julia->add_option("--samples", samples, "samples per radius");

  CLI::App* jwc = app.add_subcommand("jwc", "the full boundary-derivative limit table");
  jwc->add_option("--function", name, "function gallery entry")->required();
  jwc->add_option("--params", params, "comma-separated key=value parameters");
  jwc->add_option("--point", xs, "boundary point")->required();

  CLI::App* lind = app.add_subcommand("lindelof", "pilot-curve limit propagation check");
  lind->add_option("--function", name, "function gallery entry")->required();
  lind->add_option("--params", params, "function parameters");
  lind->add_option("--point", xs, "boundary point")->required();
  lind->add_option("--pilot", pilot, "pilot curve gallery entry")->required();
  lind->add_option("--pilot-params", pilot_params, "pilot curve parameters");
  lind->add_option("--pilot-v", pilot_v, "pilot curve direction vector");

  CLI::App* bounds = app.add_subcommand("bounds", "growth-bound checks on a Koranyi region");
  bounds->add_option("--function", name, "function gallery entry")->required();
  bounds->add_option("--params", params, "function parameters");
  bounds->add_option("--point", xs, "boundary point")->required();
  bounds->add_option("--M", M, "Koranyi amplitude");
  bounds->add_option("--M1", M1, "outer amplitude for the geodesic-disk check");
  bounds->add_option("--samples", samples, "samples per bound");

  CLI::App* gallery = app.add_subcommand("gallery", "registry of functions and curves");
  std::string gallery_action = "list";
  gallery->add_option("action", gallery_action, "list")->check(CLI::IsMember({"list"}));

  app.add_subcommand("paper-suite", "run every acceptance scenario");

  // global options (--report, --depth, ...) remain usable after a subcommand
  for (CLI::App* s : app.get_subcommands(std::function<bool(CLI::App*)>(
           [](CLI::App*) { return true; })))
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!g.csv_dir.empty()) std::filesystem::create_directories(g.csv_dir);
    if (dist->parsed()) return run_dist(g, zs, ws, vs);
    if (region->parsed()) return run_region(g, xs, zs, M, R, checks, samples, tol);
    if (curve->parsed()) return run_curve(g, name, params, xs, vs, tol);
    if (julia->parsed()) return run_julia(g, name, params, xs, radii, samples, tol);
    if (jwc->parsed()) return run_jwc(g, name, params, xs, tol);
    if (lind->parsed())
      return run_lindelof(g, name, params, xs, pilot, pilot_params, pilot_v, tol);
    if (bounds->parsed())
      return run_bounds(g, name, params, xs, M, M1 > 0 ? M1 : 2 * M, samples, tol);
    if (gallery->parsed()) return run_gallery(g);
    return run_paper_suite(g);
  } catch (const PreconditionError& e) {
    std::fprintf(stderr, "precondition: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::fprintf(stderr, "consistency failure: %s\n", e.what());
    return kExitVerification;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerification;
  }
}
