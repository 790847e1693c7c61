#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "polydisk/jwc.hpp"

namespace polydisk {

// One acceptance criterion = one deterministic scenario with its tolerances
// pinned here. The CLI and the acceptance binary both run these.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  std::vector<std::pair<std::string, std::string>> metrics;

  void metric(const std::string& key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    metrics.emplace_back(key, buf);
  }
  void metric(const std::string& key, const std::string& v) { metrics.emplace_back(key, v); }
};

namespace suite_detail {

inline BoundaryPoint corner() {
  return BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
}
inline BoundaryPoint mixed() {
  return BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
}
inline BoundaryPoint torus3() {
  return BoundaryPoint::decompose(
      {cplx{1.0, 0.0}, cplx{std::cos(kPi / 4), std::sin(kPi / 4)}, cplx{0.3, 0.0}});
}

inline HoloMap remark42() {
  return function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
}
inline HoloMap coordinate1() {
  return function_gallery("coordinate", FuncParams{{{"j", 1.0}}, {}, {}}, 2);
}

inline std::vector<cplx> random_interior(std::size_t n, Rng& rng, double max_mod) {
  std::vector<cplx> z(n);
  for (auto& c : z) {
    const double rho = max_mod * std::sqrt(rng.uniform());
    const double th = rng.uniform(0.0, 2.0 * kPi);
    c = rho * cplx{std::cos(th), std::sin(th)};
  }
  return z;
}

}  // namespace suite_detail

// 1. Metric axioms and automorphism invariance on random configurations.
inline CriterionResult criterion_metric_suite() {
  using namespace suite_detail;
  CriterionResult res{1, "metric axioms and automorphism invariance", false, "", {}};
  Rng rng(0xa11ce);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      const Point a{random_interior(n, rng, 0.95)};
      const Point b{random_interior(n, rng, 0.95)};
      const Point c{random_interior(n, rng, 0.95)};
      const double kab = kobayashi_distance(a, b);
      worst = std::max(worst, std::abs(kab - kobayashi_distance(b, a)));
      worst = std::max(worst, kobayashi_distance(a, a));
      worst = std::max(worst,
                       kobayashi_distance(a, c) - (kab + kobayashi_distance(b, c)));
      const Point base{random_interior(n, rng, 0.9)};
      const Point ga{polydisk_automorphism(base, a)};
      const Point gb{polydisk_automorphism(base, b)};
      worst = std::max(worst, std::abs(kobayashi_distance(ga, gb) - kab));
    }
  }
  res.pass = worst <= 1e-12;
  res.metric("max_violation", worst);
  res.details = "2000 configurations in dimensions 2 and 3";
  return res;
}

// 2. The two "special" criteria agree on the gallery and seeded random curves.
inline CriterionResult criterion_special_equivalence() {
  using namespace suite_detail;
  CriterionResult res{2, "equivalence of the two special-curve criteria", false, "", {}};
  std::vector<Curve> curves;
  curves.push_back(make_radial(corner()));
  curves.push_back(make_radial(mixed()));
  curves.push_back(make_remark_11());
  curves.push_back(make_remark_16());
  for (double lam : {0.25, 0.5, 0.75}) curves.push_back(make_remark_21_sigma(lam));
  curves.push_back(make_remark_23_sigma(0.25, 0.5));
  curves.push_back(make_horocycle_edge());
  for (double M : {1.5, 4.0, 10.0}) curves.push_back(make_stolz_swing(corner(), M));
  curves.push_back(make_remark_45(corner(), {cplx{1.0, 0.0}, cplx{0.0, 0.0}}, 0.4));
  curves.push_back(make_remark_45(mixed(), {cplx{0.0, 0.0}, cplx{1.0, 0.0}}, 1.2));
  {
    const std::vector<Curve> fam1 = random_curve_family(corner(), 25, 0x1001);
    const std::vector<Curve> fam2 = random_curve_family(torus3(), 25, 0x2002);
    curves.insert(curves.end(), fam1.begin(), fam1.end());
    curves.insert(curves.end(), fam2.begin(), fam2.end());
  }
  int disagreements = 0, asymmetric = 0, expectation_misses = 0;
  for (const Curve& c : curves) {
    const Classification cl = classify(c);
    if (cl.special_ratio != cl.special_distance) {
      if (cl.special_ratio == Verdict::undecided || cl.special_distance == Verdict::undecided)
        ++asymmetric;
      else
        ++disagreements;
    }
    if (c.expect.special &&
        cl.special != (*c.expect.special ? Verdict::yes : Verdict::no))
      ++expectation_misses;
  }
  res.pass = disagreements == 0 && asymmetric == 0 && expectation_misses == 0;
  res.metric("curves", static_cast<double>(curves.size()));
  res.metric("disagreements", disagreements);
  res.metric("asymmetric_undecided", asymmetric);
  res.metric("expectation_misses", expectation_misses);
  res.details = "gallery plus seeded random curves at three boundary points";
  return res;
}

// 3. Closed-form boundary limsup against the sampled radial limit.
inline CriterionResult criterion_boundary_limsup() {
  using namespace suite_detail;
  CriterionResult res{3, "boundary limsup closed form vs radial limit", false, "", {}};
  Rng rng(0x30303);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = (i % 2) ? 2 : 3;
    std::vector<cplx> xc(n);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      const double th = rng.uniform(0.0, 2 * kPi);
      const bool uni = rng.uniform() < 0.6 || (j + 1 == n && !any);
      const double mod = uni ? 1.0 : rng.uniform(0.1, 0.9);
      any = any || uni;
      xc[j] = mod * cplx{std::cos(th), std::sin(th)};
    }
    const BoundaryPoint x = BoundaryPoint::decompose(std::move(xc));
    const std::vector<cplx> z = random_interior(n, rng, 0.9);
    worst = std::max(worst, std::abs(boundary_limsup(x, z) -
                                     normalized_distance_radial(x, z, std::pow(2.0, -32))));
  }
  res.pass = worst <= 1e-8;
  res.metric("pairs", 100);
  res.metric("max_gap", worst);
  res.details = "100 random (x, z) pairs in dimensions 2 and 3";
  return res;
}

// 4. Region sandwich, geodesic trace, and the Koranyi-minus-ball inclusion.
inline CriterionResult criterion_region_inclusions() {
  using namespace suite_detail;
  CriterionResult res{4, "region sandwich, trace, and inclusion checks", false, "", {}};
  Rng rng(0x40404);
  int violations = 0;
  long long total = 0;
  for (double M : {1.5, 3.0, 10.0}) {
    const SandwichReport sc = check_sandwich(corner(), M, 10000, rng);
    const SandwichReport sm = check_sandwich(mixed(), M, 10000, rng);
    violations += sc.ball_violations + sc.stolz_violations + sc.witness_violations;
    violations += sm.ball_violations + sm.stolz_violations + sm.witness_violations;
    total += sc.ball_samples + sc.region_samples + sm.ball_samples + sm.region_samples +
             sm.witness_samples;

    const TraceReport tr = geodesic_trace_check(mixed(), 1.0, M, 10000, rng);
    violations += tr.horocycle_disagreements + tr.stolz_disagreements;
    total += tr.samples;

    const InclusionReport inc = koranyi_horosphere_inclusion(corner(), M, 1.0, 10000, rng);
    violations += inc.violations;
    total += inc.samples;

    const RatioBoundsReport rb = koranyi_coordinate_bounds(M, 10000, rng);
    violations += rb.violations;
    total += rb.samples;
  }
  for (double R : {0.5, 2.0}) {
    const InclusionReport inc = koranyi_horosphere_inclusion(corner(), 3.0, R, 10000, rng);
    violations += inc.violations;
    total += inc.samples;
  }
  res.pass = violations == 0;
  res.metric("samples", static_cast<double>(total));
  res.metric("violations", violations);
  res.details = "amplitudes 1.5, 3, 10; 1e4 samples per check";
  return res;
}

// 5. Projection/region cross-checks for restricted curves.
inline CriterionResult criterion_restriction_crosschecks() {
  using namespace suite_detail;
  CriterionResult res{5, "restriction vs Koranyi membership cross-checks", false, "", {}};
  std::vector<Curve> curves;
  curves.push_back(make_radial(corner()));
  curves.push_back(make_radial(mixed()));
  curves.push_back(make_remark_11());
  curves.push_back(make_remark_16());
  curves.push_back(make_remark_21_sigma(0.25));
  curves.push_back(make_stolz_swing(corner(), 1.5));
  curves.push_back(make_stolz_swing(mixed(), 4.0));
  {
    const std::vector<Curve> fam = random_curve_family(corner(), 20, 0x909);
    curves.insert(curves.end(), fam.begin(), fam.end());
    const std::vector<Curve> fam3 = random_curve_family(torus3(), 10, 0x910);
    curves.insert(curves.end(), fam3.begin(), fam3.end());
  }
  int violations = 0;
  int checked = 0;
  for (const Curve& c : curves) {
    const Classification cl = classify(c);
    if (cl.restricted != Verdict::yes) continue;
    ++checked;
    const double M = std::max(cl.amplitude_estimate * 1.0001, 1.0001);

    // (i) the projected curve eventually lies in H(x, M)
    const ProjectedCurve pr = project_curve(c);
    for (std::size_t i = c.schedule.size() - 5; i < c.schedule.size(); ++i) {
      const CurvePointData p = curve_point(pr.sigma_x, c.schedule[i]);
      if (!(koranyi_value_sq_delta(c.target, p.delta) < M * M * (1.0 + 1e-9))) ++violations;
    }
    // (iii) special + M-restricted: the curve sits in H(x, 1.1 M) eventually
    if (cl.special == Verdict::yes) {
      const double M1 = 1.1 * M;
      for (std::size_t i = c.schedule.size() - 5; i < c.schedule.size(); ++i) {
        const CurvePointData p = curve_point(c, c.schedule[i]);
        if (!(koranyi_value_sq_delta(c.target, p.delta) < M1 * M1)) ++violations;
      }
    }
    // (ii) membership in H(x, M') forces the Stolz quotient under M' over the
    // same window
    for (double Mp : {1.5, 4.0, 10.0}) {
      for (std::size_t i = cl.koranyi_seq.size() - 10; i < cl.koranyi_seq.size(); ++i)
        if (cl.koranyi_seq[i] < Mp * Mp &&
            cl.restricted_seq[i] > Mp * (1.0 + 1e-9))
          ++violations;
    }
  }
  res.pass = violations == 0 && checked >= 10;
  res.metric("restricted_curves", checked);
  res.metric("violations", violations);
  res.details = "projection membership, eventual inclusion with delta = 0.1";
  return res;
}

// 6. The four counterexample reproductions with the exact constants.
inline CriterionResult criterion_counterexamples() {
  using namespace suite_detail;
  CriterionResult res{6, "counterexample reproduction", false, "", {}};
  std::vector<std::string> fails;

  {  // special curve whose sup-norm deviation ratio stays 1
    const Classification cl = classify(make_remark_11());
    if (cl.special != Verdict::yes) fails.push_back("r11 not special");
    for (double v : cl.diagonal_seq)
      if (std::abs(v - 1.0) > 1e-12) {
        fails.push_back("r11 diagonal ratio drifts");
        break;
      }
  }
  {  // restricted for every amplitude, not special, escaping Koranyi regions
    const Classification cl = classify(make_remark_16());
    if (cl.restricted != Verdict::yes || cl.amplitude_estimate > 1.0 + 1e-6)
      fails.push_back("r16 restriction");
    if (cl.special != Verdict::no) fails.push_back("r16 specialness");
    if (!(cl.koranyi_seq[29] >= 1e3)) fails.push_back("r16 Koranyi growth");
  }
  {  // restricted K-limit 0, sigma-lambda value 1/3, no K-limit
    const HoloMap f = function_gallery("remark-2.1");
    const FamilyLimit fam = restricted_K_limit(f, corner());
    if (!fam.overall.converged_to(cplx{0.0, 0.0}, 1e-6)) fails.push_back("r21 rK-limit");
    const LimitEstimate along = limit_along_curve(f, make_remark_21_sigma(0.75));
    bool constant_third = along.verdict == LimitVerdict::converged;
    for (const cplx& v : along.tail)
      if (std::abs(v - cplx{1.0 / 3.0, 0.0}) > 1e-10) constant_third = false;
    if (!constant_third) fails.push_back("r21 sigma-lambda value");
    if (K_limit(f, corner()).estimate.verdict != LimitVerdict::no_limit)
      fails.push_back("r21 K-limit verdict");
  }
  {  // K-limit 1, peculiar value 1/3, no restricted E-limit
    const HoloMap f = function_gallery("remark-2.3", FuncParams{{{"a", 0.5}}, {}, {}});
    const KLimitReport kl = K_limit(f, corner());
    if (!kl.estimate.converged_to(cplx{1.0, 0.0}, 1e-4)) fails.push_back("r23 K-limit");
    const LimitEstimate along = limit_along_curve(f, make_remark_23_sigma(0.25, 0.5));
    if (!along.converged_to(cplx{1.0 / 3.0, 0.0}, 1e-6))
      fails.push_back("r23 peculiar value");
    if (restricted_E_limit(f, corner()).overall.verdict != LimitVerdict::no_limit)
      fails.push_back("r23 rE-limit verdict");
  }
  res.pass = fails.empty();
  res.metric("failures", static_cast<double>(fails.size()));
  for (const std::string& f : fails) res.metric("fail", f);
  res.details = "four boundary-behavior counterexamples at their documented constants";
  return res;
}

// 7. Julia coefficients, horosphere contraction, positivity.
inline CriterionResult criterion_julia_suite() {
  using namespace suite_detail;
  CriterionResult res{7, "Julia coefficients and horosphere contraction", false, "", {}};
  std::vector<std::string> fails;
  Rng rng(0x70707);
  const std::vector<double> radii{0.5, 1.0, 2.0};

  {
    const HoloMap c1 = coordinate1();
    const JuliaReport jr = julia_coefficient(c1, mixed());
    if (!(std::abs(jr.alpha - 1.0) <= 1e-9)) fails.push_back("coordinate alpha");
    if (jr.tau != cplx{1.0, 0.0} || jr.tau_snap_distance > 1e-7)
      fails.push_back("coordinate tau");
    const JuliaInclusionReport inc = julia_inclusion_check(c1, mixed(), jr, radii, 500, rng);
    if (!inc.pass()) fails.push_back("coordinate inclusion");
    for (double r : jr.radial_ratio)
      if (!(r >= jr.alpha_lower_bound - 1e-12)) fails.push_back("coordinate positivity");
    res.metric("coordinate_alpha_gap", std::abs(jr.alpha - 1.0));
  }
  {
    const HoloMap f = remark42();
    const JuliaReport jr = julia_coefficient(f, corner());
    if (!(std::abs(jr.alpha - 0.8) <= 1e-9)) fails.push_back("remark-4.2 alpha");
    if (jr.tau != cplx{1.0, 0.0} || jr.tau_snap_distance > 1e-7)
      fails.push_back("remark-4.2 tau");
    const JuliaInclusionReport inc = julia_inclusion_check(f, corner(), jr, radii, 500, rng);
    if (!inc.pass()) fails.push_back("remark-4.2 inclusion");
    for (double r : jr.radial_ratio)
      if (!(r >= jr.alpha_lower_bound - 1e-12)) fails.push_back("remark-4.2 positivity");
    res.metric("remark42_alpha_gap", std::abs(jr.alpha - 0.8));
  }
  res.pass = fails.empty();
  for (const std::string& f : fails) res.metric("fail", f);
  res.details = "500 samples per radius in {0.5, 1, 2}";
  return res;
}

// 8. The JWC limit table.
inline CriterionResult criterion_jwc_suite() {
  using namespace suite_detail;
  CriterionResult res{8, "JWC limits and the derivative sum rule", false, "", {}};
  std::vector<std::string> fails;
  {
    const JwcReport rep = jwc_suite(remark42(), corner());
    for (const std::string& v : rep.violations) fails.push_back("r42 " + v);
    const auto off = [&fails](const LimitEstimate& est, double target, const char* what) {
      if (!(est.verdict == LimitVerdict::converged &&
            std::abs(est.value - cplx{target, 0.0}) <= 1e-6))
        fails.push_back(std::string("r42 ") + what);
    };
    off(rep.part_i, 0.8, "part i");
    for (const auto& [j, est] : rep.part_ii) off(est, 0.8, "part ii");
    off(rep.part_iii_x, 0.8, "part iii");
    if (rep.part_v.size() == 2) {
      off(rep.part_v[0].second, 0.6, "part v j=1");
      off(rep.part_v[1].second, 0.2, "part v j=2");
    } else {
      fails.push_back("r42 part v arity");
    }
    if (!(std::abs(rep.mass_sum - 0.8) <= 1e-6)) fails.push_back("r42 mass sum");
    if (!(rep.sum_rule_residual <= 1e-6)) fails.push_back("r42 sum rule");
    res.metric("sum_rule_residual", rep.sum_rule_residual);
  }
  {
    const JwcReport rep = jwc_suite(coordinate1(), mixed());
    for (const std::string& v : rep.violations) fails.push_back("coord " + v);
    if (rep.part_iv.size() != 1 ||
        rep.part_iv[0].second.verdict != LimitVerdict::converged ||
        std::abs(rep.part_iv[0].second.value) > 1e-8)
      fails.push_back("coord internal derivative");
  }
  res.pass = fails.empty();
  for (const std::string& f : fails) res.metric("fail", f);
  res.details = "targets computed from the measured (alpha, tau)";
  return res;
}

// 9. Growth-bound checks at 1e4 samples each.
inline CriterionResult criterion_bound_checks() {
  using namespace suite_detail;
  CriterionResult res{9, "incremental-ratio, geodesic-disk, metric, derivative bounds",
                      false, "", {}};
  int violations = 0;
  const HoloMap f = remark42();
  const JuliaReport jr = julia_coefficient(f, corner());
  double worst42 = 0.0, worst46 = 0.0, worst_env = 0.0;
  for (double M : {1.5, 3.0, 10.0}) {
    const BoundCheckReport b42 = incremental_ratio_bound_check(f, corner(), jr, M, 10000);
    violations += b42.violations;
    worst42 = std::max(worst42, b42.worst_ratio);
    const BoundCheckReport b46 = metric_bound_check(corner(), M, 10000);
    violations += b46.violations;
    worst46 = std::max(worst46, b46.worst_ratio);
    const BoundCheckReport b46m = metric_bound_check(mixed(), M, 10000);
    violations += b46m.violations;
  }
  for (const auto& [M, M1] : std::vector<std::pair<double, double>>{{1.5, 3.0}, {2.0, 4.0},
                                                                    {3.0, 10.0}}) {
    const BoundCheckReport b45 = geodesic_disk_check(corner(), M, M1, 500, 20);
    violations += b45.violations;
    const BoundCheckReport b45m = geodesic_disk_check(mixed(), M, M1, 500, 20);
    violations += b45m.violations;
  }
  {
    // derivative envelope with the pinned constant, over the Julia gallery
    std::vector<HoloMap> gallery{remark42(), coordinate1(), function_gallery("mean", {}, 2)};
    FuncParams mono;
    mono.exponents = {1, 1};
    gallery.push_back(function_gallery("monomial", mono, 2));
    for (const HoloMap& g : gallery) {
      const JuliaReport jg = julia_coefficient(g, corner());
      for (double M : {1.5, 3.0}) {
        const BoundCheckReport env = derivative_envelope_check(g, corner(), jg, M, 2500);
        violations += env.violations;
        worst_env = std::max(worst_env, env.worst_ratio);
      }
    }
  }
  res.pass = violations == 0;
  res.metric("violations", violations);
  res.metric("worst_ratio_2aM2", worst42);
  res.metric("worst_ratio_2M3", worst46);
  res.metric("worst_envelope_fraction", worst_env);
  res.details = "1e4 samples per bound per amplitude; envelope constant 100";
  return res;
}

// 10. Polydisk-target reduction on the pair map.
inline CriterionResult criterion_pair_map() {
  using namespace suite_detail;
  CriterionResult res{10, "polydisk-target reduction on the pair map", false, "", {}};
  std::vector<std::string> fails;
  const HoloMap pair = function_gallery("section-5-pair");
  const std::vector<ComponentJulia> comps = polydisk_target_julia(pair, corner());
  if (comps.size() != 2) {
    fails.push_back("component count");
  } else {
    if (!comps[0].julia || std::abs(comps[0].alpha - 1.0) > 1e-9)
      fails.push_back("component 1 Julia coefficient");
    if (comps[1].julia || comps[1].radial_verdict != LimitVerdict::no_limit)
      fails.push_back("component 2 radial verdict");
  }
  Rng rng(0xabcd);
  const std::vector<cplx> target{cplx{1.0, 0.0}, cplx{1.0, 0.0}};
  const ImageHorosphereReport img =
      image_horosphere_check(pair, corner(), target, 1.0, 1.0, 1000, rng);
  if (!(img.outside > 0)) fails.push_back("horosphere image finding missing");
  res.pass = fails.empty();
  res.metric("image_outside_count", img.outside);
  for (const std::string& f : fails) res.metric("fail", f);
  res.details = "component-wise Julia reduction plus the failed inclusion witness";
  return res;
}

// 11. Dual-number derivatives against central finite differences.
inline CriterionResult criterion_derivative_engine() {
  using namespace suite_detail;
  CriterionResult res{11, "dual derivatives vs central finite differences", false, "", {}};
  Rng rng(0xb0b);
  const double h = 1e-6;
  double worst = 0.0;
  std::vector<HoloMap> gallery;
  gallery.push_back(coordinate1());
  gallery.push_back(function_gallery("coordinate", FuncParams{{{"j", 2.0}}, {}, {}}, 2));
  FuncParams mono;
  mono.exponents = {2, 1};
  gallery.push_back(function_gallery("monomial", mono, 2));
  gallery.push_back(function_gallery("mean", {}, 2));
  gallery.push_back(function_gallery("constant", {}, 2));
  gallery.push_back(function_gallery("remark-2.1", {}, 2));
  gallery.push_back(function_gallery("remark-2.3", FuncParams{{{"a", 0.5}}, {}, {}}, 2));
  gallery.push_back(remark42());
  gallery.push_back(function_gallery("section-5-g", {}, 1));
  gallery.push_back(function_gallery("section-5-pair", {}, 2));
  long long evals = 0;
  for (const HoloMap& f : gallery) {
    for (int i = 0; i < 1000; ++i) {
      const std::vector<cplx> z =
          random_interior(static_cast<std::size_t>(f.arity()), rng, 0.7);
      for (int m = 0; m < f.codomain(); ++m) {
        for (std::size_t j = 0; j < z.size(); ++j) {
          std::vector<cplx> e(z.size(), cplx{0.0, 0.0});
          e[j] = cplx{1.0, 0.0};
          const cplx dual = f.directional_derivative(z, e, m);
          std::vector<cplx> zp = z, zm = z;
          zp[j] += h;
          zm[j] -= h;
          const cplx fre =
              (f.eval_point(std::span<const cplx>(zp))[static_cast<std::size_t>(m)] -
               f.eval_point(std::span<const cplx>(zm))[static_cast<std::size_t>(m)]) /
              (2.0 * h);
          zp = z;
          zm = z;
          zp[j] += cplx{0.0, h};
          zm[j] -= cplx{0.0, h};
          const cplx fim =
              (f.eval_point(std::span<const cplx>(zp))[static_cast<std::size_t>(m)] -
               f.eval_point(std::span<const cplx>(zm))[static_cast<std::size_t>(m)]) /
              (cplx{0.0, 2.0 * h});
          const double scale = std::max(1.0, std::abs(dual));
          worst = std::max(worst, std::abs(dual - fre) / scale);
          worst = std::max(worst, std::abs(dual - fim) / scale);
          ++evals;
        }
      }
    }
  }
  res.pass = worst <= 1e-6;
  res.metric("evaluations", static_cast<double>(evals));
  res.metric("worst_relative_error", worst);
  res.details = "1000 interior points per gallery entry, step 1e-6";
  return res;
}

inline std::vector<CriterionResult> run_acceptance() {
  return {
      criterion_metric_suite(),        criterion_special_equivalence(),
      criterion_boundary_limsup(),     criterion_region_inclusions(),
      criterion_restriction_crosschecks(), criterion_counterexamples(),
      criterion_julia_suite(),         criterion_jwc_suite(),
      criterion_bound_checks(),        criterion_pair_map(),
      criterion_derivative_engine(),
  };
}

}  // namespace polydisk
