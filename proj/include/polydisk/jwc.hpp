#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydisk/julia.hpp"

namespace polydisk {

// --- functionals along curves -------------------------------------------------

// (tau - f) / (1 - p~_x), through the co-evaluation channel.
inline std::function<cplx(const CurvePointData&)> incremental_ratio_functional(
    const HoloMap& f, const BoundaryPoint& x, cplx tau, int component = 0) {
  return [f, x, tau, component](const CurvePointData& p) {
    EvalPoint ep;
    ep.delta = p.delta;
    ep.u = p.u;
    return f.tau_minus(tau, ep, x, component) / p.w;
  };
}

// (tau - f) / (x_j - z_j) for a unimodular component j.
inline std::function<cplx(const CurvePointData&)> coordinate_ratio_functional(
    const HoloMap& f, const BoundaryPoint& x, cplx tau, std::size_t j, int component = 0) {
  return [f, x, tau, j, component](const CurvePointData& p) {
    EvalPoint ep;
    ep.delta = p.delta;
    ep.u = p.u;
    return f.tau_minus(tau, ep, x, component) / p.delta[j];
  };
}

// df/dv along the curve, exact via dual seeds.
inline std::function<cplx(const CurvePointData&)> derivative_functional(
    const HoloMap& f, std::vector<cplx> v, int component = 0) {
  return [f, v, component](const CurvePointData& p) {
    std::vector<Dual> u(p.u.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j], -v[j]};
    return f.eval_u(u)[static_cast<std::size_t>(component)].d;
  };
}

// --- limit notions --------------------------------------------------------------

// Limit through special restricted curves, realized over the deterministic
// adversarial family.
inline FamilyLimit restricted_K_limit(const HoloMap& f, const BoundaryPoint& x,
                                      int family_size = 8, double tol = kLimitTol,
                                      int depth = 40, int component = 0,
                                      std::uint64_t seed = 0x5eedf00dULL) {
  const std::vector<Curve> fam = special_restricted_family(x, family_size, seed, depth);
  return family_limit(fam, value_functional(f, component), tol);
}

inline FamilyLimit restricted_K_limit_of(const std::function<cplx(const CurvePointData&)>& fn,
                                         const BoundaryPoint& x, int family_size = 8,
                                         double tol = kLimitTol, int depth = 40,
                                         std::uint64_t seed = 0x5eedf00dULL) {
  const std::vector<Curve> fam = special_restricted_family(x, family_size, seed, depth);
  return family_limit(fam, fn, tol);
}

// Limit through peculiar curves.
inline FamilyLimit restricted_E_limit(const HoloMap& f, const BoundaryPoint& x,
                                      double tol = kLimitTol, int depth = 40,
                                      int component = 0) {
  const std::vector<Curve> fam = peculiar_family(x, depth);
  return family_limit(fam, value_functional(f, component), tol);
}

struct KLimitReport {
  LimitEstimate estimate;
  std::vector<double> shell_radius;
  std::vector<double> shell_spread;
  std::vector<cplx> shell_center;
};

// Limit through Koranyi regions: samples H(x, M) intersected with shrinking
// sup-norm shells around x, for several amplitudes at once. Converged only if
// the sampled values cluster to a common point as the shells shrink.
inline KLimitReport K_limit(const HoloMap& f, const BoundaryPoint& x,
                            std::vector<double> amplitudes = {1.5, 4.0, 10.0},
                            int shells = 36, int per_shell = 16,
                            std::uint64_t seed = 0xc0ffeeULL, int component = 0,
                            double tol = 1e-4) {
  KLimitReport rep;
  Rng rng(seed);
  std::vector<cplx> centers;
  for (int k = 1; k <= shells; ++k) {
    const double eta_hi = std::pow(4.0, -k);
    const double eta_lo = eta_hi / 4.0;
    std::vector<cplx> vals;
    for (double M : amplitudes) {
      for (int i = 0; i < per_shell; ++i) {
        const std::vector<cplx> delta = sample_koranyi_shell_delta(x, M, rng, eta_lo, eta_hi);
        const EvalPoint p = EvalPoint::from_delta(x, delta);
        std::vector<Dual> u(p.u.size());
        for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
        vals.push_back(f.eval_u(u)[static_cast<std::size_t>(component)].v);
      }
    }
    cplx mean{0.0, 0.0};
    for (const cplx& v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double spread = 0.0;
    for (const cplx& v : vals) spread = std::max(spread, std::abs(v - mean));
    rep.shell_radius.push_back(eta_hi);
    rep.shell_spread.push_back(spread);
    rep.shell_center.push_back(mean);
    centers.push_back(mean);
  }

  rep.estimate.tolerance = tol;
  rep.estimate.tail = centers;
  const std::size_t n = centers.size();
  const std::size_t W = 6;
  double worst_spread = 0.0, center_osc = 0.0;
  for (std::size_t i = n - W; i < n; ++i) {
    worst_spread = std::max(worst_spread, rep.shell_spread[i]);
    center_osc = std::max(center_osc, std::abs(centers[i] - centers[n - 1]));
  }
  if (worst_spread <= tol && center_osc <= tol) {
    rep.estimate.verdict = LimitVerdict::converged;
    rep.estimate.value = centers[n - 1];
    return rep;
  }
  // spreads that refuse to shrink witness the absence of a K-limit
  double early = 0.0, late = 0.0;
  for (std::size_t i = n / 2; i < n; ++i) late = std::max(late, rep.shell_spread[i]);
  for (std::size_t i = n / 4; i < n / 2; ++i) early = std::max(early, rep.shell_spread[i]);
  if (late >= 10.0 * tol && late >= 0.25 * early) {
    rep.estimate.verdict = LimitVerdict::no_limit;
    rep.estimate.note = "sample spread does not shrink with the shells";
    return rep;
  }
  rep.estimate.note = "cluster behavior unresolved";
  return rep;
}

struct SupEstimate {
  double sup = 0.0;
  std::vector<cplx> arg_delta;
  int samples = 0;
};

// Empirical sup of a point functional over sampled H(x, M), densified toward x.
inline SupEstimate koranyi_sup(const BoundaryPoint& x, double M, int samples,
                               const std::function<double(const EvalPoint&)>& fn,
                               std::uint64_t seed = 0xadd1c7ULL,
                               double min_depth = 1e-16) {
  SupEstimate est;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, min_depth, 0.25);
    const double v = fn(EvalPoint::from_delta(x, delta));
    ++est.samples;
    if (v > est.sup) {
      est.sup = v;
      est.arg_delta = delta;
    }
  }
  return est;
}

// K-boundedness probe: empirical sup of |f| over H(x, M). Depths stop at
// 1e-12: beyond that 1 - |f| falls under the spacing of doubles around 1 and
// the probe would report a meaningless sup of exactly 1.
inline SupEstimate K_boundedness(const HoloMap& f, const BoundaryPoint& x, double M,
                                 int samples, std::uint64_t seed = 0xadd1c7ULL,
                                 int component = 0) {
  return koranyi_sup(
      x, M, samples,
      [f, component](const EvalPoint& p) {
        std::vector<Dual> u(p.u.size());
        for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
        return std::abs(f.eval_u(u)[static_cast<std::size_t>(component)].v);
      },
      seed, 1e-12);
}

// --- Lindelof consistency check ----------------------------------------------------

struct LindelofReport {
  Classification pilot;
  LimitEstimate pilot_limit;
  bool k_bounded_route = false;  // pilot special+restricted with f K-bounded
  double empirical_k_bound = 0.0;
  FamilyLimit family;
  std::vector<std::string> findings;
  bool pass() const { return findings.empty(); }
};

// If f converges along an admissible pilot curve, every special restricted
// curve must deliver the same value; a disagreement would falsify the
// principle and is reported as a finding. Bounded maps admit any special
// pilot; otherwise the pilot must also be restricted and f K-bounded.
inline LindelofReport lindelof_check(const HoloMap& f, const BoundaryPoint& x,
                                     const Curve& pilot, int family_size = 8,
                                     double tol = kLimitTol, int component = 0) {
  LindelofReport rep;
  rep.pilot = classify(pilot);
  if (rep.pilot.special != Verdict::yes)
    throw PreconditionError("lindelof_check: pilot curve '" + pilot.label +
                            "' is not special");
  if (!f.bounded_into_unit()) {
    if (rep.pilot.restricted != Verdict::yes)
      throw PreconditionError("lindelof_check: unbounded map needs a restricted pilot; '" +
                              pilot.label + "' is not restricted");
    rep.k_bounded_route = true;
    rep.empirical_k_bound = K_boundedness(f, x, 4.0, 400, 0xadd1c7ULL, component).sup;
  }
  rep.pilot_limit = limit_of_functional(pilot, value_functional(f, component), tol);
  if (rep.pilot_limit.verdict != LimitVerdict::converged) {
    rep.findings.push_back("pilot limit did not converge: " + rep.pilot_limit.note);
    return rep;
  }
  rep.family = restricted_K_limit(f, x, family_size, tol, 40, component);
  if (rep.family.overall.verdict != LimitVerdict::converged) {
    rep.findings.push_back("family failed to converge: " + rep.family.overall.note);
    return rep;
  }
  if (std::abs(rep.family.overall.value - rep.pilot_limit.value) > tol)
    rep.findings.push_back("family limit disagrees with the pilot limit");
  return rep;
}

// --- the JWC suite ------------------------------------------------------------------

struct JwcReport {
  JuliaReport julia;
  LimitEstimate part_i;
  std::vector<std::pair<std::size_t, LimitEstimate>> part_ii;
  LimitEstimate part_iii_x;
  LimitEstimate part_iii_silov;
  std::vector<std::pair<std::size_t, LimitEstimate>> part_iv;
  std::vector<std::pair<std::size_t, LimitEstimate>> part_v;
  std::vector<double> derivative_masses;  // b_j with limit b_j tau conj(x_j)
  double mass_sum = 0.0;
  double sum_rule_residual = 0.0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Runs all five limit families for an alpha-Julia function and checks the
// values the theorem pins down. Targets are computed from the measured
// (alpha, tau), never hard-coded.
inline JwcReport jwc_suite(const HoloMap& f, const BoundaryPoint& x, int family_size = 8,
                           double tol = kLimitTol, int depth = 40, int component = 0) {
  JwcReport rep;
  rep.julia = julia_coefficient(f, x, depth, component);
  if (!rep.julia.alpha_finite())
    throw PreconditionError("jwc_suite: '" + f.label() +
                            "' carries no finite Julia coefficient at this point");
  const double alpha = rep.julia.alpha;
  const cplx tau = rep.julia.tau;
  const cplx target_i = alpha * tau;
  const auto check = [&rep, tol](const LimitEstimate& est, cplx target,
                                 const std::string& what) {
    if (est.verdict != LimitVerdict::converged) {
      rep.violations.push_back(what + ": not converged (" + est.note + ")");
      return;
    }
    if (std::abs(est.value - target) > tol * std::max(1.0, std::abs(target)))
      rep.violations.push_back(what + ": value off target");
  };

  const std::vector<Curve> fam =
      special_restricted_family(x, family_size, 0x5eedf00dULL, depth);

  rep.part_i = family_limit(fam, incremental_ratio_functional(f, x, tau, component), tol).overall;
  check(rep.part_i, target_i, "part (i)");

  for (std::size_t j : x.silov_indices()) {
    LimitEstimate est =
        family_limit(fam, coordinate_ratio_functional(f, x, tau, j, component), tol).overall;
    check(est, alpha * tau * std::conj(x[j]), "part (ii) j=" + std::to_string(j + 1));
    rep.part_ii.emplace_back(j, std::move(est));
  }

  rep.part_iii_x = family_limit(fam, derivative_functional(f, x.coords(), component), tol).overall;
  rep.part_iii_silov =
      family_limit(fam, derivative_functional(f, x.silov_part(), component), tol).overall;
  check(rep.part_iii_x, target_i, "part (iii) df/dx");
  check(rep.part_iii_silov, target_i, "part (iii) df/d(silov part)");
  if (rep.part_iii_x.verdict == LimitVerdict::converged &&
      rep.part_iii_silov.verdict == LimitVerdict::converged &&
      std::abs(rep.part_iii_x.value - rep.part_iii_silov.value) > tol)
    rep.violations.push_back("part (iii): the two directional limits disagree");

  std::vector<cplx> derivative_limits(x.dim(), cplx{0.0, 0.0});
  for (std::size_t j = 0; j < x.dim(); ++j) {
    std::vector<cplx> e(x.dim(), cplx{0.0, 0.0});
    e[j] = cplx{1.0, 0.0};
    LimitEstimate est = family_limit(fam, derivative_functional(f, e, component), tol).overall;
    if (est.verdict == LimitVerdict::converged) derivative_limits[j] = est.value;
    if (x.is_silov(j)) {
      if (est.verdict != LimitVerdict::converged) {
        rep.violations.push_back("part (v) j=" + std::to_string(j + 1) + ": not converged");
      } else {
        const cplx mass = est.value * std::conj(tau) * x[j];
        if (std::abs(mass.imag()) > tol)
          rep.violations.push_back("part (v) j=" + std::to_string(j + 1) +
                                   ": limit is not a nonnegative multiple of tau conj(x_j)");
        if (mass.real() < -1e-9)
          rep.violations.push_back("part (v) j=" + std::to_string(j + 1) +
                                   ": negative derivative mass");
        rep.derivative_masses.push_back(mass.real());
        rep.mass_sum += mass.real();
      }
      rep.part_v.emplace_back(j, std::move(est));
    } else {
      if (est.verdict != LimitVerdict::converged || std::abs(est.value) > 1e-8)
        rep.violations.push_back("part (iv) j=" + std::to_string(j + 1) +
                                 ": internal derivative does not vanish");
      rep.part_iv.emplace_back(j, std::move(est));
    }
  }

  cplx weighted{0.0, 0.0};
  for (std::size_t j = 0; j < x.dim(); ++j) weighted += x[j] * derivative_limits[j];
  rep.sum_rule_residual = std::abs(weighted - alpha * tau);
  if (rep.sum_rule_residual > tol)
    rep.violations.push_back("sum rule: weighted derivative limits miss alpha tau");
  if (std::abs(rep.mass_sum - alpha) > tol)
    rep.violations.push_back("derivative masses do not sum to alpha");
  return rep;
}

// --- growth-bound checks -------------------------------------------------------------

struct BoundCheckReport {
  int samples = 0;
  int violations = 0;
  double worst_ratio = 0.0;  // measured / allowed
  bool pass() const { return violations == 0; }
};

// |tau - f| / |1 - p~_x| and |tau - f| / |x_j - z_j| stay below 2 alpha M^2 on
// H(x, M).
inline BoundCheckReport incremental_ratio_bound_check(const HoloMap& f, const BoundaryPoint& x,
                                                      const JuliaReport& jr, double M,
                                                      int samples,
                                                      std::uint64_t seed = 0xb0a7ULL,
                                                      int component = 0) {
  BoundCheckReport rep;
  Rng rng(seed);
  const double allowed = 2.0 * jr.alpha * M * M;
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, 1e-14, 0.25);
    const EvalPoint p = EvalPoint::from_delta(x, delta);
    const cplx h = f.tau_minus(jr.tau, p, x, component);
    cplx w{0.0, 0.0};
    for (std::size_t j : x.silov_indices()) w += std::conj(x[j]) * delta[j];
    w /= static_cast<double>(x.degree());
    double measured = std::abs(h) / std::abs(w);
    for (std::size_t j : x.silov_indices())
      measured = std::max(measured, std::abs(h) / std::abs(delta[j]));
    ++rep.samples;
    rep.worst_ratio = std::max(rep.worst_ratio, measured / allowed);
    if (measured >= allowed * (1.0 + 1e-9)) ++rep.violations;
  }
  return rep;
}

// Complex geodesic disks around points of H(x, M) stay inside H(x, M1) as
// long as the disk radius keeps below (M1 - M)/(M1 + M).
inline BoundCheckReport geodesic_disk_check(const BoundaryPoint& x, double M, double M1,
                                            int geodesics, int per_geodesic,
                                            std::uint64_t seed = 0x6e0de51cULL) {
  BoundCheckReport rep;
  Rng rng(seed);
  const double r = (M1 - M) / (M1 + M);
  const double M1sq = M1 * M1;
  for (int g = 0; g < geodesics; ++g) {
    const std::vector<cplx> delta0 = sample_koranyi_delta(x, M, rng, 1e-10, 0.25);
    std::vector<cplx> y(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const double th = rng.uniform(0.0, 2.0 * kPi);
      const double mod = (j == 0) ? 1.0 : (rng.uniform() < 0.5 ? 1.0 : rng.uniform(0.2, 0.9));
      y[j] = mod * cplx{std::cos(th), std::sin(th)};
    }
    for (int i = 0; i < per_geodesic; ++i) {
      const double rho = r * (1.0 - std::pow(2.0, -rng.uniform(1.0, 20.0)));
      const double th = rng.uniform(0.0, 2.0 * kPi);
      const cplx zeta = rho * cplx{std::cos(th), std::sin(th)};
      const std::vector<cplx> delta = geodesic_point_delta(x, delta0, y, zeta);
      ++rep.samples;
      const double value = koranyi_value_sq_delta(x, delta);
      rep.worst_ratio = std::max(rep.worst_ratio, value / M1sq);
      if (value >= M1sq * (1.0 + 1e-9)) ++rep.violations;
    }
  }
  return rep;
}

// |1 - p~_x(z)| kappa(z; v) <= 2 M^3 ||v|| on H(x, M).
inline BoundCheckReport metric_bound_check(const BoundaryPoint& x, double M, int samples,
                                           std::uint64_t seed = 0x6b0b41a5ULL) {
  BoundCheckReport rep;
  Rng rng(seed);
  const double allowed_factor = 2.0 * M * M * M;
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, 1e-14, 0.25);
    std::vector<cplx> v(x.dim());
    double vn = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const double th = rng.uniform(0.0, 2.0 * kPi);
      v[j] = rng.uniform(0.0, 1.0) * cplx{std::cos(th), std::sin(th)};
      vn = std::max(vn, std::abs(v[j]));
    }
    if (vn == 0.0) continue;
    cplx w{0.0, 0.0};
    for (std::size_t j : x.silov_indices()) w += std::conj(x[j]) * delta[j];
    w /= static_cast<double>(x.degree());
    double kappa = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const double oms = x.is_silov(j)
                             ? one_minus_abs_sq_unit(std::conj(x[j]) * delta[j])
                             : one_minus_abs_sq(std::abs(x[j] - delta[j]));
      kappa = std::max(kappa, std::abs(v[j]) / oms);
    }
    const double measured = std::abs(w) * kappa;
    const double allowed = allowed_factor * vn;
    ++rep.samples;
    rep.worst_ratio = std::max(rep.worst_ratio, measured / allowed);
    if (measured >= allowed * (1.0 + 1e-9)) ++rep.violations;
  }
  return rep;
}

// |df/dv| <= C alpha M^6 ||v|| on H(x, M); C pinned after brute-force
// calibration over the Julia gallery.
inline constexpr double kDerivativeEnvelopeConstant = 100.0;

inline BoundCheckReport derivative_envelope_check(const HoloMap& f, const BoundaryPoint& x,
                                                  const JuliaReport& jr, double M, int samples,
                                                  std::uint64_t seed = 0xd0e5e7ULL,
                                                  int component = 0) {
  BoundCheckReport rep;
  Rng rng(seed);
  const double allowed_factor =
      kDerivativeEnvelopeConstant * jr.alpha * std::pow(M, 6.0);
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, 1e-12, 0.25);
    const EvalPoint p = EvalPoint::from_delta(x, delta);
    std::vector<Dual> u(p.u.size());
    std::vector<cplx> v(x.dim());
    double vn = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const double th = rng.uniform(0.0, 2.0 * kPi);
      v[j] = rng.uniform(0.05, 1.0) * cplx{std::cos(th), std::sin(th)};
      vn = std::max(vn, std::abs(v[j]));
      u[j] = Dual{p.u[j], -v[j]};
    }
    const double measured = std::abs(f.eval_u(u)[static_cast<std::size_t>(component)].d);
    const double allowed = allowed_factor * vn;
    ++rep.samples;
    rep.worst_ratio = std::max(rep.worst_ratio, measured / allowed);
    if (measured >= allowed * (1.0 + 1e-9)) ++rep.violations;
  }
  return rep;
}

}  // namespace polydisk
