#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polydisk/limits.hpp"
#include "polydisk/regions.hpp"

namespace polydisk {

inline std::optional<cplx> snap_unimodular(cplx t, double tol = 1e-9) {
  static const cplx candidates[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  for (const cplx& c : candidates)
    if (std::abs(t - c) <= tol) return c;
  return std::nullopt;
}

struct JuliaReport {
  double alpha = std::numeric_limits<double>::infinity();
  cplx tau{1.0, 0.0};
  LimitEstimate tau_estimate;           // radial limit of f
  LimitEstimate ratio_estimate;         // limit of the lower envelope of the ratio
  std::vector<double> radial_ratio;     // (1 - |f(t x)|) / (1 - t)
  std::vector<double> schedule;
  double alpha_lower_bound = 0.0;       // (1 - |f(0)|) / (2 (1 + |f(0)|))
  bool tau_snapped = false;
  double tau_snap_distance = 0.0;
  std::string diagnostics;

  bool alpha_finite() const { return std::isfinite(alpha); }
};

// The boundary dilatation coefficient along the radial geodesic, which is all
// that is needed: the liminf over unrestricted approach equals the radial one.
// tau is the radial limit of f, mandatory once alpha is finite.
inline JuliaReport julia_coefficient(const HoloMap& f, const BoundaryPoint& x, int depth = 40,
                                     int component = 0) {
  if (static_cast<std::size_t>(f.arity()) != x.dim())
    throw std::invalid_argument("julia_coefficient: arity mismatch");
  JuliaReport rep;
  rep.schedule = default_schedule(depth);
  const Curve radial = make_radial(x, depth);

  // radial values of f
  std::vector<cplx> values;
  values.reserve(rep.schedule.size());
  for (double eps : rep.schedule) {
    const CurvePointData p = curve_point(radial, eps);
    std::vector<Dual> u(p.u.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
    values.push_back(f.eval_u(u)[static_cast<std::size_t>(component)].v);
  }
  rep.tau_estimate = classify_sequence(values, 1e-7);

  {
    std::vector<Dual> ud(x.dim(), Dual{cplx{1.0, 0.0}});  // z = 0 means u = (1,...,1)
    const double f0 = std::abs(f.eval_u(ud)[static_cast<std::size_t>(component)].v);
    rep.alpha_lower_bound = (1.0 - f0) / (2.0 * (1.0 + f0));
  }

  // plain ratio first; enough to detect divergence (alpha = +infinity)
  std::vector<double> plain(rep.schedule.size());
  for (std::size_t i = 0; i < plain.size(); ++i)
    plain[i] = (1.0 - std::abs(values[i])) / rep.schedule[i];

  const auto plain_ratio_at = [&](double eps) {
    const CurvePointData p = curve_point(radial, eps);
    std::vector<Dual> u(p.u.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
    const cplx v = f.eval_u(u)[static_cast<std::size_t>(component)].v;
    return (1.0 - std::abs(v)) / eps;
  };

  {
    const std::size_t n = plain.size();
    bool growing = n >= 8 && plain[n - 1] >= 4.0 * plain[n - 8];
    for (std::size_t i = n - 8; growing && i + 1 < n; ++i)
      if (plain[i + 1] < plain[i]) growing = false;
    if (growing) {
      // chase the growth a little deeper so the 1e12 threshold decides
      double last = plain[n - 1];
      double eps = rep.schedule.back();
      for (int extra = 0; extra < 24 && last <= kInfinityThreshold; ++extra) {
        eps *= 0.5;
        const double next = plain_ratio_at(eps);
        if (next < last) {
          growing = false;
          break;
        }
        last = next;
      }
      if (growing && last > kInfinityThreshold) {
        rep.radial_ratio = std::move(plain);
        rep.diagnostics = "radial ratio grows beyond 1e12; no Julia condition holds";
        return rep;
      }
    }
  }

  if (rep.tau_estimate.verdict != LimitVerdict::converged) {
    // A bounded ratio with no radial limit contradicts the Julia machinery;
    // refuse to guess.
    const LimitEstimate env_probe = classify_real_sequence(plain, 1e-6);
    if (env_probe.verdict == LimitVerdict::diverged_to_infinity) {
      rep.radial_ratio = std::move(plain);
      rep.diagnostics = "ratio diverges";
      return rep;
    }
    throw ConsistencyError("julia_coefficient: finite dilatation ratio but f has no radial "
                           "limit at '" + f.label() + "'");
  }

  cplx tau = rep.tau_estimate.value;
  if (const std::optional<cplx> snap = snap_unimodular(tau)) {
    rep.tau_snap_distance = std::abs(tau - *snap);
    tau = *snap;
    rep.tau_snapped = true;
  } else {
    tau /= std::abs(tau);
  }
  rep.tau = tau;

  // refined ratio through the co-evaluation channel when available:
  // 1 - |f|^2 = 2 Re(conj(tau) h) - |h|^2 with h = tau - f exact.
  std::vector<double> ratio(rep.schedule.size());
  const bool refined = f.has_co_eval(component);
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    const double eps = rep.schedule[i];
    if (refined) {
      const CurvePointData p = curve_point(radial, eps);
      EvalPoint ep;
      ep.delta = p.delta;
      ep.u = p.u;
      const cplx h = f.tau_minus(tau, ep, x, component);
      const double oms = 2.0 * (std::conj(tau) * h).real() - std::norm(h);
      ratio[i] = oms / (eps * (1.0 + std::abs(tau - h)));
    } else {
      ratio[i] = plain[i];
    }
  }
  rep.radial_ratio = ratio;

  // liminf via the monotone lower envelope of the samples
  std::vector<double> envelope(ratio.size());
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t i = ratio.size(); i-- > 0;) {
    running = std::min(running, ratio[i]);
    envelope[i] = running;
  }
  rep.ratio_estimate = classify_real_sequence(envelope, 1e-9);
  if (rep.ratio_estimate.verdict == LimitVerdict::converged) {
    rep.alpha = rep.ratio_estimate.value.real();
  } else if (rep.ratio_estimate.verdict == LimitVerdict::diverged_to_infinity) {
    rep.alpha = std::numeric_limits<double>::infinity();
  } else {
    // keep the best finite information: the envelope tail
    rep.alpha = envelope.back();
    rep.diagnostics = "liminf estimate undecided; reporting the envelope tail";
  }
  return rep;
}

// --- horosphere image checks ---------------------------------------------------

struct InclusionFinding {
  double radius = 0.0;
  std::vector<cplx> delta;  // sampled source point, z = x - delta
  double image_value = 0.0;
};

struct JuliaInclusionReport {
  int samples = 0;
  std::vector<InclusionFinding> findings;
  double max_image_value_ratio = 0.0;  // sup of image value / (alpha R)
  bool pass() const { return findings.empty(); }
};

// Checks f(E(x, R)) inside E(tau, alpha R) by sampling; the horocycle value of
// the image is computed through the co-evaluation channel so deep samples
// keep their digits.
inline JuliaInclusionReport julia_inclusion_check(const HoloMap& f, const BoundaryPoint& x,
                                                  const JuliaReport& jr,
                                                  std::span<const double> radii,
                                                  int samples_per_radius, Rng& rng,
                                                  int component = 0) {
  if (!jr.alpha_finite())
    throw PreconditionError("julia_inclusion_check: needs a finite Julia coefficient");
  JuliaInclusionReport rep;
  for (double R : radii) {
    for (int i = 0; i < samples_per_radius; ++i) {
      const std::vector<cplx> delta = sample_horosphere_delta(x, R, rng);
      ++rep.samples;
      const EvalPoint p = EvalPoint::from_delta(x, delta);
      const cplx h = f.tau_minus(jr.tau, p, x, component);
      const double oms = 2.0 * (std::conj(jr.tau) * h).real() - std::norm(h);
      const double value = std::norm(h) / oms;
      const double budget = jr.alpha * R;
      rep.max_image_value_ratio = std::max(rep.max_image_value_ratio, value / budget);
      if (value >= budget * (1.0 + 1e-9) + 1e-9)
        rep.findings.push_back({R, delta, value});
    }
  }
  return rep;
}

// Polydisk-target reduction: the Julia condition for a map into a polydisk
// asks only that SOME component satisfies a scalar Julia condition. Runs the
// scalar pipeline per component.
struct ComponentJulia {
  int component = 0;
  bool julia = false;
  double alpha = std::numeric_limits<double>::infinity();
  cplx tau{0.0, 0.0};
  LimitVerdict radial_verdict = LimitVerdict::undecided;
};

inline std::vector<ComponentJulia> polydisk_target_julia(const HoloMap& f,
                                                         const BoundaryPoint& x,
                                                         int depth = 40) {
  std::vector<ComponentJulia> out;
  for (int m = 0; m < f.codomain(); ++m) {
    ComponentJulia cj;
    cj.component = m;
    try {
      const JuliaReport jr = julia_coefficient(f, x, depth, m);
      cj.alpha = jr.alpha;
      cj.julia = jr.alpha_finite();
      cj.tau = jr.tau;
      cj.radial_verdict = jr.tau_estimate.verdict;
    } catch (const ConsistencyError&) {
      cj.julia = false;
      cj.radial_verdict = LimitVerdict::no_limit;
    }
    out.push_back(cj);
  }
  return out;
}

// Horosphere image findings for a polydisk-valued map: samples E(x, R_src)
// and looks for images outside the product horosphere E(y, R_img), where y
// collects per-component boundary targets. Components with a co-evaluator are
// measured through it.
struct ImageHorosphereReport {
  int samples = 0;
  int outside = 0;
  double max_value = 0.0;
  bool mapped_inside() const { return outside == 0; }
};

inline ImageHorosphereReport image_horosphere_check(const HoloMap& f, const BoundaryPoint& x,
                                                    std::span<const cplx> y, double R_src,
                                                    double R_img, int samples, Rng& rng) {
  if (static_cast<int>(y.size()) != f.codomain())
    throw std::invalid_argument("image_horosphere_check: target dimension mismatch");
  ImageHorosphereReport rep;
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_horosphere_delta(x, R_src, rng);
    const EvalPoint p = EvalPoint::from_delta(x, delta);
    std::vector<Dual> u(p.u.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
    const std::vector<Dual> img = f.eval_u(u);
    double value = 0.0;
    for (int m = 0; m < f.codomain(); ++m) {
      const std::size_t mi = static_cast<std::size_t>(m);
      if (f.has_co_eval(m)) {
        const cplx h = f.tau_minus(y[mi], p, x, m);
        const double oms = 2.0 * (std::conj(y[mi]) * h).real() - std::norm(h);
        value = std::max(value, std::norm(h) / oms);
      } else {
        value = std::max(value, horocycle_value(y[mi], img[mi].v));
      }
    }
    ++rep.samples;
    rep.max_value = std::max(rep.max_value, value);
    if (value >= R_img) ++rep.outside;
  }
  return rep;
}

}  // namespace polydisk
