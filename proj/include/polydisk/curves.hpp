#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydisk/errors.hpp"
#include "polydisk/regions.hpp"
#include "polydisk/rng.hpp"

namespace polydisk {

enum class Verdict { yes, no, undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "undecided";
  }
}

struct CurveExpectation {
  std::optional<bool> special;
  std::optional<bool> restricted;
  std::optional<bool> peculiar;
  std::optional<bool> koranyi_eventually;
};

inline std::vector<double> default_schedule(int depth = 40) {
  std::vector<double> eps(static_cast<std::size_t>(depth));
  for (int k = 1; k <= depth; ++k) eps[static_cast<std::size_t>(k - 1)] = std::pow(2.0, -k);
  return eps;
}

// Curves are stored as functions of eps = 1 - t returning the exact
// differences x_j - sigma_j(t). At eps = 2^-40 the quantities that decide
// every classifier are quotients of such differences, so forming sigma first
// and subtracting would destroy them.
struct Curve {
  BoundaryPoint target;
  std::function<std::vector<cplx>(double)> delta;
  std::vector<double> schedule;
  std::string label;
  CurveExpectation expect;

  explicit Curve(BoundaryPoint t, int depth = 40)
      : target(std::move(t)), schedule(default_schedule(depth)) {}

  std::vector<cplx> point(double eps) const { return delta_to_point(target, delta(eps)); }
};

// Everything the classifiers and limit functionals need at one parameter
// value, all derived from the exact deltas.
struct CurvePointData {
  double eps = 0.0;
  std::vector<cplx> delta;  // x_j - sigma_j
  std::vector<cplx> s;      // conj(x_j) * delta_j
  std::vector<cplx> u;      // 1 - sigma_j
  cplx w;                   // 1 - sigma_tilde (projection in one-minus form)
};

inline CurvePointData curve_point(const Curve& c, double eps) {
  CurvePointData p;
  p.eps = eps;
  p.delta = c.delta(eps);
  if (!delta_point_valid(c.target, p.delta))
    throw std::domain_error("curve '" + c.label + "' leaves the polydisk at eps=" +
                            std::to_string(eps));
  const BoundaryPoint& x = c.target;
  p.s.resize(x.dim());
  p.u.resize(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    p.s[j] = std::conj(x[j]) * p.delta[j];
    p.u[j] = (1.0 - x[j]) + p.delta[j];
  }
  cplx acc{0.0, 0.0};
  for (std::size_t j : x.silov_indices()) acc += p.s[j];
  p.w = acc / static_cast<double>(x.degree());
  return p;
}

// sigma_x = p_x(sigma) (an x-curve on the geodesic through x) together with
// the disk curve sigma_tilde, returned in one-minus form.
struct ProjectedCurve {
  Curve sigma_x;
  std::function<cplx(double)> one_minus_sigma_tilde;
};

inline ProjectedCurve project_curve(const Curve& c) {
  ProjectedCurve out{Curve(c.target), {}};
  const Curve src = c;
  out.sigma_x.schedule = c.schedule;
  out.sigma_x.label = c.label + ":projected";
  out.sigma_x.delta = [src](double eps) {
    const CurvePointData p = curve_point(src, eps);
    std::vector<cplx> d(src.target.dim());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = p.w * src.target[j];
    return d;
  };
  out.one_minus_sigma_tilde = [src](double eps) { return curve_point(src, eps).w; };
  return out;
}

// --- verdict policies ---------------------------------------------------------

inline constexpr double kCurveTol = 1e-4;  // tail threshold for limit-zero verdicts
inline constexpr int kTailWindow = 5;      // "eventually" = the last 5 schedule points

inline Verdict verdict_to_zero(std::span<const double> seq, double tol = kCurveTol) {
  const std::size_t n = seq.size();
  if (n < static_cast<std::size_t>(kTailWindow) + 1) return Verdict::undecided;
  bool all_small = true, all_big = true;
  for (std::size_t i = n - kTailWindow; i < n; ++i) {
    if (!(seq[i] < tol)) all_small = false;
    if (!(seq[i] >= 10.0 * tol)) all_big = false;
  }
  if (all_small && seq[n - 1] <= seq[n - kTailWindow] * (1.0 + 1e-9)) return Verdict::yes;
  if (all_big) return Verdict::no;
  return Verdict::undecided;
}

struct BoundedVerdict {
  Verdict v = Verdict::undecided;
  double sup_tail = 0.0;
};

inline BoundedVerdict verdict_bounded(std::span<const double> seq) {
  const std::size_t n = seq.size();
  BoundedVerdict out;
  if (n < 12) return out;
  for (std::size_t i = n / 2; i < n; ++i) out.sup_tail = std::max(out.sup_tail, seq[i]);
  if (seq[n - 1] > 1e8) {
    out.v = Verdict::no;
    return out;
  }
  const std::size_t W = 8;
  bool nondecreasing = true;
  for (std::size_t i = n - W; i + 1 < n; ++i)
    if (seq[i + 1] < seq[i] * (1.0 - 1e-12)) nondecreasing = false;
  if (nondecreasing && seq[n - 1] >= 2.0 * seq[n - W]) {
    out.v = Verdict::no;
    return out;
  }
  const std::size_t W2 = std::min<std::size_t>(10, n / 3);
  double m1 = 0.0, m0 = 0.0;
  for (std::size_t i = n - W2; i < n; ++i) m1 = std::max(m1, seq[i]);
  for (std::size_t i = n - 2 * W2; i < n - W2; ++i) m0 = std::max(m0, seq[i]);
  if (m1 <= m0 * 1.02) out.v = Verdict::yes;
  return out;
}

// --- classification -------------------------------------------------------------

struct Classification {
  Verdict special = Verdict::undecided;
  Verdict special_distance = Verdict::undecided;  // Kobayashi-distance criterion
  Verdict special_ratio = Verdict::undecided;     // deviation/depth ratio criterion
  Verdict restricted = Verdict::undecided;
  Verdict peculiar = Verdict::undecided;
  double amplitude_estimate = 0.0;                // sup of the Stolz quotient tail
  std::optional<double> m_restricted_at;          // set when restricted
  double diagonal_ratio_last = 0.0;               // sup-norm deviation / depth at tail
  double final_distance = 0.0;                    // sup-norm distance to the target at the end

  std::vector<double> schedule;
  std::vector<double> special_ratio_seq;
  std::vector<double> special_dist_seq;
  std::vector<double> restricted_seq;
  std::vector<double> peculiar_seq;
  std::vector<double> koranyi_seq;
  std::vector<double> diagonal_seq;
  std::string tail_policy;
};

inline Classification classify(const Curve& c) {
  const BoundaryPoint& x = c.target;
  Classification out;
  out.schedule = c.schedule;
  out.tail_policy = "verdicts read the last " + std::to_string(kTailWindow) +
                    " schedule points at tol " + std::to_string(kCurveTol);

  for (double eps : c.schedule) {
    const CurvePointData p = curve_point(c, eps);
    const double one_minus_proj = one_minus_abs_unit(p.w);
    const cplx sigma_tilde = 1.0 - p.w;

    double ratio = 0.0;       // deviation criterion, unimodular components only
    double diag_ratio = 0.0;  // sup-norm deviation over all components
    double mmax = 0.0;        // Kobayashi distance argument
    double pec = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const cplx dev = p.w * x[j] - p.delta[j];  // sigma_j - (sigma_x)_j
      diag_ratio = std::max(diag_ratio, std::abs(dev) / one_minus_proj);
      if (x.is_silov(j)) {
        ratio = std::max(ratio, std::abs(dev) / one_minus_proj);
        const cplx denom = std::conj(p.w) + (1.0 - std::conj(p.w)) * p.s[j];
        mmax = std::max(mmax, std::abs(dev) / std::abs(denom));
        pec = std::max(pec, std::norm(p.s[j]) / one_minus_abs_sq_unit(p.s[j]));
      } else {
        const cplx proj_j = sigma_tilde * x[j];
        const cplx sigma_j = x[j] - p.delta[j];
        mmax = std::max(mmax,
                        std::abs(dev) / std::abs(1.0 - std::conj(proj_j) * sigma_j));
      }
    }
    out.special_ratio_seq.push_back(ratio);
    out.special_dist_seq.push_back(std::atanh(std::min(mmax, 1.0 - 1e-16)));
    out.restricted_seq.push_back(std::abs(p.w) / one_minus_proj);
    out.peculiar_seq.push_back(pec);
    out.koranyi_seq.push_back(koranyi_value_sq_delta(x, p.delta));
    out.diagonal_seq.push_back(diag_ratio);
  }
  out.diagonal_ratio_last = out.diagonal_seq.back();
  for (const cplx& d : curve_point(c, c.schedule.back()).delta)
    out.final_distance = std::max(out.final_distance, std::abs(d));

  out.special_ratio = verdict_to_zero(out.special_ratio_seq);
  out.special_distance = verdict_to_zero(out.special_dist_seq);
  if ((out.special_ratio == Verdict::yes && out.special_distance == Verdict::no) ||
      (out.special_ratio == Verdict::no && out.special_distance == Verdict::yes))
    throw ConsistencyError("special criteria disagree on curve '" + c.label + "'");
  out.special = (out.special_ratio == out.special_distance) ? out.special_ratio
                                                            : Verdict::undecided;

  const BoundedVerdict bv = verdict_bounded(out.restricted_seq);
  out.restricted = bv.v;
  out.amplitude_estimate = bv.sup_tail;
  if (out.restricted == Verdict::yes) out.m_restricted_at = bv.sup_tail;

  out.peculiar = verdict_to_zero(out.peculiar_seq);
  return out;
}

inline Verdict is_special(const Curve& c) { return classify(c).special; }
inline Verdict is_restricted(const Curve& c) { return classify(c).restricted; }
inline Verdict is_peculiar(const Curve& c) { return classify(c).peculiar; }

// --- the curve gallery ----------------------------------------------------------

inline Curve make_radial(const BoundaryPoint& x, int depth = 40) {
  Curve c(x, depth);
  c.label = "radial";
  c.delta = [x](double eps) {
    std::vector<cplx> d(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) d[j] = eps * x[j];
    return d;
  };
  c.expect = {true, true, true, true};
  return c;
}

// sigma(t) = ((1+t)/2, (1-t)/2) at (1, 0): special without being sup-norm
// tangent to the geodesic (the diagonal ratio stays 1).
inline Curve make_remark_11(int depth = 40) {
  Curve c(BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.0, 0.0}}), depth);
  c.label = "remark-1.1";
  c.delta = [](double eps) {
    return std::vector<cplx>{cplx{eps / 2.0, 0.0}, cplx{-eps / 2.0, 0.0}};
  };
  c.expect.special = true;
  c.expect.restricted = true;
  return c;
}

// sigma(t) = (t + i sqrt(1-t), t - i sqrt(1-t)) at (1, 1): restricted for
// every amplitude but not special, and eventually outside every Koranyi
// region.
inline Curve make_remark_16(int depth = 40) {
  Curve c(BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}}), depth);
  c.label = "remark-1.6";
  c.delta = [](double eps) {
    const double r = std::sqrt(eps);
    return std::vector<cplx>{cplx{eps, -r}, cplx{eps, r}};
  };
  c.expect.special = false;
  c.expect.restricted = true;
  c.expect.koranyi_eventually = false;
  return c;
}

// sigma^lambda(t) = (t, t + lambda (1-t)) at (1, 1): restricted, not special,
// eventually inside a fixed Koranyi region.
inline Curve make_remark_21_sigma(double lambda, int depth = 40) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("remark-2.1 curve: lambda must lie in (0,1)");
  Curve c(BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}}), depth);
  c.label = "remark-2.1-sigma-lambda";
  c.delta = [lambda](double eps) {
    return std::vector<cplx>{cplx{eps, 0.0}, cplx{eps * (1.0 - lambda), 0.0}};
  };
  c.expect.special = false;
  c.expect.restricted = true;
  c.expect.koranyi_eventually = true;
  return c;
}

// sigma^lambda(t) = (t, t - lambda (1-t)^a) at (1, 1), a < 1: peculiar but
// approaching tangentially in the second coordinate.
inline Curve make_remark_23_sigma(double lambda, double a, int depth = 40) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("remark-2.3 curve: lambda must lie in (0,1)");
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("remark-2.3 curve: exponent must lie in (0,1)");
  Curve c(BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}}), depth);
  c.label = "remark-2.3-sigma-lambda";
  c.delta = [lambda, a](double eps) {
    return std::vector<cplx>{cplx{eps, 0.0}, cplx{eps + lambda * std::pow(eps, a), 0.0}};
  };
  c.expect.peculiar = true;
  c.expect.restricted = true;
  return c;
}

// sigma^theta(t) = t x + r_t e^{i theta} v with r_t = (1-t)/||v||: the curve
// family behind the internal-direction derivative limits. Special iff v has
// no unimodular components beyond a multiple of the Silov part.
inline Curve make_remark_45(const BoundaryPoint& x, std::vector<cplx> v, double theta,
                            int depth = 40) {
  double nv = 0.0;
  for (const cplx& c : v) nv = std::max(nv, std::abs(c));
  if (!(nv > 0.0)) throw std::invalid_argument("remark-4.5 curve: v must be nonzero");
  Curve c(x, depth);
  c.label = "remark-4.5";
  const cplx phase{std::cos(theta), std::sin(theta)};
  c.delta = [x, v, nv, phase](double eps) {
    std::vector<cplx> d(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) d[j] = eps * x[j] - eps / nv * phase * v[j];
    return d;
  };
  return c;
}

// First coordinate rides the edge of the unit horocycle of radius 1, so the
// peculiarity quantity is identically 1.
inline Curve make_horocycle_edge(int depth = 40) {
  Curve c(BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}}), depth);
  c.label = "horocycle-edge";
  c.delta = [](double eps) {
    return std::vector<cplx>{cplx{eps, std::sqrt(eps * (1.0 - eps))}, cplx{eps, 0.0}};
  };
  c.expect.peculiar = false;
  return c;
}

// Geodesic curve whose disk trace swings across a Stolz region of the given
// amplitude: zeta(eps) = (1 - eps) e^{i psi}, psi = b eps sin(0.7 log2(1/eps)),
// b = 0.95 sqrt(M^2 - 1). Exactly special (it coincides with its projection).
inline Curve make_stolz_swing(const BoundaryPoint& x, double amplitude, int depth = 40) {
  if (!(amplitude > 1.0))
    throw std::invalid_argument("stolz-swing curve: amplitude must be > 1");
  Curve c(x, depth);
  c.label = "stolz-swing";
  const double b = 0.95 * std::sqrt(amplitude * amplitude - 1.0);
  c.delta = [x, b](double eps) {
    const double psi = b * eps * std::sin(0.7 * std::log2(1.0 / eps));
    const double sh = std::sin(psi / 2.0);
    const cplx h{2.0 * sh * sh + eps * std::cos(psi), -(1.0 - eps) * std::sin(psi)};
    std::vector<cplx> d(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) d[j] = h * x[j];
    return d;
  };
  c.expect.special = true;
  c.expect.restricted = true;
  return c;
}

// Diagonal curve through zeta(t) = t + i sqrt(1-t): the disk trace approaches
// 1 tangentially, so the curve is not restricted.
inline Curve make_tangential(const BoundaryPoint& x, double scale = 1.0, int depth = 40) {
  Curve c(x, depth);
  c.label = "tangential";
  c.delta = [x, scale](double eps) {
    const cplx h{eps, -scale * std::sqrt(eps)};
    std::vector<cplx> d(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) d[j] = x.is_silov(j) ? h * x[j] : eps * x[j];
    return d;
  };
  c.expect.restricted = false;
  return c;
}

// Radial curve with controlled perturbations: unimodular components decay
// like eps^silov_decay with per-component scales and phases, internal
// components wander slowly. Decays >= 1.5 make the curve special; decays < 1
// with spread-out scales make it non-special (unless only one component is
// unimodular, in which case every x-curve is special).
inline Curve make_perturbed(const BoundaryPoint& x, std::uint64_t seed, double silov_decay,
                            double silov_scale, bool wander_internal, int depth = 40) {
  Curve c(x, depth);
  c.label = "perturbed:" + std::to_string(seed) + ":p" + std::to_string(silov_decay);

  Rng rng(seed);
  const std::size_t n = x.dim();
  std::vector<double> scale(n), phase(n), iscale(n), iphase(n), idecay(n);
  double prev_scale = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    scale[j] = rng.uniform(0.1, silov_scale);
    // keep per-component scales spread out so sub-linear decays are
    // unambiguously non-special
    if (prev_scale >= 0.0 && std::abs(scale[j] - prev_scale) < 0.1)
      scale[j] = std::min(silov_scale, prev_scale + 0.15);
    prev_scale = scale[j];
    phase[j] = rng.uniform(-1.2, 1.2);
    iscale[j] = 0.45 * (1.0 - std::abs(x[j]));
    iphase[j] = rng.uniform(0.0, 2.0 * kPi);
    // decay >= 0.5 keeps the tail within the 1e-6 convergence budget at 2^-40
    idecay[j] = rng.uniform(0.5, 0.9);
  }
  c.delta = [x, silov_decay, scale, phase, iscale, iphase, idecay,
             wander_internal](double eps) {
    std::vector<cplx> d(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (x.is_silov(j)) {
        const cplx bump = scale[j] * std::pow(eps, silov_decay) *
                          cplx{std::cos(phase[j]), std::sin(phase[j])};
        d[j] = x[j] * (eps + bump);
      } else if (wander_internal) {
        const double ang = iphase[j] + 3.0 * std::sin(1.7 * std::log(1.0 / eps));
        d[j] = iscale[j] * std::pow(eps, idecay[j]) * cplx{std::cos(ang), std::sin(ang)};
      } else {
        d[j] = eps * x[j];
      }
    }
    return d;
  };

  const bool forced_special = (x.degree() == 1);
  if (forced_special || silov_decay >= 1.5)
    c.expect.special = true;
  else if (silov_decay <= 1.0 && x.degree() >= 2)
    c.expect.special = false;
  c.expect.restricted = true;
  return c;
}

// Peculiar curves of the tangential kind: conj(x_j) delta_j = eps + lambda_j
// eps^{a_j} on unimodular components.
inline Curve make_peculiar_tangential(const BoundaryPoint& x, std::vector<double> lambda,
                                      std::vector<double> a, int depth = 40) {
  Curve c(x, depth);
  c.label = "peculiar-tangential";
  c.delta = [x, lambda, a](double eps) {
    std::vector<cplx> d(x.dim());
    std::size_t si = 0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (x.is_silov(j)) {
        d[j] = x[j] * (eps + lambda[si] * std::pow(eps, a[si]));
        ++si;
      } else {
        d[j] = eps * x[j];
      }
    }
    return d;
  };
  c.expect.peculiar = true;
  return c;
}

// Mixed-decay family used to exercise the equivalence of the two special
// criteria. Expectations are attached per the decay class.
inline std::vector<Curve> random_curve_family(const BoundaryPoint& x, int count,
                                              std::uint64_t seed, int depth = 40) {
  std::vector<Curve> out;
  const double decays[] = {0.6, 0.7, 0.8, 1.0, 1.5, 2.0};
  for (int i = 0; i < count; ++i) {
    const double p = decays[static_cast<std::size_t>(i) % 6];
    const double sc = (p == 1.0) ? 0.6 : 0.75;
    out.push_back(make_perturbed(x, seed + static_cast<std::uint64_t>(i) * 977u, p, sc,
                                 (i % 2) == 0, depth));
    if (p == 1.0 && x.degree() >= 2) out.back().expect.special = false;
  }
  return out;
}

// The adversarial test surface standing in for "all special restricted
// curves": the radial curve, geodesic traces swinging at fixed amplitudes,
// and seeded fast-decay perturbations with wandering internal components.
inline std::vector<Curve> special_restricted_family(const BoundaryPoint& x, int count,
                                                    std::uint64_t seed, int depth = 40) {
  std::vector<Curve> out;
  out.push_back(make_radial(x, depth));
  for (double M : {1.5, 4.0, 10.0}) out.push_back(make_stolz_swing(x, M, depth));
  for (int i = 0; static_cast<int>(out.size()) < count; ++i)
    out.push_back(make_perturbed(x, seed + static_cast<std::uint64_t>(i) * 3571u, 1.5, 0.8,
                                 true, depth));
  return out;
}

inline std::vector<Curve> peculiar_family(const BoundaryPoint& x, int depth = 40) {
  std::vector<Curve> out;
  out.push_back(make_radial(x, depth));
  const std::size_t d = x.degree();
  for (double lam : {0.25, 0.75}) {
    for (double a : {0.5, 0.75}) {
      for (std::size_t pos = 0; pos < d; ++pos) {
        std::vector<double> lambdas(d, 0.0), exps(d, 0.5);
        lambdas[pos] = lam;
        exps[pos] = a;
        Curve c = make_peculiar_tangential(x, lambdas, exps, depth);
        c.label += ":l" + std::to_string(lam) + ":a" + std::to_string(a) +
                   ":j" + std::to_string(pos);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

// --- gallery registry (CLI contract) ---------------------------------------------

struct CurveGalleryEntry {
  std::string name;
  std::string params;    // parameter schema
  std::string expected;  // documented classification
};

inline std::vector<CurveGalleryEntry> curve_gallery_list() {
  return {
      {"radial", "(point required)", "special, restricted, peculiar"},
      {"remark-1.1", "", "special; sup-norm deviation ratio stays 1"},
      {"remark-1.6", "", "restricted for every M, not special, leaves every Koranyi region"},
      {"remark-2.1-sigma-lambda", "lambda in (0,1)",
       "restricted, not special, stays in a fixed Koranyi region"},
      {"remark-2.3-sigma-lambda", "lambda in (0,1), a in (0,1)", "peculiar, tangential"},
      {"remark-4.5", "theta; v via --v (point required)",
       "special iff v is a multiple of the Silov part plus internal directions"},
      {"horocycle-edge", "", "not peculiar; the deciding quantity is constant 1"},
      {"stolz-swing", "M > 1 (point required)", "special, restricted at amplitude ~M"},
      {"tangential", "scale (point required)", "not restricted"},
  };
}

inline Curve curve_gallery(const std::string& name,
                           const std::map<std::string, double>& params = {},
                           const std::optional<BoundaryPoint>& point = std::nullopt,
                           const std::vector<cplx>& v = {}, int depth = 40) {
  const auto get = [&params](const char* key, std::optional<double> fallback =
                                                  std::nullopt) -> double {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (fallback) return *fallback;
    throw std::invalid_argument(std::string("curve gallery: missing parameter '") + key +
                                "'");
  };
  const auto need_point = [&point]() -> const BoundaryPoint& {
    if (!point)
      throw std::invalid_argument("curve gallery: this entry needs a boundary point");
    return *point;
  };
  if (name == "radial") return make_radial(need_point(), depth);
  if (name == "remark-1.1") return make_remark_11(depth);
  if (name == "remark-1.6") return make_remark_16(depth);
  if (name == "remark-2.1-sigma-lambda")
    return make_remark_21_sigma(get("lambda"), depth);
  if (name == "remark-2.3-sigma-lambda")
    return make_remark_23_sigma(get("lambda"), get("a"), depth);
  if (name == "remark-4.5") {
    if (v.empty())
      throw std::invalid_argument("curve gallery: remark-4.5 needs a direction v");
    return make_remark_45(need_point(), v, get("theta", 0.0), depth);
  }
  if (name == "horocycle-edge") return make_horocycle_edge(depth);
  if (name == "stolz-swing") return make_stolz_swing(need_point(), get("M"), depth);
  if (name == "tangential") return make_tangential(need_point(), get("scale", 1.0), depth);
  throw std::invalid_argument("curve gallery: unknown curve '" + name + "'");
}

}  // namespace polydisk
