#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "polydisk/boundary.hpp"
#include "polydisk/hyperbolic.hpp"
#include "polydisk/rng.hpp"

namespace polydisk {

// Membership verdicts are strict. A value within 1e-12 (relative) of the
// threshold classifies as outside and is flagged, so downstream verdicts are
// deterministic.
struct Membership {
  bool inside = false;
  bool boundary = false;
  double value = 0.0;
};

inline Membership classify_strict(double value, double threshold) {
  const double slack = 1e-12 * std::max(1.0, std::abs(threshold));
  if (std::abs(value - threshold) <= slack) return {false, true, value};
  return {value < threshold, false, value};
}

// --- region types -----------------------------------------------------------

struct Horocycle {
  cplx center;    // unimodular
  double radius;  // > 0
  Horocycle(cplx tau, double R) : center(tau), radius(R) {
    if (std::abs(std::abs(tau) - 1.0) > 1e-12)
      throw std::invalid_argument("Horocycle: center must be unimodular");
    if (!(R > 0.0)) throw std::invalid_argument("Horocycle: radius must be > 0");
  }
};

struct StolzRegion {
  cplx vertex;
  double amplitude;  // > 1
  StolzRegion(cplx tau, double M) : vertex(tau), amplitude(M) {
    if (std::abs(std::abs(tau) - 1.0) > 1e-12)
      throw std::invalid_argument("StolzRegion: vertex must be unimodular");
    if (!(M > 1.0)) throw std::invalid_argument("StolzRegion: amplitude must be > 1");
  }
};

struct Horosphere {
  BoundaryPoint center;
  double radius;
  Horosphere(BoundaryPoint x, double R) : center(std::move(x)), radius(R) {
    if (!(R > 0.0)) throw std::invalid_argument("Horosphere: radius must be > 0");
  }
};

struct KoranyiRegion {
  BoundaryPoint vertex;
  double amplitude;
  KoranyiRegion(BoundaryPoint x, double M) : vertex(std::move(x)), amplitude(M) {
    if (!(M > 1.0)) throw std::invalid_argument("KoranyiRegion: amplitude must be > 1");
  }
};

// --- membership values, plain coordinates -----------------------------------

inline double horocycle_value(cplx tau, cplx zeta) {
  return std::norm(tau - zeta) / one_minus_abs_sq(std::abs(zeta));
}

inline double stolz_value(cplx tau, cplx zeta) {
  return std::abs(tau - zeta) / (1.0 - std::abs(zeta));
}

inline double sup_norm(std::span<const cplx> z) {
  double m = 0.0;
  for (const cplx& c : z) m = std::max(m, std::abs(c));
  return m;
}

// max over unimodular components of |x_j - z_j|^2 / (1 - |z_j|^2).
inline double horosphere_value(const BoundaryPoint& x, std::span<const cplx> z) {
  require_same_dim(x.dim(), z.size(), "horosphere_value");
  double m = 0.0;
  for (std::size_t j : x.silov_indices()) m = std::max(m, horocycle_value(x[j], z[j]));
  return m;
}

// (1 + ||z||)/(1 - ||z||) times the horosphere value; compared against M^2.
inline double koranyi_value_sq(const BoundaryPoint& x, std::span<const cplx> z) {
  const double n = sup_norm(z);
  return (1.0 + n) / (1.0 - n) * horosphere_value(x, z);
}

// (1/2) log of the horosphere value: the normalized distance of z from x.
inline double boundary_limsup(const BoundaryPoint& x, std::span<const cplx> z) {
  return 0.5 * std::log(horosphere_value(x, z));
}

inline Membership horocycle_contains(const Horocycle& E, cplx zeta) {
  return classify_strict(horocycle_value(E.center, zeta), E.radius);
}

inline Membership stolz_contains(const StolzRegion& H, cplx zeta) {
  return classify_strict(stolz_value(H.vertex, zeta), H.amplitude);
}

inline Membership horosphere_contains(const Horosphere& E, std::span<const cplx> z) {
  return classify_strict(horosphere_value(E.center, z), E.radius);
}

inline Membership koranyi_contains(const KoranyiRegion& H, std::span<const cplx> z) {
  return classify_strict(koranyi_value_sq(H.vertex, z), H.amplitude * H.amplitude);
}

// --- membership values, delta form ------------------------------------------
//
// Near-boundary points are handled as z = x - delta with the deltas exact.
// For a unimodular component, s_j = conj(x_j) delta_j gives z_j = x_j(1 - s_j),
// so 1 - |z_j|^2 = 2 Re s_j - |s_j|^2 carries full precision however small
// the deltas are.

inline cplx rotated_delta(const BoundaryPoint& x, std::span<const cplx> delta, std::size_t j) {
  return std::conj(x[j]) * delta[j];
}

inline double horosphere_value_delta(const BoundaryPoint& x, std::span<const cplx> delta) {
  require_same_dim(x.dim(), delta.size(), "horosphere_value_delta");
  double m = 0.0;
  for (std::size_t j : x.silov_indices()) {
    const cplx s = rotated_delta(x, delta, j);
    m = std::max(m, std::norm(s) / one_minus_abs_sq_unit(s));
  }
  return m;
}

// min_j (1 - |z_j|) for z = x - delta.
inline double one_minus_sup_norm_delta(const BoundaryPoint& x, std::span<const cplx> delta) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x.is_silov(j)) {
      m = std::min(m, one_minus_abs_unit(rotated_delta(x, delta, j)));
    } else {
      m = std::min(m, 1.0 - std::abs(x[j] - delta[j]));
    }
  }
  return m;
}

inline double koranyi_value_sq_delta(const BoundaryPoint& x, std::span<const cplx> delta) {
  const double om = one_minus_sup_norm_delta(x, delta);
  return (2.0 - om) / om * horosphere_value_delta(x, delta);
}

inline double boundary_limsup_delta(const BoundaryPoint& x, std::span<const cplx> delta) {
  return 0.5 * std::log(horosphere_value_delta(x, delta));
}

// Whether z = x - delta lies in the open polydisk.
inline bool delta_point_valid(const BoundaryPoint& x, std::span<const cplx> delta) {
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x.is_silov(j)) {
      if (!(one_minus_abs_sq_unit(rotated_delta(x, delta, j)) > 0.0)) return false;
    } else {
      if (!(std::abs(x[j] - delta[j]) < 1.0)) return false;
    }
  }
  return true;
}

inline std::vector<cplx> delta_to_point(const BoundaryPoint& x, std::span<const cplx> delta) {
  std::vector<cplx> z(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) z[j] = x[j] - delta[j];
  return z;
}

// --- normalized distance along the radial geodesic ---------------------------
//
// k(z, phi_x(s)) - omega(0, s), evaluated so that the two large terms never
// meet: for a unimodular component the difference collapses to
//   (1/2) log[(N + D)^2 / ((1 - |z_j|^2)(1 + s)^2)],
// with N = |s x_j - z_j| and D = |1 - s conj(z_j) x_j|, using
// D^2 - N^2 = (1 - |z_j|^2)(1 - s^2 |x_j|^2).
inline double normalized_distance_radial(const BoundaryPoint& x, std::span<const cplx> z,
                                         double eps_s) {
  require_same_dim(x.dim(), z.size(), "normalized_distance_radial");
  const double s = 1.0 - eps_s;
  const double omega0 = omega_origin_from_one_minus(eps_s);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const cplx target = s * x[j];
    double v;
    if (x.is_silov(j)) {
      const double N = std::abs(target - z[j]);
      const double D = std::abs(1.0 - std::conj(z[j]) * target);
      v = 0.5 * std::log((N + D) * (N + D) /
                         (one_minus_abs_sq(std::abs(z[j])) * (1.0 + s) * (1.0 + s)));
    } else {
      v = std::atanh(std::abs(disk_automorphism(z[j], target))) - omega0;
    }
    best = std::max(best, v);
  }
  return best;
}

// --- samplers -----------------------------------------------------------------

// Inverse of the disk automorphism at base: w with gamma_base(w) = v.
inline cplx disk_automorphism_inverse(cplx base, cplx v) {
  return (v + base) / (1.0 + std::conj(base) * v);
}

// A point of the horosphere E(x, R) in delta form. Unimodular components land
// in the horocycle disk of x_j, internal components roam a disk of the given
// radius.
inline std::vector<cplx> sample_horosphere_delta(const BoundaryPoint& x, double R, Rng& rng,
                                                 double internal_radius = 0.95) {
  const double w = R / (1.0 + R);
  std::vector<cplx> delta(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x.is_silov(j)) {
      // rho sqrt-distributed plus a near-edge tail; the open disk means rho < 1
      double rho = std::sqrt(rng.uniform());
      if (rng.uniform() < 0.25) rho = 1.0 - std::pow(2.0, -rng.uniform(1.0, 30.0));
      const double th = rng.uniform(0.0, 2.0 * kPi);
      const cplx s = w * (1.0 - rho * cplx{std::cos(th), std::sin(th)});
      delta[j] = x[j] * s;
    } else {
      const double rho = internal_radius * std::sqrt(rng.uniform());
      const double th = rng.uniform(0.0, 2.0 * kPi);
      delta[j] = x[j] - rho * cplx{std::cos(th), std::sin(th)};
    }
  }
  return delta;
}

// Rejection sampler for the Koranyi region H(x, M), depth spread
// log-uniformly over [min_depth, max_depth]. Internal components mix
// full-disk values with values collapsing onto x_j.
inline std::vector<cplx> sample_koranyi_delta(const BoundaryPoint& x, double M, Rng& rng,
                                              double min_depth = 1e-12, double max_depth = 0.25) {
  const double M2 = M * M;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const double eps = std::exp(rng.uniform(std::log(min_depth), std::log(max_depth)));
    std::vector<cplx> delta(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (x.is_silov(j)) {
        const double rho = rng.uniform(0.2, 1.2 * M2);
        const double th = rng.uniform(-1.25, 1.25);
        delta[j] = x[j] * (eps * rho * cplx{std::cos(th), std::sin(th)});
      } else {
        if (rng.uniform() < 0.5) {
          const double rho = 0.9 * (1.0 - std::abs(x[j])) * std::sqrt(rng.uniform());
          const double th = rng.uniform(0.0, 2.0 * kPi);
          delta[j] = rho * cplx{std::cos(th), std::sin(th)};
        } else {
          const double rho = 0.95 * std::sqrt(rng.uniform());
          const double th = rng.uniform(0.0, 2.0 * kPi);
          delta[j] = x[j] - rho * cplx{std::cos(th), std::sin(th)};
        }
      }
    }
    if (!delta_point_valid(x, delta)) continue;
    if (koranyi_value_sq_delta(x, delta) < M2) return delta;
  }
  throw std::runtime_error("sample_koranyi_delta: rejection sampling failed");
}

// Koranyi points constrained to a shell eta_lo < ||x - z|| <= eta_hi; all
// components collapse onto x as the shell shrinks.
inline std::vector<cplx> sample_koranyi_shell_delta(const BoundaryPoint& x, double M, Rng& rng,
                                                    double eta_lo, double eta_hi) {
  const double M2 = M * M;
  for (int attempt = 0; attempt < 8192; ++attempt) {
    const double eps = std::exp(rng.uniform(std::log(eta_lo), std::log(eta_hi)));
    std::vector<cplx> delta(x.dim());
    double sup = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const double rho = rng.uniform(0.05, 1.0);
      const double th =
          x.is_silov(j) ? rng.uniform(-1.25, 1.25) : rng.uniform(0.0, 2.0 * kPi);
      const cplx s = eps * rho * cplx{std::cos(th), std::sin(th)};
      delta[j] = x[j] == cplx{0.0, 0.0} ? s : x[j] * s;
      sup = std::max(sup, std::abs(delta[j]));
    }
    if (!(sup > eta_lo && sup <= eta_hi)) continue;
    if (!delta_point_valid(x, delta)) continue;
    if (koranyi_value_sq_delta(x, delta) < M2) return delta;
  }
  throw std::runtime_error("sample_koranyi_shell_delta: rejection sampling failed");
}

// A point of the open Kobayashi ball of the given center and radius (product
// of hyperbolic disks).
inline std::vector<cplx> sample_kobayashi_ball(std::span<const cplx> center, double radius,
                                               Rng& rng) {
  const double rho_max = std::tanh(radius);
  std::vector<cplx> z(center.size());
  for (std::size_t j = 0; j < center.size(); ++j) {
    double rho = rho_max * std::sqrt(rng.uniform());
    if (rng.uniform() < 0.25) rho = rho_max * (1.0 - std::pow(2.0, -rng.uniform(1.0, 24.0)));
    const double th = rng.uniform(0.0, 2.0 * kPi);
    z[j] = disk_automorphism_inverse(center[j], rho * cplx{std::cos(th), std::sin(th)});
  }
  return z;
}

// Point of the complex geodesic zeta -> gamma_{z0}^{-1}(zeta y) through
// z0 = x - delta0, returned in delta form relative to x. For a unimodular
// component, x_j - psi_j = (delta_j - zeta y_j x_j conj(delta_j)) /
// (1 + conj(z0_j) zeta y_j), which keeps full precision near the boundary.
inline std::vector<cplx> geodesic_point_delta(const BoundaryPoint& x,
                                              std::span<const cplx> delta0,
                                              std::span<const cplx> y, cplx zeta) {
  require_same_dim(x.dim(), delta0.size(), "geodesic_point_delta");
  require_same_dim(x.dim(), y.size(), "geodesic_point_delta");
  std::vector<cplx> delta(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const cplx z0 = x[j] - delta0[j];
    const cplx zy = zeta * y[j];
    const cplx denom = 1.0 + std::conj(z0) * zy;
    if (x.is_silov(j)) {
      delta[j] = (delta0[j] - zy * x[j] * std::conj(delta0[j])) / denom;
    } else {
      delta[j] = x[j] - (zy + z0) / denom;
    }
  }
  return delta;
}

// --- structural checks ---------------------------------------------------------

struct SandwichReport {
  int ball_samples = 0;
  int ball_violations = 0;
  int region_samples = 0;
  int stolz_violations = 0;
  int witness_samples = 0;
  int witness_violations = 0;
  double max_internal_modulus = 0.0;
  bool pass() const {
    return ball_violations == 0 && stolz_violations == 0 && witness_violations == 0;
  }
};

// Verifies, on samples, that Kobayashi balls of radius (1/2) log M around the
// radial geodesic sit inside H(x, M), that every unimodular coordinate of an
// H(x, M) point lies in the corresponding Stolz angle, and that points
// t * (silov part) + v with small internal v lie in H(x, M) with margin 1.
inline SandwichReport check_sandwich(const BoundaryPoint& x, double M, int samples, Rng& rng) {
  SandwichReport rep;
  const double M2 = M * M;
  const double slack = 1.0 + 1e-9;

  const double ts[] = {0.5, 0.9, 0.99, 0.999};
  const int per_t = std::max(1, samples / 4);
  for (double t : ts) {
    const std::vector<cplx> center = x.geodesic(t);
    for (int i = 0; i < per_t; ++i) {
      const std::vector<cplx> z = sample_kobayashi_ball(center, 0.5 * std::log(M), rng);
      ++rep.ball_samples;
      if (koranyi_value_sq(x, z) >= M2 * slack) ++rep.ball_violations;
    }
  }

  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, 1e-10, 0.25);
    ++rep.region_samples;
    for (std::size_t j : x.silov_indices()) {
      const cplx s = rotated_delta(x, delta, j);
      const double quot = std::abs(s) / one_minus_abs_unit(s);
      if (quot >= M * slack) {
        ++rep.stolz_violations;
        break;
      }
    }
  }

  if (x.degree() < x.dim()) {
    const double ts2[] = {0.3, 0.6, 0.9, 0.99};
    const int per_w = std::max(1, samples / 4);
    for (double t : ts2) {
      for (int i = 0; i < per_w; ++i) {
        std::vector<cplx> z(x.dim());
        for (std::size_t j = 0; j < x.dim(); ++j) {
          if (x.is_silov(j)) {
            z[j] = t * x[j];
          } else {
            const double rho = std::min(t, 0.999) * std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, 2.0 * kPi);
            z[j] = rho * cplx{std::cos(th), std::sin(th)};
            rep.max_internal_modulus = std::max(rep.max_internal_modulus, rho);
          }
        }
        ++rep.witness_samples;
        if (koranyi_value_sq(x, z) > 1.0 * slack) ++rep.witness_violations;
      }
    }
  }
  return rep;
}

struct TraceReport {
  int samples = 0;
  int horocycle_disagreements = 0;
  int stolz_disagreements = 0;
  int boundary_flagged = 0;
  bool pass() const { return horocycle_disagreements == 0 && stolz_disagreements == 0; }
};

// zeta in E(1, R) iff phi_x(zeta) in E(x, R), and the same for the Stolz /
// Koranyi pair: the geodesic identifies the disk regions with their traces.
inline TraceReport geodesic_trace_check(const BoundaryPoint& x, double R, double M, int samples,
                                        Rng& rng) {
  TraceReport rep;
  const Horocycle E1{cplx{1.0, 0.0}, R};
  const StolzRegion H1{cplx{1.0, 0.0}, M};
  const Horosphere Ex{x, R};
  const KoranyiRegion Hx{x, M};
  for (int i = 0; i < samples; ++i) {
    cplx zeta;
    if (i % 8 == 7) {
      // on (or next to) the horocycle edge, where both verdicts must flip together
      const double th = rng.uniform(0.05, 2.0 * kPi - 0.05);
      zeta = cplx{1.0, 0.0} / (1.0 + R) +
             R / (1.0 + R) * cplx{std::cos(th), std::sin(th)};
    } else {
      const double rho = 0.999 * std::sqrt(rng.uniform());
      const double th = rng.uniform(0.0, 2.0 * kPi);
      zeta = rho * cplx{std::cos(th), std::sin(th)};
    }
    if (!(std::abs(zeta) < 1.0 - 1e-15)) continue;
    ++rep.samples;
    const std::vector<cplx> pz = x.geodesic(zeta);
    const Membership me_disk = horocycle_contains(E1, zeta);
    const Membership me_poly = horosphere_contains(Ex, pz);
    if (me_disk.boundary || me_poly.boundary)
      ++rep.boundary_flagged;
    else if (me_disk.inside != me_poly.inside)
      ++rep.horocycle_disagreements;
    const Membership mh_disk = stolz_contains(H1, zeta);
    const Membership mh_poly = koranyi_contains(Hx, pz);
    if (mh_disk.boundary || mh_poly.boundary)
      ++rep.boundary_flagged;
    else if (mh_disk.inside != mh_poly.inside)
      ++rep.stolz_disagreements;
  }
  return rep;
}

struct InclusionReport {
  int samples = 0;
  int applicable = 0;
  int violations = 0;
  bool pass() const { return violations == 0; }
};

// H(x, M) minus the Kobayashi ball of radius r = (1/2) log(M^2 / R) sits in
// E(x, R).
inline InclusionReport koranyi_horosphere_inclusion(const BoundaryPoint& x, double M, double R,
                                                    int samples, Rng& rng) {
  InclusionReport rep;
  const double r = 0.5 * std::log(M * M / R);
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, 1e-14, 0.25);
    ++rep.samples;
    const double k0 = omega_origin_from_one_minus(one_minus_sup_norm_delta(x, delta));
    if (k0 <= r) continue;
    ++rep.applicable;
    if (horosphere_value_delta(x, delta) >= R * (1.0 + 1e-9)) ++rep.violations;
  }
  return rep;
}

struct RatioBoundsReport {
  int samples = 0;
  int violations = 0;
  double min_modulus_ratio = std::numeric_limits<double>::infinity();
  double max_modulus_ratio = 0.0;
  bool pass() const { return violations == 0; }
};

// For z in H((1,1), M) in the bidisk the two coordinates approach the
// boundary at comparable rates: both (1-|z_2|)/(1-|z_1|) and |1-z_2|/|1-z_1|
// lie in [1/(2M^2), 2M^2].
inline RatioBoundsReport koranyi_coordinate_bounds(double M, int samples, Rng& rng) {
  RatioBoundsReport rep;
  const BoundaryPoint x = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
  const double hi = 2.0 * M * M * (1.0 + 1e-9);
  const double lo = 1.0 / (2.0 * M * M) * (1.0 - 1e-9);
  for (int i = 0; i < samples; ++i) {
    const std::vector<cplx> delta = sample_koranyi_delta(x, M, rng, 1e-13, 0.25);
    ++rep.samples;
    const double r1 = one_minus_abs_unit(delta[1]) / one_minus_abs_unit(delta[0]);
    const double r2 = std::abs(delta[1]) / std::abs(delta[0]);
    rep.min_modulus_ratio = std::min(rep.min_modulus_ratio, r2);
    rep.max_modulus_ratio = std::max(rep.max_modulus_ratio, r2);
    if (!(r1 >= lo && r1 <= hi && r2 >= lo && r2 <= hi)) ++rep.violations;
  }
  return rep;
}

}  // namespace polydisk
