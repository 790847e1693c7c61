#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polydisk/dual.hpp"

namespace polydisk {

// Constructors accept sup-norm up to 1 - kDefaultMargin. Sampled curves get
// as close as 1 - 2^-40 to the boundary, so the margin must stay well below
// that.
inline constexpr double kDefaultMargin = 1e-15;

// --- near-boundary helpers ------------------------------------------------
//
// Points close to the unit circle are handled in the representation
// z = x (1 - s) with |x| = 1 and s small. Forming |z| first and subtracting
// from 1 would throw away everything below ~1e-16.

// 1 - |z|^2 for z = x(1 - s), |x| = 1.
inline double one_minus_abs_sq_unit(cplx s) { return 2.0 * s.real() - std::norm(s); }

// 1 - |z| for z = x(1 - s), |x| = 1.
inline double one_minus_abs_unit(cplx s) {
  return one_minus_abs_sq_unit(s) / (1.0 + std::abs(1.0 - s));
}

// 1 - |z|^2 evaluated as (1 - |z|)(1 + |z|).
inline double one_minus_abs_sq(double abs_z) { return (1.0 - abs_z) * (1.0 + abs_z); }

// omega(0, z) given m = 1 - |z|; exact where atanh(|z|) would see |z|
// rounded to 1.
inline double omega_origin_from_one_minus(double m) {
  return 0.5 * (std::log(2.0 - m) - std::log(m));
}

// --- domain types -----------------------------------------------------------

class DiskPoint {
 public:
  explicit DiskPoint(cplx value, double margin = kDefaultMargin) : value_(value) {
    if (!(std::abs(value) <= 1.0 - margin))
      throw std::invalid_argument("DiskPoint: modulus must be < 1");
  }
  cplx value() const { return value_; }

 private:
  cplx value_;
};

class Point {
 public:
  explicit Point(std::vector<cplx> coords, double margin = kDefaultMargin)
      : c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("Point: dimension must be >= 1");
    for (const cplx& z : c_)
      if (!(std::abs(z) <= 1.0 - margin))
        throw std::invalid_argument("Point: sup-norm must be < 1");
  }

  std::size_t dim() const { return c_.size(); }
  const std::vector<cplx>& coords() const { return c_; }
  cplx operator[](std::size_t j) const { return c_[j]; }

  double sup_norm() const {
    double m = 0.0;
    for (const cplx& z : c_) m = std::max(m, std::abs(z));
    return m;
  }

 private:
  std::vector<cplx> c_;
};

struct Tangent {
  std::vector<cplx> v;

  std::size_t dim() const { return v.size(); }
  double sup_norm() const {
    double m = 0.0;
    for (const cplx& c : v) m = std::max(m, std::abs(c));
    return m;
  }
};

// --- distances and metric ---------------------------------------------------

inline cplx disk_automorphism(cplx base, cplx w) {
  return (w - base) / (1.0 - std::conj(base) * w);
}

// omega(a, b) = atanh |(b-a)/(1 - conj(a) b)|.
inline double poincare_distance(const DiskPoint& a, const DiskPoint& b) {
  return std::atanh(std::abs(disk_automorphism(a.value(), b.value())));
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline std::vector<cplx> polydisk_automorphism(const Point& z, const Point& w) {
  require_same_dim(z.dim(), w.dim(), "polydisk_automorphism");
  std::vector<cplx> out(z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) out[j] = disk_automorphism(z[j], w[j]);
  return out;
}

// k(z, w) = max_j omega(z_j, w_j).
inline double kobayashi_distance(const Point& z, const Point& w) {
  require_same_dim(z.dim(), w.dim(), "kobayashi_distance");
  double m = 0.0;
  for (std::size_t j = 0; j < z.dim(); ++j)
    m = std::max(m, std::abs(disk_automorphism(z[j], w[j])));
  return std::atanh(m);
}

// kappa(z; v) = max_j |v_j| / (1 - |z_j|^2).
inline double kobayashi_metric(const Point& z, const Tangent& v) {
  require_same_dim(z.dim(), v.dim(), "kobayashi_metric");
  double m = 0.0;
  for (std::size_t j = 0; j < z.dim(); ++j)
    m = std::max(m, std::abs(v.v[j]) / one_minus_abs_sq(std::abs(z[j])));
  return m;
}

}  // namespace polydisk
