#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "polydisk/hyperbolic.hpp"

namespace polydisk {

// Default tolerance deciding which components count as unimodular. A
// misclassification flips the whole downstream analysis, so callers can
// override and the CLI echoes the detected decomposition.
inline constexpr double kSilovTol = 1e-9;

// A boundary point of the polydisk together with its decomposition into the
// components of modulus one (its "Silov" components, normalized to modulus
// exactly 1) and the strictly interior rest.
class BoundaryPoint {
 public:
  static BoundaryPoint decompose(std::vector<cplx> coords, double tol = kSilovTol) {
    if (coords.empty()) throw std::invalid_argument("BoundaryPoint: dimension must be >= 1");
    double sup = 0.0;
    for (const cplx& c : coords) sup = std::max(sup, std::abs(c));
    if (std::abs(sup - 1.0) > tol)
      throw std::invalid_argument("BoundaryPoint: sup-norm must be within tol of 1");

    BoundaryPoint x;
    x.c_ = std::move(coords);
    x.adjustment_ = 0.0;
    for (std::size_t j = 0; j < x.c_.size(); ++j) {
      const double a = std::abs(x.c_[j]);
      if (a >= 1.0 - tol) {
        x.adjustment_ = std::max(x.adjustment_, std::abs(a - 1.0));
        x.c_[j] /= a;  // unimodular entries are stored with modulus exactly 1
        x.silov_.push_back(j);
      }
    }
    x.silov_part_.assign(x.c_.size(), cplx{0.0, 0.0});
    x.internal_part_ = x.c_;
    for (std::size_t j : x.silov_) {
      x.silov_part_[j] = x.c_[j];
      x.internal_part_[j] = cplx{0.0, 0.0};
    }
    return x;
  }

  std::size_t dim() const { return c_.size(); }
  const std::vector<cplx>& coords() const { return c_; }
  cplx operator[](std::size_t j) const { return c_[j]; }

  const std::vector<std::size_t>& silov_indices() const { return silov_; }
  std::size_t degree() const { return silov_.size(); }  // d_x
  const std::vector<cplx>& silov_part() const { return silov_part_; }      // x with internals zeroed
  const std::vector<cplx>& internal_part() const { return internal_part_; }
  bool is_silov(std::size_t j) const { return silov_part_[j] != cplx{0.0, 0.0}; }

  // Largest modulus correction applied while normalizing unimodular entries.
  double adjustment() const { return adjustment_; }

  // phi_x(zeta) = zeta * x, the geodesic through 0 hitting x radially.
  std::vector<cplx> geodesic(cplx zeta) const {
    if (!(std::abs(zeta) < 1.0))
      throw std::invalid_argument("geodesic: |zeta| must be < 1");
    std::vector<cplx> out(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) out[j] = zeta * c_[j];
    return out;
  }

  // Left inverse of phi_x: the mean of the unimodular-component projections,
  // (1/d_x) <z, silov part>.
  cplx left_inverse(std::span<const cplx> z) const {
    require_same_dim(z.size(), c_.size(), "left_inverse");
    cplx s{0.0, 0.0};
    for (std::size_t j : silov_) s += z[j] * std::conj(c_[j]);
    return s / static_cast<double>(silov_.size());
  }

  // p_x = phi_x of the left inverse; idempotent, fixes phi_x(disk) pointwise.
  std::vector<cplx> retraction(std::span<const cplx> z) const {
    const cplx t = left_inverse(z);
    std::vector<cplx> out(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) out[j] = t * c_[j];
    return out;
  }

  bool has_no_silov_components(std::span<const cplx> v, double tol = 1e-15) const {
    require_same_dim(v.size(), c_.size(), "has_no_silov_components");
    for (std::size_t j : silov_)
      if (std::abs(v[j]) > tol) return false;
    return true;
  }

 private:
  BoundaryPoint() = default;

  std::vector<cplx> c_;
  std::vector<std::size_t> silov_;
  std::vector<cplx> silov_part_;
  std::vector<cplx> internal_part_;
  double adjustment_ = 0.0;
};

}  // namespace polydisk
