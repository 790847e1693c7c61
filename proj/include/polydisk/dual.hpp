#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace polydisk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// First-order dual number over the complex field: v + d*delta with
// delta^2 = 0. Evaluating a holomorphic expression on Dual inputs propagates
// the exact first derivative (forward mode). This stays usable at curve
// parameters as small as 2^-40, where finite differencing has no digits left.
struct Dual {
  cplx v{0.0, 0.0};  // value
  cplx d{0.0, 0.0};  // derivative part

  Dual() = default;
  Dual(double value) : v(value) {}
  Dual(cplx value) : v(value) {}
  Dual(cplx value, cplx deriv) : v(value), d(deriv) {}
};

inline Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }

inline Dual operator*(const Dual& a, const Dual& b) {
  return {a.v * b.v, a.v * b.d + a.d * b.v};
}

inline Dual operator/(const Dual& a, const Dual& b) {
  const cplx q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

inline Dual operator+(const Dual& a, cplx c) { return {a.v + c, a.d}; }
inline Dual operator+(cplx c, const Dual& a) { return {c + a.v, a.d}; }
inline Dual operator-(const Dual& a, cplx c) { return {a.v - c, a.d}; }
inline Dual operator-(cplx c, const Dual& a) { return {c - a.v, -a.d}; }
inline Dual operator*(const Dual& a, cplx c) { return {a.v * c, a.d * c}; }
inline Dual operator*(cplx c, const Dual& a) { return {c * a.v, c * a.d}; }
inline Dual operator/(const Dual& a, cplx c) { return {a.v / c, a.d / c}; }
inline Dual operator/(cplx c, const Dual& a) {
  const cplx q = c / a.v;
  return {q, -q * a.d / a.v};
}
inline Dual operator*(const Dual& a, double c) { return {a.v * c, a.d * c}; }
inline Dual operator*(double c, const Dual& a) { return {c * a.v, c * a.d}; }
inline Dual operator/(const Dual& a, double c) { return {a.v / c, a.d / c}; }
inline Dual operator/(double c, const Dual& a) { return cplx{c, 0.0} / a; }
inline Dual operator+(const Dual& a, double c) { return {a.v + c, a.d}; }
inline Dual operator+(double c, const Dual& a) { return {c + a.v, a.d}; }
inline Dual operator-(const Dual& a, double c) { return {a.v - c, a.d}; }
inline Dual operator-(double c, const Dual& a) { return {c - a.v, -a.d}; }

inline Dual exp(const Dual& a) {
  const cplx e = std::exp(a.v);
  return {e, e * a.d};
}

inline Dual log(const Dual& a) { return {std::log(a.v), a.d / a.v}; }

// Principal branch throughout; callers keep arguments away from the cut.
inline Dual pow(const Dual& a, double c) {
  const cplx p = std::pow(a.v, c);
  return {p, c * p / a.v * a.d};
}

inline Dual sqrt(const Dual& a) {
  const cplx s = std::sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}

inline Dual pow_int(const Dual& a, int n) {
  Dual r{cplx{1.0, 0.0}};
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

// 1 - prod_j (1 - s_j)^{k_j} accumulated in small arithmetic: with
// P = 1 - A the running product, (1-A)(1-s) = 1 - (A + s - A*s). Accurate for
// small s_j where forming the product and subtracting from 1 would cancel.
inline Dual one_minus_product_pow(std::span<const Dual> s, std::span<const int> k) {
  Dual acc{cplx{0.0, 0.0}};
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (int i = 0; i < k[j]; ++i) acc = acc + s[j] - acc * s[j];
  }
  return acc;
}

inline cplx one_minus_product_pow(std::span<const cplx> s, std::span<const int> k) {
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (int i = 0; i < k[j]; ++i) acc = acc + s[j] - acc * s[j];
  }
  return acc;
}

}  // namespace polydisk
