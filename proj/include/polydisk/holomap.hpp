#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydisk/boundary.hpp"
#include "polydisk/dual.hpp"
#include "polydisk/errors.hpp"

namespace polydisk {

struct HoloMapExpectation {
  std::optional<double> alpha;
  std::optional<cplx> tau;
  std::string notes;
};

// Boundary mass of the positive-real-part representation of (tau+f)/(tau-f),
// attached to entries where it is known in closed form.
struct HerglotzMass {
  std::vector<int> index;
  double mass;
};

// A near-boundary evaluation site z = x - delta, carrying the exact deltas
// and the one-minus coordinates u_j = 1 - z_j = (1 - x_j) + delta_j.
struct EvalPoint {
  std::vector<cplx> delta;
  std::vector<cplx> u;

  static EvalPoint from_delta(const BoundaryPoint& x, std::vector<cplx> d) {
    EvalPoint p;
    p.u.resize(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) p.u[j] = (1.0 - x[j]) + d[j];
    p.delta = std::move(d);
    return p;
  }
};

// An evaluable holomorphic map. The primary evaluator works in one-minus
// coordinates u_j = 1 - z_j on complex dual numbers, so curves can feed it
// exact near-boundary data and derivatives come out exact. An optional
// co-evaluator computes tau - f(z) directly from (u, delta); without it that
// difference would lose all digits once f is within 1e-13 of its boundary
// limit.
class HoloMap {
 public:
  using Eval = std::function<void(std::span<const Dual>, std::span<Dual>)>;
  using CoEval = std::function<cplx(cplx, std::span<const cplx>, std::span<const cplx>,
                                    const BoundaryPoint&)>;

  HoloMap(int arity, int codomain, Eval eval, std::string label)
      : arity_(arity), codomain_(codomain), eval_(std::move(eval)), label_(std::move(label)) {
    co_.resize(static_cast<std::size_t>(codomain));
  }

  int arity() const { return arity_; }
  int codomain() const { return codomain_; }
  const std::string& label() const { return label_; }

  bool bounded_into_unit() const { return bounded_unit_; }
  HoloMap& set_bounded(bool b) {
    bounded_unit_ = b;
    return *this;
  }

  const HoloMapExpectation& expectation() const { return expect_; }
  HoloMap& set_expectation(HoloMapExpectation e) {
    expect_ = std::move(e);
    return *this;
  }

  const std::vector<HerglotzMass>& known_masses() const { return masses_; }
  HoloMap& set_known_masses(std::vector<HerglotzMass> m) {
    masses_ = std::move(m);
    return *this;
  }

  HoloMap& set_co_eval(CoEval c, int component = 0) {
    co_[static_cast<std::size_t>(component)] = std::move(c);
    return *this;
  }
  bool has_co_eval(int component = 0) const {
    return static_cast<bool>(co_[static_cast<std::size_t>(component)]);
  }

  std::vector<Dual> eval_u(std::span<const Dual> u) const {
    if (static_cast<int>(u.size()) != arity_)
      throw std::invalid_argument("HoloMap '" + label_ + "': arity mismatch");
    std::vector<Dual> out(static_cast<std::size_t>(codomain_));
    eval_(u, out);
    return out;
  }

  Dual eval_u_scalar(std::span<const Dual> u) const { return eval_u(u)[0]; }

  std::vector<cplx> eval_point(std::span<const cplx> z) const {
    std::vector<Dual> u(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) u[j] = Dual{1.0 - z[j]};
    const std::vector<Dual> out = eval_u(u);
    std::vector<cplx> v(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) v[i] = out[i].v;
    return v;
  }

  cplx eval_point_scalar(std::span<const cplx> z) const { return eval_point(z)[0]; }

  // tau - f(z) at z = x - delta; exact in the small regime when the entry
  // carries a co-evaluator, else the plain difference.
  cplx tau_minus(cplx tau, const EvalPoint& p, const BoundaryPoint& x,
                 int component = 0) const {
    const CoEval& co = co_[static_cast<std::size_t>(component)];
    if (co) return co(tau, p.u, p.delta, x);
    std::vector<Dual> u(p.u.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = Dual{p.u[j]};
    return tau - eval_u(u)[static_cast<std::size_t>(component)].v;
  }

  // df_z(v) = sum_j v_j df/dz_j, exact via dual seeds (u = 1 - z, so du = -dz).
  cplx directional_derivative(std::span<const cplx> z, std::span<const cplx> v,
                              int component = 0) const {
    if (z.size() != v.size())
      throw std::invalid_argument("directional_derivative: dimension mismatch");
    std::vector<Dual> u(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) u[j] = Dual{1.0 - z[j], -v[j]};
    return eval_u(u)[static_cast<std::size_t>(component)].d;
  }

 private:
  int arity_;
  int codomain_;
  Eval eval_;
  std::vector<CoEval> co_;
  std::string label_;
  bool bounded_unit_ = false;
  HoloMapExpectation expect_;
  std::vector<HerglotzMass> masses_;
};

// Extract one component of a vector-valued map, keeping its co-evaluator.
inline HoloMap component(const HoloMap& f, int idx) {
  HoloMap g(f.arity(), 1,
            [f, idx](std::span<const Dual> u, std::span<Dual> out) {
              out[0] = f.eval_u(u)[static_cast<std::size_t>(idx)];
            },
            f.label() + "[" + std::to_string(idx) + "]");
  g.set_bounded(f.bounded_into_unit());
  if (f.has_co_eval(idx))
    g.set_co_eval([f, idx](cplx tau, std::span<const cplx> u, std::span<const cplx> delta,
                           const BoundaryPoint& x) {
      EvalPoint p;
      p.u.assign(u.begin(), u.end());
      p.delta.assign(delta.begin(), delta.end());
      return f.tau_minus(tau, p, x, idx);
    });
  return g;
}

// f = (a1 - a2)/(a1 + a2) for scalar maps with values in the sector
// Re > |Im|; then |f| < 1. Both conditions are checked at every evaluation.
inline HoloMap lemma18_quotient(const HoloMap& a1, const HoloMap& a2) {
  if (a1.arity() != a2.arity() || a1.codomain() != 1 || a2.codomain() != 1)
    throw std::invalid_argument("lemma18_quotient: needs two scalar maps of equal arity");
  const auto sector = [](cplx v, const char* which) {
    if (!(v.real() > std::abs(v.imag())))
      throw HypothesisViolation(std::string("lemma18_quotient: sector condition fails for ") +
                                which);
  };
  HoloMap f(
      a1.arity(), 1,
      [a1, a2, sector](std::span<const Dual> u, std::span<Dual> out) {
        const Dual A = a1.eval_u_scalar(u);
        const Dual B = a2.eval_u_scalar(u);
        sector(A.v, "a1");
        sector(B.v, "a2");
        const Dual q = (A - B) / (A + B);
        if (!(std::abs(q.v) < 1.0))
          throw HypothesisViolation("lemma18_quotient: |f| >= 1 at an evaluated point");
        out[0] = q;
      },
      "(" + a1.label() + " - " + a2.label() + ")/(" + a1.label() + " + " + a2.label() + ")");
  f.set_bounded(true);
  // tau - f = ((tau-1) a1 + (tau+1) a2) / (a1 + a2), exact in the small regime
  f.set_co_eval([a1, a2](cplx tau, std::span<const cplx> u, std::span<const cplx>,
                         const BoundaryPoint&) {
    std::vector<Dual> ud(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) ud[j] = Dual{u[j]};
    const cplx A = a1.eval_u_scalar(ud).v;
    const cplx B = a2.eval_u_scalar(ud).v;
    return ((tau - 1.0) * A + (tau + 1.0) * B) / (A + B);
  });
  return f;
}

// --- gallery -------------------------------------------------------------------

struct FuncParams {
  std::map<std::string, double> scalars;
  std::vector<int> exponents;  // for "monomial"
  cplx constant{0.5, 0.0};     // for "constant"
};

namespace detail {

inline double get_param(const FuncParams& p, const char* key,
                        std::optional<double> fallback = std::nullopt) {
  auto it = p.scalars.find(key);
  if (it != p.scalars.end()) return it->second;
  if (fallback) return *fallback;
  throw std::invalid_argument(std::string("function gallery: missing parameter '") + key +
                              "'");
}

inline HoloMap make_coordinate(int arity, int j1) {
  if (j1 < 1 || j1 > arity)
    throw std::invalid_argument("coordinate: index out of range");
  const std::size_t j = static_cast<std::size_t>(j1 - 1);
  HoloMap f(
      arity, 1,
      [j](std::span<const Dual> u, std::span<Dual> out) { out[0] = 1.0 - u[j]; },
      "coordinate-" + std::to_string(j1));
  f.set_bounded(true);
  f.set_co_eval([j](cplx tau, std::span<const cplx>, std::span<const cplx> delta,
                    const BoundaryPoint& x) { return (tau - x[j]) + delta[j]; });
  f.set_known_masses({HerglotzMass{
      [&] {
        std::vector<int> k(static_cast<std::size_t>(arity), 0);
        k[j] = 1;
        return k;
      }(),
      1.0}});
  HoloMapExpectation e;
  e.alpha = 1.0;
  e.notes = "1-Julia at any x whose component " + std::to_string(j1) + " is unimodular";
  f.set_expectation(e);
  return f;
}

inline HoloMap make_monomial(std::vector<int> k) {
  int total = 0;
  for (int kj : k) {
    if (kj < 0) throw std::invalid_argument("monomial: exponents must be >= 0");
    total += kj;
  }
  if (total < 1) throw std::invalid_argument("monomial: needs a positive total degree");
  std::string label = "monomial";
  for (int kj : k) label += "-" + std::to_string(kj);
  HoloMap f(
      static_cast<int>(k.size()), 1,
      [k](std::span<const Dual> u, std::span<Dual> out) {
        Dual prod{cplx{1.0, 0.0}};
        for (std::size_t j = 0; j < k.size(); ++j) prod = prod * pow_int(1.0 - u[j], k[j]);
        out[0] = prod;
      },
      label);
  f.set_bounded(true);
  f.set_co_eval([k](cplx tau, std::span<const cplx>, std::span<const cplx> delta,
                    const BoundaryPoint& x) {
    // z^k = x_S^k (1 - A) * F with A accumulated from the unimodular factors
    // and F the plain product of the internal ones.
    std::vector<cplx> s;
    std::vector<int> ks;
    cplx head{1.0, 0.0};
    cplx internal{1.0, 0.0};
    bool has_internal = false;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      if (x.is_silov(j)) {
        s.push_back(std::conj(x[j]) * delta[j]);
        ks.push_back(k[j]);
        for (int i = 0; i < k[j]; ++i) head *= x[j];
      } else {
        has_internal = true;
        for (int i = 0; i < k[j]; ++i) internal *= (x[j] - delta[j]);
      }
    }
    const cplx A = one_minus_product_pow(std::span<const cplx>(s),
                                         std::span<const int>(ks));
    if (!has_internal) return (tau - head) + head * A;
    return (tau - head * internal) + head * internal * A;
  });
  const int g = std::accumulate(k.begin(), k.end(), 0,
                                [](int a, int b) { return b == 0 ? a : std::gcd(a, b); });
  std::vector<int> primitive(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) primitive[j] = k[j] / g;
  f.set_known_masses({HerglotzMass{primitive, 1.0 / g}});
  HoloMapExpectation e;
  e.alpha = static_cast<double>(total);
  e.notes = "Julia with coefficient equal to the total degree at unimodular support";
  f.set_expectation(e);
  return f;
}

inline HoloMap make_mean(int arity) {
  HoloMap f(
      arity, 1,
      [arity](std::span<const Dual> u, std::span<Dual> out) {
        Dual acc{cplx{0.0, 0.0}};
        for (const Dual& uj : u) acc = acc + uj;
        out[0] = 1.0 - acc / static_cast<double>(arity);
      },
      "mean");
  f.set_bounded(true);
  f.set_co_eval([arity](cplx tau, std::span<const cplx> u, std::span<const cplx>,
                        const BoundaryPoint&) {
    cplx acc{0.0, 0.0};
    for (const cplx& uj : u) acc += uj;
    return (tau - 1.0) + acc / static_cast<double>(arity);
  });
  HoloMapExpectation e;
  e.alpha = 1.0;
  e.tau = cplx{1.0, 0.0};
  e.notes = "1-Julia at the corner (1,...,1)";
  f.set_expectation(e);
  return f;
}

inline HoloMap make_constant(int arity, cplx c) {
  if (!(std::abs(c) < 1.0))
    throw std::invalid_argument("constant: value must lie in the unit disk");
  HoloMap f(
      arity, 1, [c](std::span<const Dual>, std::span<Dual> out) { out[0] = Dual{c}; },
      "constant");
  f.set_bounded(true);
  HoloMapExpectation e;
  e.notes = "no Julia condition holds (the coefficient diverges)";
  f.set_expectation(e);
  return f;
}

inline HoloMap make_remark_42(double a, double b) {
  if (!(0.0 < b && b < a && a < 1.0))
    throw std::invalid_argument("remark-4.2: needs 0 < b < a < 1");
  const double c1 = 0.5 * (a + b);
  const double c2 = 0.5 * (a - b);
  HoloMap f(
      2, 1,
      [c1, c2](std::span<const Dual> u, std::span<Dual> out) {
        out[0] = 1.0 - c1 * u[0] - c2 * u[1];
      },
      "remark-4.2");
  f.set_bounded(true);
  f.set_co_eval([c1, c2](cplx tau, std::span<const cplx> u, std::span<const cplx>,
                         const BoundaryPoint&) {
    return (tau - 1.0) + c1 * u[0] + c2 * u[1];
  });
  HoloMapExpectation e;
  e.alpha = a;
  e.tau = cplx{1.0, 0.0};
  e.notes = "a-Julia at (1,1); df/dz_1 is constant (a+b)/2 while df/dx is constant a";
  f.set_expectation(e);
  return f;
}

inline HoloMap fractional_power_map(int arity, int j1, double exponent, std::string label) {
  const std::size_t j = static_cast<std::size_t>(j1 - 1);
  return HoloMap(
      arity, 1,
      [j, exponent](std::span<const Dual> u, std::span<Dual> out) {
        out[0] = pow(u[j], exponent);
      },
      std::move(label));
}

inline HoloMap make_remark_21() {
  HoloMap f = lemma18_quotient(fractional_power_map(2, 1, 0.5, "(1-z1)^(1/2)"),
                               fractional_power_map(2, 2, 0.5, "(1-z2)^(1/2)"));
  HoloMap g(2, 1, [f](std::span<const Dual> u, std::span<Dual> out) { out[0] = f.eval_u_scalar(u); },
            "remark-2.1");
  g.set_bounded(true);
  g.set_co_eval([f](cplx tau, std::span<const cplx> u, std::span<const cplx> delta,
                    const BoundaryPoint& x) {
    EvalPoint p;
    p.u.assign(u.begin(), u.end());
    p.delta.assign(delta.begin(), delta.end());
    return f.tau_minus(tau, p, x, 0);
  });
  HoloMapExpectation e;
  e.notes = "restricted K-limit 0 at (1,1) but no K-limit there";
  g.set_expectation(e);
  return g;
}

inline HoloMap make_remark_23(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("remark-2.3: exponent must lie in (0,1)");
  HoloMap f = lemma18_quotient(fractional_power_map(2, 1, a / 2.0, "(1-z1)^(a/2)"),
                               fractional_power_map(2, 2, 0.5, "(1-z2)^(1/2)"));
  HoloMap g(2, 1, [f](std::span<const Dual> u, std::span<Dual> out) { out[0] = f.eval_u_scalar(u); },
            "remark-2.3");
  g.set_bounded(true);
  g.set_co_eval([f](cplx tau, std::span<const cplx> u, std::span<const cplx> delta,
                    const BoundaryPoint& x) {
    EvalPoint p;
    p.u.assign(u.begin(), u.end());
    p.delta.assign(delta.begin(), delta.end());
    return f.tau_minus(tau, p, x, 0);
  });
  HoloMapExpectation e;
  e.notes = "K-limit 1 at (1,1) but no restricted E-limit there";
  g.set_expectation(e);
  return g;
}

// g(zeta) = exp(-pi/2 - i log(1 - zeta)): constant modulus exp(-pi/2) on the
// radius, rotating argument, hence no limit along t -> 1.
inline Dual section5_g(const Dual& u) {
  return exp(cplx{-kPi / 2.0, 0.0} - cplx{0.0, 1.0} * log(u));
}

inline HoloMap make_section5_g() {
  HoloMap f(
      1, 1, [](std::span<const Dual> u, std::span<Dual> out) { out[0] = section5_g(u[0]); },
      "section-5-g");
  f.set_bounded(true);
  HoloMapExpectation e;
  e.notes = "modulus constant exp(-pi/2); no radial limit at 1";
  f.set_expectation(e);
  return f;
}

inline HoloMap make_section5_pair() {
  HoloMap f(
      2, 2,
      [](std::span<const Dual> u, std::span<Dual> out) {
        out[0] = 1.0 - u[0];
        out[1] = 0.5 * section5_g(u[1]);
      },
      "section-5-pair");
  f.set_bounded(true);
  f.set_co_eval([](cplx tau, std::span<const cplx>, std::span<const cplx> delta,
                   const BoundaryPoint& x) { return (tau - x[0]) + delta[0]; },
                0);
  HoloMapExpectation e;
  e.notes = "(z1, g(z2)/2): first component 1-Julia, second with no radial limit";
  f.set_expectation(e);
  return f;
}

}  // namespace detail

struct FuncGalleryEntry {
  std::string name;
  std::string params;
  std::string expected;
};

inline std::vector<FuncGalleryEntry> function_gallery_list() {
  return {
      {"coordinate", "j (1-based); arity from the point", "1-Julia wherever |x_j| = 1"},
      {"monomial", "k=k1,k2,... nonnegative integers",
       "Julia with coefficient |k| on unimodular support"},
      {"mean", "", "1-Julia at the corner (1,...,1)"},
      {"constant", "c complex, |c| < 1", "no Julia condition (coefficient diverges)"},
      {"remark-2.1", "", "restricted K-limit 0 at (1,1), no K-limit"},
      {"remark-2.3", "a in (0,1)", "K-limit 1 at (1,1), no restricted E-limit"},
      {"remark-4.2", "a, b with 0 < b < a < 1",
       "a-Julia at (1,1); df/dz_1 = (a+b)/2 differs from the incremental-ratio limit a"},
      {"section-5-g", "", "scalar on the disk; no radial limit at 1"},
      {"section-5-pair", "", "(z1, g(z2)/2) into the bidisk"},
  };
}

inline HoloMap function_gallery(const std::string& name, const FuncParams& p = {},
                                int arity = 2) {
  using namespace detail;
  if (name == "coordinate") return make_coordinate(arity, static_cast<int>(get_param(p, "j", 1.0)));
  if (name.rfind("coordinate-", 0) == 0)
    return make_coordinate(arity, std::stoi(name.substr(11)));
  if (name == "monomial") {
    if (p.exponents.empty())
      throw std::invalid_argument("monomial: needs exponents k=k1,k2,...");
    return make_monomial(p.exponents);
  }
  if (name == "mean") return make_mean(arity);
  if (name == "constant") return make_constant(arity, p.constant);
  if (name == "remark-2.1") return make_remark_21();
  if (name == "remark-2.3") return make_remark_23(get_param(p, "a"));
  if (name == "remark-4.2") return make_remark_42(get_param(p, "a"), get_param(p, "b"));
  if (name == "section-5-g") return make_section5_g();
  if (name == "section-5-pair") return make_section5_pair();
  throw std::invalid_argument("function gallery: unknown function '" + name + "'");
}

}  // namespace polydisk
