#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "polydisk/holomap.hpp"
#include "polydisk/rng.hpp"

using namespace polydisk;

namespace {

std::vector<cplx> random_interior(std::size_t n, Rng& rng, double max_mod = 0.7) {
  std::vector<cplx> z(n);
  for (auto& c : z) {
    const double rho = max_mod * std::sqrt(rng.uniform());
    const double th = rng.uniform(0.0, 2.0 * kPi);
    c = rho * cplx{std::cos(th), std::sin(th)};
  }
  return z;
}

std::vector<HoloMap> whole_gallery() {
  std::vector<HoloMap> fs;
  fs.push_back(function_gallery("coordinate", FuncParams{{{"j", 1.0}}, {}, {}}, 2));
  fs.push_back(function_gallery("coordinate", FuncParams{{{"j", 2.0}}, {}, {}}, 2));
  FuncParams mono;
  mono.exponents = {2, 1};
  fs.push_back(function_gallery("monomial", mono, 2));
  fs.push_back(function_gallery("mean", {}, 2));
  fs.push_back(function_gallery("constant", {}, 2));
  fs.push_back(function_gallery("remark-2.1", {}, 2));
  fs.push_back(function_gallery("remark-2.3", FuncParams{{{"a", 0.5}}, {}, {}}, 2));
  fs.push_back(function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}}, 2));
  fs.push_back(function_gallery("section-5-g", {}, 1));
  fs.push_back(function_gallery("section-5-pair", {}, 2));
  return fs;
}

}  // namespace

TEST_CASE("remark 4.2 values") {
  const HoloMap f = function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const std::vector<cplx> z{cplx{0.5, 0.0}, cplx{0.5, 0.0}};
  CHECK_THAT(std::abs(f.eval_point_scalar(z) - cplx{0.6, 0.0}),
             Catch::Matchers::WithinAbs(0.0, 1e-15));
  CHECK_THROWS_AS(function_gallery("remark-4.2", FuncParams{{{"a", 0.4}, {"b", 0.8}}, {}, {}}),
                  std::invalid_argument);
}

TEST_CASE("remark 2.1 vanishes on the diagonal") {
  const HoloMap f = function_gallery("remark-2.1");
  for (double t : {0.1, 0.5, 0.9, 0.99}) {
    const std::vector<cplx> z{cplx{t, 0.0}, cplx{t, 0.0}};
    CHECK(std::abs(f.eval_point_scalar(z)) <= 1e-15);
  }
}

TEST_CASE("section 5 g has constant modulus and rotating argument") {
  const HoloMap g = function_gallery("section-5-g");
  double prev_arg = 0.0;
  for (int k = 4; k <= 40; k += 4) {
    const std::vector<cplx> z{cplx{1.0 - std::pow(2.0, -k), 0.0}};
    const cplx v = g.eval_point_scalar(z);
    CHECK_THAT(std::abs(v), Catch::Matchers::WithinRel(std::exp(-kPi / 2.0), 1e-12));
    const double a = std::arg(v);
    if (k > 4) CHECK(std::abs(a - prev_arg) > 0.1);  // keeps turning
    prev_arg = a;
  }
}

TEST_CASE("lemma 1.8 quotient construction") {
  const HoloMap f = function_gallery("remark-2.1");
  // same map built by hand gives f = 0 when alpha1 = alpha2
  HoloMap sqrt1(2, 1, [](std::span<const Dual> u, std::span<Dual> out) { out[0] = sqrt(u[0]); },
                "sqrt1");
  const HoloMap zero = lemma18_quotient(sqrt1, sqrt1);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::vector<cplx> z = random_interior(2, rng, 0.9);
    CHECK(std::abs(zero.eval_point_scalar(z)) == 0.0);
    CHECK(std::abs(f.eval_point_scalar(z)) < 1.0);
  }

  // sector violation: alpha with negative real part
  HoloMap bad(2, 1,
              [](std::span<const Dual> u, std::span<Dual> out) { out[0] = Dual{cplx{-1.0, 0.0}} + 0.0 * u[0]; },
              "bad");
  const HoloMap broken = lemma18_quotient(bad, sqrt1);
  const std::vector<cplx> z{cplx{0.3, 0.1}, cplx{0.2, 0.0}};
  CHECK_THROWS_AS(broken.eval_point(std::span<const cplx>(z)), HypothesisViolation);
}

TEST_CASE("explicit derivative values") {
  const HoloMap f42 =
      function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const std::vector<cplx> z{cplx{0.2, 0.3}, cplx{-0.4, 0.1}};
  const std::vector<cplx> e1{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  const std::vector<cplx> e2{cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  CHECK(std::abs(f42.directional_derivative(z, e1) - cplx{0.6, 0.0}) <= 1e-15);
  CHECK(std::abs(f42.directional_derivative(z, e2) - cplx{0.2, 0.0}) <= 1e-15);

  const HoloMap c1 = function_gallery("coordinate", FuncParams{{{"j", 1.0}}, {}, {}}, 2);
  CHECK(std::abs(c1.directional_derivative(z, e2)) == 0.0);
  CHECK(std::abs(c1.directional_derivative(z, e1) - cplx{1.0, 0.0}) == 0.0);
}

TEST_CASE("gallery maps advertised as bounded stay in the unit disk") {
  Rng rng(41);
  for (const HoloMap& f : whole_gallery()) {
    if (!f.bounded_into_unit()) continue;
    for (int i = 0; i < 2000; ++i) {
      const std::vector<cplx> z =
          random_interior(static_cast<std::size_t>(f.arity()), rng, 0.995);
      for (const cplx& v : f.eval_point(std::span<const cplx>(z))) {
        CHECK(std::abs(v) < 1.0);
      }
    }
  }
}

TEST_CASE("dual derivatives against central finite differences") {
  Rng rng(43);
  const double h = 1e-6;
  for (const HoloMap& f : whole_gallery()) {
    double worst = 0.0;
    for (int i = 0; i < 150; ++i) {
      const std::vector<cplx> z = random_interior(static_cast<std::size_t>(f.arity()), rng);
      for (int m = 0; m < f.codomain(); ++m) {
        for (std::size_t j = 0; j < z.size(); ++j) {
          std::vector<cplx> e(z.size(), cplx{0.0, 0.0});
          e[j] = cplx{1.0, 0.0};
          const cplx dual = f.directional_derivative(z, e, m);
          // real- and imaginary-direction central differences
          std::vector<cplx> zp = z, zm = z;
          zp[j] += h;
          zm[j] -= h;
          const cplx fd_re =
              (f.eval_point(std::span<const cplx>(zp))[static_cast<std::size_t>(m)] -
               f.eval_point(std::span<const cplx>(zm))[static_cast<std::size_t>(m)]) /
              (2.0 * h);
          zp = z;
          zm = z;
          zp[j] += cplx{0.0, h};
          zm[j] -= cplx{0.0, h};
          const cplx fd_im =
              (f.eval_point(std::span<const cplx>(zp))[static_cast<std::size_t>(m)] -
               f.eval_point(std::span<const cplx>(zm))[static_cast<std::size_t>(m)]) /
              (cplx{0.0, 2.0 * h});
          const double scale = std::max({1.0, std::abs(dual)});
          worst = std::max(worst, std::abs(dual - fd_re) / scale);
          worst = std::max(worst, std::abs(dual - fd_im) / scale);
        }
      }
    }
    INFO("map " << f.label());
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("holomorphy of directional derivatives") {
  // df(i v) = i df(v)
  Rng rng(47);
  for (const HoloMap& f : whole_gallery()) {
    for (int i = 0; i < 50; ++i) {
      const std::vector<cplx> z = random_interior(static_cast<std::size_t>(f.arity()), rng);
      std::vector<cplx> v(z.size());
      for (auto& c : v) {
        const double th = rng.uniform(0.0, 2.0 * kPi);
        c = cplx{std::cos(th), std::sin(th)};
      }
      std::vector<cplx> iv(v);
      for (auto& c : iv) c *= cplx{0.0, 1.0};
      const cplx a = f.directional_derivative(z, v);
      const cplx b = f.directional_derivative(z, iv);
      CHECK(std::abs(b - cplx{0.0, 1.0} * a) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("co-evaluation channel is exact in the small regime") {
  const BoundaryPoint corner = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
  const HoloMap f = function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const double eps = std::pow(2.0, -40);
  std::vector<cplx> delta{cplx{eps, 0.0}, cplx{eps, 0.0}};
  const EvalPoint p = EvalPoint::from_delta(corner, delta);
  const cplx h = f.tau_minus(cplx{1.0, 0.0}, p, corner);
  CHECK_THAT(std::abs(h), Catch::Matchers::WithinRel(0.8 * eps, 1e-12));

  // monomial z1^2 z2 at the corner: tau - z^k with k = (2,1)
  FuncParams mono;
  mono.exponents = {2, 1};
  const HoloMap m = function_gallery("monomial", mono, 2);
  const cplx hm = m.tau_minus(cplx{1.0, 0.0}, p, corner);
  CHECK_THAT(std::abs(hm), Catch::Matchers::WithinRel(3.0 * eps, 1e-9));

  // coordinate map at a mixed point: exact difference
  const BoundaryPoint mixed = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
  const HoloMap c1 = function_gallery("coordinate", FuncParams{{{"j", 1.0}}, {}, {}}, 2);
  const EvalPoint pm = EvalPoint::from_delta(mixed, {cplx{eps, 0.0}, cplx{0.3 * eps, 0.0}});
  CHECK(c1.tau_minus(cplx{1.0, 0.0}, pm, mixed) == cplx{eps, 0.0});
}

TEST_CASE("gallery registry") {
  CHECK_THROWS_AS(function_gallery("no-such-function"), std::invalid_argument);
  CHECK_THROWS_AS(function_gallery("remark-2.3", FuncParams{{{"a", 1.5}}, {}, {}}),
                  std::invalid_argument);
  CHECK(function_gallery_list().size() >= 9);

  // pair components keep their co-evaluators
  const HoloMap pair = function_gallery("section-5-pair");
  CHECK(pair.codomain() == 2);
  CHECK(pair.has_co_eval(0));
  CHECK_FALSE(pair.has_co_eval(1));
  const HoloMap first = component(pair, 0);
  CHECK(first.has_co_eval(0));
}
