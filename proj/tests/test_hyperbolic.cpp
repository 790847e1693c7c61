#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "polydisk/hyperbolic.hpp"
#include "polydisk/rng.hpp"

using namespace polydisk;

namespace {

Point random_point(std::size_t n, Rng& rng, double max_mod = 0.95) {
  std::vector<cplx> c(n);
  for (auto& z : c) {
    const double rho = max_mod * std::sqrt(rng.uniform());
    const double th = rng.uniform(0.0, 2.0 * kPi);
    z = rho * cplx{std::cos(th), std::sin(th)};
  }
  return Point(std::move(c));
}

}  // namespace

TEST_CASE("poincare distance basics") {
  const DiskPoint o{cplx{0.0, 0.0}};
  CHECK(poincare_distance(o, o) == 0.0);

  // omega(0, 1/2) = atanh(1/2) = (1/2) ln 3
  const DiskPoint half{cplx{0.5, 0.0}};
  CHECK_THAT(poincare_distance(o, half),
             Catch::Matchers::WithinAbs(0.5 * std::log(3.0), 1e-15));

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const double ra = 0.85 * std::sqrt(rng.uniform()), ta = rng.uniform(0.0, 2 * kPi);
    const double rb = 0.85 * std::sqrt(rng.uniform()), tb = rng.uniform(0.0, 2 * kPi);
    const DiskPoint a{ra * cplx{std::cos(ta), std::sin(ta)}};
    const DiskPoint b{rb * cplx{std::cos(tb), std::sin(tb)}};
    CHECK(std::abs(poincare_distance(a, b) - poincare_distance(b, a)) <= 1e-14);
  }

  CHECK_THROWS_AS(DiskPoint(cplx(1.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(DiskPoint(cplx(1.2, 0.0)), std::invalid_argument);
}

TEST_CASE("polydisk automorphism") {
  const Point z({cplx{0.5, 0.0}, cplx{0.0, 0.0}});
  const Point w({cplx{0.5, 0.0}, cplx{0.5, 0.0}});
  const std::vector<cplx> img = polydisk_automorphism(z, w);
  CHECK_THAT(std::abs(img[0]), Catch::Matchers::WithinAbs(0.0, 1e-16));
  CHECK_THAT(std::abs(img[1] - cplx{0.5, 0.0}), Catch::Matchers::WithinAbs(0.0, 1e-16));

  // gamma_z(z) = 0 and gamma_0 = id
  const std::vector<cplx> zero = polydisk_automorphism(z, z);
  for (const cplx& c : zero) CHECK(std::abs(c) == 0.0);
  const Point origin({cplx{0.0, 0.0}, cplx{0.0, 0.0}});
  const std::vector<cplx> same = polydisk_automorphism(origin, w);
  CHECK(same == w.coords());

  CHECK_THROWS_AS(polydisk_automorphism(z, Point({cplx{0.1, 0.0}})), std::invalid_argument);
}

TEST_CASE("kobayashi distance") {
  const Point origin({cplx{0.0, 0.0}, cplx{0.0, 0.0}});
  const Point z({cplx{0.5, 0.0}, cplx{0.0, 0.25}});
  CHECK(kobayashi_distance(origin, origin) == 0.0);
  CHECK_THAT(kobayashi_distance(origin, z),
             Catch::Matchers::WithinAbs(0.5 * std::log(3.0), 1e-15));

  // distance-decreasing under coordinate projections, argmax attains
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Point a = random_point(3, rng);
    const Point b = random_point(3, rng);
    const double k = kobayashi_distance(a, b);
    double m = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      const double w = poincare_distance(DiskPoint{a[j]}, DiskPoint{b[j]});
      CHECK(k >= w - 1e-13);
      m = std::max(m, w);
    }
    CHECK_THAT(k, Catch::Matchers::WithinAbs(m, 1e-13));
  }
}

TEST_CASE("kobayashi distance metric axioms and invariance") {
  Rng rng(17);
  double worst_triangle = 0.0, worst_invariance = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = (i % 2) ? 2 : 3;
    const Point a = random_point(n, rng);
    const Point b = random_point(n, rng);
    const Point c = random_point(n, rng);
    const double kab = kobayashi_distance(a, b);
    const double kbc = kobayashi_distance(b, c);
    const double kac = kobayashi_distance(a, c);
    worst_triangle = std::max(worst_triangle, kac - (kab + kbc));

    const Point base = random_point(n, rng, 0.9);
    const Point ga{polydisk_automorphism(base, a)};
    const Point gb{polydisk_automorphism(base, b)};
    worst_invariance = std::max(worst_invariance, std::abs(kobayashi_distance(ga, gb) - kab));
  }
  CHECK(worst_triangle <= 1e-12);
  CHECK(worst_invariance <= 1e-12);
}

TEST_CASE("kobayashi metric") {
  const Point origin({cplx{0.0, 0.0}, cplx{0.0, 0.0}});
  const Tangent v{{cplx{0.3, 0.4}, cplx{0.2, 0.0}}};
  CHECK_THAT(kobayashi_metric(origin, v), Catch::Matchers::WithinAbs(0.5, 1e-15));

  const Point z({cplx{0.5, 0.0}, cplx{0.0, 0.0}});
  const Tangent ones{{cplx{1.0, 0.0}, cplx{1.0, 0.0}}};
  CHECK_THAT(kobayashi_metric(z, ones), Catch::Matchers::WithinAbs(4.0 / 3.0, 1e-15));

  const Tangent zero{{cplx{0.0, 0.0}, cplx{0.0, 0.0}}};
  CHECK(kobayashi_metric(z, zero) == 0.0);

  // homogeneity
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Point p = random_point(2, rng);
    Tangent t{{cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)},
               cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)}}};
    const double lam = rng.uniform(0.0, 3.0);
    Tangent scaled = t;
    for (auto& c : scaled.v) c *= lam;
    CHECK(std::abs(kobayashi_metric(p, scaled) - lam * kobayashi_metric(p, t)) <= 1e-15 * 10);
  }
}

TEST_CASE("near-boundary helpers") {
  // z = x(1 - s) with s = 2^-40: the helpers keep full precision
  const double eps = std::pow(2.0, -40);
  const cplx s{eps, 0.0};
  CHECK_THAT(one_minus_abs_sq_unit(s), Catch::Matchers::WithinRel(2.0 * eps - eps * eps, 1e-15));
  CHECK_THAT(one_minus_abs_unit(s), Catch::Matchers::WithinRel(eps, 1e-12));

  // omega(0, 1 - m) against atanh at a moderate point
  CHECK_THAT(omega_origin_from_one_minus(0.5), Catch::Matchers::WithinAbs(std::atanh(0.5), 1e-15));
}
