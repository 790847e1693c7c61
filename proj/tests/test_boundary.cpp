#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "polydisk/boundary.hpp"
#include "polydisk/hyperbolic.hpp"
#include "polydisk/rng.hpp"

using namespace polydisk;

TEST_CASE("silov decomposition") {
  const BoundaryPoint x = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
  CHECK(x.degree() == 1);
  CHECK(x.silov_indices() == std::vector<std::size_t>{0});
  CHECK(x.silov_part()[0] == cplx{1.0, 0.0});
  CHECK(x.silov_part()[1] == cplx{0.0, 0.0});
  CHECK(x.internal_part()[0] == cplx{0.0, 0.0});
  CHECK(x.internal_part()[1] == cplx{0.3, 0.0});

  const cplx e{std::cos(kPi / 4), std::sin(kPi / 4)};
  const BoundaryPoint y = BoundaryPoint::decompose({cplx{1.0, 0.0}, e});
  CHECK(y.degree() == 2);
  for (std::size_t j = 0; j < 2; ++j) CHECK(y.internal_part()[j] == cplx{0.0, 0.0});

  // tolerance policy: 1 - 1e-12 counts as unimodular at tol 1e-9
  const BoundaryPoint z = BoundaryPoint::decompose({cplx{0.999999999999, 0.0}, cplx{0.2, 0.0}}, 1e-9);
  CHECK(z.degree() == 1);
  CHECK(z[0] == cplx{1.0, 0.0});
  CHECK(z.adjustment() > 0.0);

  CHECK_THROWS_AS(BoundaryPoint::decompose({cplx{0.5, 0.0}, cplx{0.2, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BoundaryPoint::decompose({cplx{1.1, 0.0}}), std::invalid_argument);

  // <x, silov part> = d_x
  cplx ip{0.0, 0.0};
  for (std::size_t j = 0; j < 2; ++j) ip += y[j] * std::conj(y.silov_part()[j]);
  CHECK_THAT(std::abs(ip - cplx{2.0, 0.0}), Catch::Matchers::WithinAbs(0.0, 1e-15));
}

TEST_CASE("geodesic") {
  const BoundaryPoint x = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
  const std::vector<cplx> at_half = x.geodesic(cplx{0.5, 0.0});
  CHECK(at_half[0] == cplx{0.5, 0.0});
  CHECK(at_half[1] == cplx{0.15, 0.0});
  for (const cplx& c : x.geodesic(cplx{0.0, 0.0})) CHECK(c == cplx{0.0, 0.0});

  // isometry onto its trace
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const double r1 = 0.99 * std::sqrt(rng.uniform()), t1 = rng.uniform(0.0, 2 * kPi);
    const double r2 = 0.99 * std::sqrt(rng.uniform()), t2 = rng.uniform(0.0, 2 * kPi);
    const cplx z1 = r1 * cplx{std::cos(t1), std::sin(t1)};
    const cplx z2 = r2 * cplx{std::cos(t2), std::sin(t2)};
    const double omega = poincare_distance(DiskPoint{z1}, DiskPoint{z2});
    const double k = kobayashi_distance(Point{x.geodesic(z1)}, Point{x.geodesic(z2)});
    CHECK(std::abs(omega - k) <= 1e-13);
  }
}

TEST_CASE("left inverse and retraction") {
  const BoundaryPoint corner = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
  const std::vector<cplx> z{cplx{0.2, 0.0}, cplx{0.4, 0.0}};
  CHECK_THAT(std::abs(corner.left_inverse(z) - cplx{0.3, 0.0}),
             Catch::Matchers::WithinAbs(0.0, 1e-16));
  const std::vector<cplx> pz = corner.retraction(z);
  CHECK_THAT(std::abs(pz[0] - cplx{0.3, 0.0}), Catch::Matchers::WithinAbs(0.0, 1e-16));
  CHECK_THAT(std::abs(pz[1] - cplx{0.3, 0.0}), Catch::Matchers::WithinAbs(0.0, 1e-16));

  const BoundaryPoint x = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
  const std::vector<cplx> w{cplx{0.1, 0.2}, cplx{-0.4, 0.1}};
  CHECK(x.left_inverse(w) == w[0]);  // d_x = 1 keeps the first coordinate

  // p~_x(phi_x(zeta)) = zeta
  CHECK_THAT(std::abs(x.left_inverse(x.geodesic(cplx{0.0, 0.7})) - cplx{0.0, 0.7}),
             Catch::Matchers::WithinAbs(0.0, 1e-16));

  // left inverse is a contraction for the sup norm, and p_x is idempotent
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<cplx> p(2);
    for (auto& c : p) {
      const double rho = 0.999 * std::sqrt(rng.uniform());
      const double th = rng.uniform(0.0, 2 * kPi);
      c = rho * cplx{std::cos(th), std::sin(th)};
    }
    CHECK(std::abs(corner.left_inverse(p)) <= std::max(std::abs(p[0]), std::abs(p[1])) + 1e-15);
    const std::vector<cplx> once = corner.retraction(p);
    const std::vector<cplx> twice = corner.retraction(once);
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(twice[j] - once[j]) <= 1e-15);
  }

  // p~ o phi = id on a dense grid
  double worst = 0.0;
  for (int a = -9; a <= 9; ++a)
    for (int b = -9; b <= 9; ++b) {
      const cplx zeta{a / 10.0, b / 10.0};
      if (std::abs(zeta) >= 1.0) continue;
      worst = std::max(worst, std::abs(corner.left_inverse(corner.geodesic(zeta)) - zeta));
    }
  CHECK(worst <= 1e-14);

  CHECK_THROWS_AS(x.left_inverse(std::vector<cplx>{cplx{0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("silov components of tangent vectors") {
  const BoundaryPoint x = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
  CHECK(x.has_no_silov_components(std::vector<cplx>{cplx{0.0, 0.0}, cplx{5.0, 0.0}}));
  CHECK_FALSE(x.has_no_silov_components(std::vector<cplx>{cplx{1e-10, 0.0}, cplx{0.0, 0.0}}));

  const BoundaryPoint torus = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{-1.0, 0.0}});
  CHECK_FALSE(torus.has_no_silov_components(std::vector<cplx>{cplx{0.0, 1e-3}, cplx{0.0, 0.0}}));
  CHECK(torus.has_no_silov_components(std::vector<cplx>{cplx{0.0, 0.0}, cplx{0.0, 0.0}}));
}
