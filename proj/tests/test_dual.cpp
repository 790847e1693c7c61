#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "polydisk/dual.hpp"
#include "polydisk/rng.hpp"

using namespace polydisk;

namespace {

cplx random_cplx(Rng& rng, double max_mod = 1.0) {
  const double rho = max_mod * std::sqrt(rng.uniform());
  const double th = rng.uniform(0.0, 2.0 * kPi);
  return rho * cplx{std::cos(th), std::sin(th)};
}

}  // namespace

TEST_CASE("dual ring axioms") {
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const Dual a{random_cplx(rng), random_cplx(rng)};
    const Dual b{random_cplx(rng), random_cplx(rng)};
    const Dual ab = a * b;
    CHECK(std::abs(ab.v - a.v * b.v) <= 1e-15);
    CHECK(std::abs(ab.d - (a.v * b.d + a.d * b.v)) <= 1e-15);

    if (std::abs(b.v) > 0.1) {
      const Dual q = a / b;
      const Dual back = q * b;
      CHECK(std::abs(back.v - a.v) <= 1e-14);
      CHECK(std::abs(back.d - a.d) <= 1e-13);
    }
  }
}

TEST_CASE("dual elementary functions against finite differences") {
  Rng rng(31);
  const double h = 1e-7;
  for (int i = 0; i < 100; ++i) {
    // arguments kept in the right half plane, where all branches are smooth
    const cplx z = cplx{0.3, 0.0} + random_cplx(rng, 0.25);
    const cplx dir = random_cplx(rng, 1.0);
    const auto fd = [&](auto fn) {
      return (fn(z + h * dir) - fn(z - h * dir)) / (2.0 * h);
    };
    {
      const Dual r = sqrt(Dual{z, dir});
      CHECK(std::abs(r.d - fd([](cplx w) { return std::sqrt(w); })) <= 1e-6);
    }
    {
      const Dual r = log(Dual{z, dir});
      CHECK(std::abs(r.d - fd([](cplx w) { return std::log(w); })) <= 1e-6);
    }
    {
      const Dual r = exp(Dual{z, dir});
      CHECK(std::abs(r.d - fd([](cplx w) { return std::exp(w); })) <= 1e-6);
    }
    {
      const Dual r = pow(Dual{z, dir}, 0.37);
      CHECK(std::abs(r.d - fd([](cplx w) { return std::pow(w, 0.37); })) <= 1e-6);
    }
  }
}

TEST_CASE("cauchy-riemann at the dual level") {
  // d(iv) = i d(v) for holomorphic building blocks
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const cplx z = cplx{0.5, 0.0} + random_cplx(rng, 0.3);
    const cplx dir = random_cplx(rng, 1.0);
    const Dual a = pow(Dual{z, dir}, 0.5);
    const Dual b = pow(Dual{z, cplx{0.0, 1.0} * dir}, 0.5);
    CHECK(std::abs(b.d - cplx{0.0, 1.0} * a.d) <= 1e-12);
  }
}

TEST_CASE("one-minus product accumulation") {
  // 1 - prod (1-s_j)^{k_j} at tiny s, where the naive product is pure noise
  const double e = std::pow(2.0, -40);
  const std::vector<Dual> s{Dual{cplx{e, 0.5 * e}}, Dual{cplx{2.0 * e, 0.0}}};
  const std::vector<int> k{2, 3};
  const Dual acc = one_minus_product_pow(std::span<const Dual>(s), std::span<const int>(k));
  // first order: 2 s_1 + 3 s_2
  const cplx expect = 2.0 * s[0].v + 3.0 * s[1].v;
  CHECK(std::abs(acc.v - expect) <= 1e-10 * std::abs(expect));

  // exactness against plain arithmetic at moderate size
  const std::vector<cplx> sm{cplx{0.125, 0.0625}, cplx{0.25, -0.125}};
  const cplx acc2 = one_minus_product_pow(std::span<const cplx>(sm), std::span<const int>(k));
  const cplx direct = 1.0 - std::pow(1.0 - sm[0], 2) * std::pow(1.0 - sm[1], 3);
  CHECK(std::abs(acc2 - direct) <= 1e-14);
}
