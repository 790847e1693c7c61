#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "polydisk/julia.hpp"

using namespace polydisk;

namespace {
const BoundaryPoint corner = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
const BoundaryPoint mixed = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{0.3, 0.0}});
}  // namespace

TEST_CASE("julia coefficient of the first coordinate") {
  const HoloMap c1 = function_gallery("coordinate", FuncParams{{{"j", 1.0}}, {}, {}}, 2);
  const JuliaReport jr = julia_coefficient(c1, mixed);
  REQUIRE(jr.alpha_finite());
  CHECK_THAT(jr.alpha, Catch::Matchers::WithinAbs(1.0, 1e-9));
  CHECK(jr.tau == cplx{1.0, 0.0});
  CHECK(jr.tau_snap_distance <= 1e-9);
  // the radial ratio is identically 1
  for (double r : jr.radial_ratio) CHECK_THAT(r, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("julia coefficient of the remark 4.2 function") {
  const HoloMap f = function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const JuliaReport jr = julia_coefficient(f, corner);
  REQUIRE(jr.alpha_finite());
  CHECK_THAT(jr.alpha, Catch::Matchers::WithinAbs(0.8, 1e-9));
  CHECK(jr.tau == cplx{1.0, 0.0});
}

TEST_CASE("julia coefficient of monomials equals the total degree") {
  FuncParams mono;
  mono.exponents = {2, 1};
  const HoloMap m = function_gallery("monomial", mono, 2);
  const JuliaReport jr = julia_coefficient(m, corner);
  REQUIRE(jr.alpha_finite());
  CHECK_THAT(jr.alpha, Catch::Matchers::WithinAbs(3.0, 1e-9));
  CHECK(jr.tau == cplx{1.0, 0.0});
}

TEST_CASE("constant maps carry no Julia condition") {
  const HoloMap f = function_gallery("constant", {}, 2);
  const JuliaReport jr = julia_coefficient(f, corner);
  CHECK_FALSE(jr.alpha_finite());
}

TEST_CASE("remark 2.1 and 2.3 functions are not Julia at the corner") {
  CHECK_FALSE(julia_coefficient(function_gallery("remark-2.1"), corner).alpha_finite());
  CHECK_FALSE(
      julia_coefficient(function_gallery("remark-2.3", FuncParams{{{"a", 0.5}}, {}, {}}), corner)
          .alpha_finite());
}

TEST_CASE("julia positivity bound holds along the radial samples") {
  for (const char* name : {"remark-4.2", "mean"}) {
    const HoloMap f =
        std::string(name) == "remark-4.2"
            ? function_gallery(name, FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}})
            : function_gallery(name, {}, 2);
    const JuliaReport jr = julia_coefficient(f, corner);
    for (double r : jr.radial_ratio) CHECK(r >= jr.alpha_lower_bound - 1e-12);
    CHECK(jr.alpha > 0.0);
  }
}

TEST_CASE("normalized-distance form of the dilatation agrees") {
  // the liminf of k(0, w) - omega(0, f(w)) along the radial samples equals
  // (1/2) log alpha (the per-sample gap is O(1 - t), so only limits compare)
  const HoloMap f = function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const JuliaReport jr = julia_coefficient(f, corner);
  const Curve radial = make_radial(corner);
  std::vector<double> dist_form;
  for (int k = 1; k <= 40; ++k) {
    const double eps = std::pow(2.0, -k);
    const CurvePointData p = curve_point(radial, eps);
    const EvalPoint ep = EvalPoint::from_delta(corner, p.delta);
    const cplx h = f.tau_minus(jr.tau, ep, corner);
    const double one_minus_abs_f =
        (2.0 * (std::conj(jr.tau) * h).real() - std::norm(h)) / (1.0 + std::abs(jr.tau - h));
    dist_form.push_back(omega_origin_from_one_minus(eps) -
                        omega_origin_from_one_minus(one_minus_abs_f));
  }
  const LimitEstimate lim = classify_real_sequence(dist_form, 1e-10);
  REQUIRE(lim.verdict == LimitVerdict::converged);
  CHECK(std::abs(lim.value - cplx{0.5 * std::log(jr.alpha), 0.0}) <= 1e-10);
}

TEST_CASE("random curves never undercut the radial dilatation coefficient") {
  // the liminf reduces to the radial curve; other curves can only see larger
  // ratios (up to tolerance)
  const HoloMap f = function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const JuliaReport jr = julia_coefficient(f, corner);
  for (const Curve& c : random_curve_family(corner, 18, 515)) {
    for (std::size_t i = c.schedule.size() - 12; i < c.schedule.size(); ++i) {
      const CurvePointData p = curve_point(c, c.schedule[i]);
      const EvalPoint ep = EvalPoint::from_delta(corner, p.delta);
      const cplx h = f.tau_minus(jr.tau, ep, corner);
      const double one_minus_abs_f =
          (2.0 * (std::conj(jr.tau) * h).real() - std::norm(h)) /
          (1.0 + std::abs(jr.tau - h));
      const double ratio = one_minus_abs_f / one_minus_sup_norm_delta(corner, p.delta);
      CHECK(ratio >= jr.alpha - 1e-6);
    }
  }
}

TEST_CASE("horosphere images contract by the coefficient") {
  Rng rng(67);
  const std::vector<double> radii{0.5, 1.0, 2.0};

  // coordinate-1 at a mixed point: E(x,R) maps exactly onto E(1,R)
  const HoloMap c1 = function_gallery("coordinate", FuncParams{{{"j", 1.0}}, {}, {}}, 2);
  const JuliaReport jc = julia_coefficient(c1, mixed);
  const JuliaInclusionReport r1 = julia_inclusion_check(c1, mixed, jc, radii, 500, rng);
  CHECK(r1.pass());
  CHECK(r1.max_image_value_ratio <= 1.0 + 1e-12);

  const HoloMap f = function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const JuliaReport jf = julia_coefficient(f, corner);
  const JuliaInclusionReport r2 = julia_inclusion_check(f, corner, jf, radii, 500, rng);
  CHECK(r2.pass());
}

TEST_CASE("pair map: component reduction and the failed inclusion") {
  const HoloMap pair = function_gallery("section-5-pair");
  const std::vector<ComponentJulia> comps = polydisk_target_julia(pair, corner);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].julia);
  CHECK_THAT(comps[0].alpha, Catch::Matchers::WithinAbs(1.0, 1e-9));
  CHECK_FALSE(comps[1].julia);
  CHECK(comps[1].radial_verdict == LimitVerdict::no_limit);

  // the image of E((1,1),1) pokes out of E((1,1),1)
  Rng rng(91);
  const std::vector<cplx> target{cplx{1.0, 0.0}, cplx{1.0, 0.0}};
  const ImageHorosphereReport rep =
      image_horosphere_check(pair, corner, target, 1.0, 1.0, 400, rng);
  CHECK(rep.outside > 0);
}
