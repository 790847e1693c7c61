#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <string>
#include <vector>

#include "polydisk/report.hpp"
#include "polydisk/suite.hpp"

using namespace polydisk;

TEST_CASE("complex literals round-trip") {
  const std::vector<cplx> values{
      {0.0, 0.0},    {1.0, 0.0},     {-0.5, 0.0},        {0.0, 0.25},
      {0.0, -1.0},   {0.125, 0.375}, {-1e-3, 2.5e-4},    {0.7071067811865476, -0.5},
      {1e308, 1e-308},
  };
  for (const cplx& v : values) {
    CHECK(parse_complex(format_complex(v)) == v);
  }
  CHECK(parse_complex("1") == cplx{1.0, 0.0});
  CHECK(parse_complex("0.3i") == cplx{0.0, 0.3});
  CHECK(parse_complex("-0.3i") == cplx{0.0, -0.3});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-i") == cplx{0.0, -1.0});
  CHECK(parse_complex("1+2i") == cplx{1.0, 2.0});
  CHECK(parse_complex("1-2i") == cplx{1.0, -2.0});
  CHECK(parse_complex("1e-3+2e-4i") == cplx{1e-3, 2e-4});
  CHECK(parse_complex("-1.5e2-2E-1i") == cplx{-150.0, -0.2});
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2"), std::invalid_argument);
}

TEST_CASE("point literals") {
  const std::vector<cplx> p = parse_point("1,0.3");
  REQUIRE(p.size() == 2);
  CHECK(p[0] == cplx{1.0, 0.0});
  CHECK(p[1] == cplx{0.3, 0.0});
  const std::vector<cplx> q = parse_point("0.70710678+0.70710678i,1,-0.2i");
  REQUIRE(q.size() == 3);
  CHECK(q[0] == cplx{0.70710678, 0.70710678});
  CHECK_THROWS_AS(parse_point(""), std::invalid_argument);
}

TEST_CASE("json views are deterministic") {
  const BoundaryPoint corner = BoundaryPoint::decompose({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
  const HoloMap f =
      function_gallery("remark-4.2", FuncParams{{{"a", 0.8}, {"b", 0.4}}, {}, {}});
  const std::string a = to_json(julia_coefficient(f, corner), true).dump(2);
  const std::string b = to_json(julia_coefficient(f, corner), true).dump(2);
  CHECK(a == b);

  const std::string c1 = to_json(classify(make_remark_16()), true).dump();
  const std::string c2 = to_json(classify(make_remark_16()), true).dump();
  CHECK(c1 == c2);
}

TEST_CASE("criterion results carry metrics") {
  const CriterionResult r = criterion_metric_suite();
  CHECK(r.id == 1);
  CHECK(r.pass);
  REQUIRE_FALSE(r.metrics.empty());
  CHECK(r.metrics[0].first == "max_violation");
}
