#include <doctest.h>

#include <cmath>
#include <limits>

#include "cyclofun/json_io.hpp"

using namespace cyclofun;

TEST_CASE("doubles print with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  OrderedJson j = OrderedJson::array({0.1, std::numeric_limits<double>::infinity(), 3});
  CHECK(dump_json(j) == "[0.10000000000000001,null,3]");
}

TEST_CASE("objects keep insertion order and scalar arrays stay flat") {
  OrderedJson j = OrderedJson::object();
  j["z"] = 1;
  j["a"] = OrderedJson::array({1.5, 2.5});
  CHECK(dump_json(j) == R"({"z":1,"a":[1.5,2.5]})");
  CHECK(dump_json(j, 2) == "{\n  \"z\": 1,\n  \"a\": [1.5, 2.5]\n}");
}

TEST_CASE("series round trip is exact") {
  const TruncatedSeries s(-2, {Complex{0.1, -0.3}, 0.0, Complex{1.0 / 3.0, 2.0}}, EvalDomain{}, "probe");
  const auto back = series_from_json(parse_json(dump_json(series_to_json(s))));
  CHECK(back.min_deg() == -2);
  CHECK(back.label() == "probe");
  CHECK(max_coeff_diff(back, s) == 0.0);
}

TEST_CASE("malformed documents raise FormatError") {
  CHECK_THROWS_AS(parse_json("{\"min_deg\": 0,"), FormatError);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"coeffs": [[1, 0]]})")), FormatError);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"min_deg": 0.5, "coeffs": [[1, 0]]})")), FormatError);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"min_deg": 0, "coeffs": [[1, 0, 2]]})")), FormatError);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"min_deg": 0, "coeffs": []})")), FormatError);
  CHECK_THROWS_AS(psi_from_json(parse_json(R"({"kind": "z"})")), FormatError);
  CHECK_THROWS_AS(psi_from_json(parse_json(R"({"kind": "q", "q": [1, 0]})")), FormatError);
}

TEST_CASE("psi and polynomial round trips") {
  const auto q = psi_from_json(psi_to_json(PsiSequence::q_deformed(Complex{0.5, 0.1})));
  CHECK(q.kind() == PsiSequence::Kind::q_deformed);
  CHECK(*q.q() == Complex{0.5, 0.1});
  const auto ex = psi_from_json(parse_json(R"({"kind": "explicit", "weights": [[1, 0], [2, 0], [4, 0]]})"));
  CHECK(ex.factorial(3) == Complex{8.0, 0.0});
  const Polynomial p({1.0, Complex{0, -2}});
  CHECK(max_coeff_residual(polynomial_from_json(polynomial_to_json(p)), p) == 0.0);
}

TEST_CASE("report serialization") {
  const auto r = make_report("probe", OrderedJson{{"n", 3}, {"alpha", complex_json(1.0)}}, 1e-17, 1e-10);
  CHECK(dump_json(to_json(r)) ==
        R"({"identity":"probe","params":{"n":3,"alpha":[1,0]},"residual":1.0000000000000001e-17,"tolerance":1e-10,"pass":true})");
  CHECK(reports_to_csv({r}) == "identity,n,alpha_re,alpha_im,residual,pass\nprobe,3,1,0,1.0000000000000001e-17,true\n");

  const auto broken = make_report("breaks", OrderedJson::object(), 0.5, 1e-3, Expectation::violated);
  CHECK(broken.pass);
  CHECK(!make_report("nan", OrderedJson::object(), std::nan(""), 1.0).pass);

  std::vector<IdentityReport> rs{r, broken};
  override_tolerance(rs, 1e-30);
  CHECK(!rs[0].pass);
  CHECK(rs[1].pass);
  CHECK(rs[1].tolerance == 1e-3);
}

TEST_CASE("merge_worst keeps the worst residual per identity") {
  const auto a = make_report("x", OrderedJson::object(), 1e-12, 1e-10);
  const auto b = make_report("x", OrderedJson::object(), 1e-11, 1e-10);
  const auto v1 = make_report("v", OrderedJson::object(), 0.5, 1e-3, Expectation::violated);
  const auto v2 = make_report("v", OrderedJson::object(), 0.1, 1e-3, Expectation::violated);
  const auto merged = merge_worst({{a, v1}, {b, v2}});
  REQUIRE(merged.size() == 2);
  CHECK(merged[0].residual == 1e-11);
  CHECK(merged[1].residual == 0.1);
  CHECK(merged[0].params.at("samples") == 2);
}
