#include <doctest.h>

#include <stdexcept>

#include "subres/json_io.hpp"

using namespace subres;
using nlohmann::json;

TEST_CASE("coefficients round-trip; big values travel as decimal strings") {
  CHECK(int_to_json(Int(42)) == json(42));
  CHECK(int_to_json(Int(-7)) == json(-7));
  Int big("123456789012345678901234567890");
  json j = int_to_json(big);
  REQUIRE(j.is_string());
  CHECK(int_from_json(j) == big);
  CHECK(int_from_json(json(-42)) == Int(-42));
  CHECK(int_from_json(json("-42")) == Int(-42));
  CHECK(int_from_json(json(9007199254740993LL)) == Int("9007199254740993"));
  CHECK_THROWS_AS(int_from_json(json(1.5)), std::runtime_error);
  CHECK_THROWS_AS(int_from_json(json("12abc")), std::runtime_error);
}

TEST_CASE("polynomials serialize ascending and trim on parse") {
  Poly p(std::vector<Int>{1, 0, -3});
  json j = poly_to_json(p);
  CHECK(j == json::parse("[1,0,-3]"));
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(json::parse("[1,0,-3,0,0]")) == p);
  CHECK(poly_from_json(json::parse("[]")).is_zero());
  CHECK(poly_to_json(Poly()) == json::array());
  CHECK_THROWS_AS(poly_from_json(json::parse("{}")), std::runtime_error);
}

TEST_CASE("instances parse with field diagnostics") {
  json good = json::parse(R"({"polys": [[1,0,1], [2,1,0,3]]})");
  Instance inst = instance_from_json(good);
  REQUIRE(inst.polys.size() == 2);
  CHECK(inst.polys[0].degree() == 2);
  CHECK(instance_to_json(inst) == good);

  CHECK_THROWS_WITH_AS(instance_from_json(json::parse("{}")),
                       doctest::Contains("polys"), std::runtime_error);
  CHECK_THROWS_WITH_AS(instance_from_json(json::parse(R"({"polys": []})")),
                       doctest::Contains("nonempty"), std::runtime_error);
  CHECK_THROWS_WITH_AS(instance_from_json(json::parse(R"({"polys": [[1],[0,0]]})")),
                       doctest::Contains("polys[1]"), std::runtime_error);
}

TEST_CASE("missing files and broken JSON carry the path") {
  CHECK_THROWS_WITH_AS(load_instance("/nonexistent/x.json"),
                       doctest::Contains("/nonexistent/x.json"), std::runtime_error);
}
