#include "doctest.h"
#include "orbifold/errors.hpp"
#include "orbifold/io.hpp"

using namespace orbifold;
using io::Json;

TEST_CASE("malformed JSON reports a line") {
  try {
    io::parse_json("{\n  \"degree\": 3,\n  \"generators\": [[1,0,2]\n}", "g.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("g.json") != std::string::npos);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("groups") {
  const auto g = io::group_from_json(Json::parse(R"({"degree": 3, "generators": [[1,0,2],[1,2,0]]})"));
  CHECK(g.order() == 6);
  CHECK(io::group_from_json(Json("A4")).order() == 12);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"degree": 3, "generators": [[1,1,2]]})")), ParseError);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"generators": []})")), ParseError);
  CHECK_THROWS_AS(io::group_from_json(Json("Q8")), ParseError);
  const auto round = io::group_from_json(io::group_to_json(g));
  CHECK(round.elements() == g.elements());
}

TEST_CASE("presentations") {
  const auto p = io::presentation_from_json(Json::parse(R"({"generators": ["a","b"], "relators": ["abAB"]})"));
  CHECK(p->generator_count() == 2);
  CHECK(p->relators().size() == 1);
  CHECK(io::presentation_from_json(Json("C7"))->kind() == PresentationKind::Cyclic);
  CHECK_THROWS_AS(io::presentation_from_json(Json::parse(R"({"generators": ["a"], "relators": ["ab"]})")),
                  ParseError);
}

TEST_CASE("ring values and HNFs") {
  const auto p = io::poly_from_json(Json::parse(R"([{"coeff": "1/2", "monomial": {"z_2": 1, "t_1": 3}}, {"coeff": "-3/6", "monomial": {}}])"));
  CHECK(p.to_string() == "1/2*t_1^3*z_2 - 1/2");
  CHECK(io::ring_from_json(Json("c")) == RingElem(Variable::named("c")));
  CHECK(io::ring_from_json(Json("2/4")) == RingElem(Rational(1, 2)));
  CHECK(io::ring_from_json(Json::parse(R"({"re": 1.5, "im": -2})")).complex() == Complex(1.5, -2));
  const HnfMatrix h(3, 2, 5);
  CHECK(io::hnf_from_json(io::hnf_to_json(h)) == h);
  CHECK_THROWS_AS(io::hnf_from_json(Json::parse(R"({"mu": 1, "kappa": 2, "lambda": 2})")), ParseError);
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"([{"coeff": "1/0"}])")), std::invalid_argument);
}

TEST_CASE("transform requests") {
  const auto r = io::transform_request_from_json(Json::parse(
      R"({"class_function": {"domain": "ZxZ", "kind": "symbolic"}, "omega": "S2", "handle": {"mu": 1, "kappa": 1, "lambda": 2}})"));
  CHECK(r.group->kind() == PresentationKind::FreeAbelian2);
  CHECK(std::get<HnfMatrix>(r.handle) == HnfMatrix(1, 1, 2));

  const auto t = io::transform_request_from_json(Json::parse(R"({
    "group": "trivial",
    "class_function": {"domain": "general", "kind": "table", "presentation": "trivial",
                       "entries": [{"key": "c", "degree": 1, "images": [], "value": "c"}]},
    "omega": "S3"})"));
  CHECK(std::holds_alternative<io::FullGroup>(t.handle));
  CHECK(t.class_function.domain() == Domain::General);

  CHECK_THROWS_AS(io::transform_request_from_json(Json::parse(
                      R"({"class_function": {"domain": "general", "kind": "constant", "value": 1}, "omega": "S2"})")),
                  ParseError);
  CHECK_THROWS_AS(io::transform_request_from_json(Json::parse(
                      R"({"class_function": {"domain": "Z", "kind": "symbolic"}, "omega": "S2", "handle": 0})")),
                  ParseError);
  CHECK_THROWS_AS(io::class_function_from_json(Json::parse(
                      R"({"domain": "ZxZ", "kind": "numeric", "tau": [0, -1]})")),
                  ParseError);
}

TEST_CASE("hash") {
  CHECK(io::fnv1a("") == 14695981039346656037ULL);
  CHECK(io::hex64(io::fnv1a("a")) == "af63dc4c8601ec8c");
}
