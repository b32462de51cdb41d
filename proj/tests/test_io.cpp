#include "doctest.h"
#include "inhomcs/errors.hpp"
#include "inhomcs/canonical.hpp"
#include "inhomcs/io.hpp"

using namespace inhomcs;

TEST_CASE("diagram JSON round trip") {
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    JacobiDiagram w = make_wheel(3, sk);
    ParsedDiagram p = parse_diagram(to_json(w));
    REQUIRE(p.plain);
    CHECK_FALSE(p.directed);
    CHECK(*p.plain == w);

    DirectedJacobiDiagram dw = make_directed_wheel(4, sk, false);
    ParsedDiagram q = parse_diagram(to_json(dw));
    REQUIRE(q.directed);
    CHECK(*q.directed == dw);
  }
}

TEST_CASE("diagram JSON with arbitrary ids") {
  Json j = Json::parse(R"({
    "skeleton": "interval",
    "legs": [7, 3, 9],
    "vertices": [[20, 21, 22]],
    "edges": [[7, 20], [21, 3], [9, 22]],
    "directions": [[7, 20], [21, 3], [22, 9]]
  })");
  ParsedDiagram p = parse_diagram(j);
  REQUIRE(p.directed);
  CHECK(p.directed->is_legal());
  CHECK(canonicalize(p.directed->base()).key == canonicalize(make_tripod(SkeletonKind::Interval)).key);
  CHECK_FALSE(p.directed->is_head(0));
  CHECK(p.directed->is_head(1));
}

TEST_CASE("diagram JSON errors name the first problem") {
  auto fails = [](const char* text) {
    CHECK_THROWS_AS(parse_diagram(Json::parse(text)), InvalidInput);
  };
  fails(R"([1, 2])");
  fails(R"({"legs": [0, 1], "vertices": [], "edges": [[0, 1]]})");
  fails(R"({"skeleton": "torus", "legs": [0, 1], "vertices": [], "edges": [[0, 1]]})");
  fails(R"({"skeleton": "circle", "legs": [0, 1], "vertices": [[2, 3]], "edges": [[0, 1]]})");
  fails(R"({"skeleton": "circle", "legs": [0, 1], "vertices": [], "edges": [[0, 1, 2]]})");
  fails(R"({"skeleton": "circle", "legs": [0, "a"], "vertices": [], "edges": [[0, 1]]})");
  fails(R"({"skeleton": "circle", "legs": [0, 1, 2], "vertices": [], "edges": [[0, 1]]})");
  fails(R"({"skeleton": "circle", "legs": [0, 1], "vertices": [], "edges": [[0, 1]],
            "directions": [[1, 0], [0, 1]]})");
  fails(R"({"skeleton": "circle", "legs": [0, 1], "vertices": [], "edges": [[0, 1]],
            "directions": []})");
  fails(R"({"skeleton": "circle", "legs": [0, 1], "vertices": [], "edges": [[0, 1]],
            "directions": [[0, 5]]})");
  try {
    parse_diagram(Json::parse(R"({"skeleton": "circle", "legs": [0, 1, 2], "vertices": [],
                                  "edges": [[0, 1]]})"));
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("invalid diagram") != std::string::npos);
  }
}

TEST_CASE("builtin diagrams") {
  CHECK(builtin_diagram("theta", SkeletonKind::Circle).plain->leg_count() == 2);
  CHECK(builtin_diagram("theta^3", SkeletonKind::Circle).plain->leg_count() == 6);
  CHECK(builtin_diagram("wheel-5", SkeletonKind::Interval).plain->vertex_count() == 5);
  CHECK(builtin_diagram("directed-wheel-2", SkeletonKind::Circle).directed);
  CHECK(builtin_diagram("tripod", SkeletonKind::Circle).plain->vertex_count() == 1);
  CHECK_THROWS_AS(builtin_diagram("wheel-1", SkeletonKind::Circle), InvalidInput);
  CHECK_THROWS_AS(builtin_diagram("wheel-x", SkeletonKind::Circle), InvalidInput);
  CHECK_THROWS_AS(builtin_diagram("hexagon", SkeletonKind::Circle), InvalidInput);
}

TEST_CASE("tensor and sum dumps") {
  EnvelopingTensor t;
  t.add_word({2, 0}, Rational(-3, 4));
  Json j = to_json(t);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["word"] == Json::array({2, 0}));
  CHECK(j[0]["coeff"] == "-3/4");

  DiagramSum s;
  s.add(make_wheel(2, SkeletonKind::Circle), 2);
  Json js = to_json(s);
  REQUIRE(js.size() == 1);
  CHECK(js[0]["coeff"] == (canonicalize(make_wheel(2, SkeletonKind::Circle)).sign > 0 ? "2" : "-2"));
  CHECK(parse_diagram(js[0]["diagram"]).plain);
}

TEST_CASE("reduction trace dump") {
  Json j = to_json(reduce_wheel_on_circle(4));
  CHECK(j["m"] == 4);
  CHECK(j["vanishes"] == true);
  CHECK(j["trace"].size() == 5);
  CHECK(j["trace"][0]["rule"] == "directed-stu:du");
  CHECK(j["trace"][0]["terms"].size() == 2);
  CHECK(j["trace"][0]["terms"][1]["coeff"] == "-1");
  // Byte-stable.
  CHECK(j.dump() == to_json(reduce_wheel_on_circle(4)).dump());
}

TEST_CASE("algebra specs and dumps") {
  AlgebraSpec s = parse_algebra_spec(Json::parse(R"({"family": "gl", "n": 3, "rep": "defining"})"));
  CHECK(s.family == "gl");
  CHECK(s.n == 3);
  CHECK_THROWS_AS(parse_algebra_spec(Json::parse(R"({"family": "e8"})")), InvalidInput);
  CHECK_THROWS_AS(parse_algebra_spec(Json::parse(R"({"family": "gl", "n": 0})")), InvalidInput);
  CHECK_THROWS_AS(parse_algebra_spec(Json::parse(R"({"family": "gl", "n": "two"})")), InvalidInput);
  Json d = algebra_dump(build_sl2());
  CHECK(d["dim"] == 3);
  CHECK(d["labels"] == Json::array({"H", "E", "F"}));
  CHECK(d["metric"][0][0] == "2");
  CHECK(d["metric_inverse"][0][0] == "1/2");
  CHECK_THROWS_AS(read_json_file("/nonexistent/spec.json"), InvalidInput);
}
