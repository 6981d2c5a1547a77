#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropref/enumerate.hpp"
#include "tropref/io.hpp"

using namespace tropref;

TEST_CASE("series round trip with large coefficients") {
    TruncSeries s = TruncSeries::from_ints({3, -2, 1000000}).pow(5);
    json j = series_to_json(s);
    CHECK(j["var"] == "x");
    CHECK(j["trunc"] == 2);
    CHECK(j["coeffs"][0] == "243");
    CHECK(series_from_json(json::parse(j.dump())) == s);
    CHECK(series_from_json(json::parse(R"({"coeffs":[1,"-7"]})")) == TruncSeries::from_ints({1, -7}));
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"trunc":3,"coeffs":["1"]})")), std::invalid_argument);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"coeffs":["1x"]})")), std::invalid_argument);
}

TEST_CASE("laurent round trip") {
    SymLaurent p = quantum_integer(4).pow(3);
    json j = laurent_to_json(p);
    CHECK(j["var"] == "q^{1/2}");
    CHECK(j["min"] == -9);
    CHECK(laurent_from_json(json::parse(j.dump())) == p);
}

TEST_CASE("polygon round trip and errors") {
    SurfaceClass s = make_surface_class(3, 1, 3, {-1, 1, 1}, {0, 0, 1});
    CHECK(class_to_json(s).dump() == R"({"a":3,"b_top":1,"b_bot":3,"b_left":[-1,1,1],"b_right":[0,0,1]})");
    CHECK(class_from_json(class_to_json(s)) == s);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"a":3,"b_top":2,"b_bot":3,"b_left":[-1,1,1],"b_right":[0,0,1]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"a":3})")), std::invalid_argument);
}

TEST_CASE("diagram round trip") {
    for (const FloorDiagram& d : enumerate_diagrams(hirzebruch_class(1, 3, 2), 1)) {
        json j = diagram_to_json(d);
        FloorDiagram back = diagram_from_json(json::parse(j.dump()));
        CHECK(diagram_to_json(back) == j);
        CHECK(back.edges() == d.edges());
    }
    json bad = diagram_to_json(enumerate_diagrams(p2_class(2), 0).front());
    bad["edges"][0][2] = 5;
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
    bad["edges"][0] = json::array({1, 2});
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
}

TEST_CASE("graphviz export") {
    FloorDiagram d = enumerate_diagrams(p2_class(2), 0).front();
    std::string dot = diagram_to_dot(d, "G");
    CHECK(dot.rfind("digraph G {", 0) == 0);
    CHECK(dot.find("f1 -> f2;") != std::string::npos);
    CHECK(dot.back() == '\n');
}
