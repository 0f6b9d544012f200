#include "doctest.h"

#include <sstream>

#include "nodal/constructions.hpp"
#include "nodal/io.hpp"

using namespace nodal;

TEST_CASE("graph files round-trip") {
    DualGraph g({3, 7, 9}, {0, 1, 0}, {Edge{0, 0, 1}, Edge{2, 1, 2}, Edge{5, 2, 2}});
    Multidegree d({1, -2, 4});
    std::ostringstream out;
    write_graph_file(out, g, d);

    std::istringstream in(out.str());
    GraphFile f = read_graph_file(in);
    CHECK(f.graph.vertex_count() == 3);
    CHECK(f.graph.edge_count() == 3);
    CHECK(f.graph.weight(f.graph.vertex_by_id(7)) == 1);
    CHECK(f.graph.edge(f.graph.edge_by_id(5)).u == f.graph.edge(f.graph.edge_by_id(5)).v);
    REQUIRE(f.multidegree.has_value());
    CHECK(f.multidegree->values == d.values);
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "vertex 0 0  # trailing\n"
        "vertex 1 0\n"
        "edge 0 0 1\n"
        "edge 1 0 1\n");
    GraphFile f = read_graph_file(in);
    CHECK(f.graph.vertex_count() == 2);
    CHECK(f.graph.edge_count() == 2);
    CHECK_FALSE(f.multidegree.has_value());
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_graph_file(in);
            FAIL("expected a ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("vertex 0\n", "line 1");
    expect_error("vertex 0 0\nbogus 1 2\n", "line 2");
    expect_error("vertex 0 0\nedge 0 0 x\n", "integer");
    expect_error("vertex 0 0\nvertex 0 1\n", "duplicate vertex id");
    expect_error("vertex 0 0\nedge 0 0 3\n", "unknown vertex");
}

TEST_CASE("bundle files round-trip") {
    DualGraph g = star_of_cycles(3, 2);
    RationalCurveModel m = with_random_coords(g, 13);
    GluedLineBundle b = extremal_bundle(m);

    std::ostringstream out;
    write_bundle_file(out, b);
    std::istringstream in(out.str());
    GluedLineBundle back = read_bundle_file(in);

    CHECK(back.graph().vertex_count() == g.vertex_count());
    CHECK(back.degree().values == b.degree().values);
    for (int i = 0; i < g.edge_count(); ++i) {
        CHECK(back.gluing(i).left == b.gluing(i).left);
        CHECK(back.gluing(i).right == b.gluing(i).right);
        CHECK(back.model().coords(i).at_u == b.model().coords(i).at_u);
        CHECK(back.model().coords(i).at_v == b.model().coords(i).at_v);
    }
    CHECK(h0(back) == h0(b));
}

TEST_CASE("bundle files demand complete data") {
    std::string base =
        "vertex 0 0\nvertex 1 0\n"
        "edge 0 0 1\nedge 1 0 1\n"
        "coord 0 0 0\ncoord 0 1 0\ncoord 1 0 1\ncoord 1 1 1\n"
        "deg 0:1 1:1\n"
        "glue 0 1 1\nglue 1 1 1\n";
    {
        std::istringstream in(base);
        CHECK(h0(read_bundle_file(in)) == 2);
    }
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_bundle_file(in);
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error(base + "glue 1 2 2\n", "duplicate glue");
    expect_error(base + "coord 1 1 5\n", "duplicate coord");
    expect_error(base.substr(0, base.find("glue 1")), "missing glue");
    expect_error(
        "vertex 0 0\nedge 0 0 0\ncoord 0 0 0\ncoord 0 1 1\nglue 0 1 1\n",
        "missing degree");
    expect_error(base + "glue 2 1 1\n", "unknown");
    expect_error("vertex 0 0\nedge 0 0 0\ncoord 0 2 0\n", "side");
    expect_error("vertex 0 0\nedge 0 0 0\ncoord 0 0 1/0\n", "denominator");
}

TEST_CASE("multidegree text uses external vertex ids") {
    DualGraph g({4, 9}, {0, 0}, {Edge{0, 0, 1}, Edge{1, 0, 1}});
    Multidegree d = parse_multidegree(g, "9:3 4:-1");
    CHECK(d[g.vertex_by_id(4)] == -1);
    CHECK(d[g.vertex_by_id(9)] == 3);
    CHECK(format_multidegree(g, d) == "4:-1 9:3");

    CHECK_THROWS_AS(parse_multidegree(g, "4:1"), ParseError);
    CHECK_THROWS_AS(parse_multidegree(g, "4:1 9:0 5:2"), ParseError);
    CHECK_THROWS_AS(parse_multidegree(g, "4:1 4:2 9:0"), ParseError);
}
