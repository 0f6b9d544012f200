#include "doctest.h"

#include <random>

#include "nodal/constructions.hpp"
#include "nodal/model.hpp"
#include "nodal/verify.hpp"

using namespace nodal;

namespace {

Rational eval(const std::vector<Rational>& coeffs, const Rational& p) {
    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * p + *it;
    return value;
}

}  // namespace

TEST_CASE("model validation") {
    DualGraph weighted({1, 0}, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(RationalCurveModel(weighted, {{0, 0}, {1, 1}}), std::invalid_argument);

    DualGraph t = theta(3);
    // Coincident node coordinates on one component are rejected.
    CHECK_THROWS_AS(RationalCurveModel(t, {{0, 0}, {0, 1}, {2, 2}}), std::invalid_argument);
    RationalCurveModel ok(t, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(ok.node_coords(0).size() == 3);
}

TEST_CASE("h0 with no gluing constraints") {
    DualGraph point({0}, {});
    RationalCurveModel m(point, {});
    GluedLineBundle o(m, Multidegree({0}), {});
    CHECK(h0(o) == 1);
    CHECK(h0(GluedLineBundle(m, Multidegree({4}), {})) == 5);
    CHECK(h0(GluedLineBundle(m, Multidegree({-1}), {})) == 0);
}

TEST_CASE("structure sheaf has one section") {
    for (const DualGraph& g : {theta(3), cycle(5), star_of_cycles(3, 2)}) {
        CHECK(h0(structure_sheaf(default_model(g))) == 1);
    }
}

TEST_CASE("canonical bundle h0 equals genus") {
    for (const DualGraph& g :
         {theta(3), theta(5), cycle(1), cycle(6), star_of_cycles(3, 2), star_of_cycles(4, 3),
          subdivided(theta(4))}) {
        RationalCurveModel m = default_model(g);
        CHECK(h0(canonical_bundle(m)) == g.genus());
    }
    for (std::uint64_t s = 0; s < 10; ++s) {
        DualGraph g = random_semistable(4, 7, s).graph;
        CHECK(h0(canonical_bundle(with_random_coords(g, s))) == g.genus());
    }

    DualGraph dangling({0, 0, 0}, {{0, 1}, {0, 1}, {0, 2}});
    CHECK_THROWS_AS(canonical_bundle(default_model(dangling)), std::invalid_argument);
}

TEST_CASE("riemann-roch on random bundles") {
    std::mt19937_64 rng(21);
    for (std::uint64_t s = 0; s < 8; ++s) {
        DualGraph g = random_semistable(3 + s % 3, 5 + s % 3, s).graph;
        RationalCurveModel m = with_random_coords(g, s + 100);
        long long genus = g.genus();
        for (const Multidegree& d : enumerate_uniform(g)) {
            GluedLineBundle b = random_bundle(m, d, rng);
            CHECK(h0(b) - h0(residual_bundle(b)) == d.total() - genus + 1);
        }
    }
}

TEST_CASE("section basis spans actual sections") {
    DualGraph g = star_of_cycles(3, 2);
    RationalCurveModel m = default_model(g);
    GluedLineBundle b = canonical_bundle(m);
    auto basis = section_basis(b);
    CHECK(static_cast<int>(basis.size()) == h0(b));
    for (const auto& sec : basis) {
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            Rational lhs = b.gluing(i).left * eval(sec[e.u], m.coords(i).at_u);
            Rational rhs = b.gluing(i).right * eval(sec[e.v], m.coords(i).at_v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("twisting by a point") {
    DualGraph t = theta(3);
    RationalCurveModel m = default_model(t);
    GluedLineBundle omega = canonical_bundle(m);
    Rational p(7);

    GluedLineBundle up = twist_point(omega, 0, p, +1);
    CHECK(up.degree().total() == omega.degree().total() + 1);
    CHECK(h0(up) == t.genus());
    CHECK(is_base_point(up, 0, p));

    // Down then up restores h0.
    GluedLineBundle down = twist_point(omega, 0, p, -1);
    CHECK(h0(twist_point(down, 0, p, +1)) == h0(omega));

    // Sections of L(-p) sit inside sections of L.
    CHECK(h0(down) >= h0(omega) - 1);
    CHECK(h0(down) <= h0(omega));

    CHECK_THROWS_AS(twist_point(omega, 0, Rational(0), +1), std::invalid_argument);
    CHECK_THROWS_AS(twist_point(omega, 5, p, +1), std::invalid_argument);
    CHECK_THROWS_AS(twist_point(omega, 0, p, 2), std::invalid_argument);
}

TEST_CASE("partial normalization sandwich") {
    std::mt19937_64 rng(3);
    DualGraph g = star_of_cycles(3, 2);
    RationalCurveModel m = default_model(g);
    for (const Multidegree& d : enumerate_uniform(g)) {
        GluedLineBundle b = random_bundle(m, d, rng);
        int h = h0(b);
        for (int e = 0; e < g.edge_count(); ++e) {
            Normalization n = partial_normalization(b, e);
            CHECK(n.bundle.graph().edge_count() == g.edge_count() - 1);
            int hn = h0(n.bundle);
            CHECK(h <= hn);
            CHECK(hn <= h + 1);
        }
    }
}

TEST_CASE("restriction to subcurves") {
    DualGraph g = star_of_cycles(3, 2);
    RationalCurveModel m = default_model(g);
    GluedLineBundle b = canonical_bundle(m);
    std::vector<int> S{0};
    auto [on_s, on_rest] = restrict_subcurve(b, S);
    CHECK(on_s.graph().vertex_count() == 1);
    CHECK(on_rest.graph().vertex_count() == g.vertex_count() - 1);
    CHECK(h0(b) <= h0(on_s) + h0(on_rest));

    GluedLineBundle plain = restrict_to(b, S);
    CHECK(plain.degree().total() == b.degree()[0]);
}

TEST_CASE("stabilization preserves h0") {
    std::mt19937_64 rng(17);
    for (const DualGraph& base : {theta(3), star_of_cycles(3, 2)}) {
        DualGraph g = subdivided(base);
        RationalCurveModel m = default_model(g);
        GluedLineBundle omega = canonical_bundle(m);
        GluedLineBundle pushed = stabilize_bundle(omega);
        CHECK(h0(pushed) == h0(omega));
        CHECK(is_stable(pushed.graph()));

        Multidegree zero(std::vector<long long>(g.vertex_count(), 0));
        for (int t = 0; t < 5; ++t) {
            GluedLineBundle b = random_bundle(m, zero, rng);
            CHECK(h0(stabilize_bundle(b)) == h0(b));
        }
    }

    // Nonzero degree on an exceptional component is rejected.
    DualGraph g = subdivided(theta(3));
    RationalCurveModel m = default_model(g);
    Multidegree d(std::vector<long long>(g.vertex_count(), 0));
    d[g.vertex_count() - 1] = 1;
    d[0] = -1;
    GluedLineBundle bad(m, d, std::vector<Gluing>(g.edge_count(), Gluing{1, 1}));
    CHECK_THROWS_AS(stabilize_bundle(bad), std::invalid_argument);
}

TEST_CASE("gauge normalization") {
    std::mt19937_64 rng(41);
    DualGraph g = star_of_cycles(3, 2);
    RationalCurveModel m = default_model(g);
    for (const Multidegree& d : enumerate_uniform(g)) {
        GluedLineBundle b(m, d, [&] {
            std::vector<Gluing> gl;
            std::uniform_int_distribution<int> num(1, 9);
            for (int i = 0; i < g.edge_count(); ++i) {
                gl.push_back(Gluing{Rational(num(rng), num(rng)), Rational(num(rng))});
            }
            return gl;
        }());
        GluedLineBundle n = gauge_normalize(b);
        CHECK(h0(n) == h0(b));
        int ones = 0;
        for (int i = 0; i < g.edge_count(); ++i) {
            CHECK(n.gluing(i).right == 1);
            if (n.gluing(i).left == 1) ++ones;
        }
        // A spanning tree's worth of edges is fully normalized.
        CHECK(ones >= g.vertex_count() - 1);
    }
}
