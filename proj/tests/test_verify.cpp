#include "doctest.h"

#include <set>
#include <sstream>

#include "nodal/io.hpp"
#include "nodal/verify.hpp"

using namespace nodal;

TEST_CASE("clifford campaign on theta(3)") {
    RationalCurveModel m = default_model(theta(3));
    VerificationReport r = verify_clifford(m, 50, 7, "theta-3");
    CHECK(r.passed);
    CHECK(r.genus == 2);
    CHECK(r.leaves == 2);
    CHECK(r.entries.size() == 4);
    for (const CampaignEntry& e : r.entries) {
        CHECK(Rational(e.max_h0) <= e.bound);
        if (e.d.values == std::vector<long long>{1, 1}) CHECK(e.max_h0 == 2);
    }
}

TEST_CASE("campaign is deterministic and witnesses replay") {
    RationalCurveModel m = default_model(star_of_cycles(3, 2));
    VerificationReport a = verify_clifford(m, 20, 99);
    VerificationReport b = verify_clifford(m, 20, 99);
    REQUIRE(a.entries.size() == b.entries.size());
    bool sharp_somewhere = false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].max_h0 == b.entries[i].max_h0);
        CHECK(a.entries[i].sharp == b.entries[i].sharp);
        sharp_somewhere = sharp_somewhere || a.entries[i].sharp;
        REQUIRE(a.entries[i].witness.has_value());
        // Round-tripping the witness through the text format keeps its h0.
        std::ostringstream out;
        write_bundle_file(out, *a.entries[i].witness);
        std::istringstream in(out.str());
        CHECK(h0(read_bundle_file(in)) == a.entries[i].max_h0);
    }
    CHECK(a.passed);
    CHECK(sharp_somewhere);
}

TEST_CASE("generic campaign separates random from extremal gluings") {
    RationalCurveModel m = default_model(star_of_cycles(3, 2));
    GenericReport r = verify_generic(m, 200, 11);
    CHECK(r.all_classic);
    CHECK(r.extremal_violates_classic);
    CHECK(r.extremal_h0 == 3);
    CHECK(r.extremal_total == 3);
    CHECK(r.checked > 0);

    GenericReport t = verify_generic(default_model(theta(3)), 200, 11);
    CHECK(t.all_classic);
    CHECK_FALSE(t.extremal_violates_classic);
}

TEST_CASE("lemma battery passes on assorted models") {
    for (const DualGraph& g :
         {theta(3), cycle(4), star_of_cycles(3, 2), subdivided(theta(3))}) {
        LemmaReport r = verify_lemmas(default_model(g), 5);
        INFO("graph with " << g.vertex_count() << " vertices");
        for (const CheckResult& c : r.checks) {
            INFO(c.name << ": " << c.failures << "/" << c.cases);
            CHECK(c.failures == 0);
        }
        CHECK(r.passed);
    }
    for (std::uint64_t s = 0; s < 5; ++s) {
        CHECK(verify_lemmas(with_random_coords(random_semistable(4, 6, s).graph, s), s).passed);
    }
}

TEST_CASE("graph lemma battery accepts weighted graphs") {
    DualGraph g({1, 0, 2}, {{0, 1}, {1, 2}, {1, 2}, {0, 0}});
    LemmaReport r = verify_graph_lemmas(g, "weighted");
    CHECK(r.passed);
    CHECK_FALSE(r.checks.empty());
}

TEST_CASE("clifford index estimate") {
    // Genus 2: h1 >= 2 forces h0 - d >= 3 - g = 1, impossible with h0 >= 2
    // and d >= h0 - 1 ... the estimate stays empty.
    CliffordIndexEstimate none = clifford_index_estimate(default_model(theta(3)), 30, 1);
    CHECK_FALSE(none.found);

    CliffordIndexEstimate star = clifford_index_estimate(default_model(star_of_cycles(3, 2)), 30, 1);
    REQUIRE(star.found);
    CHECK(star.value <= -1);
    REQUIRE(star.witness.has_value());
    long long d = star.witness->degree().total();
    long long h = h0(*star.witness);
    CHECK(d - 2 * h + 2 == star.value);

    // Stabilization-invariant under the same structured gluing sets.
    DualGraph g = star_of_cycles(3, 2);
    CliffordIndexEstimate sub = clifford_index_estimate(default_model(subdivided(g)), 30, 1);
    REQUIRE(sub.found);
    CHECK(sub.value == star.value);
}

TEST_CASE("exhaustive corpus enumeration") {
    std::vector<DualGraph> tiny = exhaustive_semistable_graphs(2, 4);
    // loop; loop+loop on one vertex; ...; all connected weight-0 semistable
    // graphs with <= 2 vertices and <= 4 edges, up to isomorphism.
    for (const DualGraph& g : tiny) {
        CHECK(g.is_connected());
        CHECK(is_semistable(g));
        CHECK(g.vertex_count() <= 2);
        CHECK(g.edge_count() <= 4);
    }
    CHECK(tiny.size() == 13);

    std::set<std::string> keys;
    for (const DualGraph& g : tiny) CHECK(keys.insert(canonical_key(g)).second);

    CHECK(exhaustive_semistable_graphs(5, 8).size() == 1456);
}

TEST_CASE("json reports carry the schema fields") {
    RationalCurveModel m = default_model(theta(3));
    VerificationReport r = verify_clifford(m, 5, 3, "theta-3");
    nlohmann::json j = to_json(r);
    for (const char* key : {"graph", "genus", "leaves", "entries", "seed", "version"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["entries"].size() == r.entries.size());
    for (const auto& e : j["entries"]) {
        for (const char* key : {"multidegree", "total", "bound", "max_h0", "sharp"}) {
            CHECK(e.contains(key));
        }
    }
    CHECK(to_json(verify_generic(m, 2, 3)).contains("all_classic"));
    CHECK(to_json(verify_lemmas(m, 3)).contains("checks"));
}
