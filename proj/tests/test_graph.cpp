#include "doctest.h"

#include <algorithm>
#include <set>

#include "nodal/constructions.hpp"
#include "nodal/graph.hpp"

using namespace nodal;

namespace {

// Oracle: an edge is a bridge iff deleting it increases the component count.
std::vector<int> bridges_by_deletion(const DualGraph& g) {
    std::vector<int> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (remove_edge(g, i).component_count() > g.component_count()) {
            out.push_back(g.edge(i).id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("basic invariants of small graphs") {
    DualGraph loop({0}, {{0, 0}});
    CHECK(loop.genus() == 1);
    CHECK(loop.valence(0) == 2);
    CHECK(is_semistable(loop));
    CHECK_FALSE(is_stable(loop));

    DualGraph t = theta(3);
    CHECK(t.genus() == 2);
    CHECK(t.valence(0) == 3);
    CHECK(is_stable(t));
    CHECK(bridges(t).empty());

    DualGraph weighted({2, 1}, {{0, 1}});
    CHECK(weighted.genus() == 3);
    CHECK(is_semistable(weighted));
    CHECK(bridges(weighted) == std::vector<int>{0});
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(DualGraph({-1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DualGraph({0, 0}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(DualGraph({1, 1}, {0, 0}, {Edge{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("bridges match the deletion oracle") {
    std::vector<DualGraph> graphs{theta(3), cycle(5), star_of_cycles(3, 2),
                                  star_of_cycles(4, 3), subdivided(star_of_cycles(3, 2))};
    for (std::uint64_t s = 0; s < 30; ++s) {
        int v = 2 + static_cast<int>(s % 4);
        graphs.push_back(random_semistable(v, v + static_cast<int>(s % 4), s).graph);
    }
    for (const DualGraph& g : graphs) {
        std::vector<int> fast = bridges(g);
        std::sort(fast.begin(), fast.end());
        CHECK(fast == bridges_by_deletion(g));
    }
}

TEST_CASE("bridge forest and leaf count") {
    CHECK(leaf_count(bridge_forest(theta(3))) == 2);
    CHECK(leaf_count(bridge_forest(cycle(4))) == 2);

    DualGraph star = star_of_cycles(3, 2);
    BridgeForest f = bridge_forest(star);
    CHECK(f.forest.vertex_count() == 4);
    CHECK(f.forest.edge_count() == 3);
    CHECK(leaf_count(f) == 3);
    CHECK(leaf_count(bridge_forest(star_of_cycles(5, 2))) == 5);

    // A path of three vertices contracts to itself; two leaves.
    DualGraph path({1, 1, 1}, {{0, 1}, {1, 2}});
    CHECK(leaf_count(bridge_forest(path)) == 2);

    // Forests sum over components: two disjoint loops give 2 + 2.
    DualGraph two_loops({0, 0}, {{0, 0}, {1, 1}});
    CHECK(leaf_count(bridge_forest(two_loops)) == 4);
}

TEST_CASE("bridge forest membership partitions the vertices") {
    DualGraph g = star_of_cycles(4, 3);
    BridgeForest f = bridge_forest(g);
    std::set<int> seen;
    for (int c = 0; c < f.forest.vertex_count(); ++c) {
        for (int v : f.members[c]) {
            CHECK(f.component_of[v] == c);
            CHECK(seen.insert(v).second);
        }
    }
    CHECK(static_cast<int>(seen.size()) == g.vertex_count());
}

TEST_CASE("induced subgraph") {
    DualGraph g = star_of_cycles(3, 2);
    InducedSubgraph sub = induced_subgraph(g, {1, 2});
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.boundary_edges == 1);
}

TEST_CASE("stabilization contracts exceptional vertices") {
    DualGraph g = subdivided(theta(3));
    CHECK(g.vertex_count() == 5);
    StabilizeResult st = stabilize(g);
    CHECK(is_stable(st.graph));
    CHECK(st.graph.genus() == g.genus());
    CHECK(st.graph.vertex_count() == 2);
    CHECK(st.contracted_edge_ids.size() == 3);
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(st.vertex_image[v] >= 0);
        CHECK(st.vertex_image[v] < st.graph.vertex_count());
    }

    CHECK_THROWS_AS(stabilize(cycle(1)), std::invalid_argument);
}

TEST_CASE("canonical key identifies isomorphic labelings") {
    DualGraph a({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}});
    DualGraph b({0, 0, 0}, {{2, 1}, {0, 2}, {1, 0}});
    CHECK(canonical_key(a) == canonical_key(b));
    DualGraph c({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
    CHECK(canonical_key(a) != canonical_key(c));
    DualGraph d({0, 1, 0}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(canonical_key(a) != canonical_key(d));
}

TEST_CASE("external ids round-trip through lookups") {
    DualGraph g({7, 9}, {10, 20}, {Edge{5, 0, 1}, Edge{3, 1, 1}});
    CHECK(g.vertex_by_id(7) == 0);
    CHECK(g.edge_by_id(3) == 1);
    CHECK_THROWS_AS(g.vertex_by_id(8), std::invalid_argument);
    CHECK_THROWS_AS(g.edge_by_id(4), std::invalid_argument);
}
