#include "nodal/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace nodal {

DualGraph cycle(int n) {
    if (n < 1) throw std::invalid_argument("cycle: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return DualGraph(std::vector<int>(n, 0), edges);
}

DualGraph theta(int k) {
    if (k < 1) throw std::invalid_argument("theta: k >= 1 required");
    std::vector<std::pair<int, int>> edges(k, {0, 1});
    return DualGraph(std::vector<int>(2, 0), edges);
}

DualGraph star_of_cycles(int leaves, int cycle_len) {
    if (leaves < 1 || cycle_len < 1) {
        throw std::invalid_argument("star_of_cycles: positive parameters required");
    }
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < leaves; ++i) {
        int first = next;
        edges.emplace_back(0, first);  // bridge
        for (int j = 0; j < cycle_len; ++j) {
            edges.emplace_back(first + j, first + (j + 1) % cycle_len);
        }
        next += cycle_len;
    }
    return DualGraph(std::vector<int>(next, 0), edges);
}

DualGraph subdivided(const DualGraph& g) {
    int max_id = -1;
    std::vector<int> ids, weights;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ids.push_back(g.vertex_id(v));
        weights.push_back(g.weight(v));
        max_id = std::max(max_id, g.vertex_id(v));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        int mid = static_cast<int>(ids.size());
        ids.push_back(++max_id);
        weights.push_back(0);
        edges.push_back(Edge{2 * i, e.u, mid});
        edges.push_back(Edge{2 * i + 1, mid, e.v});
    }
    return DualGraph(std::move(ids), std::move(weights), std::move(edges));
}

RandomGraph random_semistable(int vertices, int edges, std::uint64_t seed) {
    if (vertices < 1 || edges < vertices) {
        throw std::invalid_argument("random_semistable: need edges >= vertices >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    for (int attempt = 1; attempt <= 100000; ++attempt) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < edges; ++i) es.emplace_back(pick(rng), pick(rng));
        DualGraph g(std::vector<int>(vertices, 0), es);
        if (g.is_connected() && is_semistable(g)) return RandomGraph{std::move(g), attempt};
    }
    throw std::runtime_error("random_semistable: rejection sampling did not terminate");
}

RationalCurveModel default_model(const DualGraph& g) {
    std::vector<int> next(g.vertex_count(), 0);
    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
    std::vector<EdgeCoords> coords(g.edge_count());
    for (int i : order) {
        const Edge& e = g.edge(i);
        coords[i].at_u = next[e.u]++;
        coords[i].at_v = next[e.v]++;
    }
    return RationalCurveModel(g, std::move(coords));
}

RationalCurveModel with_random_coords(const DualGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<std::set<Rational>> used(g.vertex_count());
    auto draw = [&](int v) {
        for (;;) {
            Rational c(num(rng), den(rng));
            if (used[v].insert(c).second) return c;
        }
    };
    std::vector<EdgeCoords> coords(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        coords[i].at_u = draw(e.u);
        coords[i].at_v = draw(e.v);
    }
    return RationalCurveModel(g, std::move(coords));
}

GluedLineBundle structure_sheaf(const RationalCurveModel& m) {
    const DualGraph& g = m.graph();
    return GluedLineBundle(m, Multidegree(std::vector<long long>(g.vertex_count(), 0)),
                           std::vector<Gluing>(g.edge_count(), Gluing{1, 1}));
}

namespace {

// Residue gluing scalar for an endpoint slot, with the node-coordinate
// product restricted to a subset of the edges (a submodel of the component).
Rational sub_residue(const RationalCurveModel& m, const std::vector<bool>& in_sub, int edge_pos,
                     int side) {
    const DualGraph& g = m.graph();
    const Edge& e = g.edge(edge_pos);
    int v = side == 0 ? e.u : e.v;
    Rational a = side == 0 ? m.coords(edge_pos).at_u : m.coords(edge_pos).at_v;
    Rational prod = 1;
    for (int j = 0; j < g.edge_count(); ++j) {
        if (!in_sub[j]) continue;
        const Edge& f = g.edge(j);
        if (f.u == v && !(j == edge_pos && side == 0)) prod *= a - m.coords(j).at_u;
        if (f.v == v && !(j == edge_pos && side == 1)) prod *= a - m.coords(j).at_v;
    }
    return 1 / prod;
}

}  // namespace

GluedLineBundle extremal_bundle(const RationalCurveModel& m) {
    const DualGraph& g = m.graph();
    if (!g.is_connected()) throw std::invalid_argument("extremal_bundle: model not connected");
    if (!is_semistable(g)) throw std::invalid_argument("extremal_bundle: model not semistable");

    BridgeForest bf = bridge_forest(g);
    if (leaf_count(bf) == 2) return canonical_bundle(m);

    std::vector<long long> deg(g.vertex_count(), 0);
    std::vector<Gluing> gl(g.edge_count(), Gluing{1, 1});

    for (int fv = 0; fv < bf.forest.vertex_count(); ++fv) {
        if (bf.forest.valence(fv) != 1) continue;  // leaves only

        std::vector<bool> in_comp(g.vertex_count(), false);
        for (int v : bf.members[fv]) in_comp[v] = true;
        std::vector<bool> internal(g.edge_count(), false);
        for (int i = 0; i < g.edge_count(); ++i) {
            internal[i] = in_comp[g.edge(i).u] && in_comp[g.edge(i).v];
        }

        // The unique bridge attaching this leaf, and its node on the leaf side.
        int attach_vertex = -1;
        Rational attach_coord;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (internal[i] || (!in_comp[e.u] && !in_comp[e.v])) continue;
            attach_vertex = in_comp[e.u] ? e.u : e.v;
            attach_coord = in_comp[e.u] ? m.coords(i).at_u : m.coords(i).at_v;
        }

        // Dualizing sheaf of the leaf component, twisted up at the node.
        for (int v : bf.members[fv]) deg[v] = g.valence(v) - 2;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (!internal[i]) continue;
            const Edge& e = g.edge(i);
            gl[i].left = sub_residue(m, internal, i, 0);
            gl[i].right = -sub_residue(m, internal, i, 1);
            if (e.u == attach_vertex) gl[i].left /= m.coords(i).at_u - attach_coord;
            if (e.v == attach_vertex) gl[i].right /= m.coords(i).at_v - attach_coord;
        }
    }
    return GluedLineBundle(m, Multidegree(std::move(deg)), std::move(gl));
}

std::pair<RationalCurveModel, GluedLineBundle> example_basic() {
    // Central vertex 0; for each of three 2-cycles, attachment vertex u and
    // far vertex w, joined to the center by one bridge.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) {
        int u = 1 + 2 * i, w = 2 + 2 * i;
        edges.emplace_back(0, u);
        edges.emplace_back(u, w);
        edges.emplace_back(u, w);
    }
    DualGraph g(std::vector<int>(7, 0), edges);
    RationalCurveModel m = default_model(g);

    std::vector<long long> deg(7, 0);
    std::vector<Gluing> gl(g.edge_count(), Gluing{1, 1});
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.u == 0 || e.v == 0) continue;  // bridge
        int u = std::min(e.u, e.v);  // attachment vertex of its 2-cycle
        deg[u] = 1;
        // Bridge coordinate on the attachment vertex.
        Rational p;
        for (int j = 0; j < g.edge_count(); ++j) {
            const Edge& f = g.edge(j);
            if (f.u == 0 && f.v == u) p = m.coords(j).at_v;
            if (f.v == 0 && f.u == u) p = m.coords(j).at_u;
        }
        // Pin the section on the attachment component to (z - p), making the
        // attaching node a base point.
        if (e.u == u) {
            gl[i] = Gluing{1, m.coords(i).at_u - p};
        } else {
            gl[i] = Gluing{m.coords(i).at_v - p, 1};
        }
    }
    GluedLineBundle b(m, Multidegree(std::move(deg)), std::move(gl));
    return {m, b};
}

std::pair<DualGraph, Multidegree> example_stable_violation() {
    // Center 0 of weight 0; satellites 1..9 of weight 1 along a path, seven of
    // them joined to the center so that every edge lies on a cycle.
    std::vector<int> weights(10, 1);
    weights[0] = 0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 9; ++i) edges.emplace_back(i, i + 1);
    for (int j : {1, 2, 4, 5, 6, 8, 9}) edges.emplace_back(0, j);
    DualGraph g(std::move(weights), edges);
    std::vector<long long> d(10, 1);
    d[0] = 6;
    return {std::move(g), Multidegree(std::move(d))};
}

GluedLineBundle example_stable_violation_surrogate() {
    // Each weight-1 satellite becomes a 2-cycle: u_i carries the external
    // edges, w_i is joined to u_i by a double edge.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 9; ++i) edges.emplace_back(i, i + 1);
    const std::vector<int> spokes = {1, 2, 4, 5, 6, 8, 9};
    for (int j : spokes) edges.emplace_back(0, j);
    for (int i = 1; i <= 9; ++i) {
        edges.emplace_back(i, 9 + i);
        edges.emplace_back(i, 9 + i);
    }
    DualGraph g(std::vector<int>(19, 0), edges);
    RationalCurveModel m = default_model(g);

    // Dualizing sheaf of the satellite subcurve, twisted up at each node with
    // the center; degree -8 on the center forces vanishing there, so the
    // sections are exactly those of the satellite dualizing sheaf.
    std::vector<bool> internal(g.edge_count(), false);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        internal[i] = e.u != 0 && e.v != 0;
    }
    std::vector<long long> deg(19, 0);
    deg[0] = -8;
    for (int v = 1; v < 19; ++v) {
        int val_sub = 0;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (!internal[i]) continue;
            const Edge& e = g.edge(i);
            val_sub += (e.u == v) + (e.v == v);
        }
        deg[v] = val_sub - 2;
    }
    std::vector<Gluing> gl(g.edge_count(), Gluing{1, 1});
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!internal[i]) continue;
        gl[i].left = sub_residue(m, internal, i, 0);
        gl[i].right = -sub_residue(m, internal, i, 1);
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (internal[i]) continue;
        int uj = e.u == 0 ? e.v : e.u;  // satellite endpoint of the spoke
        Rational q = e.u == 0 ? m.coords(i).at_v : m.coords(i).at_u;
        deg[uj] += 1;
        for (int k = 0; k < g.edge_count(); ++k) {
            if (!internal[k]) continue;
            const Edge& f = g.edge(k);
            if (f.u == uj) gl[k].left /= m.coords(k).at_u - q;
            if (f.v == uj) gl[k].right /= m.coords(k).at_v - q;
        }
    }
    return GluedLineBundle(m, Multidegree(std::move(deg)), std::move(gl));
}

}  // namespace nodal
