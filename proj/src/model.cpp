#include "nodal/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nodal {

RationalCurveModel::RationalCurveModel(DualGraph graph, std::vector<EdgeCoords> coords)
    : graph_(std::move(graph)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != graph_.edge_count()) {
        throw std::invalid_argument("one coordinate pair per edge required");
    }
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        if (graph_.weight(v) != 0) {
            throw std::invalid_argument("curve model requires all vertex weights 0");
        }
        auto cs = node_coords(v);
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) {
            throw std::invalid_argument("node coordinates collide on component id " +
                                        std::to_string(graph_.vertex_id(v)));
        }
    }
}

std::vector<Rational> RationalCurveModel::node_coords(int v) const {
    std::vector<Rational> cs;
    for (int i = 0; i < graph_.edge_count(); ++i) {
        const Edge& e = graph_.edge(i);
        if (e.u == v) cs.push_back(coords_[i].at_u);
        if (e.v == v) cs.push_back(coords_[i].at_v);
    }
    return cs;
}

GluedLineBundle::GluedLineBundle(RationalCurveModel model, Multidegree degree,
                                 std::vector<Gluing> gluing)
    : model_(std::move(model)), degree_(std::move(degree)), gluing_(std::move(gluing)) {
    const DualGraph& g = model_.graph();
    if (static_cast<int>(degree_.values.size()) != g.vertex_count()) {
        throw std::invalid_argument("bundle degree is not indexed by the components");
    }
    if (static_cast<int>(gluing_.size()) != g.edge_count()) {
        throw std::invalid_argument("one gluing pair per edge required");
    }
    for (const Gluing& gl : gluing_) {
        if (gl.left == 0 || gl.right == 0) {
            throw std::invalid_argument("gluing scalars must be nonzero");
        }
    }
}

RationalMatrix section_matrix(const GluedLineBundle& b) {
    const DualGraph& g = b.graph();
    std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long w = b.degree()[v] >= 0 ? b.degree()[v] + 1 : 0;
        offset[v + 1] = offset[v] + static_cast<std::size_t>(w);
    }
    RationalMatrix m(g.edge_count(), offset[g.vertex_count()]);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        const EdgeCoords& c = b.model().coords(i);
        const Gluing& gl = b.gluing(i);
        Rational pw = 1;
        for (std::size_t j = 0; offset[e.u] + j < offset[e.u + 1]; ++j) {
            m.at(i, offset[e.u] + j) += gl.left * pw;
            pw *= c.at_u;
        }
        pw = 1;
        for (std::size_t j = 0; offset[e.v] + j < offset[e.v + 1]; ++j) {
            m.at(i, offset[e.v] + j) -= gl.right * pw;
            pw *= c.at_v;
        }
    }
    return m;
}

int h0(const GluedLineBundle& b) { return static_cast<int>(nullity(section_matrix(b))); }

std::vector<std::vector<std::vector<Rational>>> section_basis(const GluedLineBundle& b) {
    const DualGraph& g = b.graph();
    RationalMatrix basis = null_space(section_matrix(b));
    std::vector<std::vector<std::vector<Rational>>> out(basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        out[k].resize(g.vertex_count());
        std::size_t row = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            long long w = b.degree()[v] >= 0 ? b.degree()[v] + 1 : 0;
            for (long long j = 0; j < w; ++j) out[k][v].push_back(basis.at(row++, k));
        }
    }
    return out;
}

namespace {

// 1 / prod over the other node coordinates c on the component of (a - c),
// where a is the coordinate of the given endpoint slot.
Rational residue_scalar(const RationalCurveModel& m, int edge_pos, int side) {
    const DualGraph& g = m.graph();
    const Edge& e = g.edge(edge_pos);
    int v = side == 0 ? e.u : e.v;
    Rational a = side == 0 ? m.coords(edge_pos).at_u : m.coords(edge_pos).at_v;
    Rational prod = 1;
    for (int j = 0; j < g.edge_count(); ++j) {
        const Edge& f = g.edge(j);
        if (f.u == v && !(j == edge_pos && side == 0)) prod *= a - m.coords(j).at_u;
        if (f.v == v && !(j == edge_pos && side == 1)) prod *= a - m.coords(j).at_v;
    }
    return 1 / prod;
}

}  // namespace

GluedLineBundle canonical_bundle(const RationalCurveModel& m) {
    const DualGraph& g = m.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.valence(v) < 2) {
            throw std::invalid_argument("canonical bundle requires valence >= 2 on component id " +
                                        std::to_string(g.vertex_id(v)));
        }
    }
    std::vector<Gluing> gl(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        gl[i].left = residue_scalar(m, i, 0);
        gl[i].right = -residue_scalar(m, i, 1);
    }
    return GluedLineBundle(m, canonical_multidegree(g), std::move(gl));
}

GluedLineBundle residual_bundle(const GluedLineBundle& b) {
    GluedLineBundle can = canonical_bundle(b.model());
    std::vector<Gluing> gl(b.graph().edge_count());
    for (int i = 0; i < b.graph().edge_count(); ++i) {
        gl[i].left = can.gluing(i).left / b.gluing(i).left;
        gl[i].right = can.gluing(i).right / b.gluing(i).right;
    }
    return GluedLineBundle(b.model(), residual(b.graph(), b.degree()), std::move(gl));
}

GluedLineBundle twist_point(const GluedLineBundle& b, int v, const Rational& p, int sign) {
    const DualGraph& g = b.graph();
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("twist_point: unknown vertex");
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist_point: sign must be +-1");
    for (const Rational& c : b.model().node_coords(v)) {
        if (c == p) {
            throw std::invalid_argument("twist point collides with a node coordinate");
        }
    }
    std::vector<Gluing> gl = b.all_gluing();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.u == v) {
            Rational f = b.model().coords(i).at_u - p;
            gl[i].left = sign > 0 ? Rational(gl[i].left / f) : Rational(gl[i].left * f);
        }
        if (e.v == v) {
            Rational f = b.model().coords(i).at_v - p;
            gl[i].right = sign > 0 ? Rational(gl[i].right / f) : Rational(gl[i].right * f);
        }
    }
    Multidegree d = b.degree();
    d[v] += sign;
    return GluedLineBundle(b.model(), std::move(d), std::move(gl));
}

bool is_base_point(const GluedLineBundle& b, int v, const Rational& p) {
    return h0(b) == h0(twist_point(b, v, p, -1));
}

Normalization partial_normalization(const GluedLineBundle& b, int edge_pos) {
    const DualGraph& g = b.graph();
    if (edge_pos < 0 || edge_pos >= g.edge_count()) {
        throw std::invalid_argument("partial normalization: unknown edge");
    }
    Normalization n;
    const Edge& e = g.edge(edge_pos);
    n.branch_vertex[0] = e.u;
    n.branch_vertex[1] = e.v;
    n.branch_coord[0] = b.model().coords(edge_pos).at_u;
    n.branch_coord[1] = b.model().coords(edge_pos).at_v;
    std::vector<EdgeCoords> coords;
    std::vector<Gluing> gl;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_pos) continue;
        coords.push_back(b.model().coords(i));
        gl.push_back(b.gluing(i));
    }
    n.bundle = GluedLineBundle(RationalCurveModel(remove_edge(g, edge_pos), std::move(coords)),
                               b.degree(), std::move(gl));
    return n;
}

namespace {

struct Restriction {
    GluedLineBundle bundle;
    std::vector<int> sub_index;  // source vertex -> sub vertex, -1 outside
    InducedSubgraph sub;
};

Restriction restrict_impl(const GluedLineBundle& b, const std::vector<int>& S) {
    Restriction r;
    r.sub = induced_subgraph(b.graph(), S);
    r.sub_index.assign(b.graph().vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(r.sub.vertex_of.size()); ++i) {
        r.sub_index[r.sub.vertex_of[i]] = i;
    }
    std::vector<EdgeCoords> coords;
    std::vector<Gluing> gl;
    for (int src : r.sub.edge_of) {
        coords.push_back(b.model().coords(src));
        gl.push_back(b.gluing(src));
    }
    std::vector<long long> deg;
    for (int src : r.sub.vertex_of) deg.push_back(b.degree()[src]);
    r.bundle = GluedLineBundle(RationalCurveModel(r.sub.graph, std::move(coords)),
                               Multidegree(std::move(deg)), std::move(gl));
    return r;
}

}  // namespace

GluedLineBundle restrict_to(const GluedLineBundle& b, const std::vector<int>& S) {
    return restrict_impl(b, S).bundle;
}

std::pair<GluedLineBundle, GluedLineBundle> restrict_subcurve(const GluedLineBundle& b,
                                                              const std::vector<int>& S) {
    const DualGraph& g = b.graph();
    if (S.empty() || static_cast<int>(S.size()) >= g.vertex_count()) {
        throw std::invalid_argument("restrict_subcurve: subset must be proper and nonempty");
    }
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : S) in[v] = true;
    std::vector<int> Sc;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) Sc.push_back(v);

    Restriction inner = restrict_impl(b, S);
    Restriction outer = restrict_impl(b, Sc);

    // Twist the complement down at every former node.
    GluedLineBundle twisted = outer.bundle;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (in[e.u] == in[e.v]) continue;
        int w = in[e.u] ? e.v : e.u;
        Rational coord = in[e.u] ? b.model().coords(i).at_v : b.model().coords(i).at_u;
        twisted = twist_point(twisted, outer.sub_index[w], coord, -1);
    }
    return {inner.bundle, twisted};
}

GluedLineBundle stabilize_bundle(const GluedLineBundle& b) {
    const DualGraph& g0 = b.graph();
    if (!is_semistable(g0)) throw std::invalid_argument("stabilize_bundle: model not semistable");
    if (!g0.is_connected()) throw std::invalid_argument("stabilize_bundle: model not connected");
    if (g0.genus() < 2) throw std::invalid_argument("stabilize_bundle: genus < 2");
    for (int v = 0; v < g0.vertex_count(); ++v) {
        if (g0.weight(v) == 0 && g0.valence(v) == 2 && b.degree()[v] != 0) {
            throw std::invalid_argument(
                "stabilize_bundle: nonzero degree on exceptional component id " +
                std::to_string(g0.vertex_id(v)));
        }
    }

    GluedLineBundle cur = b;
    for (;;) {
        const DualGraph& g = cur.graph();
        int best = -1;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (e.u == e.v) continue;
            bool q = (g.weight(e.u) == 0 && g.valence(e.u) == 2) ||
                     (g.weight(e.v) == 0 && g.valence(e.v) == 2);
            if (!q) continue;
            if (best == -1 || e.id < g.edge(best).id) best = i;
        }
        if (best == -1) return cur;

        const Edge& e = g.edge(best);
        int dead = (g.weight(e.u) == 0 && g.valence(e.u) == 2) ? e.u : e.v;
        int keep = dead == e.u ? e.v : e.u;
        Rational c_dead = dead == e.u ? cur.gluing(best).left : cur.gluing(best).right;
        Rational c_keep = dead == e.u ? cur.gluing(best).right : cur.gluing(best).left;
        Rational a_keep = dead == e.u ? cur.model().coords(best).at_v
                                      : cur.model().coords(best).at_u;

        // The other edge at the exceptional vertex.
        int other = -1;
        for (int ei : g.incident(dead)) {
            if (ei != best) { other = ei; break; }
        }
        const Edge& f = g.edge(other);
        bool dead_is_u = f.u == dead;
        Rational c2_dead = dead_is_u ? cur.gluing(other).left : cur.gluing(other).right;
        Rational c2_w = dead_is_u ? cur.gluing(other).right : cur.gluing(other).left;
        int w = dead_is_u ? f.v : f.u;
        Rational a_w = dead_is_u ? cur.model().coords(other).at_v : cur.model().coords(other).at_u;

        // Eliminate the constant section on the exceptional component:
        // (c2_dead * c_keep / c_dead) s_keep(a_keep) = c2_w * s_w(a_w).
        std::vector<int> ids, weights;
        std::vector<int> vmap(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == dead) continue;
            vmap[v] = static_cast<int>(ids.size());
            ids.push_back(g.vertex_id(v));
            weights.push_back(g.weight(v));
        }
        std::vector<Edge> edges;
        std::vector<EdgeCoords> coords;
        std::vector<Gluing> gl;
        std::vector<long long> deg;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v != dead) deg.push_back(cur.degree()[v]);
        }
        for (int i = 0; i < g.edge_count(); ++i) {
            if (i == best) continue;
            const Edge& old = g.edge(i);
            if (i == other) {
                edges.push_back(Edge{old.id, vmap[keep], vmap[w]});
                coords.push_back(EdgeCoords{a_keep, a_w});
                gl.push_back(Gluing{c2_dead * c_keep / c_dead, c2_w});
            } else {
                edges.push_back(Edge{old.id, vmap[old.u], vmap[old.v]});
                coords.push_back(cur.model().coords(i));
                gl.push_back(cur.gluing(i));
            }
        }
        cur = GluedLineBundle(
            RationalCurveModel(DualGraph(std::move(ids), std::move(weights), std::move(edges)),
                               std::move(coords)),
            Multidegree(std::move(deg)), std::move(gl));
    }
}

GluedLineBundle gauge_normalize(const GluedLineBundle& b) {
    const DualGraph& g = b.graph();
    std::vector<Rational> t(g.vertex_count(), 0);
    std::vector<bool> tree(g.edge_count(), false);

    // Spanning tree per component, edges taken in ascending id order.
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return g.edge(a).id < g.edge(c).id; });
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (t[root] != 0) continue;
        t[root] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i : order) {
                const Edge& e = g.edge(i);
                if (e.u == e.v) continue;
                bool ku = t[e.u] != 0, kv = t[e.v] != 0;
                if (ku == kv) continue;
                if (g.component(e.u) != g.component(root)) continue;
                tree[i] = true;
                if (ku) {
                    t[e.v] = b.gluing(i).left * t[e.u] / b.gluing(i).right;
                } else {
                    t[e.u] = b.gluing(i).right * t[e.v] / b.gluing(i).left;
                }
                grew = true;
            }
        }
    }
    std::vector<Gluing> gl(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        Rational l = b.gluing(i).left * t[e.u];
        Rational r = b.gluing(i).right * t[e.v];
        gl[i] = Gluing{l / r, 1};
    }
    return GluedLineBundle(b.model(), b.degree(), std::move(gl));
}

}  // namespace nodal
