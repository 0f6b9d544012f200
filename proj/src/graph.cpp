#include "nodal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stack>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace nodal {

DualGraph::DualGraph(std::vector<int> weights, const std::vector<std::pair<int, int>>& edges)
    : weights_(std::move(weights)) {
    vertex_ids_.resize(weights_.size());
    std::iota(vertex_ids_.begin(), vertex_ids_.end(), 0);
    edges_.reserve(edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        edges_.push_back(Edge{i, edges[i].first, edges[i].second});
    }
    validate_and_index();
}

DualGraph::DualGraph(std::vector<int> vertex_ids, std::vector<int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
    if (weights_.size() != vertex_ids_.size()) {
        throw std::invalid_argument("vertex id and weight lists differ in length");
    }
    validate_and_index();
}

void DualGraph::validate_and_index() {
    const int n = vertex_count();
    std::unordered_set<int> vid;
    for (int v = 0; v < n; ++v) {
        if (weights_[v] < 0) {
            throw std::invalid_argument("negative vertex weight at vertex id " +
                                        std::to_string(vertex_ids_[v]));
        }
        if (!vid.insert(vertex_ids_[v]).second) {
            throw std::invalid_argument("duplicate vertex id " + std::to_string(vertex_ids_[v]));
        }
    }
    std::unordered_set<int> eid;
    incident_.assign(n, {});
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw std::invalid_argument("edge id " + std::to_string(e.id) +
                                        " has a dangling endpoint");
        }
        if (!eid.insert(e.id).second) {
            throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
        }
        incident_[e.u].push_back(i);
        incident_[e.v].push_back(i);
    }

    component_.assign(n, -1);
    component_count_ = 0;
    for (int start = 0; start < n; ++start) {
        if (component_[start] != -1) continue;
        std::stack<int> st;
        st.push(start);
        component_[start] = component_count_;
        while (!st.empty()) {
            int v = st.top();
            st.pop();
            for (int ei : incident_[v]) {
                const Edge& e = edges_[ei];
                int w = e.u == v ? e.v : e.u;
                if (component_[w] == -1) {
                    component_[w] = component_count_;
                    st.push(w);
                }
            }
        }
        ++component_count_;
    }
}

int DualGraph::vertex_by_id(int id) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_ids_[v] == id) return v;
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
}

int DualGraph::edge_by_id(int id) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].id == id) return i;
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

int DualGraph::valence(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    }
    int val = 0;
    for (int ei : incident_[v]) {
        const Edge& e = edges_[ei];
        val += (e.u == v) + (e.v == v);
    }
    // incident_ lists loops twice, each occurrence contributing 2; correct for
    // the double listing.
    int loops = 0;
    for (int ei : incident_[v]) {
        const Edge& e = edges_[ei];
        if (e.u == v && e.v == v) ++loops;
    }
    return val - loops;
}

long long DualGraph::genus() const {
    std::vector<long long> per(component_count_, 1);
    for (int v = 0; v < vertex_count(); ++v) per[component_[v]] += weights_[v] - 1;
    for (const Edge& e : edges_) per[component_[e.u]] += 1;
    long long g = 0;
    for (long long c : per) g += c;
    return g;
}

bool is_semistable(const DualGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.weight(v) == 0 && g.valence(v) < 2) return false;
    }
    return true;
}

bool is_stable(const DualGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.weight(v) == 0 && g.valence(v) < 3) return false;
        if (g.weight(v) == 1 && g.valence(v) < 1) return false;
    }
    return true;
}

std::vector<int> bridges(const DualGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, -1);
    std::vector<int> result;
    int timer = 0;

    // Iterative low-link traversal. The parent edge is skipped by position,
    // so a parallel edge still acts as a back edge.
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                int ei = inc[f.next++];
                const Edge& e = g.edge(ei);
                if (ei == f.parent_edge) continue;
                if (e.u == e.v) continue;  // loop, never a bridge
                int w = e.u == f.v ? e.v : e.u;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back(Frame{w, ei, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) result.push_back(g.edge(pe).id);
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

BridgeForest bridge_forest(const DualGraph& g) {
    std::vector<int> bridge_ids = bridges(g);
    std::unordered_set<int> bridge_set(bridge_ids.begin(), bridge_ids.end());

    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        std::stack<int> st;
        st.push(start);
        comp[start] = ncomp;
        while (!st.empty()) {
            int v = st.top();
            st.pop();
            for (int ei : g.incident(v)) {
                const Edge& e = g.edge(ei);
                if (bridge_set.count(e.id)) continue;
                int w = e.u == v ? e.v : e.u;
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    st.push(w);
                }
            }
        }
        ++ncomp;
    }

    BridgeForest f;
    f.component_of = comp;
    f.members.assign(ncomp, {});
    std::vector<int> weights(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        f.members[comp[v]].push_back(v);
        weights[comp[v]] += g.weight(v);
    }
    std::vector<Edge> forest_edges;
    for (const Edge& e : g.edges()) {
        if (bridge_set.count(e.id)) {
            forest_edges.push_back(Edge{e.id, comp[e.u], comp[e.v]});
        }
    }
    std::vector<int> ids(ncomp);
    std::iota(ids.begin(), ids.end(), 0);
    f.forest = DualGraph(std::move(ids), std::move(weights), std::move(forest_edges));
    return f;
}

int leaf_count(const BridgeForest& f) {
    const DualGraph& t = f.forest;
    std::vector<int> comp_size(t.component_count(), 0);
    for (int v = 0; v < t.vertex_count(); ++v) ++comp_size[t.component(v)];
    int leaves = 0;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (comp_size[t.component(v)] == 1) {
            leaves += 2;  // single-vertex tree counts as 2
        } else if (t.valence(v) == 1) {
            leaves += 1;
        }
    }
    return leaves;
}

InducedSubgraph induced_subgraph(const DualGraph& g, const std::vector<int>& S) {
    if (S.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
    std::vector<int> index(g.vertex_count(), -1);
    InducedSubgraph sub;
    sub.vertex_of = S;
    std::sort(sub.vertex_of.begin(), sub.vertex_of.end());
    sub.vertex_of.erase(std::unique(sub.vertex_of.begin(), sub.vertex_of.end()),
                        sub.vertex_of.end());
    std::vector<int> ids, weights;
    for (int i = 0; i < static_cast<int>(sub.vertex_of.size()); ++i) {
        int v = sub.vertex_of[i];
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("vertex set references unknown vertex");
        }
        index[v] = i;
        ids.push_back(g.vertex_id(v));
        weights.push_back(g.weight(v));
    }
    std::vector<Edge> edges;
    sub.boundary_edges = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        bool in_u = index[e.u] != -1, in_v = index[e.v] != -1;
        if (in_u && in_v) {
            edges.push_back(Edge{e.id, index[e.u], index[e.v]});
            sub.edge_of.push_back(i);
        } else if (in_u != in_v) {
            ++sub.boundary_edges;
        }
    }
    sub.graph = DualGraph(std::move(ids), std::move(weights), std::move(edges));
    return sub;
}

namespace {

// Contracts the non-loop edge at position e, merging `dead` into `keep`.
DualGraph contract_edge(const DualGraph& g, int e, int keep, int dead,
                        std::vector<int>& vertex_map) {
    std::vector<int> ids, weights;
    vertex_map.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == dead) continue;
        vertex_map[v] = static_cast<int>(ids.size());
        ids.push_back(g.vertex_id(v));
        weights.push_back(g.weight(v));
    }
    vertex_map[dead] = vertex_map[keep];
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        const Edge& old = g.edge(i);
        edges.push_back(Edge{old.id, vertex_map[old.u], vertex_map[old.v]});
    }
    return DualGraph(std::move(ids), std::move(weights), std::move(edges));
}

}  // namespace

StabilizeResult stabilize(const DualGraph& g) {
    if (!is_semistable(g)) throw std::invalid_argument("stabilize: graph is not semistable");
    if (!g.is_connected()) throw std::invalid_argument("stabilize: graph is not connected");
    if (g.genus() < 2) throw std::invalid_argument("stabilize: genus < 2");

    StabilizeResult res;
    res.graph = g;
    res.vertex_image.resize(g.vertex_count());
    std::iota(res.vertex_image.begin(), res.vertex_image.end(), 0);

    for (;;) {
        const DualGraph& cur = res.graph;
        int best = -1;
        for (int i = 0; i < cur.edge_count(); ++i) {
            const Edge& e = cur.edge(i);
            if (e.u == e.v) continue;
            bool qualifies = (cur.weight(e.u) == 0 && cur.valence(e.u) == 2) ||
                             (cur.weight(e.v) == 0 && cur.valence(e.v) == 2);
            if (!qualifies) continue;
            if (best == -1 || e.id < cur.edge(best).id) best = i;
        }
        if (best == -1) break;
        const Edge& e = cur.edge(best);
        int dead = (cur.weight(e.u) == 0 && cur.valence(e.u) == 2) ? e.u : e.v;
        int keep = dead == e.u ? e.v : e.u;
        res.contracted_edge_ids.push_back(e.id);
        std::vector<int> step;
        DualGraph next = contract_edge(cur, best, keep, dead, step);
        for (int& img : res.vertex_image) img = step[img];
        res.graph = std::move(next);
    }
    return res;
}

DualGraph remove_edge(const DualGraph& g, int edge_pos) {
    if (edge_pos < 0 || edge_pos >= g.edge_count()) {
        throw std::invalid_argument("remove_edge: unknown edge");
    }
    std::vector<int> ids, weights;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ids.push_back(g.vertex_id(v));
        weights.push_back(g.weight(v));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i != edge_pos) edges.push_back(g.edge(i));
    }
    return DualGraph(std::move(ids), std::move(weights), std::move(edges));
}

std::string canonical_key(const DualGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_key: too many vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::pair<int, int>> es;
        es.reserve(g.edge_count());
        for (const Edge& e : g.edges()) {
            int a = perm[e.u], b = perm[e.v];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        std::string key;
        std::vector<int> w(n);
        for (int v = 0; v < n; ++v) w[perm[v]] = g.weight(v);
        for (int v = 0; v < n; ++v) key += std::to_string(w[v]) + ";";
        for (auto& [a, b] : es) key += std::to_string(a) + "," + std::to_string(b) + ";";
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace nodal
