#include "nodal/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nodal/io.hpp"

namespace nodal {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Edge positions of a spanning forest, lowest edge ids first.
std::vector<bool> spanning_forest(const DualGraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
    Dsu dsu(g.vertex_count());
    std::vector<bool> in_tree(g.edge_count(), false);
    for (int i : order) {
        if (dsu.unite(g.edge(i).u, g.edge(i).v)) in_tree[i] = true;
    }
    return in_tree;
}

Rational random_scalar(std::mt19937_64& rng, long long box) {
    std::uniform_int_distribution<long long> num(-box, box);
    std::uniform_int_distribution<long long> den(1, 5);
    long long n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
}

GluedLineBundle all_ones(const RationalCurveModel& m, const Multidegree& d) {
    std::vector<Gluing> gl(m.graph().edge_count(), Gluing{1, 1});
    return GluedLineBundle(m, d, std::move(gl));
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& p) {
    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * p + *it;
    return value;
}

std::vector<int> all_vertices(const DualGraph& g) {
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

// A coordinate on component v avoiding every node of v.
Rational smooth_point(const RationalCurveModel& m, int v) {
    std::vector<Rational> nodes = m.node_coords(v);
    Rational p = 101;
    while (std::find(nodes.begin(), nodes.end(), p) != nodes.end()) p += 1;
    return p;
}

// Structured gluings worth trying for this multidegree, beyond random ones.
std::vector<GluedLineBundle> structured_bundles(const RationalCurveModel& m, const Multidegree& d,
                                                const GluedLineBundle* extremal) {
    std::vector<GluedLineBundle> out;
    out.push_back(all_ones(m, d));
    const DualGraph& g = m.graph();
    if (d == canonical_multidegree(g)) out.push_back(canonical_bundle(m));
    if (extremal) {
        if (d == extremal->degree()) out.push_back(*extremal);
        if (d == residual(g, extremal->degree())) out.push_back(residual_bundle(*extremal));
    }
    return out;
}

// References returned here stay valid across later calls as long as the
// report reserved enough slots; both batteries reserve up front.
CheckResult& check(LemmaReport& report, const std::string& name) {
    for (CheckResult& c : report.checks) {
        if (c.name == name) return c;
    }
    report.checks.push_back(CheckResult{name, 0, 0});
    return report.checks.back();
}

void record(CheckResult& c, bool ok) {
    ++c.cases;
    if (!ok) ++c.failures;
}

}  // namespace

GluedLineBundle random_bundle(const RationalCurveModel& m, const Multidegree& d,
                              std::mt19937_64& rng, long long box) {
    const DualGraph& g = m.graph();
    std::vector<bool> in_tree = spanning_forest(g);
    std::vector<Gluing> gl(g.edge_count(), Gluing{1, 1});
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!in_tree[i]) gl[i] = Gluing{random_scalar(rng, box), 1};
    }
    return GluedLineBundle(m, d, std::move(gl));
}

VerificationReport verify_clifford(const RationalCurveModel& m, int samples, std::uint64_t seed,
                                   const std::string& name) {
    const DualGraph& g = m.graph();
    VerificationReport report;
    report.graph_name = name;
    report.graph = g;
    report.genus = g.genus();
    report.leaves = leaf_count(bridge_forest(g));
    report.seed = seed;
    report.samples = samples;

    std::optional<GluedLineBundle> extremal;
    if (g.is_connected() && is_semistable(g)) extremal = extremal_bundle(m);

    std::mt19937_64 rng(seed);
    for_each_uniform(g, [&](const Multidegree& d) {
        CampaignEntry entry;
        entry.d = d;
        entry.total = d.total();
        entry.bound = clifford_bound(g, d);

        auto consider = [&](const GluedLineBundle& b) {
            int h = h0(b);
            if (Rational(h) > entry.bound) {
                report.passed = false;
                entry.max_h0 = h;
                entry.witness = b;
                return false;
            }
            if (h > entry.max_h0) {
                entry.max_h0 = h;
                entry.witness = b;
            }
            return true;
        };

        bool ok = true;
        for (const GluedLineBundle& b :
             structured_bundles(m, d, extremal ? &*extremal : nullptr)) {
            if (!(ok = consider(b))) break;
        }
        for (int s = 0; ok && s < samples; ++s) ok = consider(random_bundle(m, d, rng));
        entry.sharp = ok && Rational(entry.max_h0) == entry.bound;
        report.entries.push_back(std::move(entry));
    });
    return report;
}

GenericReport verify_generic(const RationalCurveModel& m, int trials, std::uint64_t seed) {
    const DualGraph& g = m.graph();
    GenericReport report;
    report.seed = seed;
    report.trials = trials;

    std::mt19937_64 rng(seed);
    for_each_uniform(g, [&](const Multidegree& d) {
        for (int t = 0; t < trials; ++t) {
            GluedLineBundle b = random_bundle(m, d, rng, 1000000);
            ++report.checked;
            if (2 * h0(b) > d.total() + 2) report.all_classic = false;
        }
    });

    if (g.is_connected() && is_semistable(g)) {
        GluedLineBundle ex = extremal_bundle(m);
        report.extremal_h0 = h0(ex);
        report.extremal_total = ex.degree().total();
        report.extremal_violates_classic = 2 * report.extremal_h0 > report.extremal_total + 2;
    }
    return report;
}

LemmaReport verify_graph_lemmas(const DualGraph& g, const std::string& name) {
    LemmaReport report;
    report.graph_name = name;
    report.checks.reserve(16);
    int n = g.vertex_count();
    int full = leaf_count(bridge_forest(g));
    bool two_edge_connected = g.is_connected() && bridges(g).empty();

    if (g.is_connected() && n <= 12) {
        CheckResult& split = check(report, "leaf_count_subgraph");
        CheckResult& split2ec = check(report, "leaf_count_subgraph_2ec");
        for (unsigned long long mask = 1; mask + 1 < (1ull << n); ++mask) {
            std::vector<int> S;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1) S.push_back(v);
            }
            InducedSubgraph sub = induced_subgraph(g, S);
            int sub_leaves = leaf_count(bridge_forest(sub.graph));
            record(split, sub_leaves <= full + sub.boundary_edges);
            if (two_edge_connected) record(split2ec, sub_leaves <= sub.boundary_edges);
        }
    }

    if (two_edge_connected) {
        CheckResult& removal = check(report, "leaf_count_edge_removal");
        for (int e = 0; e < g.edge_count(); ++e) {
            record(removal, leaf_count(bridge_forest(remove_edge(g, e))) == 2);
        }
    }

    if (g.is_connected() && is_semistable(g) && g.genus() >= 2) {
        CheckResult& stab = check(report, "leaf_count_stabilization");
        record(stab, leaf_count(bridge_forest(stabilize(g).graph)) == full);
    }

    if (is_stable(g) && n <= 12) {
        CheckResult& lemma = check(report, "stable_degree_g_minus_1_uniform");
        for (const Multidegree& d : enumerate_stable(g, g.genus() - 1)) {
            record(lemma, is_uniform(g, d));
        }
    }

    for (const CheckResult& c : report.checks) {
        if (c.failures > 0) report.passed = false;
    }
    return report;
}

namespace {

// Neutral pair test for the two branch points of a split node, straight from
// the definition: dropping either point or both costs the same.
bool is_neutral_pair(const Normalization& n) {
    const GluedLineBundle& m = n.bundle;
    GluedLineBundle minus_p = twist_point(m, n.branch_vertex[0], n.branch_coord[0], -1);
    GluedLineBundle minus_q = twist_point(m, n.branch_vertex[1], n.branch_coord[1], -1);
    GluedLineBundle minus_pq =
        twist_point(minus_p, n.branch_vertex[1], n.branch_coord[1], -1);
    int a = h0(minus_p), b = h0(minus_q), c = h0(minus_pq);
    return a == b && b == c;
}

// Can the node be re-glued so that no section of the normalization is lost?
// Tries (1,1), small ratios and the ratio read off a section basis.
bool equality_attainable(const GluedLineBundle& b, int edge_pos, const Normalization& n) {
    int target = h0(n.bundle);
    std::vector<Gluing> candidates{{1, 1}};
    for (long long k = 2; k <= 5; ++k) {
        candidates.push_back({Rational(k), 1});
        candidates.push_back({1, Rational(k)});
    }
    for (const auto& sec : section_basis(n.bundle)) {
        Rational at_p = eval_poly(sec[n.branch_vertex[0]], n.branch_coord[0]);
        Rational at_q = eval_poly(sec[n.branch_vertex[1]], n.branch_coord[1]);
        if (at_p != 0 && at_q != 0) {
            candidates.push_back({at_q, at_p});
            break;
        }
    }
    for (const Gluing& cand : candidates) {
        std::vector<Gluing> gl = b.all_gluing();
        gl[edge_pos] = cand;
        if (h0(GluedLineBundle(b.model(), b.degree(), std::move(gl))) == target) return true;
    }
    return false;
}

}  // namespace

LemmaReport verify_lemmas(const RationalCurveModel& m, std::uint64_t seed) {
    const DualGraph& g = m.graph();
    LemmaReport report;
    report.checks.reserve(32);
    long long genus = g.genus();
    std::mt19937_64 rng(seed);

    // Sample set: all-ones and one random gluing per uniform multidegree.
    std::vector<GluedLineBundle> sample;
    for_each_uniform(g, [&](const Multidegree& d) {
        if (sample.size() >= 400) return;
        sample.push_back(all_ones(m, d));
        sample.push_back(random_bundle(m, d, rng));
    });

    CheckResult& rr = check(report, "riemann_roch");
    CheckResult& res_equiv = check(report, "residual_bound_equivalence");
    int leaves = leaf_count(bridge_forest(g));
    for (const GluedLineBundle& b : sample) {
        int h = h0(b);
        int hr = h0(residual_bundle(b));
        record(rr, h - hr == b.degree().total() - genus + 1);
        bool lhs = 2 * h <= b.degree().total() + leaves;
        bool rhs = 2 * hr <= (2 * genus - 2 - b.degree().total()) + leaves;
        record(res_equiv, lhs == rhs);
    }

    bool has_canonical = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.valence(v) < 2) has_canonical = false;
    }
    if (has_canonical) {
        GluedLineBundle omega = canonical_bundle(m);
        record(check(report, "canonical_h0"), h0(omega) == genus);

        Rational p = smooth_point(m, 0);
        GluedLineBundle omega_p = twist_point(omega, 0, p, +1);
        CheckResult& twisted = check(report, "canonical_plus_point");
        record(twisted, h0(omega_p) == genus && is_base_point(omega_p, 0, p));

        CheckResult& duality = check(report, "base_point_duality");
        for (std::size_t i = 0; i < sample.size() && i < 40; ++i) {
            const GluedLineBundle& b = sample[i];
            GluedLineBundle dual = twist_point(residual_bundle(b), 0, p, +1);
            record(duality, is_base_point(b, 0, p) == !is_base_point(dual, 0, p));
        }
    }

    CheckResult& sandwich = check(report, "normalization_sandwich");
    CheckResult& neutral = check(report, "neutral_pair_equality");
    for (std::size_t i = 0; i < sample.size() && i < 60; ++i) {
        const GluedLineBundle& b = sample[i];
        int h = h0(b);
        for (int e = 0; e < g.edge_count(); ++e) {
            Normalization n = partial_normalization(b, e);
            int hn = h0(n.bundle);
            record(sandwich, h <= hn && hn <= h + 1);
            record(neutral, is_neutral_pair(n) == equality_attainable(b, e, n));
        }
    }

    if (g.vertex_count() >= 2 && g.vertex_count() <= 8) {
        CheckResult& subcurve = check(report, "subcurve_bound");
        CheckResult& subcurve_eq = check(report, "subcurve_equality");
        int n = g.vertex_count();
        for (std::size_t i = 0; i < sample.size() && i < 30; ++i) {
            const GluedLineBundle& b = sample[i];
            int h = h0(b);
            for (unsigned long long mask = 1; mask + 1 < (1ull << n); ++mask) {
                std::vector<int> S;
                for (int v = 0; v < n; ++v) {
                    if (mask >> v & 1) S.push_back(v);
                }
                auto [on_s, on_rest] = restrict_subcurve(b, S);
                int hs = h0(on_s);
                int hr = h0(on_rest);
                record(subcurve, h <= hs + hr);
                if (hs == 0) record(subcurve_eq, h == hr);
            }
        }
    }

    CheckResult& dhar_inj = check(report, "dhar_restriction_bound");
    CheckResult& dhar_comp = check(report, "dhar_complement_uniform");
    std::vector<int> everything = all_vertices(g);
    for (std::size_t i = 0; i < sample.size() && i < 60; ++i) {
        const GluedLineBundle& b = sample[i];
        const Multidegree& d = b.degree();
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> set = dhar(g, d, v);
            if (set == everything) {
                record(dhar_inj, h0(b) <= d[v] + 1);
            } else if (is_semistable(g) && is_uniform(g, d)) {
                std::vector<int> rest;
                for (int w = 0; w < g.vertex_count(); ++w) {
                    if (!std::binary_search(set.begin(), set.end(), w)) rest.push_back(w);
                }
                InducedSubgraph sub = induced_subgraph(g, rest);
                Multidegree dr(std::vector<long long>(rest.size(), 0));
                for (std::size_t j = 0; j < rest.size(); ++j) dr[static_cast<int>(j)] = d[rest[j]];
                for (const Edge& e : g.edges()) {
                    bool u_in = std::binary_search(set.begin(), set.end(), e.u);
                    bool v_in = std::binary_search(set.begin(), set.end(), e.v);
                    if (u_in != v_in) {
                        int outside = u_in ? e.v : e.u;
                        int pos = static_cast<int>(
                            std::lower_bound(rest.begin(), rest.end(), outside) - rest.begin());
                        dr[pos] -= 1;
                    }
                }
                record(dhar_comp, is_semistable(sub.graph) && is_uniform(sub.graph, dr));
            }
        }
    }

    if (g.is_connected() && is_semistable(g) && genus >= 2) {
        CheckResult& push = check(report, "stabilization_h0");
        DualGraph sd = subdivided(g);
        RationalCurveModel msd = default_model(sd);
        std::vector<Multidegree> degs{Multidegree(std::vector<long long>(sd.vertex_count(), 0)),
                                      canonical_multidegree(sd)};
        for (const Multidegree& d : degs) {
            for (int t = 0; t < 3; ++t) {
                GluedLineBundle b = random_bundle(msd, d, rng);
                record(push, h0(stabilize_bundle(b)) == h0(b));
            }
        }
    }

    LemmaReport combinatorial = verify_graph_lemmas(g);
    for (CheckResult& c : combinatorial.checks) report.checks.push_back(std::move(c));

    for (const CheckResult& c : report.checks) {
        if (c.failures > 0) report.passed = false;
    }
    return report;
}

CliffordIndexEstimate clifford_index_estimate(const RationalCurveModel& m, int samples,
                                              std::uint64_t seed) {
    const DualGraph& g = m.graph();
    long long genus = g.genus();
    CliffordIndexEstimate best;

    std::optional<GluedLineBundle> extremal;
    if (g.is_connected() && is_semistable(g)) extremal = extremal_bundle(m);

    std::mt19937_64 rng(seed);
    for_each_uniform(g, [&](const Multidegree& d) {
        auto consider = [&](const GluedLineBundle& b) {
            long long total = b.degree().total();
            long long h = h0(b);
            long long h1 = h - total + genus - 1;
            if (h < 2 || h1 < 2) return;
            long long value = total - 2 * h + 2;
            if (!best.found || value < best.value) {
                best.found = true;
                best.value = value;
                best.witness = b;
            }
        };
        for (const GluedLineBundle& b :
             structured_bundles(m, d, extremal ? &*extremal : nullptr)) {
            consider(b);
        }
        for (int s = 0; s < samples; ++s) consider(random_bundle(m, d, rng));
    });
    return best;
}

std::vector<DualGraph> exhaustive_semistable_graphs(int max_vertices, int max_edges) {
    std::vector<DualGraph> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) slots.emplace_back(i, j);
        }
        // Edge multisets are nondecreasing sequences of slot indices.
        for (int m = n; m <= max_edges; ++m) {
            std::vector<int> pick(m, 0);
            while (true) {
                std::vector<std::pair<int, int>> edges;
                for (int s : pick) edges.push_back(slots[s]);
                DualGraph g(std::vector<int>(n, 0), edges);
                if (g.is_connected() && is_semistable(g)) {
                    if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
                }
                int i = m - 1;
                while (i >= 0 && pick[i] == static_cast<int>(slots.size()) - 1) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
            }
        }
    }
    return out;
}

std::vector<NamedGraph> default_corpus() {
    std::vector<NamedGraph> out;
    int counter = 0;
    for (DualGraph& g : exhaustive_semistable_graphs(5, 8)) {
        out.push_back({"small-" + std::to_string(counter++), std::move(g)});
    }
    out.push_back({"theta-6", theta(6)});
    out.push_back({"cycle-7", cycle(7)});
    out.push_back({"star-3-2", star_of_cycles(3, 2)});
    out.push_back({"star-4-2", star_of_cycles(4, 2)});
    out.push_back({"star-5-2", star_of_cycles(5, 2)});
    out.push_back({"star-3-3", star_of_cycles(3, 3)});
    out.push_back({"subdivided-theta-3", subdivided(theta(3))});
    out.push_back({"subdivided-star-3-2", subdivided(star_of_cycles(3, 2))});
    return out;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const CampaignEntry& e : r.entries) {
        nlohmann::json item{{"multidegree", format_multidegree(r.graph, e.d)},
                            {"total", e.total},
                            {"bound", to_string(e.bound)},
                            {"max_h0", e.max_h0},
                            {"sharp", e.sharp}};
        if (!e.witness_file.empty()) item["witness_file"] = e.witness_file;
        entries.push_back(std::move(item));
    }
    return nlohmann::json{{"graph", r.graph_name}, {"genus", r.genus},
                          {"leaves", r.leaves},   {"entries", std::move(entries)},
                          {"passed", r.passed},   {"seed", r.seed},
                          {"samples", r.samples}, {"version", kReportVersion}};
}

nlohmann::json to_json(const GenericReport& r) {
    return nlohmann::json{{"graph", r.graph_name},
                          {"seed", r.seed},
                          {"trials", r.trials},
                          {"checked", r.checked},
                          {"all_classic", r.all_classic},
                          {"extremal_violates_classic", r.extremal_violates_classic},
                          {"extremal_h0", r.extremal_h0},
                          {"extremal_total", r.extremal_total},
                          {"version", kReportVersion}};
}

nlohmann::json to_json(const LemmaReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
    }
    return nlohmann::json{{"graph", r.graph_name},
                          {"checks", std::move(checks)},
                          {"passed", r.passed},
                          {"version", kReportVersion}};
}

}  // namespace nodal
