#include "nodal/multidegree.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

namespace {

void check_indexed(const DualGraph& g, const Multidegree& d) {
    if (static_cast<int>(d.values.size()) != g.vertex_count()) {
        throw std::invalid_argument("multidegree is not indexed by the graph's vertices");
    }
}

}  // namespace

Multidegree canonical_multidegree(const DualGraph& g) {
    std::vector<long long> v(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
        v[i] = 2LL * g.weight(i) - 2 + g.valence(i);
    }
    return Multidegree(std::move(v));
}

bool is_uniform(const DualGraph& g, const Multidegree& d) {
    check_indexed(g, d);
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long upper = 2LL * g.weight(v) - 2 + g.valence(v);
        if (d[v] < 0 || d[v] > upper) return false;
    }
    return true;
}

Multidegree residual(const DualGraph& g, const Multidegree& d) {
    check_indexed(g, d);
    Multidegree r = canonical_multidegree(g);
    for (int v = 0; v < g.vertex_count(); ++v) r[v] -= d[v];
    return r;
}

Rational clifford_bound(const DualGraph& g, const Multidegree& d) {
    check_indexed(g, d);
    return Rational(d.total() + leaf_count(bridge_forest(g)), 2);
}

std::vector<int> dhar(const DualGraph& g, const Multidegree& d, int v) {
    check_indexed(g, d);
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("dhar: unknown vertex");
    std::vector<bool> in(g.vertex_count(), false);
    in[v] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> joins;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (in[w]) continue;
            long long into = 0;
            for (int ei : g.incident(w)) {
                const Edge& e = g.edge(ei);
                if (e.u == e.v) continue;
                int other = e.u == w ? e.v : e.u;
                // incident() lists each non-loop edge once per endpoint slot
                if ((e.u == w || e.v == w) && in[other]) ++into;
            }
            if (into > 0 && d[w] - into < 0) joins.push_back(w);
        }
        for (int w : joins) {
            in[w] = true;
            grew = true;
        }
    }
    std::vector<int> out;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (in[w]) out.push_back(w);
    return out;
}

bool is_stable_multidegree(const DualGraph& g, const Multidegree& d) {
    check_indexed(g, d);
    if (!is_stable(g)) {
        throw std::invalid_argument("stable multidegree check requires a stable graph");
    }
    const long long genus = g.genus();
    const long long total = d.total();
    if (total != genus - 1 && total != genus) {
        throw std::invalid_argument("stable multidegree total must be genus-1 or genus");
    }
    const int n = g.vertex_count();
    if (n > 12) {
        throw std::invalid_argument("stable multidegree brute force capped at 12 vertices");
    }
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> S;
        long long sum = 0;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) {
                S.push_back(v);
                sum += d[v];
            }
        }
        if (sum < induced_subgraph(g, S).graph.genus()) return false;
    }
    return true;
}

void for_each_uniform(const DualGraph& g, const std::function<void(const Multidegree&)>& fn) {
    const int n = g.vertex_count();
    std::vector<long long> upper(n);
    for (int v = 0; v < n; ++v) {
        upper[v] = 2LL * g.weight(v) - 2 + g.valence(v);
        if (upper[v] < 0) return;  // no uniform multidegrees exist
    }
    Multidegree d(std::vector<long long>(n, 0));
    for (;;) {
        fn(d);
        int i = n - 1;
        while (i >= 0 && d[i] == upper[i]) {
            d[i] = 0;
            --i;
        }
        if (i < 0) return;
        ++d[i];
    }
}

std::vector<Multidegree> enumerate_uniform(const DualGraph& g) {
    std::vector<Multidegree> out;
    for_each_uniform(g, [&](const Multidegree& d) { out.push_back(d); });
    return out;
}

unsigned long long uniform_count(const DualGraph& g) {
    unsigned long long count = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long range = 2LL * g.weight(v) - 1 + g.valence(v);
        if (range <= 0) return 0;
        count *= static_cast<unsigned long long>(range);
    }
    return count;
}

std::vector<Multidegree> enumerate_stable(const DualGraph& g, long long total) {
    if (!is_stable(g)) {
        throw std::invalid_argument("stable multidegree enumeration requires a stable graph");
    }
    const long long genus = g.genus();
    if (total != genus - 1 && total != genus) {
        throw std::invalid_argument("stable multidegree total must be genus-1 or genus");
    }
    const int n = g.vertex_count();
    std::vector<Multidegree> out;
    Multidegree d(std::vector<long long>(n, 0));
    // compositions of `total` into n nonnegative parts, lexicographic
    std::function<void(int, long long)> rec = [&](int v, long long rest) {
        if (v == n - 1) {
            d[v] = rest;
            if (is_stable_multidegree(g, d)) out.push_back(d);
            return;
        }
        for (long long x = 0; x <= rest; ++x) {
            d[v] = x;
            rec(v + 1, rest - x);
        }
    };
    if (total >= 0 && n > 0) rec(0, total);
    return out;
}

}  // namespace nodal
