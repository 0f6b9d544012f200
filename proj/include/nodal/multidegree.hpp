#pragma once

#include <functional>
#include <vector>

#include "nodal/graph.hpp"
#include "nodal/rational.hpp"

namespace nodal {

// Integer vector indexed by the vertices of a dual graph; entries may be
// negative.
struct Multidegree {
    std::vector<long long> values;

    Multidegree() = default;
    explicit Multidegree(std::vector<long long> v) : values(std::move(v)) {}

    long long total() const {
        long long t = 0;
        for (long long x : values) t += x;
        return t;
    }

    long long operator[](int v) const { return values[v]; }
    long long& operator[](int v) { return values[v]; }

    bool operator==(const Multidegree&) const = default;
};

// Degree of the dualizing sheaf: 2 g_v - 2 + val(v) at each vertex.
Multidegree canonical_multidegree(const DualGraph& g);

// 0 <= d_v <= 2 g_v - 2 + val(v) at every vertex.
bool is_uniform(const DualGraph& g, const Multidegree& d);

// canonical_multidegree(g) - d; an involution.
Multidegree residual(const DualGraph& g, const Multidegree& d);

// total(d)/2 + leaf_count(bridge_forest(g))/2, exactly.
Rational clifford_bound(const DualGraph& g, const Multidegree& d);

// Dhar subgraph grown from v: repeatedly absorb the adjacent vertices whose
// degree, reduced by their edge count into the current set, is negative.
// Returns the fixed point as a sorted vertex list (always containing v).
std::vector<int> dhar(const DualGraph& g, const Multidegree& d, int v);

// Subset-sum stability check of a multidegree of total degree genus-1 or
// genus on a stable graph: sum of d over every proper subcurve dominates the
// subcurve's genus. Brute force over vertex subsets; graphs are capped at 12
// vertices.
bool is_stable_multidegree(const DualGraph& g, const Multidegree& d);

// Calls fn for every uniform multidegree on g, in lexicographic order.
void for_each_uniform(const DualGraph& g, const std::function<void(const Multidegree&)>& fn);

std::vector<Multidegree> enumerate_uniform(const DualGraph& g);

// Number of uniform multidegrees: product over v of (2 g_v - 1 + val(v)).
unsigned long long uniform_count(const DualGraph& g);

// Every stable multidegree of the given total degree, lexicographic.
std::vector<Multidegree> enumerate_stable(const DualGraph& g, long long total);

}  // namespace nodal
