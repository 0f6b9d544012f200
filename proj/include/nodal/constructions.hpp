#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nodal/graph.hpp"
#include "nodal/model.hpp"
#include "nodal/multidegree.hpp"

namespace nodal {

// --- deterministic graph families -----------------------------------------

// n-cycle; cycle(1) is a single vertex with a loop, cycle(2) a double edge.
DualGraph cycle(int n);

// Two vertices joined by k parallel edges; theta(3) is the theta graph.
DualGraph theta(int k);

// A central vertex joined by one bridge to one vertex of each of `leaves`
// cycles of length cycle_len.
DualGraph star_of_cycles(int leaves, int cycle_len);

// Every edge subdivided once by a weight-0 vertex (loops become 2-cycles).
DualGraph subdivided(const DualGraph& g);

struct RandomGraph {
    DualGraph graph;
    int attempts;
};

// Random connected weight-0 semistable multigraph; rejection-sampled.
RandomGraph random_semistable(int vertices, int edges, std::uint64_t seed);

// --- models ----------------------------------------------------------------

// Node coordinates 0, 1, 2, ... per component in edge-id order.
RationalCurveModel default_model(const DualGraph& g);

// Random distinct small rational coordinates per component.
RationalCurveModel with_random_coords(const DualGraph& g, std::uint64_t seed);

// Degree 0 everywhere, every gluing pair (1, 1).
GluedLineBundle structure_sheaf(const RationalCurveModel& m);

// --- the sharp and counterexample bundles ----------------------------------

// A bundle with uniform multidegree attaining h0 = total/2 + leaves/2: the
// canonical bundle when the bridge forest has two leaves, otherwise the
// dualizing sheaf of each leaf 2-edge-connected component twisted up at its
// attaching node, glued to the structure sheaf of the rest.
GluedLineBundle extremal_bundle(const RationalCurveModel& m);

// Central rational component carrying three 2-cycles, with degree 1 placed on
// each attachment vertex so the attaching node is a base point. h0 = 3 with
// uniform multidegree of total degree 3, violating h0 <= d/2 + 1.
std::pair<RationalCurveModel, GluedLineBundle> example_basic();

// A stable bridge-free graph with nine weight-1 2-valent vertices of degree 1
// around a weight-0 center of degree 6: a stable multidegree of total degree
// 15 (= genus) that is not uniform.
std::pair<DualGraph, Multidegree> example_stable_violation();

// Weight-0 companion of the above with each weight-1 vertex replaced by a
// 2-cycle, carrying a bundle with h0 = 9 > total/2 + 1 = 8.5.
GluedLineBundle example_stable_violation_surrogate();

}  // namespace nodal
