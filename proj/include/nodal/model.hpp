#pragma once

#include <utility>
#include <vector>

#include "nodal/graph.hpp"
#include "nodal/matrix.hpp"
#include "nodal/multidegree.hpp"
#include "nodal/rational.hpp"

namespace nodal {

// Coordinates of a node on the affine charts of its two branches: at_u lives
// on the chart of edge.u's component, at_v on edge.v's. For a loop both lie
// on the same component and must differ.
struct EdgeCoords {
    Rational at_u;
    Rational at_v;
};

// A nodal curve with every component a projective line, described by its dual
// graph (all weights 0) and one rational chart coordinate per edge endpoint.
// All node coordinates on a component are pairwise distinct, and the chart's
// point at infinity carries no node.
class RationalCurveModel {
public:
    RationalCurveModel() = default;
    RationalCurveModel(DualGraph graph, std::vector<EdgeCoords> coords);

    const DualGraph& graph() const { return graph_; }
    const EdgeCoords& coords(int edge_pos) const { return coords_[edge_pos]; }
    const std::vector<EdgeCoords>& all_coords() const { return coords_; }

    // Node coordinates on the chart of component v, one per endpoint slot.
    std::vector<Rational> node_coords(int v) const;

private:
    DualGraph graph_;
    std::vector<EdgeCoords> coords_;
};

// One nonzero scalar per edge side; a section s glues over the edge iff
// left * s_u(at_u) == right * s_v(at_v).
struct Gluing {
    Rational left;
    Rational right;
};

// A line bundle on a RationalCurveModel: a multidegree plus gluing data. Its
// global sections on component v are the polynomials of degree <= d_v (the
// zero space if d_v < 0), subject to the gluing condition at every node.
class GluedLineBundle {
public:
    GluedLineBundle() = default;
    GluedLineBundle(RationalCurveModel model, Multidegree degree, std::vector<Gluing> gluing);

    const RationalCurveModel& model() const { return model_; }
    const DualGraph& graph() const { return model_.graph(); }
    const Multidegree& degree() const { return degree_; }
    const Gluing& gluing(int edge_pos) const { return gluing_[edge_pos]; }
    const std::vector<Gluing>& all_gluing() const { return gluing_; }

private:
    RationalCurveModel model_;
    Multidegree degree_;
    std::vector<Gluing> gluing_;
};

// The linear system whose null space is H^0: one row per edge, one column
// per monomial coefficient of a component with d_v >= 0.
RationalMatrix section_matrix(const GluedLineBundle& b);

// dim H^0(X, L), exactly.
int h0(const GluedLineBundle& b);

// A basis of global sections; entry [v] of a section is its coefficient
// vector on component v (empty when d_v < 0), lowest degree first.
std::vector<std::vector<std::vector<Rational>>> section_basis(const GluedLineBundle& b);

// The dualizing sheaf, with residue-matching gluing; h0 equals the genus.
// Requires val(v) >= 2 everywhere.
GluedLineBundle canonical_bundle(const RationalCurveModel& m);

// omega tensor L^{-1}: residual multidegree, gluing the componentwise
// quotient of the canonical gluing by b's.
GluedLineBundle residual_bundle(const GluedLineBundle& b);

// L(sign * p) for a smooth point p on component v. p must avoid the node
// coordinates of v.
GluedLineBundle twist_point(const GluedLineBundle& b, int v, const Rational& p, int sign);

// h0(L) == h0(L(-p)).
bool is_base_point(const GluedLineBundle& b, int v, const Rational& p);

// Pull-back to the partial normalization at the node of edge_pos: the edge is
// deleted, degrees are unchanged. Returns the bundle together with the two
// branch points (component, coordinate) the node split into.
struct Normalization {
    GluedLineBundle bundle;
    int branch_vertex[2];
    Rational branch_coord[2];
};
Normalization partial_normalization(const GluedLineBundle& b, int edge_pos);

// Restriction to the subcurve on S and to its complement twisted down at the
// former nodes.
std::pair<GluedLineBundle, GluedLineBundle> restrict_subcurve(const GluedLineBundle& b,
                                                              const std::vector<int>& S);

// Restriction to the subcurve on S alone (no twist).
GluedLineBundle restrict_to(const GluedLineBundle& b, const std::vector<int>& S);

// Push-forward along stabilization: contracts 2-valent weight-0 components,
// which must carry degree 0. Preserves h0.
GluedLineBundle stabilize_bundle(const GluedLineBundle& b);

// Gauge change making the gluing (1,1) on a spanning tree of each component;
// the remaining scalars are the gauge-class coordinates. h0 is unchanged.
GluedLineBundle gauge_normalize(const GluedLineBundle& b);

}  // namespace nodal
