#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nodal/constructions.hpp"
#include "nodal/model.hpp"
#include "nodal/multidegree.hpp"

#include "json.hpp"

namespace nodal {

// Random gauge-normalized gluing of the given multidegree: (1,1) on a
// spanning tree, a random nonzero scalar with |numerator| <= box elsewhere.
GluedLineBundle random_bundle(const RationalCurveModel& m, const Multidegree& d,
                              std::mt19937_64& rng, long long box = 10);

struct CampaignEntry {
    Multidegree d;
    long long total = 0;
    Rational bound;
    long long max_h0 = -1;
    bool sharp = false;
    std::optional<GluedLineBundle> witness;
    std::string witness_file;
};

struct VerificationReport {
    std::string graph_name;
    DualGraph graph;
    long long genus = 0;
    int leaves = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CampaignEntry> entries;
    bool passed = true;  // no h0 above the bound anywhere
};

// Main inequality check: for every uniform multidegree, h0 over sampled and
// structured gluings stays within total/2 + leaves/2. An exceedance flips
// `passed` and keeps the offending bundle as the entry witness.
VerificationReport verify_clifford(const RationalCurveModel& m, int samples, std::uint64_t seed,
                                   const std::string& name = "");

struct GenericReport {
    std::string graph_name;
    std::uint64_t seed = 0;
    int trials = 0;
    long long checked = 0;
    bool all_classic = true;              // every random draw meets d/2 + 1
    bool extremal_violates_classic = false;
    long long extremal_h0 = -1;
    long long extremal_total = 0;
};

// Generic behaviour: random gluings with large numerators satisfy the classic
// Clifford bound even where the special extremal gluing does not.
GenericReport verify_generic(const RationalCurveModel& m, int trials, std::uint64_t seed);

struct CheckResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
};

struct LemmaReport {
    std::string graph_name;
    std::vector<CheckResult> checks;
    bool passed = true;
};

// Battery of exact identities on one model: Riemann-Roch, residual
// equivalence, canonical h0, base-point duality, normalization sandwich with
// neutral pairs, subcurve bound, stabilization push-forward, Dhar lemmas,
// leaf-count lemmas, stable-multidegree uniformity.
LemmaReport verify_lemmas(const RationalCurveModel& m, std::uint64_t seed);

// Purely combinatorial lemma battery; works for weighted graphs too.
LemmaReport verify_graph_lemmas(const DualGraph& g, const std::string& name = "");

struct CliffordIndexEstimate {
    bool found = false;  // no qualifying bundle: the minimum is empty (+inf)
    long long value = 0;
    std::optional<GluedLineBundle> witness;
};

// Upper-bound estimate of the Clifford index: minimum of d - 2 h0 + 2 over
// uniform multidegrees and the sampled + structured gluing set, restricted to
// h0 >= 2 and h1 >= 2.
CliffordIndexEstimate clifford_index_estimate(const RationalCurveModel& m, int samples,
                                              std::uint64_t seed);

// All connected weight-0 semistable multigraphs within the size caps, one
// per isomorphism class.
std::vector<DualGraph> exhaustive_semistable_graphs(int max_vertices, int max_edges);

// The exhaustive small graphs plus the named families used throughout.
struct NamedGraph {
    std::string name;
    DualGraph graph;
};
std::vector<NamedGraph> default_corpus();

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const GenericReport& r);
nlohmann::json to_json(const LemmaReport& r);

inline constexpr int kReportVersion = 1;

}  // namespace nodal
