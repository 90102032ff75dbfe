#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dtgraphs/graph.hpp"
#include "dtgraphs/rational.hpp"

namespace dtg {

/// Realizing parameters: edge ij exists iff w(i)+w(j) >= alpha and
/// |w(i)-w(j)| <= beta, with alpha >= beta > 0 and positive weights.
struct WeightAssignment {
    Rational alpha;
    Rational beta;
    std::vector<Rational> weights;
};

Rational default_alpha();
Rational default_beta();

void validate_parameters(const Rational& alpha, const Rational& beta);

bool edge_exists(const Rational& wi, const Rational& wj, const Rational& alpha, const Rational& beta);

/// Graph on |w| vertices realized by the edge predicate over all pairs.
Graph realize(const Rational& alpha, const Rational& beta, const std::vector<Rational>& w);

/// Ordered distance layers: layers[l] holds the vertices at distance
/// exactly l from layers[0]; consecutive layers partition the vertex set
/// and no edge skips a layer.
struct DistanceDecomposition {
    std::vector<VertexSet> layers;

    int layer_count_above_base() const { return static_cast<int>(layers.size()) - 1; }
};

/// BFS layering seeded at `c0`; throws Unreachable if some vertex is not
/// reached.
DistanceDecomposition decompose_from_c0(const Graph& g, const VertexSet& c0);

/// Which structural requirement a decomposition failed, with a witness
/// pair of vertices.
struct ConditionCheck {
    bool ok = true;
    int failed_condition = 0;  // 1: base preorder not total; 2: layer not a clique; 3: layer preorder not total
    int layer = -1;
    std::pair<int, int> witness{-1, -1};
};

/// Verifies the three decomposition conditions: a total vicinal preorder on
/// the base layer, cliques on every later layer, and a total
/// adjacent-layer-containment preorder within each later layer.
ConditionCheck check_theorem_conditions(const Graph& g, const DistanceDecomposition& d);

/// Relation used by condition 3: within layer l, i is below j when j's
/// neighborhood in layer l-1 is contained in i's and i's neighborhood in
/// layer l+1 is contained in j's.
bool layer_r(const Graph& g, const DistanceDecomposition& d, int l, int i, int j);

/// Base-layer weights: realizes the induced subgraph as a threshold graph
/// with threshold exactly alpha, all weights distinct and strictly inside
/// ((alpha-beta)/2, (alpha+beta)/2). Entries outside c0 are left zero.
std::vector<Rational> assign_c0_weights(const Graph& g, const VertexSet& c0, const Rational& alpha,
                                        const Rational& beta);

/// Safety margin for the layer recursion: half the minimum of the two
/// bounds (smallest distinct-pair gap in the base weights, and n/(n+1)
/// times the clearance above (alpha-beta)/2).
Rational choose_epsilon(const std::vector<Rational>& c0_values, const Rational& alpha, const Rational& beta,
                        int n);

/// Extends base-layer weights over all layers via the recursion
///   w(i) = beta + min{w(k) : k in N(i), layer l-1}
///          - eps/(n+1)^(l-1) * (1 - |N(i) in layer l+1|/(n+1)).
std::vector<Rational> assign_layer_weights(const Graph& g, const DistanceDecomposition& d,
                                           std::vector<Rational> weights, const Rational& epsilon,
                                           const Rational& alpha, const Rational& beta, int n);

struct SynthesisResult {
    WeightAssignment assignment;
    Rational epsilon;
};

/// Full pipeline: base weights, epsilon, layer recursion, then an exact
/// verification of the realized edge set (SynthesisFailed on mismatch).
SynthesisResult synthesize_detailed(const Graph& g, const DistanceDecomposition& d, const Rational& alpha,
                                    const Rational& beta);
WeightAssignment synthesize(const Graph& g, const DistanceDecomposition& d, const Rational& alpha,
                            const Rational& beta);

struct VerifyResult {
    bool ok = true;
    std::pair<int, int> violating{-1, -1};
};

/// Exact pairwise check that the assignment reproduces g's edge set.
VerifyResult verify_dt(const Graph& g, const WeightAssignment& wa);

}  // namespace dtg
