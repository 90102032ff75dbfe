#include "dtgraphs/weights.hpp"

#include <algorithm>
#include <map>

#include "dtgraphs/errors.hpp"
#include "dtgraphs/preorder.hpp"

namespace dtg {

Rational default_alpha() { return Rational(2); }
Rational default_beta() { return Rational(1); }

void validate_parameters(const Rational& alpha, const Rational& beta) {
    if (!(beta > 0) || !(alpha >= beta))
        throw InvalidParameters("need alpha >= beta > 0, got alpha=" + to_fraction_string(alpha) +
                                " beta=" + to_fraction_string(beta));
}

bool edge_exists(const Rational& wi, const Rational& wj, const Rational& alpha, const Rational& beta) {
    validate_parameters(alpha, beta);
    if (!(wi > 0) || !(wj > 0)) throw InvalidParameters("weights must be positive");
    return wi + wj >= alpha && abs(wi - wj) <= beta;
}

Graph realize(const Rational& alpha, const Rational& beta, const std::vector<Rational>& w) {
    validate_parameters(alpha, beta);
    const int n = static_cast<int>(w.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge_exists(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)], alpha, beta))
                edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

DistanceDecomposition decompose_from_c0(const Graph& g, const VertexSet& c0) {
    auto bfs = bfs_layers(g, c0);
    if (!bfs.unreached.empty()) throw Unreachable(bfs.unreached.first());
    return DistanceDecomposition{std::move(bfs.layers)};
}

bool layer_r(const Graph& g, const DistanceDecomposition& d, int l, int i, int j) {
    const auto& below = d.layers[static_cast<size_t>(l - 1)];
    VertexSet down_i = g.neighbors(i) & below;
    VertexSet down_j = g.neighbors(j) & below;
    if (!down_j.is_subset_of(down_i)) return false;
    if (l + 1 < static_cast<int>(d.layers.size())) {
        const auto& above = d.layers[static_cast<size_t>(l + 1)];
        VertexSet up_i = g.neighbors(i) & above;
        VertexSet up_j = g.neighbors(j) & above;
        if (!up_i.is_subset_of(up_j)) return false;
    }
    return true;
}

ConditionCheck check_theorem_conditions(const Graph& g, const DistanceDecomposition& d) {
    const auto& base = d.layers.front();
    auto base_members = base.to_vector();
    for (size_t a = 0; a < base_members.size(); ++a)
        for (size_t b = a + 1; b < base_members.size(); ++b)
            if (!vicinal_comparable(g, base_members[a], base_members[b]))
                return {false, 1, 0, {base_members[a], base_members[b]}};
    for (int l = 1; l < static_cast<int>(d.layers.size()); ++l) {
        auto members = d.layers[static_cast<size_t>(l)].to_vector();
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (!g.has_edge(members[a], members[b]))
                    return {false, 2, l, {members[a], members[b]}};
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (!layer_r(g, d, l, members[a], members[b]) && !layer_r(g, d, l, members[b], members[a]))
                    return {false, 3, l, {members[a], members[b]}};
    }
    return {};
}

std::vector<Rational> assign_c0_weights(const Graph& g, const VertexSet& c0, const Rational& alpha,
                                        const Rational& beta) {
    validate_parameters(alpha, beta);
    std::vector<int> ids;
    Graph sub = g.induced(c0, &ids);
    const int k = sub.vertex_count();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!vicinal_comparable(sub, a, b))
                throw NotThreshold("base layer induces no threshold graph: vertices " + std::to_string(ids[static_cast<size_t>(a)]) +
                                   " and " + std::to_string(ids[static_cast<size_t>(b)]) + " are incomparable");

    // Degree partition of the induced subgraph: class 0 holds isolated-in-base
    // vertices, classes 1..m' the distinct positive degrees ascending.
    std::vector<int> distinct;
    for (int v = 0; v < k; ++v)
        if (sub.degree(v) > 0) distinct.push_back(sub.degree(v));
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto class_of = [&](int v) {
        if (sub.degree(v) == 0) return 0;
        return static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sub.degree(v)) -
                                distinct.begin()) + 1;
    };
    const int threshold0 = static_cast<int>(distinct.size()) + 1;

    std::vector<int> class_size(static_cast<size_t>(threshold0), 0);
    for (int v = 0; v < k; ++v) ++class_size[static_cast<size_t>(class_of(v))];

    // Base value = class index, plus a distinct tie-breaking offset in
    // (0, 1/2) per vertex within its class; sums stay on the correct side of
    // the integer threshold.
    std::vector<Rational> raw(static_cast<size_t>(k));
    std::vector<int> seen(static_cast<size_t>(threshold0), 0);
    for (int v = 0; v < k; ++v) {
        int c = class_of(v);
        int rank = ++seen[static_cast<size_t>(c)];
        raw[static_cast<size_t>(v)] = Rational(c) + Rational(rank, 2 * (class_size[static_cast<size_t>(c)] + 1));
    }

    // Affine map sending the separation threshold exactly to alpha and all
    // values strictly inside ((alpha-beta)/2, (alpha+beta)/2).
    Rational scale = beta / (2 * Rational(threshold0));
    Rational offset = (alpha - beta / 2) / 2;

    std::vector<Rational> out(static_cast<size_t>(g.vertex_count()), Rational(0));
    for (int v = 0; v < k; ++v) out[static_cast<size_t>(ids[static_cast<size_t>(v)])] = scale * raw[static_cast<size_t>(v)] + offset;

    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool edge = edge_exists(out[static_cast<size_t>(ids[static_cast<size_t>(a)])],
                                    out[static_cast<size_t>(ids[static_cast<size_t>(b)])], alpha, beta);
            if (edge != sub.has_edge(a, b))
                throw SynthesisFailed("base-layer weights do not realize the induced subgraph");
        }
    return out;
}

Rational choose_epsilon(const std::vector<Rational>& c0_values, const Rational& alpha, const Rational& beta,
                        int n) {
    validate_parameters(alpha, beta);
    if (c0_values.empty()) throw DegenerateWeights("no base-layer weights");
    if (n <= 0) throw InvalidParameters("vertex count must be positive");
    Rational low_edge = (alpha - beta) / 2;
    Rational clearance;
    bool first = true;
    for (const auto& w : c0_values) {
        Rational c = w - low_edge;
        if (first || c < clearance) clearance = c;
        first = false;
    }
    if (!(clearance > 0)) throw DegenerateWeights("base-layer weight on the boundary (alpha-beta)/2");
    Rational bound = Rational(n, n + 1) * clearance;

    std::vector<Rational> sorted = c0_values;
    std::sort(sorted.begin(), sorted.end());
    bool have_gap = false;
    Rational gap;
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) continue;
        Rational d = sorted[i] - sorted[i - 1];
        if (!have_gap || d < gap) gap = d;
        have_gap = true;
    }
    if (have_gap && gap < bound) bound = gap;
    return bound / 2;
}

std::vector<Rational> assign_layer_weights(const Graph& g, const DistanceDecomposition& d,
                                           std::vector<Rational> weights, const Rational& epsilon,
                                           const Rational& alpha, const Rational& beta, int n) {
    validate_parameters(alpha, beta);
    if (!(epsilon > 0)) throw InvalidParameters("epsilon must be positive");
    if (static_cast<int>(weights.size()) != g.vertex_count())
        throw LengthMismatch("weight vector does not match vertex count");
    BigInt pow = 1;  // (n+1)^(l-1)
    for (int l = 1; l < static_cast<int>(d.layers.size()); ++l) {
        const auto& layer = d.layers[static_cast<size_t>(l)];
        const auto& below = d.layers[static_cast<size_t>(l - 1)];
        for (int i = layer.first(); i >= 0; i = layer.next(i)) {
            VertexSet down = g.neighbors(i) & below;
            if (down.empty())
                throw PreconditionViolated("vertex " + std::to_string(i) + " in layer " + std::to_string(l) +
                                           " has no neighbor one layer below");
            bool first = true;
            Rational down_min;
            for (int k = down.first(); k >= 0; k = down.next(k)) {
                if (first || weights[static_cast<size_t>(k)] < down_min) down_min = weights[static_cast<size_t>(k)];
                first = false;
            }
            int up_count = 0;
            if (l + 1 < static_cast<int>(d.layers.size()))
                up_count = (g.neighbors(i) & d.layers[static_cast<size_t>(l + 1)]).size();
            Rational damp = Rational(1) - Rational(up_count, n + 1);
            weights[static_cast<size_t>(i)] = beta + down_min - (epsilon / Rational(pow)) * damp;
        }
        pow *= n + 1;
    }
    return weights;
}

SynthesisResult synthesize_detailed(const Graph& g, const DistanceDecomposition& d, const Rational& alpha,
                                    const Rational& beta) {
    validate_parameters(alpha, beta);
    auto check = check_theorem_conditions(g, d);
    if (!check.ok)
        throw PreconditionViolated("decomposition violates condition " + std::to_string(check.failed_condition) +
                                   " in layer " + std::to_string(check.layer));
    const int n = g.vertex_count();
    auto weights = assign_c0_weights(g, d.layers.front(), alpha, beta);
    std::vector<Rational> base_values;
    for (int v = d.layers.front().first(); v >= 0; v = d.layers.front().next(v))
        base_values.push_back(weights[static_cast<size_t>(v)]);
    Rational eps = choose_epsilon(base_values, alpha, beta, n);
    weights = assign_layer_weights(g, d, std::move(weights), eps, alpha, beta, n);
    SynthesisResult result{{alpha, beta, std::move(weights)}, eps};
    auto verdict = verify_dt(g, result.assignment);
    if (!verdict.ok)
        throw SynthesisFailed("synthesized weights fail on pair (" + std::to_string(verdict.violating.first) +
                              "," + std::to_string(verdict.violating.second) + ")");
    return result;
}

WeightAssignment synthesize(const Graph& g, const DistanceDecomposition& d, const Rational& alpha,
                            const Rational& beta) {
    return synthesize_detailed(g, d, alpha, beta).assignment;
}

VerifyResult verify_dt(const Graph& g, const WeightAssignment& wa) {
    if (static_cast<int>(wa.weights.size()) != g.vertex_count())
        throw LengthMismatch("assignment has " + std::to_string(wa.weights.size()) + " weights for " +
                             std::to_string(g.vertex_count()) + " vertices");
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge_exists(wa.weights[static_cast<size_t>(i)], wa.weights[static_cast<size_t>(j)], wa.alpha, wa.beta) !=
                g.has_edge(i, j))
                return {false, {i, j}};
    return {};
}

}  // namespace dtg
