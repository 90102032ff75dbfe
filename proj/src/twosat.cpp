#include "dtgraphs/twosat.hpp"

#include <algorithm>

#include "dtgraphs/errors.hpp"

namespace dtg {

namespace {

// Implication-graph node: 2*var for the positive literal, 2*var+1 negated.
int node_of(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }
int negation_of(int node) { return node ^ 1; }

void check_instance(const TwoSatInstance& inst) {
    for (const auto& [a, b] : inst.clauses)
        if (a.var < 0 || a.var >= inst.var_count || b.var < 0 || b.var >= inst.var_count)
            throw IndexOutOfRange("clause literal outside variable range");
}

// Iterative Tarjan; components are numbered in reverse topological order
// (sinks first).
struct Tarjan {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int comp_count = 0;

    explicit Tarjan(const std::vector<std::vector<int>>& a)
        : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1), on_stack(a.size(), false) {}

    void run(int root) {
        struct Frame {
            int node;
            size_t edge;
        };
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;
        while (!frames.empty()) {
            auto& [v, ei] = frames.back();
            if (ei < adj[static_cast<size_t>(v)].size()) {
                int w = adj[static_cast<size_t>(v)][ei++];
                if (index[static_cast<size_t>(w)] < 0) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = false;
                        comp[static_cast<size_t>(w)] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().node;
                    low[static_cast<size_t>(parent)] = std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
                }
            }
        }
    }
};

}  // namespace

std::optional<Assignment> solve(const TwoSatInstance& inst) {
    check_instance(inst);
    const int nodes = 2 * inst.var_count;
    std::vector<std::vector<int>> adj(static_cast<size_t>(nodes));
    for (const auto& [a, b] : inst.clauses) {
        adj[static_cast<size_t>(negation_of(node_of(a)))].push_back(node_of(b));
        adj[static_cast<size_t>(negation_of(node_of(b)))].push_back(node_of(a));
    }
    Tarjan t(adj);
    for (int v = 0; v < nodes; ++v)
        if (t.index[static_cast<size_t>(v)] < 0) t.run(v);
    Assignment a(static_cast<size_t>(inst.var_count));
    for (int x = 0; x < inst.var_count; ++x) {
        int cp = t.comp[static_cast<size_t>(2 * x)];
        int cn = t.comp[static_cast<size_t>(2 * x + 1)];
        if (cp == cn) return std::nullopt;
        a[static_cast<size_t>(x)] = cp < cn;  // sink side wins
    }
    return a;
}

bool evaluate(const TwoSatInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.size()) != inst.var_count)
        throw LengthMismatch("assignment has " + std::to_string(a.size()) + " values for " +
                             std::to_string(inst.var_count) + " variables");
    check_instance(inst);
    auto value = [&](Literal l) { return a[static_cast<size_t>(l.var)] == l.positive; };
    return std::all_of(inst.clauses.begin(), inst.clauses.end(),
                       [&](const auto& c) { return value(c.first) || value(c.second); });
}

}  // namespace dtg
