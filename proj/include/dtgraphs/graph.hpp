#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtgraphs/vertex_set.hpp"

namespace dtg {

using Edge = std::pair<int, int>;

/// Immutable undirected simple graph on vertices 0..n-1. Adjacency is kept
/// both as sorted neighbor lists (for iteration) and bitsets (for the set
/// intersections that dominate recognition cost).
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list; duplicates are merged.
    static Graph build(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const VertexSet& neighbors(int v) const {
        check(v);
        return adj_bits_[static_cast<size_t>(v)];
    }
    const std::vector<int>& neighbor_list(int v) const {
        check(v);
        return adj_list_[static_cast<size_t>(v)];
    }
    int degree(int v) const {
        check(v);
        return static_cast<int>(adj_list_[static_cast<size_t>(v)].size());
    }
    bool has_edge(int u, int v) const {
        check(u);
        return u != v && adj_bits_[static_cast<size_t>(v)].contains(u);
    }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`, relabeled to dense ids 0..|keep|-1 in
    /// ascending original-vertex order. `back_map[i]` is the original id.
    Graph induced(const VertexSet& keep, std::vector<int>* back_map = nullptr) const;

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_list_;
    std::vector<VertexSet> adj_bits_;
};

/// BFS distance layers from a seed set. `layers[l]` holds the vertices at
/// distance exactly l from the seed; vertices the search never reaches are
/// reported separately.
struct BfsLayers {
    std::vector<VertexSet> layers;
    VertexSet unreached;
};

BfsLayers bfs_layers(const Graph& g, const VertexSet& seed);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Edge-list text format: '#' comment lines, then "n m", then m lines "u v".
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace dtg
