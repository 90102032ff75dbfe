#include "dtgraphs/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dtgraphs/errors.hpp"

namespace dtg {

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidParameters("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_bits_.assign(static_cast<size_t>(n), VertexSet(n));
    g.adj_list_.resize(static_cast<size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") outside [0, " + std::to_string(n) + ")");
        if (u == v) throw SelfLoop(u);
        g.adj_bits_[static_cast<size_t>(u)].insert(v);
        g.adj_bits_[static_cast<size_t>(v)].insert(u);
    }
    g.m_ = 0;
    for (int v = 0; v < n; ++v) {
        g.adj_list_[static_cast<size_t>(v)] = g.adj_bits_[static_cast<size_t>(v)].to_vector();
        g.m_ += g.degree(v);
    }
    g.m_ /= 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbor_list(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* back_map) const {
    std::vector<int> ids = keep.to_vector();
    std::vector<int> pos(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < ids.size(); ++i) pos[static_cast<size_t>(ids[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : ids)
        for (int v : neighbor_list(u))
            if (u < v && keep.contains(v))
                es.emplace_back(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    if (back_map) *back_map = std::move(ids);
    return build(keep.size(), es);
}

BfsLayers bfs_layers(const Graph& g, const VertexSet& seed) {
    if (seed.empty()) throw EmptySeed();
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::deque<int> queue;
    for (int v = seed.first(); v >= 0; v = seed.next(v)) {
        dist[static_cast<size_t>(v)] = 0;
        queue.push_back(v);
    }
    int max_dist = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbor_list(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                max_dist = std::max(max_dist, dist[static_cast<size_t>(w)]);
                queue.push_back(w);
            }
        }
    }
    BfsLayers out;
    out.layers.assign(static_cast<size_t>(max_dist + 1), VertexSet(n));
    out.unreached = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        if (dist[static_cast<size_t>(v)] < 0)
            out.unreached.insert(v);
        else
            out.layers[static_cast<size_t>(dist[static_cast<size_t>(v)])].insert(v);
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        VertexSet comp(n);
        std::deque<int> queue{s};
        seen[static_cast<size_t>(s)] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.insert(u);
            for (int w : g.neighbor_list(u)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(line_no, "expected header \"n m\"");
        } else {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(line_no, "expected edge \"u v\"");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw IndexOutOfRange("line " + std::to_string(line_no) + ": vertex outside [0, " +
                                      std::to_string(n) + ")");
            edges.emplace_back(u, v);
        }
        std::string rest;
        if (ls >> rest) throw ParseError(line_no, "trailing tokens");
    }
    if (n < 0) throw ParseError(line_no, "missing header \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "header announced " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph::build(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace dtg
