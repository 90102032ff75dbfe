#include "dtgraphs/patterns.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "dtgraphs/errors.hpp"

namespace dtg {

namespace {

std::vector<Pattern> make_patterns() {
    std::vector<Pattern> ps;
    ps.push_back({PatternKind::TwoK2, "2K2", 4, {{0, 1}, {2, 3}}, -1, -1, {}});
    ps.push_back({PatternKind::C4, "C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, -1, -1, {}});
    ps.push_back({PatternKind::P4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}, -1, -1, {}});
    ps.push_back({PatternKind::K13, "K13", 4, {{0, 1}, {0, 2}, {0, 3}}, 0, -1, {1, 2, 3}});
    // Triangle 0-1-2; pendants 3 on 0 and 4 on 1; vertex 2 has degree 2.
    ps.push_back({PatternKind::Bull, "bull", 5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}, -1, 2, {3, 4}});
    // Triangle 0-1-2 with one pendant per triangle vertex.
    ps.push_back({PatternKind::Net, "net", 6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}, -1, -1, {3, 4, 5}});
    // Inner triangle 0-1-2; outer independent 3,4,5 each adjacent to two
    // consecutive inner vertices.
    ps.push_back({PatternKind::Sun3, "sun3", 6,
                  {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}}, -1, -1, {}});
    return ps;
}

const std::vector<Pattern>& patterns() {
    static const std::vector<Pattern> ps = make_patterns();
    return ps;
}

}  // namespace

const Pattern& pattern(PatternKind kind) {
    for (const auto& p : patterns())
        if (p.kind == kind) return p;
    throw Error("unregistered pattern");
}

const std::vector<PatternKind>& all_pattern_kinds() {
    static const std::vector<PatternKind> ks = {PatternKind::TwoK2, PatternKind::C4,  PatternKind::P4,
                                                PatternKind::K13,   PatternKind::Bull, PatternKind::Net,
                                                PatternKind::Sun3};
    return ks;
}

PatternKind pattern_kind_from_name(const std::string& name) {
    for (const auto& p : patterns())
        if (p.name == name) return p.kind;
    throw UnknownName(name);
}

Graph pattern_graph(PatternKind kind) {
    const Pattern& p = pattern(kind);
    return Graph::build(p.order, p.edges);
}

bool verify_witness(const Graph& host, const Witness& w) {
    const Pattern& p = pattern(w.kind);
    if (static_cast<int>(w.map.size()) != p.order) return false;
    for (int i = 0; i < p.order; ++i) {
        if (w.map[static_cast<size_t>(i)] < 0 || w.map[static_cast<size_t>(i)] >= host.vertex_count()) return false;
        for (int j = i + 1; j < p.order; ++j)
            if (w.map[static_cast<size_t>(i)] == w.map[static_cast<size_t>(j)]) return false;
    }
    Graph pg = pattern_graph(w.kind);
    for (int i = 0; i < p.order; ++i)
        for (int j = i + 1; j < p.order; ++j)
            if (pg.has_edge(i, j) != host.has_edge(w.map[static_cast<size_t>(i)], w.map[static_cast<size_t>(j)]))
                return false;
    return true;
}

namespace {

struct Matcher {
    const Graph& host;
    Graph pat;
    const std::function<bool(const Witness&)>& visit;
    PatternKind kind;
    std::vector<int> map;
    std::vector<bool> used;
    bool stopped = false;

    Matcher(const Graph& h, PatternKind k, const std::function<bool(const Witness&)>& v)
        : host(h), pat(pattern_graph(k)), visit(v), kind(k),
          map(static_cast<size_t>(pat.vertex_count()), -1),
          used(static_cast<size_t>(h.vertex_count()), false) {}

    void extend(int depth) {
        if (stopped) return;
        if (depth == pat.vertex_count()) {
            if (!visit(Witness{kind, map})) stopped = true;
            return;
        }
        const int pd = pat.degree(depth);
        for (int cand = 0; cand < host.vertex_count(); ++cand) {
            if (used[static_cast<size_t>(cand)] || host.degree(cand) < pd) continue;
            bool fits = true;
            for (int prev = 0; prev < depth && fits; ++prev)
                if (pat.has_edge(depth, prev) != host.has_edge(cand, map[static_cast<size_t>(prev)])) fits = false;
            if (!fits) continue;
            map[static_cast<size_t>(depth)] = cand;
            used[static_cast<size_t>(cand)] = true;
            extend(depth + 1);
            used[static_cast<size_t>(cand)] = false;
            map[static_cast<size_t>(depth)] = -1;
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_induced(const Graph& g, PatternKind kind, const std::function<bool(const Witness&)>& visit) {
    if (g.vertex_count() < pattern(kind).order) return;
    Matcher m(g, kind, visit);
    m.extend(0);
}

std::optional<Witness> find_induced(const Graph& g, PatternKind kind) {
    std::optional<Witness> found;
    enumerate_induced(g, kind, [&](const Witness& w) {
        found = w;
        return false;
    });
    return found;
}

namespace {

// Max-cardinality search visit order; the reverse is a perfect elimination
// ordering iff the graph is chordal.
std::vector<int> mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> numbered(static_cast<size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<size_t>(v)] && (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        numbered[static_cast<size_t>(best)] = true;
        order.push_back(best);
        for (int w : g.neighbor_list(best))
            if (!numbered[static_cast<size_t>(w)]) ++weight[static_cast<size_t>(w)];
    }
    return order;
}

// Shortest u..w path whose interior avoids N[v]; with u, w nonadjacent
// neighbors of v this closes into a chordless cycle through v.
std::vector<int> hole_through(const Graph& g, int v, int u, int w) {
    const int n = g.vertex_count();
    VertexSet allowed = g.neighbors(v).complement();
    allowed.erase(v);
    allowed.insert(u);
    allowed.insert(w);
    std::vector<int> prev(static_cast<size_t>(n), -2);
    std::deque<int> queue{u};
    prev[static_cast<size_t>(u)] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == w) break;
        for (int y : g.neighbor_list(x)) {
            if (!allowed.contains(y) || prev[static_cast<size_t>(y)] != -2) continue;
            prev[static_cast<size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    if (prev[static_cast<size_t>(w)] == -2) return {};
    std::vector<int> path;
    for (int x = w; x != -1; x = prev[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    path.push_back(v);  // cycle v, u, ..., w
    std::rotate(path.begin(), path.end() - 1, path.end());
    return path;
}

std::vector<int> find_chordless_cycle(const Graph& g, int hint_v, int hint_u, int hint_w) {
    if (hint_v >= 0) {
        auto cyc = hole_through(g, hint_v, hint_u, hint_w);
        if (!cyc.empty() && verify_hole(g, cyc)) return cyc;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbor_list(v);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                auto cyc = hole_through(g, v, nb[a], nb[b]);
                if (!cyc.empty() && verify_hole(g, cyc)) return cyc;
            }
    }
    return {};
}

}  // namespace

bool verify_hole(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (cycle[static_cast<size_t>(i)] == cycle[static_cast<size_t>(j)]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>(j)]) != consecutive) return false;
        }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order = mcs_order(g);
    std::vector<int> pos(static_cast<size_t>(n), 0);  // position in the elimination order (reverse of visit)
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = n - 1 - i;
    for (int v = 0; v < n; ++v) {
        // Later neighbors in elimination order, and the earliest of them.
        int parent = -1;
        for (int w : g.neighbor_list(v)) {
            if (pos[static_cast<size_t>(w)] <= pos[static_cast<size_t>(v)]) continue;
            if (parent < 0 || pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(parent)]) parent = w;
        }
        if (parent < 0) continue;
        for (int w : g.neighbor_list(v)) {
            if (pos[static_cast<size_t>(w)] <= pos[static_cast<size_t>(v)] || w == parent) continue;
            if (!g.has_edge(parent, w)) {
                auto hole = find_chordless_cycle(g, v, parent, w);
                if (hole.empty()) throw Error("chordality check failed but no hole extracted");
                return {false, hole};
            }
        }
    }
    return {true, {}};
}

SemiUnitIntervalResult is_semi_unit_interval(const Graph& g) {
    SemiUnitIntervalResult r;
    auto ch = is_chordal(g);
    if (!ch.chordal) {
        r.hole = std::move(ch.hole);
        return r;
    }
    if (auto net = find_induced(g, PatternKind::Net)) {
        r.pattern_witness = std::move(net);
        return r;
    }
    if (auto sun = find_induced(g, PatternKind::Sun3)) {
        r.pattern_witness = std::move(sun);
        return r;
    }
    r.ok = true;
    return r;
}

std::optional<Witness> find_forbidden_bull_partition(const Graph& g, const VertexSet& threshold_part,
                                                     const VertexSet& unit_part) {
    const Pattern& p = pattern(PatternKind::Bull);
    std::optional<Witness> found;
    enumerate_induced(g, PatternKind::Bull, [&](const Witness& w) {
        int deg2 = w.map[static_cast<size_t>(p.bull_degree2)];
        if (!threshold_part.contains(deg2)) return true;
        for (int i = 0; i < p.order; ++i) {
            if (i == p.bull_degree2) continue;
            if (!unit_part.contains(w.map[static_cast<size_t>(i)])) return true;
        }
        found = w;
        return false;
    });
    return found;
}

std::optional<Witness> find_forbidden_k13_partition(const Graph& g, const VertexSet& threshold_part,
                                                    const VertexSet& unit_part) {
    const Pattern& p = pattern(PatternKind::K13);
    std::optional<Witness> found;
    enumerate_induced(g, PatternKind::K13, [&](const Witness& w) {
        if (!unit_part.contains(w.map[static_cast<size_t>(p.center)])) return true;
        int leaves_in_t = 0;
        for (int l : p.leaves) {
            int host = w.map[static_cast<size_t>(l)];
            if (threshold_part.contains(host))
                ++leaves_in_t;
            else if (!unit_part.contains(host))
                return true;
        }
        if (leaves_in_t > 1) return true;
        found = w;
        return false;
    });
    return found;
}

}  // namespace dtg
