#pragma once

#include "dtgraphs/graph.hpp"

namespace dtg {

/// Vicinal relation: N(i) \ {j} is contained in N(j). Containment is
/// non-strict; with it, i-below-j in any realizing weight order.
inline bool vicinal_r(const Graph& g, int i, int j) {
    VertexSet rest = g.neighbors(i);
    if (rest.contains(j)) rest.erase(j);
    return rest.is_subset_of(g.neighbors(j));
}

inline bool vicinal_comparable(const Graph& g, int i, int j) {
    return vicinal_r(g, i, j) || vicinal_r(g, j, i);
}

}  // namespace dtg
