#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dtgraphs/graph.hpp"

namespace dtg {

enum class PatternKind { TwoK2, C4, P4, K13, Bull, Net, Sun3 };

/// Fixed small pattern graph with role labels. Layouts put the connected
/// core first so the backtracking matcher prunes early.
struct Pattern {
    PatternKind kind;
    std::string name;
    int order;
    std::vector<Edge> edges;
    int center;              // K13 only
    int bull_degree2;        // Bull only: the triangle vertex without a pendant
    std::vector<int> leaves; // degree-1 vertices (Bull, K13)
};

const Pattern& pattern(PatternKind kind);
const std::vector<PatternKind>& all_pattern_kinds();
PatternKind pattern_kind_from_name(const std::string& name);
Graph pattern_graph(PatternKind kind);

/// Injective map pattern vertex -> host vertex inducing exactly the
/// pattern's edges.
struct Witness {
    PatternKind kind;
    std::vector<int> map;
};

bool verify_witness(const Graph& host, const Witness& w);

/// First induced copy of the pattern, if any.
std::optional<Witness> find_induced(const Graph& g, PatternKind kind);

/// Visits every induced copy (all injective maps, so symmetric patterns are
/// reported once per automorphism). Return false from the visitor to stop.
void enumerate_induced(const Graph& g, PatternKind kind, const std::function<bool(const Witness&)>& visit);

/// Chordality via maximum-cardinality search; on failure `hole` holds an
/// induced chordless cycle of length >= 4.
struct ChordalityResult {
    bool chordal;
    std::vector<int> hole;
};

ChordalityResult is_chordal(const Graph& g);
bool verify_hole(const Graph& g, const std::vector<int>& cycle);

/// Chordal and free of induced nets and 3-suns (K13 is allowed).
struct SemiUnitIntervalResult {
    bool ok = false;
    std::vector<int> hole;                  // nonempty when chordality failed
    std::optional<Witness> pattern_witness; // Net or Sun3 otherwise
};

SemiUnitIntervalResult is_semi_unit_interval(const Graph& g);

/// Induced bull placed as: degree-2 vertex on the threshold side, the other
/// four on the unit side. Returns the first such witness.
std::optional<Witness> find_forbidden_bull_partition(const Graph& g, const VertexSet& threshold_part,
                                                     const VertexSet& unit_part);

/// Induced K13 placed with all four vertices on the unit side, or with
/// exactly one leaf on the threshold side and the rest on the unit side.
std::optional<Witness> find_forbidden_k13_partition(const Graph& g, const VertexSet& threshold_part,
                                                    const VertexSet& unit_part);

}  // namespace dtg
