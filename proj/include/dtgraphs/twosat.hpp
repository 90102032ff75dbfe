#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace dtg {

/// Literal: variable index plus polarity.
struct Literal {
    int var;
    bool positive;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

/// Conjunction of two-literal clauses. Unit constraints are encoded as
/// (l v l).
struct TwoSatInstance {
    int var_count = 0;
    std::vector<std::pair<Literal, Literal>> clauses;

    void add_clause(Literal a, Literal b) { clauses.emplace_back(a, b); }
    void add_unit(Literal a) { clauses.emplace_back(a, a); }
};

using Assignment = std::vector<bool>;

/// Satisfying assignment via implication-graph SCCs, or nullopt when
/// unsatisfiable. Deterministic: returns the canonical SCC assignment.
std::optional<Assignment> solve(const TwoSatInstance& inst);

/// True iff every clause has a true literal.
bool evaluate(const TwoSatInstance& inst, const Assignment& a);

}  // namespace dtg
