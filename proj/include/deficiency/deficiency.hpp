#pragma once

#include "deficiency/graph.hpp"

#include <optional>
#include <variant>

namespace deficiency {

struct KrFactor {
    int r = 3;
};

struct HFactor {
    Graph pattern;
};

struct Hamiltonicity {};

using SpanningProperty = std::variant<KrFactor, HFactor, Hamiltonicity>;

struct DeficiencyQuery {
    SpanningProperty property;
    Graph graph;
    std::optional<int> t_cap;
};

// Default scan limit: (r-1)n for K_r-factors and (|H|-1)n for H-factors
// (every vertex of G can take its own clique of |H| vertices), and n for
// Hamiltonicity (alternate G and clique vertices), at least 3 - n.
int default_t_cap(const DeficiencyQuery& q);

// Whether G*K_t has the property. Joins below 3 vertices are never
// Hamiltonian.
bool has_property_at(const DeficiencyQuery& q, int t);

/// def(G): least t >= 0 with the property in G*K_t.
///
/// Factor properties only scan the residue class t = -n mod |tile|. The
/// scan stops at the first success, which is sound because a yes at t stays
/// a yes at t + |tile|: the extra clique vertices form one more tile.
/// Throws SizeError if no t up to the cap works or the join outgrows the
/// solvers.
int deficiency(const DeficiencyQuery& q);

// K_r-factor in G*K_t for the KrFactor query.
bool deficiency_monotone_step(const DeficiencyQuery& q, int t);

}  // namespace deficiency
