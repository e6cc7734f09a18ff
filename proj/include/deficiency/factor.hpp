#pragma once

#include "deficiency/certificate.hpp"
#include "deficiency/graph.hpp"
#include "deficiency/rational.hpp"

#include <optional>
#include <vector>

namespace deficiency {

inline constexpr int kFactorMaxOrder = 64;

/// Exact K_r-factor search.
///
/// Exact cover by backtracking: the lowest-index uncovered vertex is always
/// covered next, by an r-clique drawn from its uncovered neighbourhood in
/// ascending order. Uncovered sets already proven infeasible are cached.
/// Tiles come out sorted, in the order they were chosen.
std::optional<FactorCertificate> kr_factor(const Graph& g, int r);

/// Perfect H-tiling. Each tile is any copy of `pattern` (not necessarily
/// induced); tiles[i][j] is the image of pattern vertex j.
std::optional<FactorCertificate> h_factor(const Graph& g, const Graph& pattern);

/// Hamilton cycle as a vertex sequence starting at 0. Requires n >= 3.
std::optional<FactorCertificate> hamilton_cycle(const Graph& g);

/// A copy of `pattern` in `host` (subgraph, not necessarily induced):
/// mapping[j] is the host vertex used for pattern vertex j.
std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host);

// r | n and delta(G) >= (1 - 1/r) n. True guarantees a K_r-factor.
bool hajnal_szemeredi_guarantee(const Graph& g, int r);

// d_i >= i + gamma n for every 1-based index i < n/2 of the sorted degrees.
bool degree_sequence_condition(const Graph& g, const Rational& gamma);

}  // namespace deficiency
