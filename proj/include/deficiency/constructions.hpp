#pragma once

#include "deficiency/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace deficiency {

/// (n, t, r) for the K_r-factor deficiency problem, with the derived
/// k = ceil((t+1)/(r-1)) and q = t mod (r-1).
///
/// make() enforces n >= 2, t >= 0, r >= 3, t < (r-1)n and r | (n+t).
struct RFactorParams {
    int n = 0;
    int t = 0;
    int r = 0;
    int k = 0;
    int q = 0;

    static RFactorParams make(int n, int t, int r);
    static bool valid(int n, int t, int r);

    // |A| for EX_1: (n+t)/r + 1.
    int ex1_independent_size() const { return (n + t) / r + 1; }
    // |C| for EX_2: r - 2 - q.
    int ex2_dominating_size() const { return r - 2 - q; }

    bool operator==(const RFactorParams&) const = default;
};

// Every valid t for (n, r), ascending.
std::vector<int> valid_t_values(int n, int r);

// K_n with the edges inside A = {0, .., (n+t)/r} removed.
Graph ex1_factor(const RFactorParams& p);

// B = {0..k-1} isolated apart from C, C = the next r-2-q vertices, then the
// rest; V \ B is a clique and C is joined to everything.
Graph ex2_factor(const RFactorParams& p);

// Bandwidth variants (r = 2 shapes without the divisibility condition).
// ex1_band needs ceil((n+t)/2) < n; ex2_band needs 0 <= t <= n.
Graph ex1_band(int n, int t);
Graph ex2_band(int n, int t);

// |A| = alpha(H)(n+t)/|H| + 1, or nothing when that is not an integer.
std::optional<int> ex_h_independent_size(int n, int t, int pattern_order, int pattern_alpha);

// K_n minus the edges of A, |A| = alpha(H)(n+t)/|H| + 1.
Graph ex_h(int n, int t, const Graph& pattern);

// ex_h for H = K_{1,s}, plus the matching {0,1}, {2,3}, .. inside A.
Graph ex_h_prime(int n, int t, int s);

Graph star(int s);                   // K_{1,s}, centre 0
Graph cycle(int n);                  // C_n
Graph path(int n);                   // P_n on n vertices
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, int copies);

// H_1: bipartite on n+t vertices with independence number ceil((n+t)/2).
bool in_class_h1(const Graph& h, int n, int t);

// H_2: bipartite on n+t vertices with no tripartition (A, B, C) where
// |A| = n-t, |B| = |C| = t and N(C) is inside B.
bool in_class_h2(const Graph& h, int n, int t);

// The tripartition itself, as the C part, if one exists.
std::optional<std::vector<Vertex>> find_tripartition(const Graph& h, int n, int t);

}  // namespace deficiency
