#pragma once

#include "deficiency/certificate.hpp"
#include "deficiency/graph.hpp"

#include <map>
#include <utility>
#include <vector>

namespace deficiency {

// G with every missing edge at v added, so d(v) = n-1.
Graph saturate_vertex(const Graph& g, Vertex v);

enum class VertexRewireCase { AlreadyValid, CliqueTile, NeighbourTile };

struct VertexRewire {
    FactorCertificate factor;
    VertexRewireCase used = VertexRewireCase::AlreadyValid;
};

/// Turns a K_r-factor of saturate_vertex(G, v) * K_t into one of G * K_t.
///
/// G is the plain n-vertex graph; in the join, vertices n..n+t-1 are the
/// clique. Requires n-1-ceil((t+1)/(r-1)) < d_G(v). The tile through v is
/// kept if it is still a clique of G * K_t; otherwise v trades places with
/// a clique vertex u of another tile, either a tile lying inside K_t or one
/// whose vertices are all neighbours of v. u is the lowest eligible vertex
/// of the first eligible tile.
VertexRewire rewire_factor_vertex(const Graph& g, int t, Vertex v, const FactorCertificate& saturated_factor);

/// Q, a maximum clique through the edge xy (lexicographically least among
/// ties), and the edge endpoints.
struct CliqueContext {
    std::vector<Vertex> q;
    int ell = 0;
    Vertex x = -1;
    Vertex y = -1;

    // Filled in by rewire_factor_clique: Q \ V(K^x) -> V(K^x) cap V(K_t).
    std::map<Vertex, Vertex> injection;
};

// Maximum clique containing both u and v, lexicographically least among the
// maximum ones. Requires uv to be an edge.
std::vector<Vertex> max_clique_through_edge(const Graph& g, Vertex u, Vertex v);

/// Drops every edge from x to V(G) \ Q, then adds every missing edge at the
/// vertices of Q \ {x}. Requires xy to be an edge in no K_r.
std::pair<Graph, CliqueContext> edge_clique_transform(const Graph& g, Vertex x, Vertex y, int r);

/// Turns a K_r-factor of G' * K_t (G' from edge_clique_transform) into one
/// with no edge between Q and V(G') \ Q: tiles other than K^x swap their Q
/// vertices for clique vertices of K^x, and Q is completed to a tile with the
/// clique vertices of K^x left over. `ctx.injection` records the swap.
FactorCertificate rewire_factor_clique(const Graph& g_prime, int t, CliqueContext& ctx,
                                       const FactorCertificate& factor);

// True if some tile uses an edge between Q and V(G) \ Q (G = first n vertices).
bool uses_q_boundary(const FactorCertificate& factor, const std::vector<Vertex>& q, int n);

std::string to_string(VertexRewireCase c);

}  // namespace deficiency
