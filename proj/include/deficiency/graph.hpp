#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace deficiency {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Single-word vertex set, used by every exact search (they all cap n at 64).
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

/// Undirected simple graph with bitrow adjacency.
///
/// Immutable once built; use GraphBuilder to derive modified copies. Rows
/// span ceil(n/64) words, so graphs above 64 vertices are representable,
/// but the searches only accept n <= 64 and go through neighbours64().
///
/// A graph may carry a clique mark: the vertices added by join(). Marked
/// vertices are always adjacent to every other vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges)
    {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static Graph complete(int n);

    int order() const { return n_; }
    std::int64_t edge_count() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::vector<Vertex> neighbours(Vertex v) const;
    std::vector<Edge> edges() const;

    // Adjacency row of v as one word; requires order() <= 64.
    Mask neighbours64(Vertex v) const;
    // All vertices as a mask; requires order() <= 64.
    Mask all64() const;

    std::span<const std::uint64_t> row(Vertex v) const;

    bool is_marked(Vertex v) const;
    std::vector<Vertex> marked_vertices() const;

    int min_degree() const;
    int max_degree() const;

    bool operator==(const Graph& other) const = default;

private:
    friend class GraphBuilder;

    void set_bit(std::vector<std::uint64_t>& bits, Vertex row, Vertex col) const;
    bool test_bit(const std::vector<std::uint64_t>& bits, Vertex row, Vertex col) const;

    int n_ = 0;
    int words_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> mark_;
};

/// Mutable staging area for a Graph. finish() checks the clique-mark
/// invariant and recounts edges.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const { return g_.n_; }
    bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    GraphBuilder& add_clique(std::span<const Vertex> vs);
    GraphBuilder& mark(Vertex v);
    GraphBuilder& clear_marks();

    Graph finish() const;

private:
    void check_pair(Vertex u, Vertex v) const;
    Graph g_;
};

/// Sorted degrees, d_1 <= ... <= d_n.
struct DegreeSequence {
    std::vector<int> sorted;

    bool operator==(const DegreeSequence&) const = default;
};

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

// G*K_t: t new mutually adjacent vertices joined to all of V(G). The new
// vertices are n..n+t-1 and are added to the clique mark.
Graph join(const Graph& g, int t);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);
Graph relabel(const Graph& g, std::span<const Vertex> new_label);

DegreeSequence degree_sequence(const Graph& g);

// Exact, branch and bound; n <= 64.
int independence_number(const Graph& g);
int clique_number(const Graph& g);
std::vector<Vertex> maximum_independent_set(const Graph& g);

std::optional<Bipartition> is_bipartite(const Graph& g);

/// Exact bandwidth test by ordering search, n <= 16. Returns the position
/// (0-based) of every vertex in a witnessing layout.
std::optional<std::vector<int>> bandwidth_at_most(const Graph& g, int b);

inline constexpr int kBandwidthMaxOrder = 16;

}  // namespace deficiency
