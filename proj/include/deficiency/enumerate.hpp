#pragma once

#include "deficiency/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace deficiency {

inline constexpr int kEnumerateMaxOrder = 8;
inline constexpr int kCanonicalMaxOrder = 11;

int pair_count(int n);

// Pair index k <-> (u, v) with u < v, in graph6 column order:
// (0,1), (0,2), (1,2), (0,3), ...
Edge pair_at(int k);

/// Labelled graph number `index` on n vertices: bit k of the index selects
/// the k-th pair in graph6 column order. 0 <= index < 2^C(n,2).
Graph graph_from_index(int n, std::uint64_t index);
std::uint64_t index_of(const Graph& g);

/// A contiguous slice of the labelled graphs on n vertices. Slices are
/// plain values, so a sweep can be cut into independent ranges for workers.
class LabelledGraphs {
public:
    explicit LabelledGraphs(int n);
    LabelledGraphs(int n, std::uint64_t first, std::uint64_t last);

    int order() const { return n_; }
    std::uint64_t first() const { return first_; }
    std::uint64_t last() const { return last_; }
    std::uint64_t size() const { return last_ - first_; }

    std::vector<LabelledGraphs> split(std::uint64_t parts) const;

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::uint64_t i = first_; i < last_; ++i) fn(i, graph_from_index(n_, i));
    }

private:
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

// Minimum adjacency index over all relabellings that sort vertices by
// degree. Degree is an invariant, so equal codes <=> isomorphic.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class on n vertices, in
/// increasing canonical-code order. Built by vertex extension from n-1.
std::vector<Graph> iso_representatives(int n);

/// Every labelled graph (or one per class with iso_dedup) in a fixed order.
std::vector<Graph> enumerate_graphs(int n, bool iso_dedup = false);

}  // namespace deficiency
