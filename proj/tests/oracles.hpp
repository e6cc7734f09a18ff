#pragma once

// Deliberately naive reference implementations. They only use order() and
// has_edge() and share nothing with the solvers under test.

#include "deficiency/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using deficiency::Graph;

inline bool is_clique(const Graph& g, const std::vector<int>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// Tries every ordering of the vertices and cuts it into consecutive r-blocks.
inline bool has_kr_factor(const Graph& g, int r)
{
    const int n = g.order();
    if (n == 0) return true;
    if (r <= 0 || n % r != 0) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int b = 0; b < n && ok; b += r) ok = is_clique(g, {perm.begin() + b, perm.begin() + b + r});
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every cyclic ordering starting at 0.
inline bool is_hamiltonian(const Graph& g)
{
    const int n = g.order();
    if (n < 3) return false;
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int prev = 0;
        bool ok = true;
        for (int v : perm) {
            if (!g.has_edge(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && g.has_edge(prev, 0)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline int independence_number(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && g.has_edge(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

inline int bandwidth(const Graph& g)
{
    const int n = g.order();
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    int best = n;
    do {
        int w = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) w = std::max(w, std::abs(pos[u] - pos[v]));
        best = std::min(best, w);
    } while (std::next_permutation(pos.begin(), pos.end()));
    return best;
}

inline long long binom2(long long x) { return x * (x - 1) / 2; }

// Adjacency as a bit string in upper-triangle row-major order, minimised
// over all relabellings.
inline std::uint64_t min_code(const Graph& g)
{
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) code = code << 1 | (g.has_edge(p[u], p[v]) ? 1 : 0);
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Labelled graph from a bitmask over pairs (u<v) in row-major order.
inline Graph from_bits(int n, std::uint64_t bits)
{
    std::vector<deficiency::Edge> edges;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (bits >> k & 1) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

}  // namespace oracle
