#include "deficiency/repair.hpp"

#include "deficiency/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace deficiency {

namespace {

bool contains(const std::vector<Vertex>& xs, Vertex v) { return std::find(xs.begin(), xs.end(), v) != xs.end(); }

std::size_t tile_of(const FactorCertificate& f, Vertex v)
{
    for (std::size_t i = 0; i < f.tiles.size(); ++i)
        if (contains(f.tiles[i], v)) return i;
    throw ContractError("vertex " + std::to_string(v) + " is not covered by the factor");
}

std::vector<Vertex> swap_member(std::vector<Vertex> tile, Vertex out, Vertex in)
{
    std::replace(tile.begin(), tile.end(), out, in);
    std::sort(tile.begin(), tile.end());
    return tile;
}

int tile_size(const FactorCertificate& f)
{
    if (f.tiles.empty()) throw ContractError("factor has no tiles");
    return static_cast<int>(f.tiles.front().size());
}

}  // namespace

Graph saturate_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order()) throw InputError("saturate_vertex: vertex out of range");
    GraphBuilder b(g);
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v) b.add_edge(u, v);
    return b.finish();
}

VertexRewire rewire_factor_vertex(const Graph& g, int t, Vertex v, const FactorCertificate& saturated_factor)
{
    const int n = g.order();
    if (v < 0 || v >= n) throw ContractError("rewire_factor_vertex: vertex out of range");
    if (t < 0) throw ContractError("rewire_factor_vertex: t must be non-negative");
    const int r = tile_size(saturated_factor);
    if (r < 3) throw ContractError("rewire_factor_vertex: tiles must be K_r with r >= 3");

    const Graph saturated_join = join(saturate_vertex(g, v), t);
    if (auto ok = validate_kr_factor(saturated_join, r, saturated_factor); !ok)
        throw ContractError("rewire_factor_vertex: input is not a K_r-factor of G'*K_t: " + ok.reason);
    const int k = (t + 1 + r - 2) / (r - 1);
    if (g.degree(v) <= n - 1 - k)
        throw ContractError("rewire_factor_vertex: d(v) = " + std::to_string(g.degree(v)) +
                            " is outside the window (n-1-k, n-1]");

    const Graph joined = join(g, t);
    VertexRewire out{saturated_factor, VertexRewireCase::AlreadyValid};
    auto& tiles = out.factor.tiles;
    const std::size_t home = tile_of(saturated_factor, v);

    const auto& kv = tiles[home];
    const bool intact = std::all_of(kv.begin(), kv.end(), [&](Vertex w) { return w == v || joined.has_edge(v, w); });
    if (intact) return out;

    auto swap_with = [&](std::size_t other, Vertex u) {
        auto moved_home = swap_member(tiles[home], v, u);
        auto moved_other = swap_member(tiles[other], u, v);
        tiles[home] = std::move(moved_home);
        tiles[other] = std::move(moved_other);
    };

    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (i == home) continue;
        const auto& tile = tiles[i];
        if (std::all_of(tile.begin(), tile.end(), [&](Vertex w) { return w >= n; })) {
            swap_with(i, *std::min_element(tile.begin(), tile.end()));
            out.used = VertexRewireCase::CliqueTile;
            return out;
        }
    }

    // No tile inside K_t, so at least k tiles meet {v} u V(K_t) and fewer
    // than k vertices of G miss v: one such tile besides K^v avoids them all.
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (i == home) continue;
        const auto& tile = tiles[i];
        const bool meets_clique = std::any_of(tile.begin(), tile.end(), [&](Vertex w) { return w >= n; });
        const bool all_adjacent = std::all_of(tile.begin(), tile.end(), [&](Vertex w) { return joined.has_edge(v, w); });
        if (meets_clique && all_adjacent) {
            Vertex u = -1;
            for (Vertex w : tile)
                if (w >= n && (u < 0 || w < u)) u = w;
            swap_with(i, u);
            out.used = VertexRewireCase::NeighbourTile;
            return out;
        }
    }
    throw ContractError("rewire_factor_vertex: no tile of neighbours of v meets K_t; the counting argument failed");
}

std::vector<Vertex> max_clique_through_edge(const Graph& g, Vertex u, Vertex v)
{
    if (!g.has_edge(u, v)) throw InputError("max_clique_through_edge: not an edge");
    if (g.order() > kMaskBits) throw SizeError("max_clique_through_edge: limited to 64 vertices");

    // Growing cliques by ascending vertex visits candidate sets in
    // lexicographic order, so the first clique of a new maximum size is the
    // lexicographically least one.
    Mask best = 0;
    int best_size = -1;
    auto grow = [&](auto&& self, Mask chosen, Mask candidates) -> void {
        const int size = std::popcount(chosen);
        if (size > best_size) {
            best_size = size;
            best = chosen;
        }
        if (size + std::popcount(candidates) <= best_size) return;
        for (Mask m = candidates; m; m &= m - 1) {
            const Vertex w = std::countr_zero(m);
            const Mask later = m & (m - 1);
            self(self, chosen | (Mask{1} << w), later & g.neighbours64(w));
            if (size + 1 + std::popcount(later) <= best_size) return;
        }
    };
    grow(grow, 0, g.neighbours64(u) & g.neighbours64(v));

    std::vector<Vertex> q{u, v};
    for (Mask m = best; m; m &= m - 1) q.push_back(std::countr_zero(m));
    std::sort(q.begin(), q.end());
    return q;
}

std::pair<Graph, CliqueContext> edge_clique_transform(const Graph& g, Vertex x, Vertex y, int r)
{
    if (r < 3) throw ParameterError("edge_clique_transform: need r >= 3");
    if (!g.has_edge(x, y)) throw ContractError("edge_clique_transform: xy is not an edge");
    CliqueContext ctx;
    ctx.q = max_clique_through_edge(g, x, y);
    ctx.ell = static_cast<int>(ctx.q.size());
    ctx.x = x;
    ctx.y = y;
    if (ctx.ell >= r)
        throw ContractError("edge_clique_transform: xy lies in a K_" + std::to_string(r));

    const int n = g.order();
    GraphBuilder b(n);
    for (auto [a, c] : g.edges()) b.add_edge(a, c);
    for (Vertex w = 0; w < n; ++w)
        if (!contains(ctx.q, w) && b.has_edge(x, w)) b.remove_edge(x, w);
    for (Vertex z : ctx.q) {
        if (z == x) continue;
        for (Vertex w = 0; w < n; ++w)
            if (w != z && w != x) b.add_edge(z, w);
    }
    return {b.finish(), ctx};
}

FactorCertificate rewire_factor_clique(const Graph& g_prime, int t, CliqueContext& ctx, const FactorCertificate& factor)
{
    const int n = g_prime.order();
    const int r = tile_size(factor);
    if (auto ok = validate_kr_factor(join(g_prime, t), r, factor); !ok)
        throw ContractError("rewire_factor_clique: input is not a K_r-factor of G'*K_t: " + ok.reason);

    const std::size_t home = tile_of(factor, ctx.x);
    const auto& kx = factor.tiles[home];
    std::vector<Vertex> kx_clique;
    for (Vertex w : kx) {
        if (w >= n)
            kx_clique.push_back(w);
        else if (!contains(ctx.q, w))
            throw ContractError("rewire_factor_clique: K^x uses a vertex outside Q");
    }
    std::sort(kx_clique.begin(), kx_clique.end());

    std::vector<Vertex> rest;
    for (Vertex w : ctx.q)
        if (!contains(kx, w)) rest.push_back(w);
    if (rest.size() > kx_clique.size())
        throw ContractError("rewire_factor_clique: |Q \\ K^x| = " + std::to_string(rest.size()) + " exceeds s = " +
                            std::to_string(kx_clique.size()));

    ctx.injection.clear();
    for (std::size_t i = 0; i < rest.size(); ++i) ctx.injection[rest[i]] = kx_clique[i];

    FactorCertificate out{TileKind::Clique, {}};
    out.tiles.reserve(factor.tiles.size());
    for (std::size_t i = 0; i < factor.tiles.size(); ++i) {
        if (i == home) {
            std::vector<Vertex> closing = ctx.q;
            for (std::size_t j = rest.size(); j < kx_clique.size(); ++j) closing.push_back(kx_clique[j]);
            std::sort(closing.begin(), closing.end());
            out.tiles.push_back(std::move(closing));
            continue;
        }
        std::vector<Vertex> tile = factor.tiles[i];
        for (Vertex& w : tile)
            if (auto it = ctx.injection.find(w); it != ctx.injection.end()) w = it->second;
        std::sort(tile.begin(), tile.end());
        out.tiles.push_back(std::move(tile));
    }
    return out;
}

bool uses_q_boundary(const FactorCertificate& factor, const std::vector<Vertex>& q, int n)
{
    for (const auto& tile : factor.tiles)
        for (Vertex a : tile)
            for (Vertex b : tile)
                if (contains(q, a) && b < n && !contains(q, b)) return true;
    return false;
}

std::string to_string(VertexRewireCase c)
{
    switch (c) {
    case VertexRewireCase::AlreadyValid: return "already-valid";
    case VertexRewireCase::CliqueTile: return "clique-tile";
    case VertexRewireCase::NeighbourTile: return "neighbour-tile";
    }
    return "?";
}

}  // namespace deficiency
