#include "deficiency/factor.hpp"

#include "deficiency/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_set>

namespace deficiency {

namespace {

void require_searchable(const Graph& g, const char* what)
{
    if (g.order() > kFactorMaxOrder)
        throw SizeError(std::string(what) + ": exact search limited to " + std::to_string(kFactorMaxOrder) +
                        " vertices, got " + std::to_string(g.order()));
}

Mask bit(Vertex v) { return Mask{1} << v; }

Vertex lowest(Mask m) { return std::countr_zero(m); }

std::vector<Vertex> members(Mask m)
{
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

class CliqueCover {
public:
    CliqueCover(const Graph& g, int r) : g_(g), r_(r) {}

    bool solve(Mask uncovered)
    {
        if (uncovered == 0) return true;
        if (dead_.contains(uncovered)) return false;
        for (Mask m = uncovered; m; m &= m - 1) {
            const Vertex u = lowest(m);
            if (std::popcount(g_.neighbours64(u) & uncovered) < r_ - 1) {
                dead_.insert(uncovered);
                return false;
            }
        }
        const Vertex v = lowest(uncovered);
        if (extend(uncovered, bit(v), g_.neighbours64(v) & uncovered, r_ - 1)) return true;
        dead_.insert(uncovered);
        return false;
    }

    std::vector<std::vector<Vertex>> tiles;

private:
    bool extend(Mask uncovered, Mask clique, Mask candidates, int need)
    {
        if (need == 0) {
            tiles.push_back(members(clique));
            if (solve(uncovered & ~clique)) return true;
            tiles.pop_back();
            return false;
        }
        while (std::popcount(candidates) >= need) {
            const Vertex w = lowest(candidates);
            candidates &= candidates - 1;
            if (extend(uncovered, clique | bit(w), candidates & g_.neighbours64(w), need - 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    int r_;
    std::unordered_set<Mask> dead_;
};

/// Backtracking subgraph monomorphism. Pattern vertices are matched in a
/// connectivity-first order so each new one is usually constrained by an
/// already-matched neighbour.
class Embedder {
public:
    Embedder(const Graph& pattern, const Graph& host) : p_(pattern), h_(host), image_(pattern.order(), -1) {}

    // Calls fn(image) for every embedding into `allowed`, with `first`
    // mapped to `anchor` when first >= 0. fn returns true to stop.
    template <typename Fn>
    bool each(Mask allowed, Vertex first, Vertex anchor, Fn&& fn)
    {
        plan(first);
        allowed_ = allowed;
        anchor_ = anchor;
        std::fill(image_.begin(), image_.end(), -1);
        return step(0, 0, fn);
    }

private:
    void plan(Vertex first)
    {
        const int k = p_.order();
        order_.clear();
        std::vector<bool> queued(k, false);
        auto by_degree = [&](Vertex a, Vertex b) {
            return p_.degree(a) != p_.degree(b) ? p_.degree(a) > p_.degree(b) : a < b;
        };
        std::vector<Vertex> seeds(k);
        for (Vertex v = 0; v < k; ++v) seeds[v] = v;
        std::sort(seeds.begin(), seeds.end(), by_degree);
        if (first >= 0) seeds.insert(seeds.begin(), first);
        for (Vertex s : seeds) {
            if (queued[s]) continue;
            queued[s] = true;
            std::size_t head = order_.size();
            order_.push_back(s);
            while (head < order_.size()) {
                auto nbrs = p_.neighbours(order_[head++]);
                std::sort(nbrs.begin(), nbrs.end(), by_degree);
                for (Vertex w : nbrs)
                    if (!queued[w]) {
                        queued[w] = true;
                        order_.push_back(w);
                    }
            }
        }
    }

    template <typename Fn>
    bool step(std::size_t depth, Mask used, Fn& fn)
    {
        if (depth == order_.size()) return fn(static_cast<const std::vector<Vertex>&>(image_));
        const Vertex pv = order_[depth];
        Mask candidates = allowed_ & ~used;
        if (depth == 0 && anchor_ >= 0) candidates &= bit(anchor_);
        for (Vertex pw : p_.neighbours(pv))
            if (image_[pw] >= 0) candidates &= h_.neighbours64(image_[pw]);
        const int need = p_.degree(pv);
        for (; candidates; candidates &= candidates - 1) {
            const Vertex hv = lowest(candidates);
            if (std::popcount(h_.neighbours64(hv) & allowed_) < need) continue;
            image_[pv] = hv;
            if (step(depth + 1, used | bit(hv), fn)) return true;
            image_[pv] = -1;
        }
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    Mask allowed_ = 0;
    Vertex anchor_ = -1;
};

class PatternCover {
public:
    PatternCover(const Graph& g, const Graph& pattern) : g_(g), pattern_(pattern), embedder_(pattern, g) {}

    bool solve(Mask uncovered)
    {
        if (uncovered == 0) return true;
        if (dead_.contains(uncovered)) return false;
        const Vertex v = lowest(uncovered);

        // Distinct vertex sets that can host a tile through v, each with one
        // witnessing embedding. The same set reached twice is the same subproblem.
        std::vector<std::vector<Vertex>> options;
        std::set<Mask> seen;
        for (Vertex p = 0; p < pattern_.order(); ++p)
            embedder_.each(uncovered, p, v, [&](const std::vector<Vertex>& image) {
                Mask s = 0;
                for (Vertex x : image) s |= bit(x);
                if (seen.insert(s).second) options.push_back(image);
                return false;
            });
        std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        for (const auto& image : options) {
            Mask s = 0;
            for (Vertex x : image) s |= bit(x);
            tiles.push_back(image);
            if (solve(uncovered & ~s)) return true;
            tiles.pop_back();
        }
        dead_.insert(uncovered);
        return false;
    }

    std::vector<std::vector<Vertex>> tiles;

private:
    const Graph& g_;
    const Graph& pattern_;
    Embedder embedder_;
    std::unordered_set<Mask> dead_;
};

struct PathState {
    Mask visited;
    Vertex end;
    bool operator==(const PathState&) const = default;
};

struct PathStateHash {
    std::size_t operator()(const PathState& s) const noexcept
    {
        return std::hash<Mask>{}(s.visited) ^ (static_cast<std::size_t>(s.end) * 0x9e3779b97f4a7c15ULL);
    }
};

class HamiltonSearch {
public:
    explicit HamiltonSearch(const Graph& g) : g_(g), all_(g.all64()) {}

    std::optional<std::vector<Vertex>> run()
    {
        path_.assign(1, 0);
        if (extend(bit(0), 0)) return path_;
        return std::nullopt;
    }

private:
    bool extend(Mask visited, Vertex end)
    {
        if (visited == all_) return g_.has_edge(end, 0);
        if (dead_.contains({visited, end})) return false;
        const Mask open = all_ & ~visited;
        // Vertex 0 must still be reachable to close the cycle, and every
        // unvisited vertex needs two usable cycle neighbours.
        if ((g_.neighbours64(0) & open) == 0) return false;
        const Mask usable = open | bit(end) | bit(0);
        for (Mask m = open; m; m &= m - 1) {
            const Vertex u = lowest(m);
            if (std::popcount(g_.neighbours64(u) & usable) < 2) {
                dead_.insert({visited, end});
                return false;
            }
        }
        for (Mask next = g_.neighbours64(end) & open; next; next &= next - 1) {
            const Vertex w = lowest(next);
            path_.push_back(w);
            if (extend(visited | bit(w), w)) return true;
            path_.pop_back();
        }
        dead_.insert({visited, end});
        return false;
    }

    const Graph& g_;
    Mask all_;
    std::vector<Vertex> path_;
    std::unordered_set<PathState, PathStateHash> dead_;
};

}  // namespace

std::optional<FactorCertificate> kr_factor(const Graph& g, int r)
{
    if (r < 1) throw ParameterError("kr_factor: r must be positive");
    require_searchable(g, "kr_factor");
    if (g.order() % r != 0) return std::nullopt;
    CliqueCover search(g, r);
    if (!search.solve(g.all64())) return std::nullopt;
    return FactorCertificate{TileKind::Clique, std::move(search.tiles)};
}

std::optional<FactorCertificate> h_factor(const Graph& g, const Graph& pattern)
{
    if (pattern.order() < 1) throw InputError("h_factor: pattern must have at least one vertex");
    require_searchable(g, "h_factor");
    if (g.order() % pattern.order() != 0) return std::nullopt;
    PatternCover search(g, pattern);
    if (!search.solve(g.all64())) return std::nullopt;
    return FactorCertificate{TileKind::Pattern, std::move(search.tiles)};
}

std::optional<FactorCertificate> hamilton_cycle(const Graph& g)
{
    if (g.order() < 3) throw InputError("hamilton_cycle: need at least 3 vertices, got " + std::to_string(g.order()));
    require_searchable(g, "hamilton_cycle");
    if (g.min_degree() < 2) return std::nullopt;
    // A Hamilton cycle alternates at best, so an independent set can hold at
    // most half of its vertices.
    if (2 * independence_number(g) > g.order()) return std::nullopt;
    auto cycle = HamiltonSearch(g).run();
    if (!cycle) return std::nullopt;
    return FactorCertificate{TileKind::HamiltonCycle, {std::move(*cycle)}};
}

std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host)
{
    require_searchable(host, "find_embedding");
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
    if (pattern.order() == 0) return std::vector<Vertex>{};
    std::optional<std::vector<Vertex>> found;
    Embedder(pattern, host).each(host.all64(), -1, -1, [&](const std::vector<Vertex>& image) {
        found = image;
        return true;
    });
    return found;
}

bool hajnal_szemeredi_guarantee(const Graph& g, int r)
{
    if (r < 2) throw ParameterError("hajnal_szemeredi_guarantee: r must be at least 2");
    const long n = g.order();
    if (n % r != 0) return false;
    return static_cast<long>(g.min_degree()) * r >= (r - 1) * n;
}

bool degree_sequence_condition(const Graph& g, const Rational& gamma)
{
    if (gamma <= 0 || gamma >= 1) throw ParameterError("degree_sequence_condition: gamma must lie in (0, 1)");
    const auto d = degree_sequence(g).sorted;
    const std::int64_t n = g.order();
    for (std::int64_t i = 1; 2 * i < n; ++i)
        if (Rational(d[i - 1]) < Rational(i) + gamma * n) return false;
    return true;
}

}  // namespace deficiency
