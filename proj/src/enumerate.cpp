#include "deficiency/enumerate.hpp"

#include "deficiency/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace deficiency {

int pair_count(int n) { return n * (n - 1) / 2; }

Edge pair_at(int k)
{
    int v = 1;
    while ((v + 1) * v / 2 <= k) ++v;
    return {k - v * (v - 1) / 2, v};
}

namespace {

int pair_index(Vertex u, Vertex v)
{
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

void require_enumerable(int n, int limit, const char* what)
{
    if (n < 0) throw InputError(std::string(what) + ": negative order");
    if (n > limit)
        throw SizeError(std::string(what) + ": limited to n <= " + std::to_string(limit) + ", got " +
                        std::to_string(n));
}

}  // namespace

Graph graph_from_index(int n, std::uint64_t index)
{
    require_enumerable(n, kCanonicalMaxOrder, "graph_from_index");
    GraphBuilder b(n);
    const int pairs = pair_count(n);
    for (int k = 0; k < pairs; ++k)
        if ((index >> k) & 1U) {
            auto [u, v] = pair_at(k);
            b.add_edge(u, v);
        }
    return b.finish();
}

std::uint64_t index_of(const Graph& g)
{
    require_enumerable(g.order(), kCanonicalMaxOrder, "index_of");
    std::uint64_t index = 0;
    for (auto [u, v] : g.edges()) index |= std::uint64_t{1} << pair_index(u, v);
    return index;
}

LabelledGraphs::LabelledGraphs(int n) : LabelledGraphs(n, 0, 0)
{
    last_ = std::uint64_t{1} << pair_count(n);
}

LabelledGraphs::LabelledGraphs(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last)
{
    require_enumerable(n, kEnumerateMaxOrder, "enumerate_graphs");
    if (first > last) throw InputError("LabelledGraphs: empty range with first > last");
}

std::vector<LabelledGraphs> LabelledGraphs::split(std::uint64_t parts) const
{
    parts = std::max<std::uint64_t>(1, std::min(parts, std::max<std::uint64_t>(1, size())));
    std::vector<LabelledGraphs> out;
    const std::uint64_t step = size() / parts;
    const std::uint64_t extra = size() % parts;
    std::uint64_t lo = first_;
    for (std::uint64_t i = 0; i < parts; ++i) {
        const std::uint64_t hi = lo + step + (i < extra ? 1 : 0);
        out.emplace_back(n_, lo, hi);
        lo = hi;
    }
    return out;
}

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order())
    {
        std::vector<int> deg(n_);
        for (Vertex v = 0; v < n_; ++v) deg[v] = g.degree(v);
        std::vector<std::vector<int>> key(n_);
        for (Vertex v = 0; v < n_; ++v) {
            key[v].push_back(deg[v]);
            std::vector<int> nd;
            for (Vertex w : g.neighbours(v)) nd.push_back(deg[w]);
            std::sort(nd.begin(), nd.end());
            key[v].insert(key[v].end(), nd.begin(), nd.end());
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
        for (int i = 0; i < n_;) {
            int j = i;
            while (j < n_ && key[order_[j]] == key[order_[i]]) ++j;
            cells_.emplace_back(i, j);
            i = j;
        }
    }

    std::pair<std::uint64_t, std::vector<Vertex>> run()
    {
        permute_cell(0);
        return {best_, best_order_};
    }

private:
    void permute_cell(std::size_t c)
    {
        if (c == cells_.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = cells_[c];
        std::sort(order_.begin() + lo, order_.begin() + hi);
        do {
            permute_cell(c + 1);
        } while (std::next_permutation(order_.begin() + lo, order_.begin() + hi));
    }

    void evaluate()
    {
        std::uint64_t code = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (g_.has_edge(order_[i], order_[j])) code |= std::uint64_t{1} << pair_index(i, j);
        if (!found_ || code < best_) {
            found_ = true;
            best_ = code;
            best_order_ = order_;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> order_;
    std::vector<std::pair<int, int>> cells_;
    bool found_ = false;
    std::uint64_t best_ = 0;
    std::vector<Vertex> best_order_;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g)
{
    require_enumerable(g.order(), kCanonicalMaxOrder, "canonical_code");
    return CanonicalSearch(g).run().first;
}

Graph canonical_form(const Graph& g) { return graph_from_index(g.order(), canonical_code(g)); }

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<Graph> iso_representatives(int n)
{
    require_enumerable(n, kEnumerateMaxOrder, "iso_representatives");
    std::set<std::uint64_t> codes{0};
    for (int m = 1; m < n; ++m) {
        // Extend every class on m vertices by a new vertex m with each
        // possible neighbourhood; every class on m+1 arises this way.
        std::set<std::uint64_t> next;
        for (std::uint64_t code : codes) {
            const Graph base = graph_from_index(m, code);
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb) {
                GraphBuilder b(m + 1);
                for (auto [u, v] : base.edges()) b.add_edge(u, v);
                for (Vertex u = 0; u < m; ++u)
                    if ((nb >> u) & 1U) b.add_edge(u, m);
                next.insert(canonical_code(b.finish()));
            }
        }
        codes = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(graph_from_index(n, code));
    return out;
}

std::vector<Graph> enumerate_graphs(int n, bool iso_dedup)
{
    if (iso_dedup) return iso_representatives(n);
    std::vector<Graph> out;
    LabelledGraphs(n).for_each([&](std::uint64_t, const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace deficiency
