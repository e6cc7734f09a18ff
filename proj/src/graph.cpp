#include "deficiency/graph.hpp"

#include "deficiency/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

namespace deficiency {

namespace {

int words_for(int n) { return (n + kMaskBits - 1) / kMaskBits; }

void require_mask_order(const Graph& g, const char* what)
{
    if (g.order() > kMaskBits)
        throw SizeError(std::string(what) + ": exact search limited to 64 vertices, got " +
                        std::to_string(g.order()));
}

Mask low_bits(int n) { return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

Graph::Graph(int n)
{
    if (n < 0) throw InputError("graph order must be non-negative");
    n_ = n;
    words_ = words_for(n);
    adj_.assign(static_cast<std::size_t>(n) * words_, 0);
    mark_.assign(words_, 0);
}

Graph Graph::build(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.finish();
}

Graph Graph::complete(int n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.finish();
}

void Graph::set_bit(std::vector<std::uint64_t>& bits, Vertex row, Vertex col) const
{
    bits[static_cast<std::size_t>(row) * words_ + col / kMaskBits] |= Mask{1} << (col % kMaskBits);
}

bool Graph::test_bit(const std::vector<std::uint64_t>& bits, Vertex row, Vertex col) const
{
    return (bits[static_cast<std::size_t>(row) * words_ + col / kMaskBits] >> (col % kMaskBits)) & 1U;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return test_bit(adj_, u, v);
}

int Graph::degree(Vertex v) const
{
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const
{
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (test_bit(adj_, v, u)) out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (test_bit(adj_, u, v)) out.emplace_back(u, v);
    return out;
}

Mask Graph::neighbours64(Vertex v) const
{
    return n_ == 0 ? 0 : adj_[static_cast<std::size_t>(v) * words_];
}

Mask Graph::all64() const { return low_bits(n_); }

std::span<const std::uint64_t> Graph::row(Vertex v) const
{
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

bool Graph::is_marked(Vertex v) const
{
    return v >= 0 && v < n_ && ((mark_[v / kMaskBits] >> (v % kMaskBits)) & 1U);
}

std::vector<Vertex> Graph::marked_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (is_marked(v)) out.push_back(v);
    return out;
}

int Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : n_;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw InputError("vertex out of range: " + std::to_string(u) + "-" + std::to_string(v) +
                         " for n=" + std::to_string(g_.n_));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    g_.set_bit(g_.adj_, u, v);
    g_.set_bit(g_.adj_, v, u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    const auto w = static_cast<std::size_t>(g_.words_);
    g_.adj_[u * w + v / kMaskBits] &= ~(Mask{1} << (v % kMaskBits));
    g_.adj_[v * w + u / kMaskBits] &= ~(Mask{1} << (u % kMaskBits));
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    return *this;
}

GraphBuilder& GraphBuilder::mark(Vertex v)
{
    if (v < 0 || v >= g_.n_) throw InputError("mark: vertex out of range");
    g_.mark_[v / kMaskBits] |= Mask{1} << (v % kMaskBits);
    return *this;
}

GraphBuilder& GraphBuilder::clear_marks()
{
    std::fill(g_.mark_.begin(), g_.mark_.end(), 0);
    return *this;
}

Graph GraphBuilder::finish() const
{
    Graph out = g_;
    std::int64_t degree_sum = 0;
    for (Vertex v = 0; v < out.n_; ++v) degree_sum += out.degree(v);
    out.edges_ = degree_sum / 2;
    for (Vertex v = 0; v < out.n_; ++v)
        if (out.is_marked(v) && out.degree(v) != out.n_ - 1)
            throw InputError("marked vertex " + std::to_string(v) + " is not universal");
    return out;
}

Graph join(const Graph& g, int t)
{
    if (t < 0) throw InputError("join: t must be non-negative");
    const int n = g.order();
    GraphBuilder b(n + t);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (Vertex v : g.marked_vertices()) b.mark(v);
    for (Vertex c = n; c < n + t; ++c) {
        for (Vertex u = 0; u < c; ++u) b.add_edge(u, c);
        b.mark(c);
    }
    return b.finish();
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) b.add_edge(u, v);
    return b.finish();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs)
{
    GraphBuilder b(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return b.finish();
}

Graph relabel(const Graph& g, std::span<const Vertex> new_label)
{
    if (static_cast<int>(new_label.size()) != g.order()) throw InputError("relabel: wrong permutation size");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(new_label[u], new_label[v]);
    for (Vertex v : g.marked_vertices()) b.mark(new_label[v]);
    return b.finish();
}

DegreeSequence degree_sequence(const Graph& g)
{
    DegreeSequence d;
    d.sorted.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d.sorted.push_back(g.degree(v));
    std::sort(d.sorted.begin(), d.sorted.end());
    return d;
}

namespace {

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g) : g_(g) {}

    std::vector<Vertex> run()
    {
        extend(g_.all64(), 0);
        std::vector<Vertex> out;
        for (Mask m = best_set_; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

private:
    void extend(Mask candidates, Mask chosen)
    {
        const int size = std::popcount(chosen);
        if (candidates == 0) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + std::popcount(candidates) <= best_) return;

        // Branch on the candidate with fewest candidate neighbours; a vertex
        // with at most one such neighbour can always be taken.
        Vertex pick = -1;
        int pick_deg = kMaskBits + 1;
        for (Mask m = candidates; m; m &= m - 1) {
            const Vertex v = std::countr_zero(m);
            const int d = std::popcount(g_.neighbours64(v) & candidates);
            if (d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        const Mask bit = Mask{1} << pick;
        extend(candidates & ~bit & ~g_.neighbours64(pick), chosen | bit);
        if (pick_deg <= 1) return;
        extend(candidates & ~bit, chosen);
    }

    const Graph& g_;
    int best_ = -1;
    Mask best_set_ = 0;
};

}  // namespace

std::vector<Vertex> maximum_independent_set(const Graph& g)
{
    require_mask_order(g, "independence_number");
    return IndependentSetSearch(g).run();
}

int independence_number(const Graph& g) { return static_cast<int>(maximum_independent_set(g).size()); }

int clique_number(const Graph& g) { return independence_number(complement(g)); }

std::optional<Bipartition> is_bipartite(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbours(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    q.push(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.left : parts.right).push_back(v);
    return parts;
}

namespace {

// Fills positions left to right. A vertex's window closes b slots after its
// own position, so by then every neighbour must have been placed.
class BandwidthSearch {
public:
    BandwidthSearch(const Graph& g, int b) : g_(g), b_(b), order_(g.order(), -1), pos_(g.order(), -1) {}

    std::optional<std::vector<int>> run()
    {
        if (place(0)) return pos_;
        return std::nullopt;
    }

private:
    bool place(int p)
    {
        const int n = g_.order();
        if (p == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (pos_[w] != -1) continue;
            if (!fits(w, p)) continue;
            pos_[w] = p;
            order_[p] = w;
            placed_ |= Mask{1} << w;
            if (windows_ok(p) && place(p + 1)) return true;
            placed_ &= ~(Mask{1} << w);
            order_[p] = -1;
            pos_[w] = -1;
        }
        return false;
    }

    bool fits(Vertex w, int p) const
    {
        for (Mask m = g_.neighbours64(w) & placed_; m; m &= m - 1)
            if (p - pos_[std::countr_zero(m)] > b_) return false;
        return true;
    }

    bool windows_ok(int p) const
    {
        // Every placed vertex u still needs room for its unplaced neighbours
        // in the slots p+1 .. pos(u)+b.
        for (int i = std::max(0, p - b_); i <= p; ++i) {
            const Vertex u = order_[i];
            const int pending = std::popcount(g_.neighbours64(u) & ~placed_);
            const int room = std::min(i + b_, g_.order() - 1) - p;
            if (pending > std::max(room, 0)) return false;
        }
        return true;
    }

    const Graph& g_;
    int b_;
    std::vector<Vertex> order_;
    std::vector<int> pos_;
    Mask placed_ = 0;
};

}  // namespace

std::optional<std::vector<int>> bandwidth_at_most(const Graph& g, int b)
{
    if (g.order() > kBandwidthMaxOrder)
        throw SizeError("bandwidth_at_most: exact search limited to " + std::to_string(kBandwidthMaxOrder) +
                        " vertices, got " + std::to_string(g.order()));
    if (b < 0) return std::nullopt;
    return BandwidthSearch(g, b).run();
}

}  // namespace deficiency
