#include "deficiency/constructions.hpp"

#include "deficiency/errors.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace deficiency {

namespace {

std::string triple(int n, int t, int r)
{
    return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ", r=" + std::to_string(r) + ")";
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// K_n with every edge inside {0, .., a-1} removed.
Graph complete_minus_clique(int n, int a)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = std::max(u + 1, a); v < n; ++v) b.add_edge(u, v);
    return b.finish();
}

}  // namespace

bool RFactorParams::valid(int n, int t, int r)
{
    return n >= 2 && t >= 0 && r >= 3 && static_cast<long>(t) < static_cast<long>(r - 1) * n && (n + t) % r == 0;
}

RFactorParams RFactorParams::make(int n, int t, int r)
{
    if (n < 2) throw ParameterError("need n >= 2 " + triple(n, t, r));
    if (t < 0) throw ParameterError("need t >= 0 " + triple(n, t, r));
    if (r < 3) throw ParameterError("need r >= 3 " + triple(n, t, r));
    if (static_cast<long>(t) >= static_cast<long>(r - 1) * n) throw ParameterError("need t < (r-1)n " + triple(n, t, r));
    if ((n + t) % r != 0) throw ParameterError("need r | n+t " + triple(n, t, r));
    RFactorParams p;
    p.n = n;
    p.t = t;
    p.r = r;
    p.k = ceil_div(t + 1, r - 1);
    p.q = t % (r - 1);
    return p;
}

std::vector<int> valid_t_values(int n, int r)
{
    std::vector<int> out;
    if (n < 2 || r < 3) return out;
    for (int t = 0; t < (r - 1) * n; ++t)
        if (RFactorParams::valid(n, t, r)) out.push_back(t);
    return out;
}

Graph ex1_factor(const RFactorParams& p)
{
    const auto checked = RFactorParams::make(p.n, p.t, p.r);
    return complete_minus_clique(checked.n, checked.ex1_independent_size());
}

Graph ex2_factor(const RFactorParams& p)
{
    const auto c = RFactorParams::make(p.n, p.t, p.r);
    const int b_size = c.k;
    const int c_size = c.ex2_dominating_size();
    if (b_size + c_size > c.n)
        throw ParameterError("EX_2 needs k + (r-2-q) <= n " + triple(c.n, c.t, c.r));
    GraphBuilder b(c.n);
    for (Vertex u = b_size; u < c.n; ++u)
        for (Vertex v = u + 1; v < c.n; ++v) b.add_edge(u, v);
    for (Vertex x = b_size; x < b_size + c_size; ++x)
        for (Vertex u = 0; u < b_size; ++u) b.add_edge(u, x);
    return b.finish();
}

Graph ex1_band(int n, int t)
{
    if (n < 1 || t < 0) throw ParameterError("ex1_band: need n >= 1 and t >= 0");
    const int half = ceil_div(n + t, 2);
    if (half >= n) throw ParameterError("ex1_band: need ceil((n+t)/2) < n, got n=" + std::to_string(n) + ", t=" + std::to_string(t));
    return complete_minus_clique(n, half + 1);
}

Graph ex2_band(int n, int t)
{
    if (n < 0 || t < 0 || t > n)
        throw ParameterError("ex2_band: need 0 <= t <= n, got n=" + std::to_string(n) + ", t=" + std::to_string(t));
    GraphBuilder b(n);
    for (Vertex u = t; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.finish();
}

std::optional<int> ex_h_independent_size(int n, int t, int pattern_order, int pattern_alpha)
{
    if (pattern_order < 1) return std::nullopt;
    const long num = static_cast<long>(pattern_alpha) * (n + t);
    if (num % pattern_order != 0) return std::nullopt;
    return static_cast<int>(num / pattern_order) + 1;
}

Graph ex_h(int n, int t, const Graph& pattern)
{
    if (n < 1 || t < 0) throw ParameterError("ex_h: need n >= 1 and t >= 0");
    const auto a = ex_h_independent_size(n, t, pattern.order(), independence_number(pattern));
    if (!a) throw ParameterError("ex_h: alpha(H)(n+t)/|H| is not an integer");
    if (*a > n) throw ParameterError("ex_h: |A| = " + std::to_string(*a) + " exceeds n = " + std::to_string(n));
    return complete_minus_clique(n, *a);
}

Graph ex_h_prime(int n, int t, int s)
{
    if (s < 1) throw ParameterError("ex_h_prime: need s >= 1");
    const Graph base = ex_h(n, t, star(s));
    const int a = *ex_h_independent_size(n, t, s + 1, s);
    GraphBuilder b(base);
    for (Vertex u = 0; u + 1 < a; u += 2) b.add_edge(u, u + 1);
    return b.finish();
}

Graph star(int s)
{
    GraphBuilder b(s + 1);
    for (Vertex v = 1; v <= s; ++v) b.add_edge(0, v);
    return b.finish();
}

Graph cycle(int n)
{
    if (n < 3) throw ParameterError("cycle: need n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.finish();
}

Graph path(int n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.finish();
}

Graph complete_bipartite(int a, int b)
{
    GraphBuilder g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g.finish();
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    GraphBuilder g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g.finish();
}

Graph disjoint_copies(const Graph& g, int copies)
{
    Graph out(0);
    for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
    return out;
}

bool in_class_h1(const Graph& h, int n, int t)
{
    if (h.order() != n + t || !is_bipartite(h)) return false;
    return independence_number(h) == ceil_div(n + t, 2);
}

namespace {

class TripartitionSearch {
public:
    TripartitionSearch(const Graph& h, int t) : h_(h), t_(t) {}

    std::optional<std::vector<Vertex>> run()
    {
        if (choose(0, 0, 0)) {
            std::vector<Vertex> out;
            for (Mask m = found_; m; m &= m - 1) out.push_back(std::countr_zero(m));
            return out;
        }
        return std::nullopt;
    }

private:
    // C grows in ascending vertex order; it must stay independent and its
    // neighbourhood (which has to fit in B) must stay within t vertices.
    bool choose(Vertex from, Mask c, Mask nbhd)
    {
        if (std::popcount(c) == t_) {
            found_ = c;
            return true;
        }
        for (Vertex v = from; v < h_.order(); ++v) {
            const Mask bit = Mask{1} << v;
            if (nbhd & bit) continue;
            const Mask grown = nbhd | h_.neighbours64(v);
            if (grown & c) continue;
            if (std::popcount(grown) > t_) continue;
            if (h_.order() - v < t_ - std::popcount(c)) return false;
            if (choose(v + 1, c | bit, grown)) return true;
        }
        return false;
    }

    const Graph& h_;
    int t_;
    Mask found_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> find_tripartition(const Graph& h, int n, int t)
{
    if (h.order() != n + t) throw ParameterError("find_tripartition: H must have n+t vertices");
    if (t < 0 || t > n) return std::nullopt;
    if (h.order() > kMaskBits) throw SizeError("find_tripartition: limited to 64 vertices");
    return TripartitionSearch(h, t).run();
}

bool in_class_h2(const Graph& h, int n, int t)
{
    if (h.order() != n + t || !is_bipartite(h)) return false;
    return !find_tripartition(h, n, t).has_value();
}

}  // namespace deficiency
