#include "deficiency/harness.hpp"

#include "deficiency/bounds.hpp"
#include "deficiency/certificate.hpp"
#include "deficiency/constructions.hpp"
#include "deficiency/enumerate.hpp"
#include "deficiency/errors.hpp"
#include "deficiency/factor.hpp"
#include "deficiency/graph_io.hpp"
#include "deficiency/repair.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace deficiency {

void to_json(nlohmann::json& j, const Counterexample& c)
{
    j = nlohmann::json{{"graph6", c.graph6}, {"n", c.n}, {"t", c.t}, {"r", c.r}, {"kind", c.kind}, {"detail", c.detail}};
}

void from_json(const nlohmann::json& j, Counterexample& c)
{
    j.at("graph6").get_to(c.graph6);
    j.at("n").get_to(c.n);
    j.at("t").get_to(c.t);
    j.at("r").get_to(c.r);
    j.at("kind").get_to(c.kind);
    c.detail = j.value("detail", "");
}

void to_json(nlohmann::json& j, const VerificationReport& r)
{
    j = nlohmann::json{{"task", r.task},
                       {"parameters", r.parameters},
                       {"graphs_checked", r.graphs_checked},
                       {"counterexamples", r.counterexamples},
                       {"stats", r.stats},
                       {"elapsed_seconds", r.elapsed_seconds},
                       {"verdict", r.verdict()}};
}

void from_json(const nlohmann::json& j, VerificationReport& r)
{
    j.at("task").get_to(r.task);
    r.parameters = j.at("parameters");
    j.at("graphs_checked").get_to(r.graphs_checked);
    j.at("counterexamples").get_to(r.counterexamples);
    r.stats = j.value("stats", nlohmann::json::object());
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != r.verdict()) throw InputError("report verdict '" + verdict + "' contradicts its counterexample list");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Per-worker accumulator; merged once all workers finish.
struct Tally {
    std::int64_t checked = 0;
    std::vector<Counterexample> found;
    std::map<std::string, std::int64_t> counts;

    void merge(Tally&& other)
    {
        checked += other.checked;
        std::move(other.found.begin(), other.found.end(), std::back_inserter(found));
        for (auto& [k, v] : other.counts) counts[k] += v;
    }
};

int resolve_threads(int requested)
{
    if (requested > 0) return requested;
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

// Runs fn(index, tally) for every index in [0, count) on a pool of workers
// pulling fixed-size chunks. The merged result does not depend on the
// thread count once counterexamples are sorted.
template <typename Fn>
Tally parallel_over(std::uint64_t count, int threads, Fn&& fn)
{
    threads = resolve_threads(threads);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (static_cast<std::uint64_t>(threads) * 32));
    std::atomic<std::uint64_t> next{0};
    Tally total;
    std::mutex merge_lock;
    std::exception_ptr failure;

    auto worker = [&] {
        Tally local;
        try {
            for (;;) {
                const std::uint64_t lo = next.fetch_add(chunk);
                if (lo >= count) break;
                const std::uint64_t hi = std::min(count, lo + chunk);
                for (std::uint64_t i = lo; i < hi; ++i) fn(i, local);
            }
        } catch (...) {
            std::lock_guard guard(merge_lock);
            if (!failure) failure = std::current_exception();
            next.store(count);
        }
        std::lock_guard guard(merge_lock);
        total.merge(std::move(local));
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return total;
}

void check_sweep_order(int n, bool iso_dedup)
{
    if (iso_dedup && n > kIsoSweepMaxOrder)
        throw SizeError("iso-dedup sweeps are limited to n <= " + std::to_string(kIsoSweepMaxOrder));
    if (!iso_dedup && n > kLabelledSweepMaxOrder)
        throw SizeError("labelled sweeps are limited to n <= " + std::to_string(kLabelledSweepMaxOrder) +
                        "; use --iso-dedup for n = 8");
}

// Labelled graphs by index, or one representative per isomorphism class.
class GraphSource {
public:
    GraphSource(int n, bool iso_dedup) : n_(n), iso_(iso_dedup)
    {
        check_sweep_order(n, iso_dedup);
        if (iso_) reps_ = iso_representatives(n);
    }

    std::uint64_t size() const
    {
        return iso_ ? reps_.size() : (std::uint64_t{1} << pair_count(n_));
    }

    Graph at(std::uint64_t i) const { return iso_ ? reps_[i] : graph_from_index(n_, i); }

private:
    int n_;
    bool iso_;
    std::vector<Graph> reps_;
};

void finish(VerificationReport& report, Tally&& tally, Clock::time_point start)
{
    report.graphs_checked += tally.checked;
    std::move(tally.found.begin(), tally.found.end(), std::back_inserter(report.counterexamples));
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    for (auto& [k, v] : tally.counts) report.stats[k] = report.stats.value(k, std::int64_t{0}) + v;
    report.elapsed_seconds = seconds_since(start);
}

Counterexample counterexample(const Graph& g, int n, int t, int r, std::string kind, std::string detail)
{
    return {emit_graph6(g), n, t, r, std::move(kind), std::move(detail)};
}

}  // namespace

VerificationReport verify_kr_bound(int n_max, int r, const SweepOptions& opts)
{
    const auto start = Clock::now();
    if (r < 3) throw ParameterError("verify kr: need r >= 3");
    if (n_max < 2) throw ParameterError("verify kr: need n_max >= 2");
    check_sweep_order(n_max, opts.iso_dedup);
    VerificationReport report;
    report.task = "kr";
    report.parameters = {{"n_max", n_max}, {"r", r}, {"iso_dedup", opts.iso_dedup}};

    Tally tally;
    for (int n = 2; n <= n_max; ++n) {
        const GraphSource source(n, opts.iso_dedup);
        std::vector<int> ts = valid_t_values(n, r);
        if (n + (ts.empty() ? 0 : ts.back()) > kFactorMaxOrder)
            throw SizeError("verify kr: joins exceed " + std::to_string(kFactorMaxOrder) + " vertices");
        std::vector<std::int64_t> bound;
        for (int t : ts) bound.push_back(kr_bound(RFactorParams::make(n, t, r)).value);

        // Extremal graphs: exact edge counts and no factor after the join.
        for (int t : ts) {
            const auto p = RFactorParams::make(n, t, r);
            const Graph ex[2] = {ex1_factor(p), ex2_factor(p)};
            const std::int64_t formula[2] = {ex1_edge_formula(p), ex2_edge_formula(p)};
            for (int i = 0; i < 2; ++i) {
                const std::string name = i == 0 ? "ex1" : "ex2";
                tally.checked += 1;
                tally.counts["sharpness_checks"] += 1;
                if (ex[i].edge_count() != formula[i])
                    tally.found.push_back(counterexample(ex[i], n, t, r, name + "-edges",
                                                         "counted " + std::to_string(ex[i].edge_count()) +
                                                             ", formula " + std::to_string(formula[i])));
                if (kr_factor(join(ex[i], t), r))
                    tally.found.push_back(counterexample(ex[i], n, t, r, name + "-factor", "join has a K_r-factor"));
            }
        }

        Tally swept = parallel_over(source.size(), opts.threads, [&](std::uint64_t i, Tally& local) {
            const Graph g = source.at(i);
            local.counts["graphs_enumerated"] += 1;
            for (std::size_t j = 0; j < ts.size(); ++j) {
                if (g.edge_count() <= bound[j]) continue;
                local.checked += 1;
                local.counts["instances_solved"] += 1;
                if (!kr_factor(join(g, ts[j]), r))
                    local.found.push_back(counterexample(g, n, ts[j], r, "bound",
                                                         "e(G) = " + std::to_string(g.edge_count()) + " > bound " +
                                                             std::to_string(bound[j]) + " but no K_r-factor"));
            }
        });
        tally.merge(std::move(swept));
    }
    finish(report, std::move(tally), start);
    return report;
}

VerificationReport verify_hamilton_bound(int n_max, const SweepOptions& opts)
{
    const auto start = Clock::now();
    if (n_max < 1) throw ParameterError("verify hamilton: need n_max >= 1");
    check_sweep_order(n_max, opts.iso_dedup);
    VerificationReport report;
    report.task = "hamilton";
    report.parameters = {{"n_max", n_max}, {"iso_dedup", opts.iso_dedup}};

    Tally tally;
    for (int n = 1; n <= n_max; ++n) {
        const GraphSource source(n, opts.iso_dedup);
        std::vector<std::int64_t> bound;
        for (int t = 0; t <= n; ++t) bound.push_back(hamilton_bound(n, t).value);

        for (int t = 0; t <= n; ++t) {
            const int total = n + t;
            if (total < 4 || total % 2 != 0) continue;
            const Graph cyc = cycle(total);
            if ((total + 1) / 2 < n && in_class_h1(cyc, n, t)) {
                const Graph ex = ex1_band(n, t);
                tally.checked += 1;
                tally.counts["extremal_checks"] += 1;
                if (ex.edge_count() != ex1_band_edge_formula(n, t))
                    tally.found.push_back(counterexample(ex, n, t, 0, "ex1band-edges", "edge count differs from formula"));
                if (hamilton_cycle(join(ex, t)))
                    tally.found.push_back(counterexample(ex, n, t, 0, "ex1band-hamiltonian", "join has a Hamilton cycle"));
            }
            if (in_class_h2(cyc, n, t)) {
                const Graph ex = ex2_band(n, t);
                tally.checked += 1;
                tally.counts["extremal_checks"] += 1;
                if (ex.edge_count() != ex2_band_edge_formula(n, t))
                    tally.found.push_back(counterexample(ex, n, t, 0, "ex2band-edges", "edge count differs from formula"));
                if (hamilton_cycle(join(ex, t)))
                    tally.found.push_back(counterexample(ex, n, t, 0, "ex2band-hamiltonian", "join has a Hamilton cycle"));
            }
        }

        Tally swept = parallel_over(source.size(), opts.threads, [&](std::uint64_t i, Tally& local) {
            const Graph g = source.at(i);
            local.counts["graphs_enumerated"] += 1;
            for (int t = 0; t <= n; ++t) {
                if (g.edge_count() <= bound[t]) continue;
                local.checked += 1;
                local.counts["instances_solved"] += 1;
                const bool ok = n + t >= 3 && hamilton_cycle(join(g, t)).has_value();
                if (!ok)
                    local.found.push_back(counterexample(g, n, t, 0, "bound",
                                                         "e(G) = " + std::to_string(g.edge_count()) + " > bound " +
                                                             std::to_string(bound[t]) + " but no Hamilton cycle"));
            }
        });
        tally.merge(std::move(swept));
    }
    finish(report, std::move(tally), start);
    return report;
}

VerificationReport verify_h_classes(int n, int t, const Graph& h)
{
    const auto start = Clock::now();
    if (n < 1 || t < 0) throw ParameterError("verify hclasses: need n >= 1 and t >= 0");
    if (n + t > kHClassMaxOrder)
        throw SizeError("verify hclasses: n+t is limited to " + std::to_string(kHClassMaxOrder));
    if (h.order() != n + t) throw InputError("verify hclasses: H must have n+t vertices");

    VerificationReport report;
    report.task = "hclasses";
    report.parameters = {{"n", n}, {"t", t}, {"h_graph6", emit_graph6(h)}};
    const bool h1 = in_class_h1(h, n, t);
    const bool h2 = in_class_h2(h, n, t);
    const bool ex1_defined = (n + t + 1) / 2 < n;
    const bool ex2_defined = t <= n;
    report.stats = {{"in_h1", h1}, {"in_h2", h2}, {"ex1_defined", ex1_defined}, {"ex2_defined", ex2_defined}};

    Tally tally;
    if (h1 && ex1_defined) {
        const Graph ex = ex1_band(n, t);
        tally.checked += 1;
        if (auto copy = find_embedding(h, join(ex, t)))
            tally.found.push_back(counterexample(ex, n, t, 0, "h1-embedding", "H embeds into EX_1(n,t)*K_t"));
    }
    if (h2 && ex2_defined) {
        const Graph ex = ex2_band(n, t);
        tally.checked += 1;
        if (auto copy = find_embedding(h, join(ex, t)))
            tally.found.push_back(counterexample(ex, n, t, 0, "h2-embedding", "H embeds into EX_2(n,t)*K_t"));
    }
    if (tally.checked == 0)
        throw ParameterError("verify hclasses: H is in no class whose extremal graph is defined for (n, t)");
    finish(report, std::move(tally), start);
    return report;
}

VerificationReport verify_step_inequality(int n_max, int r_max)
{
    const auto start = Clock::now();
    if (n_max < 3 || r_max < 3) throw ParameterError("verify step-inequality: need n_max >= 3 and r_max >= 3");
    VerificationReport report;
    report.task = "step-inequality";
    report.parameters = {{"n_max", n_max}, {"r_max", r_max}};

    Tally tally;
    auto fail = [&](int n, int t, int r, std::string kind, std::string detail) {
        tally.found.push_back({"", n, t, r, std::move(kind), std::move(detail)});
    };

    for (int r = 3; r <= r_max; ++r) {
        for (int n = 3; n <= n_max; ++n) {
            const auto tq = technical_quantities(n, r);
            tally.checked += 1;
            tally.counts["f1_le_g_checks"] += 1;
            if (tq.f1 > tq.g) fail(n, 0, r, "f1-gt-g", "f1 = " + to_string(tq.f1) + " > g = " + to_string(tq.g));

            const int t_hi = (r - 1) * n + r * (r - 1);
            for (int t = 0; t <= t_hi; ++t) {
                const bool congruent = (t + 1) % (r - 1) == 0 && (n + t) % r == 0;
                if (!congruent) continue;

                // Every solution of the congruences is (r-1)(n-1)-1 minus a
                // multiple of r(r-1); above f_2 none leaves room for t+1.
                tally.checked += 1;
                tally.counts["congruence_checks"] += 1;
                if (((r - 1) * (n - 1) - 1 - t) % (r * (r - 1)) != 0)
                    fail(n, t, r, "crt-family", "t is not (r-1)(n-1)-1-kr(r-1)");
                if (Rational(t) > tq.f2 && t + 1 < (r - 1) * (n - 1))
                    fail(n, t, r, "modular", "t > f2 yet t+1 < (r-1)(n-1)");

                if (!(t + 1 < (r - 1) * (n - 1))) continue;
                const auto smaller = RFactorParams::make(n - 1, t + 1, r);
                const auto current = RFactorParams::make(n, t, r);
                const std::int64_t e1_small = ex1_edge_formula(smaller);
                const std::int64_t e2_small = ex2_edge_formula(smaller);
                const std::int64_t e2_cur = ex2_edge_formula(current);
                const bool claim = e2_small + (n - 1) <= e2_cur;

                tally.checked += 1;
                tally.counts["parameter_triples"] += 1;
                if (e1_small < e2_small) {
                    tally.counts["hypothesis_holds"] += 1;
                    if (!claim)
                        fail(n, t, r, "implication",
                             "e(EX2(n-1,t+1)) + n-1 = " + std::to_string(e2_small + n - 1) + " > e(EX2(n,t)) = " +
                                 std::to_string(e2_cur));
                }
                if (claim != (Rational(t) <= tq.g)) fail(n, t, r, "claim-iff-g", "claim does not match t <= g");
                const bool window = tq.f1 <= Rational(t) && Rational(t) <= tq.f2;
                if ((e2_small <= e1_small) != window)
                    fail(n, t, r, "window-iff-f", "EX2 <= EX1 does not match f1 <= t <= f2");
            }
        }
    }
    finish(report, std::move(tally), start);
    return report;
}

namespace {

// A K_r-factor of g found under a random relabelling, mapped back. Varies
// which certificate the deterministic solver hands to the rewiring code.
std::optional<FactorCertificate> shuffled_factor(const Graph& g, int r, std::mt19937_64& rng)
{
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto cert = kr_factor(relabel(g, perm), r);
    if (!cert) return std::nullopt;
    std::vector<Vertex> inverse(g.order());
    for (Vertex v = 0; v < g.order(); ++v) inverse[perm[v]] = v;
    for (auto& tile : cert->tiles) {
        for (Vertex& w : tile) w = inverse[w];
        std::sort(tile.begin(), tile.end());
    }
    return cert;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.finish();
}

}  // namespace

VerificationReport verify_repair(const RepairSweepOptions& opts)
{
    const auto start = Clock::now();
    if (opts.r < 3) throw ParameterError("verify repair: need r >= 3");
    if (opts.n_max < 3 || opts.t_max < 0 || opts.samples < 1)
        throw ParameterError("verify repair: need n_max >= 3, t_max >= 0 and samples >= 1");
    if (opts.n_max + opts.t_max > kFactorMaxOrder) throw SizeError("verify repair: joins exceed 64 vertices");

    VerificationReport report;
    report.task = "repair";
    report.parameters = {{"samples", opts.samples}, {"seed", opts.seed}, {"n_max", opts.n_max},
                         {"t_max", opts.t_max},     {"r", opts.r}};

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick_n(3, opts.n_max);
    std::uniform_int_distribution<int> pick_t(0, opts.t_max);
    std::uniform_real_distribution<double> pick_p(0.2, 0.95);
    const int r = opts.r;
    const std::int64_t max_attempts = std::int64_t{400} * opts.samples;

    Tally tally;
    auto draw = [&](int& n, int& t) {
        do {
            n = pick_n(rng);
            t = pick_t(rng);
        } while ((n + t) % r != 0);
    };

    // Vertex saturation.
    std::int64_t attempts = 0;
    int accepted = 0;
    while (accepted < opts.samples && attempts++ < max_attempts) {
        int n = 0;
        int t = 0;
        draw(n, t);
        const Graph g = random_graph(n, pick_p(rng), rng);
        const int k = (t + 1 + r - 2) / (r - 1);
        std::vector<Vertex> window;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) > n - 1 - k && g.degree(v) < n - 1) window.push_back(v);
        if (window.empty()) continue;
        const Vertex v = window[std::uniform_int_distribution<std::size_t>(0, window.size() - 1)(rng)];
        const auto saturated = shuffled_factor(join(saturate_vertex(g, v), t), r, rng);
        if (!saturated) continue;
        ++accepted;
        tally.checked += 1;
        try {
            const auto out = rewire_factor_vertex(g, t, v, *saturated);
            tally.counts["vertex_case_" + to_string(out.used)] += 1;
            if (auto ok = validate_kr_factor(join(g, t), r, out.factor); !ok)
                tally.found.push_back(counterexample(g, n, t, r, "vertex-invalid", "v=" + std::to_string(v) + ": " + ok.reason));
        } catch (const ContractError& e) {
            tally.found.push_back(counterexample(g, n, t, r, "vertex-contract", "v=" + std::to_string(v) + ": " + e.what()));
        }
    }
    tally.counts["vertex_samples"] = accepted;
    tally.counts["vertex_attempts"] = attempts;
    if (accepted < opts.samples)
        tally.found.push_back({"", 0, 0, r, "vertex-starved", "too few instances met the preconditions"});

    // Edge-clique transform.
    attempts = 0;
    accepted = 0;
    while (accepted < opts.samples && attempts++ < max_attempts) {
        int n = 0;
        int t = 0;
        draw(n, t);
        const Graph g = random_graph(n, pick_p(rng), rng);
        std::vector<Edge> loose;
        for (auto [a, b] : g.edges())
            if (static_cast<int>(max_clique_through_edge(g, a, b).size()) < r) loose.emplace_back(a, b);
        if (loose.empty()) continue;
        auto [x, y] = loose[std::uniform_int_distribution<std::size_t>(0, loose.size() - 1)(rng)];
        if (rng() & 1U) std::swap(x, y);
        auto [g_prime, ctx] = edge_clique_transform(g, x, y, r);
        const std::string where = "x=" + std::to_string(x) + " y=" + std::to_string(y);

        std::int64_t q_degrees = 0;
        for (Vertex w : ctx.q) q_degrees += g_prime.degree(w);
        if (g_prime.edge_count() < g.edge_count())
            tally.found.push_back(counterexample(g, n, t, r, "edge-count-drop", where));
        if (g_prime.degree(y) != n - 1) tally.found.push_back(counterexample(g, n, t, r, "edge-y-unsaturated", where));
        if (q_degrees != static_cast<std::int64_t>(n) * (ctx.ell - 1))
            tally.found.push_back(counterexample(g, n, t, r, "edge-degree-identity", where));

        const auto factor = shuffled_factor(join(g_prime, t), r, rng);
        if (!factor) continue;
        ++accepted;
        tally.checked += 1;
        try {
            const auto out = rewire_factor_clique(g_prime, t, ctx, *factor);
            if (auto ok = validate_kr_factor(join(g, t), r, out); !ok)
                tally.found.push_back(counterexample(g, n, t, r, "edge-invalid", where + ": " + ok.reason));
            if (uses_q_boundary(out, ctx.q, n))
                tally.found.push_back(counterexample(g, n, t, r, "edge-boundary", where + ": tile crosses Q"));
            tally.counts["edge_ell_" + std::to_string(ctx.ell)] += 1;
        } catch (const ContractError& e) {
            tally.found.push_back(counterexample(g, n, t, r, "edge-contract", where + ": " + e.what()));
        }
    }
    tally.counts["edge_samples"] = accepted;
    tally.counts["edge_attempts"] = attempts;
    if (accepted < opts.samples)
        tally.found.push_back({"", 0, 0, r, "edge-starved", "too few instances met the preconditions"});

    finish(report, std::move(tally), start);
    return report;
}

}  // namespace deficiency
