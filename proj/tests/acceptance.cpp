// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "deficiency/bounds.hpp"
#include "deficiency/constructions.hpp"
#include "deficiency/enumerate.hpp"
#include "deficiency/factor.hpp"
#include "deficiency/graph_io.hpp"
#include "deficiency/harness.hpp"
#include "oracles.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace deficiency;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s [%s; %.2fs]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
}

unsigned worker_count()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : hw;
}

// Runs fn(first, last) over [0, total) in chunks across threads.
void parallel_range(std::uint64_t total, const std::function<void(std::uint64_t, std::uint64_t)>& fn)
{
    const std::uint64_t chunk = 4096;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < worker_count(); ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t first = next.fetch_add(chunk);
                if (first >= total) return;
                fn(first, std::min(total, first + chunk));
            }
        });
    for (auto& t : pool) t.join();
}

Outcome from_report(const VerificationReport& r, double limit_seconds)
{
    std::ostringstream s;
    s << r.task << " verdict=" << r.verdict() << " checked=" << r.graphs_checked
      << " counterexamples=" << r.counterexamples.size() << " elapsed=" << r.elapsed_seconds << "s";
    const bool in_time = r.elapsed_seconds < limit_seconds;
    if (!in_time) s << " exceeds " << limit_seconds << "s";
    return {r.pass() && r.graphs_checked > 0 && in_time, s.str()};
}

long long ex1_closed(int n, int t, int r) { return oracle::binom2(n) - oracle::binom2((n + t) / r + 1); }

long long ex2_closed(int n, int t, int r)
{
    const int k = (t + r - 1) / (r - 1);
    const int q = t % (r - 1);
    return oracle::binom2(n) - oracle::binom2(k) - static_cast<long long>(k) * (n - k - (r - 2 - q));
}

// Every labelled graph on n vertices whose complement has maximum degree at
// most d, found by extending pair by pair in graph6 order.
void for_each_co_degree_bounded(int n, int d, const std::function<void(const Graph&)>& fn)
{
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::vector<int> codeg(n, 0);
    std::vector<Edge> missing;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pairs.size()) {
            GraphBuilder b(Graph::complete(n));
            for (auto [u, v] : missing) b.remove_edge(u, v);
            fn(b.finish());
            return;
        }
        rec(i + 1);
        auto [u, v] = pairs[i];
        if (codeg[u] < d && codeg[v] < d) {
            ++codeg[u];
            ++codeg[v];
            missing.push_back(pairs[i]);
            rec(i + 1);
            missing.pop_back();
            --codeg[u];
            --codeg[v];
        }
    };
    rec(0);
}

// Every split of the vertices into consecutive triples of a permutation,
// each triple spanning a path on three vertices.
bool oracle_p3_factor(const Graph& g)
{
    const int n = g.order();
    if (n % 3 != 0) return false;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        bool ok = true;
        for (int b = 0; b < n && ok; b += 3) {
            const int a = p[b], c = p[b + 1], e = p[b + 2];
            const int edges = g.has_edge(a, c) + g.has_edge(a, e) + g.has_edge(c, e);
            ok = edges >= 2;
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

int main()
{
    report(1, "K_3 edge bound holds on every labelled graph, n <= 5 (< 1 min) and n = 6 (< 10 min)", [] {
        SweepOptions opts{static_cast<int>(worker_count()), false};
        const auto small = verify_kr_bound(5, 3, opts);
        const auto o5 = from_report(small, 60.0);
        const auto full = verify_kr_bound(6, 3, opts);
        const auto o6 = from_report(full, 600.0);
        return Outcome{o5.pass && o6.pass, "n<=5: " + o5.detail + "; n<=6: " + o6.detail};
    });

    report(2, "both extremal graphs have no K_r-factor after the join and match their edge formulas, n+t <= 15, r in {3,4}",
           [] {
               int instances = 0, bad = 0;
               std::string first_bad;
               for (int r : {3, 4})
                   for (int n = 2; n <= 15; ++n)
                       for (int t : valid_t_values(n, r)) {
                           if (n + t > 15) continue;
                           const auto p = RFactorParams::make(n, t, r);
                           const Graph e1 = ex1_factor(p), e2 = ex2_factor(p);
                           const bool ok = e1.edge_count() == ex1_closed(n, t, r) &&
                                           e2.edge_count() == ex2_closed(n, t, r) && !kr_factor(join(e1, t), r) &&
                                           !kr_factor(join(e2, t), r);
                           ++instances;
                           if (!ok) {
                               ++bad;
                               if (first_bad.empty())
                                   first_bad = " first=(" + std::to_string(n) + "," + std::to_string(t) + "," +
                                               std::to_string(r) + ")";
                           }
                       }
               return Outcome{bad == 0 && instances > 0,
                              std::to_string(instances) + " parameter triples, " + std::to_string(bad) + " failures" +
                                  first_bad};
           });

    report(3, "Hamiltonicity bound holds on every labelled graph n <= 6, t <= n, and the constructions are non-Hamiltonian",
           [] {
               const auto sweep = verify_hamilton_bound(6, {static_cast<int>(worker_count()), false});
               auto o = from_report(sweep, 300.0);
               int checked = 0, bad = 0;
               for (int n = 1; n <= 6; ++n)
                   for (int t = 0; t <= n; ++t) {
                       const int total = n + t;
                       if (total < 3) continue;
                       const Graph c = cycle(total);
                       if ((total + 1) / 2 < n && in_class_h1(c, n, t)) {
                           ++checked;
                           if (oracle::is_hamiltonian(join(ex1_band(n, t), t))) ++bad;
                       }
                       if (in_class_h2(c, n, t)) {
                           ++checked;
                           if (oracle::is_hamiltonian(join(ex2_band(n, t), t))) ++bad;
                       }
                   }
               o.detail += "; constructions checked by permutation oracle: " + std::to_string(checked) + ", failures " +
                           std::to_string(bad);
               o.pass = o.pass && bad == 0 && checked > 0;
               return o;
           });

    report(4, "EX_2 step inequality, f1 <= g and the modular impossibility, n <= 60, 3 <= r <= 8", [] {
        return from_report(verify_step_inequality(60, 8), 60.0);
    });

    report(5, "10,000 randomized instances of each rewiring procedure validate (n <= 10, r = 3, t <= 4)", [] {
        RepairSweepOptions o;
        o.samples = 10000;
        o.n_max = 10;
        o.t_max = 4;
        o.r = 3;
        const auto r = verify_repair(o);
        auto out = from_report(r, 600.0);
        out.detail += "; stats " + nlohmann::json(r.stats).dump();
        out.pass = out.pass && r.graphs_checked == 2 * o.samples;
        return out;
    });

    report(6, "K_r solver matches the all-partitions oracle (n <= 6, r in {2,3}); Hamilton solver matches the all-permutations oracle (n <= 7)",
           [] {
               std::atomic<long> kr_checked{0}, ham_checked{0}, mismatches{0};
               for (int n = 1; n <= 6; ++n) {
                   LabelledGraphs(n).for_each([&](std::uint64_t, const Graph& g) {
                       for (int r : {2, 3}) {
                           const auto cert = kr_factor(g, r);
                           const bool valid = !cert || validate_kr_factor(g, r, *cert);
                           if (cert.has_value() != oracle::has_kr_factor(g, r) || !valid) ++mismatches;
                           ++kr_checked;
                       }
                   });
               }
               for (int n = 3; n <= 7; ++n) {
                   const LabelledGraphs all(n);
                   parallel_range(all.size(), [&](std::uint64_t first, std::uint64_t last) {
                       long local = 0, bad = 0;
                       LabelledGraphs(n, first, last).for_each([&](std::uint64_t, const Graph& g) {
                           const auto cert = hamilton_cycle(g);
                           const bool valid = !cert || validate_hamilton_cycle(g, *cert);
                           if (cert.has_value() != oracle::is_hamiltonian(g) || !valid) ++bad;
                           ++local;
                       });
                       ham_checked += local;
                       mismatches += bad;
                   });
               }
               return Outcome{mismatches == 0, std::to_string(kr_checked.load()) + " K_r decisions, " +
                                                   std::to_string(ham_checked.load()) + " Hamilton decisions, " +
                                                   std::to_string(mismatches.load()) + " mismatches"};
           });

    report(7, "minimum degree >= (1-1/r)n forces a K_r-factor on every labelled graph, 3 <= n <= 8, r in {2,3,4}, r | n",
           [] {
               long graphs = 0, missing = 0, guarantee_disagrees = 0;
               std::string cross;
               for (int r : {2, 3, 4})
                   for (int n = 3; n <= 8; ++n) {
                       if (n % r != 0) continue;
                       // delta >= (r-1)n/r  <=>  complement degree <= n-1-ceil((r-1)n/r)
                       const int need = ((r - 1) * n + r - 1) / r;
                       const int d = n - 1 - need;
                       long here = 0;
                       for_each_co_degree_bounded(n, d, [&](const Graph& g) {
                           ++here;
                           if (!hajnal_szemeredi_guarantee(g, r)) ++guarantee_disagrees;
                           if (!kr_factor(g, r)) ++missing;
                       });
                       graphs += here;
                       if (n <= 6) {
                           // cross-check the generator against a plain filter
                           long filtered = 0;
                           LabelledGraphs(n).for_each([&](std::uint64_t, const Graph& g) {
                               if (static_cast<long>(g.min_degree()) * r >= static_cast<long>(r - 1) * n) ++filtered;
                           });
                           if (filtered != here) cross += " generator mismatch at n=" + std::to_string(n);
                       }
                   }
               return Outcome{missing == 0 && guarantee_disagrees == 0 && cross.empty() && graphs > 0,
                              std::to_string(graphs) + " graphs, " + std::to_string(missing) + " without a factor, " +
                                  std::to_string(guarantee_disagrees) + " predicate disagreements" + cross};
           });

    report(8, "EX'_H for K_{1,2}: no factor after the join, and e(EX'_H) = e(EX_H) + floor(|A|/2)", [] {
        int instances = 0, bad = 0;
        std::string list;
        for (int n = 2; n <= 14; ++n)
            for (int t = 0; t <= 4; ++t) {
                const auto a = ex_h_independent_size(n, t, 3, 2);
                if (!a || *a > n || n + t > 15) continue;
                const Graph prime = ex_h_prime(n, t, 2);
                const Graph plain = ex_h(n, t, star(2));
                const Graph joined = join(prime, t);
                bool ok = prime.edge_count() == plain.edge_count() + *a / 2 && !h_factor(joined, star(2));
                if (n + t <= 9) ok = ok && !oracle_p3_factor(joined);
                ++instances;
                if (!ok) ++bad;
                list += " (" + std::to_string(n) + "," + std::to_string(t) + ")";
            }
        return Outcome{bad == 0 && instances > 0,
                       std::to_string(instances) + " instances, " + std::to_string(bad) + " failures;" + list};
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
