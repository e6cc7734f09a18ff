#pragma once

#include "deficiency/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace deficiency {

struct Counterexample {
    std::string graph6;
    int n = 0;
    int t = 0;
    int r = 0;  // 0 where no r applies
    std::string kind;
    std::string detail;

    auto operator<=>(const Counterexample&) const = default;
};

/// Outcome of one exhaustive sweep. `graphs_checked` counts the instances
/// the task actually decided (a solver call or an arithmetic check), and
/// `stats` carries task-specific tallies. The verdict is "pass" exactly
/// when there are no counterexamples.
struct VerificationReport {
    std::string task;
    nlohmann::json parameters = nlohmann::json::object();
    std::int64_t graphs_checked = 0;
    std::vector<Counterexample> counterexamples;
    nlohmann::json stats = nlohmann::json::object();
    double elapsed_seconds = 0.0;

    bool pass() const { return counterexamples.empty(); }
    std::string verdict() const { return pass() ? "pass" : "fail"; }
};

void to_json(nlohmann::json& j, const Counterexample& c);
void from_json(const nlohmann::json& j, Counterexample& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

struct SweepOptions {
    int threads = 1;
    bool iso_dedup = false;
};

inline constexpr int kLabelledSweepMaxOrder = 7;
inline constexpr int kIsoSweepMaxOrder = 8;
inline constexpr int kHClassMaxOrder = 12;

/// For 2 <= n <= n_max and every valid t: every G with e(G) above the K_r
/// bound has a K_r-factor in G*K_t, and both extremal graphs match their
/// edge formulas and have no K_r-factor after the join.
VerificationReport verify_kr_bound(int n_max, int r, const SweepOptions& opts = {});

/// For 1 <= n <= n_max and 0 <= t <= n: every G above the Hamiltonicity
/// bound has a Hamiltonian join; the bandwidth constructions joined with
/// K_t are non-Hamiltonian whenever C_{n+t} lies in the class they exclude.
VerificationReport verify_hamilton_bound(int n_max, const SweepOptions& opts = {});

/// H on n+t vertices: if H is in H_1 it has no copy in ex1_band(n,t)*K_t;
/// if H is in H_2 it has no copy in ex2_band(n,t)*K_t.
VerificationReport verify_h_classes(int n, int t, const Graph& h);

/// Integer sweep of the EX_2 step inequality over 3 <= n <= n_max, 3 <= r <= r_max.
VerificationReport verify_step_inequality(int n_max, int r_max);

/// Random instances of both rewiring procedures (r = 3 by default); every
/// output is replayed through the independent factor validator against the
/// original G*K_t.
struct RepairSweepOptions {
    int samples = 10000;
    std::uint64_t seed = 1;
    int n_max = 10;
    int t_max = 4;
    int r = 3;
};
VerificationReport verify_repair(const RepairSweepOptions& opts);

}  // namespace deficiency
