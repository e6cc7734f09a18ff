#pragma once

#include "deficiency/constructions.hpp"
#include "deficiency/rational.hpp"

#include <json.hpp>

#include <cstdint>

namespace deficiency {

std::int64_t binom2(std::int64_t x);

enum class BoundSide { EX1, EX2 };

std::string to_string(BoundSide side);

/// max{e(EX_1), e(EX_2)} for the K_r-factor problem. `side` names the term
/// that attains the maximum; ties report EX1.
struct BoundResult {
    std::int64_t value = 0;
    BoundSide side = BoundSide::EX1;
    std::int64_t ex1_term = 0;
    std::int64_t ex2_term = 0;
    RFactorParams params;
};

std::int64_t ex1_edge_formula(const RFactorParams& p);
std::int64_t ex2_edge_formula(const RFactorParams& p);
BoundResult kr_bound(const RFactorParams& p);

// Value of a bound plus whether the bound's hypotheses hold for the
// arguments. Evaluators compute outside the hypotheses instead of failing.
struct FlaggedBound {
    std::int64_t value = 0;
    bool hypothesis_ok = true;
    std::string branch;
};

struct FlaggedRationalBound {
    Rational value;
    bool hypothesis_ok = true;
    std::string branch;
};

// Triangle-factor bound with k = ceil((t+1)/2); hypothesis 3 | n+t, t <= n/1000.
FlaggedBound triangle_bound(std::int64_t n, std::int64_t t);

// Hamiltonicity bound, split on the parity of n+t.
FlaggedBound hamilton_bound(std::int64_t n, std::int64_t t);

// Bipartite bandwidth bound with eps*n^2 slack; branches at t <= n/5.
FlaggedRationalBound bandwidth_bound(std::int64_t n, std::int64_t t, const Rational& eps);

// e(EX_1(n,t)) and e(EX_2(n,t)) of the bandwidth constructions.
std::int64_t ex1_band_edge_formula(std::int64_t n, std::int64_t t);
std::int64_t ex2_band_edge_formula(std::int64_t n, std::int64_t t);

struct TechnicalQuantities {
    Rational g;   // n - r - n/r
    Rational f1;  // n(r-1)/(2r^2 - 2r + 1) - r
    Rational f2;  // n(r-1) - r^2
};

TechnicalQuantities technical_quantities(std::int64_t n, std::int64_t r);

// i((1 - 2 gamma)(n + t) - i) - i(i-1)/2, the missing-edge lower bound as a
// function of the violating index i.
Rational proof_quadratic(const Rational& i, std::int64_t n, std::int64_t t, const Rational& gamma);

// The threshold ((r-1)n - r^2)/(2r^2 - 2r + 1) below which the EX_1 term
// does not exceed the EX_2 term when (r-1) | (t+1).
Rational ex_term_crossover(std::int64_t n, std::int64_t r);

void to_json(nlohmann::json& j, const BoundResult& b);
void to_json(nlohmann::json& j, const FlaggedBound& b);
void to_json(nlohmann::json& j, const FlaggedRationalBound& b);

}  // namespace deficiency
