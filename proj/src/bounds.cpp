#include "deficiency/bounds.hpp"

#include "deficiency/errors.hpp"

namespace deficiency {

std::int64_t binom2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::string to_string(BoundSide side) { return side == BoundSide::EX1 ? "EX1" : "EX2"; }

std::int64_t ex1_edge_formula(const RFactorParams& p)
{
    return binom2(p.n) - binom2((p.n + p.t) / p.r + 1);
}

std::int64_t ex2_edge_formula(const RFactorParams& p)
{
    const std::int64_t k = p.k;
    return binom2(p.n) - binom2(k) - k * (p.n - k - (p.r - 2 - p.q));
}

BoundResult kr_bound(const RFactorParams& p)
{
    const auto checked = RFactorParams::make(p.n, p.t, p.r);
    BoundResult out;
    out.params = checked;
    out.ex1_term = ex1_edge_formula(checked);
    out.ex2_term = ex2_edge_formula(checked);
    out.side = out.ex1_term >= out.ex2_term ? BoundSide::EX1 : BoundSide::EX2;
    out.value = std::max(out.ex1_term, out.ex2_term);
    return out;
}

FlaggedBound triangle_bound(std::int64_t n, std::int64_t t)
{
    FlaggedBound out;
    out.hypothesis_ok = n >= 1 && t >= 0 && (n + t) % 3 == 0 && 1000 * t <= n;
    const std::int64_t k = (t + 2) / 2;  // ceil((t+1)/2)
    if (t % 2 != 0) {
        out.branch = "t odd";
        out.value = binom2(n) - binom2(k) - k * (n - k);
    } else {
        out.branch = "t even";
        out.value = binom2(n) - binom2(k) - k * (n - k - 1);
    }
    return out;
}

FlaggedBound hamilton_bound(std::int64_t n, std::int64_t t)
{
    FlaggedBound out;
    out.hypothesis_ok = n >= 0 && t >= 0;
    const std::int64_t small_t = t * (n - 1) - binom2(t);
    if ((n + t) % 2 == 0) {
        if (5 * t <= n + 4) {
            out.branch = "n+t even, t <= (n+4)/5";
            out.value = binom2(n) - small_t;
        } else {
            out.branch = "n+t even, t >= (n+4)/5";
            out.value = binom2(n) - (binom2((n + t + 2) / 2) - 1);
        }
    } else {
        if (5 * t <= n + 1) {
            out.branch = "n+t odd, t <= (n+1)/5";
            out.value = binom2(n) - small_t;
        } else {
            out.branch = "n+t odd, t >= (n+1)/5";
            out.value = binom2(n) - binom2((n + t + 1) / 2);
        }
    }
    return out;
}

FlaggedRationalBound bandwidth_bound(std::int64_t n, std::int64_t t, const Rational& eps)
{
    if (eps <= 0) throw ParameterError("bandwidth_bound: eps must be positive");
    FlaggedRationalBound out;
    out.hypothesis_ok = n >= 1 && t >= 0;
    const Rational slack = eps * n * n;
    if (5 * t <= n) {
        out.branch = "t <= n/5";
        out.value = Rational(binom2(n)) - (Rational(t * (n - 1) - binom2(t)) - slack);
    } else {
        out.branch = "t > n/5";
        out.value = Rational(binom2(n)) - (Rational(binom2((n + t + 1) / 2 + 1)) - slack);
    }
    return out;
}

std::int64_t ex1_band_edge_formula(std::int64_t n, std::int64_t t)
{
    return binom2(n) - binom2((n + t + 1) / 2 + 1);
}

std::int64_t ex2_band_edge_formula(std::int64_t n, std::int64_t t)
{
    return binom2(n) - (t * (n - 1) - binom2(t));
}

TechnicalQuantities technical_quantities(std::int64_t n, std::int64_t r)
{
    if (r < 3) throw ParameterError("technical_quantities: need r >= 3");
    TechnicalQuantities q;
    q.g = Rational(n - r) - Rational(n, r);
    q.f1 = Rational(n * (r - 1), 2 * r * r - 2 * r + 1) - r;
    q.f2 = Rational(n * (r - 1) - r * r);
    return q;
}

Rational proof_quadratic(const Rational& i, std::int64_t n, std::int64_t t, const Rational& gamma)
{
    return i * ((Rational(1) - 2 * gamma) * (n + t) - i) - i * (i - 1) / 2;
}

Rational ex_term_crossover(std::int64_t n, std::int64_t r)
{
    return Rational((r - 1) * n - r * r, 2 * r * r - 2 * r + 1);
}

void to_json(nlohmann::json& j, const BoundResult& b)
{
    j = nlohmann::json{{"bound", "kr"},
                       {"value", b.value},
                       {"side", to_string(b.side)},
                       {"ex1_term", b.ex1_term},
                       {"ex2_term", b.ex2_term},
                       {"params",
                        {{"n", b.params.n}, {"t", b.params.t}, {"r", b.params.r}, {"k", b.params.k}, {"q", b.params.q}}}};
}

void to_json(nlohmann::json& j, const FlaggedBound& b)
{
    j = nlohmann::json{{"value", b.value}, {"hypothesis_ok", b.hypothesis_ok}, {"branch", b.branch}};
}

void to_json(nlohmann::json& j, const FlaggedRationalBound& b)
{
    j = nlohmann::json{{"value", to_string(b.value)}, {"hypothesis_ok", b.hypothesis_ok}, {"branch", b.branch}};
}

}  // namespace deficiency
