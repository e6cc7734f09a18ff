#include "deficiency/deficiency.hpp"

#include "deficiency/errors.hpp"
#include "deficiency/factor.hpp"

#include <string>

namespace deficiency {

namespace {

void check_query(const DeficiencyQuery& q)
{
    if (const auto* kr = std::get_if<KrFactor>(&q.property); kr && kr->r < 3)
        throw ParameterError("deficiency: K_r-factor queries need r >= 3");
    if (const auto* hf = std::get_if<HFactor>(&q.property); hf && hf->pattern.order() < 1)
        throw ParameterError("deficiency: H must have at least one vertex");
    if (q.t_cap && *q.t_cap < 0) throw ParameterError("deficiency: t_cap must be non-negative");
}

// Tile size for factor properties, 1 (no residue restriction) otherwise.
int step_of(const SpanningProperty& p)
{
    if (const auto* kr = std::get_if<KrFactor>(&p)) return kr->r;
    if (const auto* hf = std::get_if<HFactor>(&p)) return hf->pattern.order();
    return 1;
}

}  // namespace

int default_t_cap(const DeficiencyQuery& q)
{
    const int n = q.graph.order();
    if (const auto* kr = std::get_if<KrFactor>(&q.property)) return (kr->r - 1) * n;
    if (const auto* hf = std::get_if<HFactor>(&q.property)) return (hf->pattern.order() - 1) * n;
    return std::max(n, 3 - n);
}

bool has_property_at(const DeficiencyQuery& q, int t)
{
    const Graph joined = join(q.graph, t);
    if (joined.order() > kFactorMaxOrder)
        throw SizeError("deficiency: G*K_" + std::to_string(t) + " has " + std::to_string(joined.order()) +
                        " vertices, beyond the exact solvers");
    if (const auto* kr = std::get_if<KrFactor>(&q.property)) return kr_factor(joined, kr->r).has_value();
    if (const auto* hf = std::get_if<HFactor>(&q.property)) return h_factor(joined, hf->pattern).has_value();
    if (joined.order() < 3) return false;
    return hamilton_cycle(joined).has_value();
}

int deficiency(const DeficiencyQuery& q)
{
    check_query(q);
    const int n = q.graph.order();
    const int step = step_of(q.property);
    const int cap = q.t_cap.value_or(default_t_cap(q));
    const int start = ((-n) % step + step) % step;
    for (int t = start; t <= cap; t += step)
        if (has_property_at(q, t)) return t;
    throw SizeError("deficiency: no t <= " + std::to_string(cap) + " gives the property");
}

bool deficiency_monotone_step(const DeficiencyQuery& q, int t)
{
    if (!std::holds_alternative<KrFactor>(q.property))
        throw ParameterError("deficiency_monotone_step: only defined for K_r-factor queries");
    check_query(q);
    if (t < 0) throw ParameterError("deficiency_monotone_step: t must be non-negative");
    return has_property_at(q, t);
}

}  // namespace deficiency
