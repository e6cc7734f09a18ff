#pragma once

#include "deficiency/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace deficiency {

enum class TileKind { Clique, Pattern, HamiltonCycle };

/// Witness for a spanning structure.
///
/// Clique: each tile is a sorted r-set inducing K_r.
/// Pattern: tiles[i][j] is the image of pattern vertex j in tile i.
/// HamiltonCycle: a single tile listing the cycle in order; the closing
/// edge runs from the last vertex back to the first.
struct FactorCertificate {
    TileKind kind = TileKind::Clique;
    std::vector<std::vector<Vertex>> tiles;

    bool operator==(const FactorCertificate&) const = default;
};

struct Validation {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
};

// The validators below deliberately use nothing but Graph::order() and
// Graph::has_edge(): they must not share code with the solvers they check.
Validation validate_kr_factor(const Graph& g, int r, const FactorCertificate& cert);
Validation validate_h_factor(const Graph& g, const Graph& pattern, const FactorCertificate& cert);
Validation validate_hamilton_cycle(const Graph& g, const FactorCertificate& cert);

std::string to_string(TileKind kind);

void to_json(nlohmann::json& j, const FactorCertificate& cert);
void from_json(const nlohmann::json& j, FactorCertificate& cert);

}  // namespace deficiency
