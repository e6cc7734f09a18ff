#include "deficiency/certificate.hpp"

#include "deficiency/errors.hpp"

namespace deficiency {

namespace {

Validation fail(std::string reason) { return {false, std::move(reason)}; }

// Checks that the tiles partition 0..n-1, each tile having `size` vertices.
Validation check_partition(const Graph& g, const FactorCertificate& cert, std::size_t size)
{
    std::vector<int> seen(g.order(), 0);
    for (const auto& tile : cert.tiles) {
        if (tile.size() != size)
            return fail("tile of size " + std::to_string(tile.size()) + ", expected " + std::to_string(size));
        for (Vertex v : tile) {
            if (v < 0 || v >= g.order()) return fail("vertex " + std::to_string(v) + " out of range");
            if (seen[v]++) return fail("vertex " + std::to_string(v) + " covered twice");
        }
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!seen[v]) return fail("vertex " + std::to_string(v) + " uncovered");
    return {};
}

}  // namespace

Validation validate_kr_factor(const Graph& g, int r, const FactorCertificate& cert)
{
    if (r < 1) return fail("tile size must be positive");
    if (cert.kind != TileKind::Clique) return fail("certificate is not a clique tiling");
    if (auto part = check_partition(g, cert, static_cast<std::size_t>(r)); !part) return part;
    for (const auto& tile : cert.tiles)
        for (std::size_t i = 0; i < tile.size(); ++i)
            for (std::size_t j = i + 1; j < tile.size(); ++j)
                if (!g.has_edge(tile[i], tile[j]))
                    return fail("tile pair " + std::to_string(tile[i]) + "," + std::to_string(tile[j]) +
                                " is not an edge");
    return {};
}

Validation validate_h_factor(const Graph& g, const Graph& pattern, const FactorCertificate& cert)
{
    if (cert.kind != TileKind::Pattern) return fail("certificate is not a pattern tiling");
    const int h = pattern.order();
    if (h < 1) return fail("empty pattern");
    if (auto part = check_partition(g, cert, static_cast<std::size_t>(h)); !part) return part;
    for (const auto& tile : cert.tiles)
        for (int a = 0; a < h; ++a)
            for (int b = a + 1; b < h; ++b)
                if (pattern.has_edge(a, b) && !g.has_edge(tile[a], tile[b]))
                    return fail("pattern edge " + std::to_string(a) + "-" + std::to_string(b) + " maps to non-edge " +
                                std::to_string(tile[a]) + "-" + std::to_string(tile[b]));
    return {};
}

Validation validate_hamilton_cycle(const Graph& g, const FactorCertificate& cert)
{
    if (cert.kind != TileKind::HamiltonCycle) return fail("certificate is not a Hamilton cycle");
    if (cert.tiles.size() != 1) return fail("a Hamilton cycle certificate holds exactly one tile");
    if (g.order() < 3) return fail("no Hamilton cycle on fewer than 3 vertices");
    if (auto part = check_partition(g, cert, static_cast<std::size_t>(g.order())); !part) return part;
    const auto& cycle = cert.tiles.front();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = cycle[i];
        const Vertex b = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(a, b)) return fail("consecutive pair " + std::to_string(a) + "," + std::to_string(b) + " is not an edge");
    }
    return {};
}

std::string to_string(TileKind kind)
{
    switch (kind) {
    case TileKind::Clique: return "K_r";
    case TileKind::Pattern: return "H";
    case TileKind::HamiltonCycle: return "hamilton";
    }
    return "?";
}

void to_json(nlohmann::json& j, const FactorCertificate& cert)
{
    j = nlohmann::json{{"kind", to_string(cert.kind)}, {"tiles", cert.tiles}};
}

void from_json(const nlohmann::json& j, FactorCertificate& cert)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "K_r")
        cert.kind = TileKind::Clique;
    else if (kind == "H")
        cert.kind = TileKind::Pattern;
    else if (kind == "hamilton")
        cert.kind = TileKind::HamiltonCycle;
    else
        throw InputError("unknown certificate kind: " + kind);
    cert.tiles = j.at("tiles").get<std::vector<std::vector<Vertex>>>();
}

}  // namespace deficiency
