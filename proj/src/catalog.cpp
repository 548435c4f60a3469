#include "sphtd/catalog.hpp"

#include "sphtd/error.hpp"
#include "sphtd/json_util.hpp"

#include <sstream>

namespace sphtd {

namespace {

CatalogEntry entry(std::string name, std::string description, std::vector<AbelianGroup> groups)
{
    const int top = static_cast<int>(groups.size()) - 1;
    return {BaseManifold{std::move(name), top / 2, GradedGroup(std::move(groups))}, std::move(description)};
}

/* Torsion-free model from Betti numbers b_0 .. b_{2n}. */
CatalogEntry free_entry(std::string name, std::string description, std::vector<std::size_t> betti)
{
    std::vector<AbelianGroup> groups;
    for (std::size_t b : betti)
        groups.push_back(AbelianGroup::free(b));
    return entry(std::move(name), std::move(description), std::move(groups));
}

std::vector<CatalogEntry> build_catalog()
{
    const AbelianGroup z = AbelianGroup::free(1);
    const AbelianGroup z2 = AbelianGroup::cyclic(2);
    return {
        free_entry("S4", "4-sphere", {1, 0, 0, 0, 1}),
        free_entry("S6", "6-sphere", {1, 0, 0, 0, 0, 0, 1}),
        free_entry("S8", "8-sphere", {1, 0, 0, 0, 0, 0, 0, 0, 1}),
        free_entry("S10", "10-sphere", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),
        free_entry("S2xS4", "S^2 x S^4", {1, 0, 1, 0, 1, 0, 1}),
        free_entry("S3xS3", "S^3 x S^3", {1, 0, 0, 2, 0, 0, 1}),
        free_entry("CP3", "complex projective 3-space", {1, 0, 1, 0, 1, 0, 1}),
        free_entry("CP2xS2", "CP^2 x S^2", {1, 0, 2, 0, 2, 0, 1}),
        free_entry("S2xS6", "S^2 x S^6", {1, 0, 1, 0, 0, 0, 1, 0, 1}),
        free_entry("S4xS4", "S^4 x S^4", {1, 0, 0, 0, 2, 0, 0, 0, 1}),
        free_entry("CP4", "complex projective 4-space", {1, 0, 1, 0, 1, 0, 1, 0, 1}),
        free_entry("M8", "S^2 x S^2 x S^4, a generic torsion-free 8-manifold", {1, 0, 2, 0, 2, 0, 2, 0, 1}),
        // Z_2 in H^2 is linked with Z_2 in H^5 (torsion of H^j pairs with H^{7-j})
        entry("T6", "synthetic 6-manifold model with 2-torsion in H^2 and H^5",
              {z, {}, z2, {}, {}, z2, z}),
    };
}

}  // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<BaseManifold> find_base(const std::string& name)
{
    for (const CatalogEntry& e : catalog())
        if (e.base.name == name)
            return e.base;
    return std::nullopt;
}

BaseManifold base_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("groups") || !doc["groups"].is_array())
        throw Error(ErrorCode::InvalidBase, "base file: expected an object with 'dim' and 'groups'");
    if (!doc["dim"].is_number_integer())
        throw Error(ErrorCode::InvalidBase, "base file: 'dim' must be an integer");
    const long dim = doc["dim"].get<long>();
    if (dim < 4 || dim % 2 != 0 || dim > 200)
        throw Error(ErrorCode::InvalidBase, "base file: 'dim' must be an even integer >= 4");

    BaseManifold base;
    base.name = doc.value("name", std::string("inline"));
    base.half_dim = static_cast<int>(dim / 2);
    base.cohomology = GradedGroup::zero(static_cast<int>(dim));
    std::vector<bool> seen(static_cast<std::size_t>(dim) + 1, false);
    for (const auto& g : doc["groups"]) {
        if (!g.is_object() || !g.contains("degree") || !g["degree"].is_number_integer())
            throw Error(ErrorCode::InvalidBase, "base file: every group needs an integer 'degree'");
        const long degree = g["degree"].get<long>();
        if (degree < 0 || degree > dim) {
            std::ostringstream os;
            os << "base file: degree " << degree << " outside 0.." << dim;
            throw Error(ErrorCode::InvalidBase, os.str());
        }
        if (seen[static_cast<std::size_t>(degree)])
            throw Error(ErrorCode::InvalidBase, "base file: degree listed twice");
        seen[static_cast<std::size_t>(degree)] = true;

        const nlohmann::json rank = g.value("rank", nlohmann::json(0));
        if (!rank.is_number_integer() || rank.get<long>() < 0)
            throw Error(ErrorCode::InvalidBase, "base file: 'rank' must be a non-negative integer");
        std::vector<Integer> orders;
        if (g.contains("torsion")) {
            if (!g["torsion"].is_array())
                throw Error(ErrorCode::InvalidBase, "base file: 'torsion' must be a list");
            for (const auto& t : g["torsion"]) {
                if (!t.is_number_integer())
                    throw Error(ErrorCode::InvalidBase, "base file: torsion coefficients must be integers");
                Integer d(t.get<long>());
                if (d < 2)
                    throw Error(ErrorCode::InvalidBase, "base file: torsion coefficients must be >= 2");
                orders.push_back(std::move(d));
            }
        }
        base.cohomology.set(static_cast<int>(degree),
                            AbelianGroup::from_orders(static_cast<std::size_t>(rank.get<long>()), orders));
    }
    return base;
}

nlohmann::json base_to_json(const BaseManifold& base)
{
    nlohmann::json groups = nlohmann::json::array();
    for (int j = 0; j <= base.cohomology.top(); ++j) {
        const AbelianGroup& g = base.cohomology.at(j);
        if (g.is_zero())
            continue;
        nlohmann::json entry = group_to_json(g);
        entry["degree"] = j;
        groups.push_back(std::move(entry));
    }
    return {{"name", base.name}, {"dim", base.dim()}, {"groups", groups}};
}

}  // namespace sphtd
