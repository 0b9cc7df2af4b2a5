#pragma once

// Certificate document: UTF-8 JSON with a fixed key order so that files are
// byte-stable for fixed inputs (elapsed_ms aside).

#include <string>

#include "json.hpp"

#include "dcl/construction.hpp"

namespace dcl {

inline nlohmann::ordered_json to_json(const Certificate& c, bool include_elapsed = true) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema_version"] = Certificate::kSchemaVersion;
    j["t"] = c.params.t;
    j["r"] = c.params.r >= 0 ? ordered_json(c.params.r) : ordered_json(nullptr);
    j["n"] = c.params.n;
    j["n_t"] = c.params.n_t;
    j["counts"] = {
        {"plain", c.counts.plain},
        {"family_a", c.counts.family_a},
        {"family_b", c.counts.family_b},
        {"total_cycles", c.total_cycles},
    };
    j["vertices"] = {{"direct", c.vertices.direct}, {"closed_form", c.vertices.closed_form}};
    j["edges"] = {{"direct", c.edges.direct}, {"closed_form", c.edges.closed_form}};
    j["distinct"] = c.distinct;
    ordered_json collisions = ordered_json::array();
    for (const Collision& col : c.collisions) {
        ordered_json provs = ordered_json::array();
        for (const Provenance& p : col.provenances) provs.push_back(p.to_string());
        collisions.push_back({{"length", col.length}, {"provenances", std::move(provs)}});
    }
    j["collisions"] = std::move(collisions);
    if (include_elapsed) j["elapsed_ms"] = static_cast<long long>(c.elapsed_ms);
    return j;
}

inline std::string render_certificate(const Certificate& c, bool include_elapsed = true) {
    return to_json(c, include_elapsed).dump(2) + "\n";
}

}  // namespace dcl
