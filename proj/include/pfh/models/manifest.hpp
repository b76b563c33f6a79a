#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pfh/complex/io.hpp"
#include "pfh/heegaard/diagram.hpp"
#include "pfh/heegaard/fixtures.hpp"
#include "pfh/models/fixtures.hpp"

namespace pfh {

// Provenance: "published" data is read off a published computation; "constructed" data is a
// model chosen to agree with every published rank, or plumbing.

struct ComplexFixture {
    std::string name;
    Json params;
    std::string provenance;
    std::function<TwistedComplex()> build;
};

struct DiagramFixture {
    std::string name;
    Json params;
    std::string provenance;
    std::function<PointedDiagram()> build;
};

/// Two generators of opposite parity and no disks; HF+ is two free towers.
inline TwistedComplex zero_differential_complex() {
    TwistedComplex c(1);
    c.add_generator("x", 0, "s0");
    c.add_generator("y", 1, "s0");
    return c;
}

inline std::vector<ComplexFixture> complex_fixtures() {
    return {
        {"t3_chain", Json::object(), "published", t3_chain_fixture},
        {"t3_model", Json::object(), "constructed", t3_model},
        {"torus_bundle", Json::object(), "published", torus_bundle_model},
        {"sigma_g2_k1", {{"g", 2}, {"k", 1}, {"omega_D", "1/10"}}, "published",
         [] { return figure6_complex(SigmaParams(2, 1)); }},
        {"sigma_g3_k1", {{"g", 3}, {"k", 1}, {"omega_D", "1/10"}}, "published",
         [] { return figure6_complex(SigmaParams(3, 1)); }},
        {"sigma_g3_k2", {{"g", 3}, {"k", 2}, {"omega_D", "1/10"}}, "published",
         [] { return figure6_complex(SigmaParams(3, 2)); }},
        {"random_s7", {{"seed", 7}, {"size", 6}, {"b", 3}}, "constructed",
         [] { return random_valid_complex(7, 6, 3); }},
        {"empty", Json::object(), "constructed", [] { return TwistedComplex(0); }},
        {"zero_differential", Json::object(), "constructed", zero_differential_complex},
    };
}

inline std::vector<DiagramFixture> diagram_fixtures() {
    return {
        {"s3", Json::object(), "published", sphere_diagram},
        {"lens31", {{"p", 3}}, "published", [] { return lens_space_diagram(3); }},
        {"lens51", {{"p", 5}}, "published", [] { return lens_space_diagram(5); }},
        {"s2xs1", {{"basepoint", "A"}}, "constructed", [] { return s2xs1_diagram(false); }},
        {"s2xs1_nonadmissible", {{"basepoint", "B1"}}, "constructed", [] { return s2xs1_diagram(true); }},
        {"disjoint", Json::object(), "constructed", disjoint_curves_diagram},
    };
}

/// {"complexes": [{name, file, params, provenance}], "diagrams": [...]}; files are relative to the data root.
inline Json fixtures_manifest() {
    Json j;
    j["complexes"] = Json::array();
    for (const auto& f : complex_fixtures())
        j["complexes"].push_back(
            {{"name", f.name}, {"file", "complexes/" + f.name + ".json"}, {"params", f.params}, {"provenance", f.provenance}});
    j["diagrams"] = Json::array();
    for (const auto& f : diagram_fixtures())
        j["diagrams"].push_back(
            {{"name", f.name}, {"file", "diagrams/" + f.name + ".json"}, {"params", f.params}, {"provenance", f.provenance}});
    return j;
}

} // namespace pfh
