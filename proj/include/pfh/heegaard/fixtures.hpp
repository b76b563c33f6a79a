#pragma once

#include <cstddef>
#include <string>

#include "pfh/errors.hpp"
#include "pfh/heegaard/diagram.hpp"

namespace pfh {

/// Genus-1 diagram of L(p, 1): beta of slope p meets alpha in p points, cutting the torus into
/// p parallelograms R_j with corners NE(p_j) = R_j, NW = SE = R_{j-1}, SW = R_{j-2}.
/// p = 1 is the sphere.
inline PointedDiagram lens_space_diagram(int p) {
    if (p < 1) throw ValidationError("lens space diagram needs p >= 1");
    PointedDiagram d;
    d.genus = 1;
    const auto n = static_cast<std::size_t>(p);
    for (std::size_t j = 0; j < n; ++j) d.regions.push_back({"R" + std::to_string(j), 4, 1});
    auto reg = [&](long j) { return static_cast<std::size_t>(((j % p) + p) % p); };
    for (std::size_t j = 0; j < n; ++j) {
        IntersectionPoint pt;
        pt.name = "x" + std::to_string(j);
        pt.alpha_pos = pt.beta_pos = j;
        const auto jj = static_cast<long>(j);
        pt.quadrants = {reg(jj), reg(jj - 1), reg(jj - 2), reg(jj - 1)};
        d.points.push_back(pt);
    }
    d.basepoint = 0;
    return d;
}

inline PointedDiagram sphere_diagram() { return lens_space_diagram(1); }

/// Genus-1 diagram of S^2 x S^1: beta is a pushoff of alpha meeting it twice with opposite signs.
/// Regions: the annulus A and the bigons B1 (above alpha) and B2 (below). With the basepoint in A
/// the periodic domain B1 - B2 has mixed signs; with it in B1 the domain A + 2 B2 is positive.
inline PointedDiagram s2xs1_diagram(bool basepoint_in_bigon = false) {
    PointedDiagram d;
    d.genus = 1;
    d.regions = {{"A", 4, 0}, {"B1", 2, 1}, {"B2", 2, 1}};
    IntersectionPoint q0;
    q0.name = "q0";
    q0.quadrants = {1, 0, 2, 0};
    IntersectionPoint q1;
    q1.name = "q1";
    q1.alpha_pos = q1.beta_pos = 1;
    q1.sign = -1;
    q1.quadrants = {2, 0, 1, 0};
    d.points = {q0, q1};
    d.basepoint = basepoint_in_bigon ? 1 : 0;
    return d;
}

/// Genus-1 diagram with disjoint parallel alpha and beta: two annuli and no intersection points.
inline PointedDiagram disjoint_curves_diagram() {
    PointedDiagram d;
    d.genus = 1;
    d.regions = {{"A1", 0, 0}, {"A2", 0, 0}};
    d.basepoint = 1;
    return d;
}

} // namespace pfh
