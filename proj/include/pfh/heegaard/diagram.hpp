#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfh/complex/io.hpp"
#include "pfh/errors.hpp"

namespace pfh {

/// Corners at an intersection point, in the frame where alpha runs east and beta runs north.
enum Quadrant : std::size_t { NE = 0, NW = 1, SW = 2, SE = 3 };

inline constexpr std::array<const char*, 4> quadrant_names{"NE", "NW", "SW", "SE"};

struct IntersectionPoint {
    std::string name;
    std::size_t alpha = 0;
    std::size_t alpha_pos = 0;
    std::size_t beta = 0;
    std::size_t beta_pos = 0;
    std::array<std::size_t, 4> quadrants{};
    // +1 when the (alpha, beta) frame agrees with the surface orientation.
    int sign = 1;

    friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

struct Region {
    std::string name;
    int corners = 0;
    // Topological Euler characteristic; 1 for a polygon.
    int euler = 1;

    /// euler - corners / 4, times 4.
    std::int64_t euler_measure4() const { return 4 * static_cast<std::int64_t>(euler) - corners; }

    friend bool operator==(const Region&, const Region&) = default;
};

/// One side of a curve segment, as regions.
struct SegmentSides {
    std::size_t left = 0;
    std::size_t right = 0;
};

class PointedDiagram {
  public:
    int genus = 1;
    std::vector<IntersectionPoint> points;
    std::vector<Region> regions;
    std::size_t basepoint = 0;

    std::string point_name(std::size_t p) const {
        return points.at(p).name.empty() ? "p" + std::to_string(p) : points[p].name;
    }
    std::string region_name(std::size_t r) const {
        return regions.at(r).name.empty() ? "R" + std::to_string(r) : regions[r].name;
    }

    /// Points on alpha_i in order of position.
    std::vector<std::size_t> alpha_curve(std::size_t i) const { return curve(i, true); }
    std::vector<std::size_t> beta_curve(std::size_t i) const { return curve(i, false); }

    /// Sides of the alpha segment leaving point p forward.
    SegmentSides alpha_out(std::size_t p) const {
        const auto& q = points[p].quadrants;
        return points[p].sign > 0 ? SegmentSides{q[NE], q[SE]} : SegmentSides{q[SE], q[NE]};
    }
    /// Sides of the alpha segment arriving at p.
    SegmentSides alpha_in(std::size_t p) const {
        const auto& q = points[p].quadrants;
        return points[p].sign > 0 ? SegmentSides{q[NW], q[SW]} : SegmentSides{q[SW], q[NW]};
    }
    SegmentSides beta_out(std::size_t p) const {
        const auto& q = points[p].quadrants;
        return points[p].sign > 0 ? SegmentSides{q[NW], q[NE]} : SegmentSides{q[NE], q[NW]};
    }
    SegmentSides beta_in(std::size_t p) const {
        const auto& q = points[p].quadrants;
        return points[p].sign > 0 ? SegmentSides{q[SW], q[SE]} : SegmentSides{q[SE], q[SW]};
    }

    /// Sum of region Euler measures, times 4.
    std::int64_t euler_measure4() const {
        std::int64_t s = 0;
        for (const auto& r : regions) s += r.euler_measure4();
        return s;
    }

    friend bool operator==(const PointedDiagram&, const PointedDiagram&) = default;

  private:
    std::vector<std::size_t> curve(std::size_t i, bool alpha) const {
        std::vector<std::pair<std::size_t, std::size_t>> on;
        for (std::size_t p = 0; p < points.size(); ++p) {
            if ((alpha ? points[p].alpha : points[p].beta) != i) continue;
            on.emplace_back(alpha ? points[p].alpha_pos : points[p].beta_pos, p);
        }
        std::sort(on.begin(), on.end());
        std::vector<std::size_t> out;
        for (const auto& [pos, p] : on) out.push_back(p);
        return out;
    }
};

/// All diagram invariants; the messages name the offending point, region or curve.
inline std::vector<std::string> diagram_violations(const PointedDiagram& d) {
    std::vector<std::string> out;
    if (d.genus < 1) out.push_back("genus must be at least 1");
    if (d.regions.empty()) out.push_back("no regions");
    if (d.basepoint >= d.regions.size()) out.push_back("basepoint region out of range");
    if (!out.empty()) return out;
    const auto g = static_cast<std::size_t>(d.genus);
    std::vector<int> corners(d.regions.size(), 0);
    std::set<std::pair<std::size_t, std::size_t>> alpha_slots, beta_slots;
    for (std::size_t p = 0; p < d.points.size(); ++p) {
        const auto& pt = d.points[p];
        const auto name = d.point_name(p);
        if (pt.alpha >= g || pt.beta >= g) out.push_back("point " + name + " lies on a curve beyond the genus");
        if (pt.sign != 1 && pt.sign != -1) out.push_back("point " + name + " has sign other than +1/-1");
        if (!alpha_slots.insert({pt.alpha, pt.alpha_pos}).second)
            out.push_back("point " + name + " repeats a position on alpha " + std::to_string(pt.alpha));
        if (!beta_slots.insert({pt.beta, pt.beta_pos}).second)
            out.push_back("point " + name + " repeats a position on beta " + std::to_string(pt.beta));
        for (std::size_t q = 0; q < 4; ++q) {
            if (pt.quadrants[q] >= d.regions.size())
                out.push_back("point " + name + " quadrant " + quadrant_names[q] + " names no region");
            else
                ++corners[pt.quadrants[q]];
        }
    }
    if (!out.empty()) return out;
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        if (corners[r] != d.regions[r].corners)
            out.push_back("region " + d.region_name(r) + " declares " + std::to_string(d.regions[r].corners) +
                          " corners but " + std::to_string(corners[r]) + " quadrants reference it");
    if (d.euler_measure4() != 4 * (2 - 2 * static_cast<std::int64_t>(d.genus)))
        out.push_back("Euler measures sum to " + std::to_string(d.euler_measure4()) + "/4, expected 2 - 2g = " +
                      std::to_string(2 - 2 * d.genus));
    for (std::size_t c = 0; c < g; ++c)
        for (bool alpha : {true, false}) {
            const auto pts = alpha ? d.alpha_curve(c) : d.beta_curve(c);
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const auto from = pts[j], to = pts[(j + 1) % pts.size()];
                const auto o = alpha ? d.alpha_out(from) : d.beta_out(from);
                const auto i = alpha ? d.alpha_in(to) : d.beta_in(to);
                if (o.left != i.left || o.right != i.right)
                    out.push_back(std::string(alpha ? "alpha " : "beta ") + std::to_string(c) + " segment " +
                                  d.point_name(from) + "->" + d.point_name(to) + " has inconsistent sides");
            }
        }
    return out;
}

inline void require_valid(const PointedDiagram& d) {
    const auto v = diagram_violations(d);
    if (!v.empty()) throw ValidationError(v.front());
}

// JSON: {"version": 1, "genus": g, "regions": [{"name"?, "corners", "euler"?}],
//        "points": [{"name"?, "alpha": [c, pos], "beta": [c, pos], "sign"?, "quadrants": {...}}], "basepoint": r}
// Optional fields are written only when they differ from their defaults.

namespace detail {

inline std::size_t as_index(const Json& j, const char* what) {
    const auto v = as_int(j, what);
    if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

inline std::pair<std::size_t, std::size_t> curve_position(const Json& j, const char* what) {
    const auto& a = as_array(j, what);
    if (a.size() != 2) throw ParseError(std::string(what) + " must be [curve, position]");
    return {as_index(a[0], what), as_index(a[1], what)};
}

} // namespace detail

inline PointedDiagram diagram_from_json(const Json& j) {
    using namespace detail;
    if (as_int(field(j, "version"), "version") != 1) throw ParseError("unsupported diagram version");
    PointedDiagram d;
    d.genus = static_cast<int>(as_int(field(j, "genus"), "genus"));
    for (const auto& r : as_array(field(j, "regions"), "regions")) {
        Region reg;
        if (r.contains("name")) reg.name = as_string(r["name"], "region name");
        reg.corners = static_cast<int>(as_int(field(r, "corners"), "corners"));
        if (r.contains("euler")) reg.euler = static_cast<int>(as_int(r["euler"], "euler"));
        d.regions.push_back(std::move(reg));
    }
    for (const auto& p : as_array(field(j, "points"), "points")) {
        IntersectionPoint pt;
        if (p.contains("name")) pt.name = as_string(p["name"], "point name");
        std::tie(pt.alpha, pt.alpha_pos) = curve_position(field(p, "alpha"), "alpha");
        std::tie(pt.beta, pt.beta_pos) = curve_position(field(p, "beta"), "beta");
        if (p.contains("sign")) pt.sign = static_cast<int>(as_int(p["sign"], "sign"));
        const auto& q = field(p, "quadrants");
        for (std::size_t k = 0; k < 4; ++k) pt.quadrants[k] = as_index(field(q, quadrant_names[k]), "quadrant");
        d.points.push_back(std::move(pt));
    }
    d.basepoint = as_index(field(j, "basepoint"), "basepoint");
    return d;
}

inline Json diagram_to_json(const PointedDiagram& d) {
    Json j;
    j["version"] = 1;
    j["genus"] = d.genus;
    j["regions"] = Json::array();
    for (const auto& r : d.regions) {
        Json x;
        if (!r.name.empty()) x["name"] = r.name;
        x["corners"] = r.corners;
        if (r.euler != 1) x["euler"] = r.euler;
        j["regions"].push_back(std::move(x));
    }
    j["points"] = Json::array();
    for (const auto& p : d.points) {
        Json x;
        if (!p.name.empty()) x["name"] = p.name;
        x["alpha"] = {p.alpha, p.alpha_pos};
        x["beta"] = {p.beta, p.beta_pos};
        if (p.sign != 1) x["sign"] = p.sign;
        Json q;
        for (std::size_t k = 0; k < 4; ++k) q[quadrant_names[k]] = p.quadrants[k];
        x["quadrants"] = std::move(q);
        j["points"].push_back(std::move(x));
    }
    j["basepoint"] = d.basepoint;
    return j;
}

inline std::string diagram_to_string(const PointedDiagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

inline PointedDiagram load_diagram(const std::string& path) { return diagram_from_json(read_json_file(path)); }

} // namespace pfh
