#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfh/complex/twisted_complex.hpp"
#include "pfh/errors.hpp"
#include "pfh/heegaard/diagram.hpp"
#include "pfh/heegaard/integer_lattice.hpp"

namespace pfh {

/// One intersection point per alpha curve (points[i] lies on alpha_i), using each beta curve once.
struct GeneratorTuple {
    std::vector<std::size_t> points;

    friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;
    friend auto operator<=>(const GeneratorTuple&, const GeneratorTuple&) = default;
};

/// Integer multiplicity per region.
struct RegionDomain {
    std::vector<std::int64_t> coefficients;

    bool is_zero() const {
        for (auto c : coefficients)
            if (c) return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coefficients.size(); ++i) s += (i ? "," : "") + std::to_string(coefficients[i]);
        return s + ")";
    }

    friend bool operator==(const RegionDomain&, const RegionDomain&) = default;
};

namespace detail {

inline IntVector to_int_vector(const RegionDomain& d) { return {d.coefficients.begin(), d.coefficients.end()}; }

inline RegionDomain to_domain(const IntVector& v) {
    RegionDomain d;
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw DomainError("domain coefficient overflows 64 bits");
        d.coefficients.push_back(x.get_si());
    }
    return d;
}

} // namespace detail

inline std::string generator_name(const PointedDiagram& d, const GeneratorTuple& x) {
    std::string s;
    for (std::size_t i = 0; i < x.points.size(); ++i) s += (i ? "," : "") + d.point_name(x.points[i]);
    return s;
}

/// All perfect matchings, alpha curves in order and points along each in position order.
inline std::vector<GeneratorTuple> enumerate_generators(const PointedDiagram& d) {
    require_valid(d);
    const auto g = static_cast<std::size_t>(d.genus);
    std::vector<std::vector<std::size_t>> on_alpha(g);
    for (std::size_t i = 0; i < g; ++i) on_alpha[i] = d.alpha_curve(i);
    std::vector<GeneratorTuple> out;
    GeneratorTuple cur;
    std::vector<bool> used(g, false);
    auto go = [&](auto&& self, std::size_t i) -> void {
        if (i == g) {
            out.push_back(cur);
            return;
        }
        for (auto p : on_alpha[i]) {
            const auto b = d.points[p].beta;
            if (used[b]) continue;
            used[b] = true;
            cur.points.push_back(p);
            self(self, i + 1);
            cur.points.pop_back();
            used[b] = false;
        }
    };
    go(go, 0);
    return out;
}

/// Product of point signs and the sign of the alpha-to-beta permutation; parity 0 for +1.
inline int generator_parity(const PointedDiagram& d, const GeneratorTuple& x) {
    int sign = 1;
    std::vector<std::size_t> perm;
    for (auto p : x.points) {
        sign *= d.points[p].sign;
        perm.push_back(d.points[p].beta);
    }
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign > 0 ? 0 : 1;
}

/// Linear system in region multiplicities: row per (curve, point) saying the boundary along the
/// curve has the corner jump demanded by x and y. Homogeneous when x = y.
struct CornerSystem {
    std::vector<IntVector> rows;
    // Per row: the point and whether it sits on an alpha curve.
    std::vector<std::pair<std::size_t, bool>> at;
};

inline CornerSystem corner_system(const PointedDiagram& d) {
    require_valid(d);
    CornerSystem s;
    const std::size_t nr = d.regions.size();
    auto jump = [&](const SegmentSides& sd) {
        IntVector v(nr);
        v[sd.left] += 1;
        v[sd.right] -= 1;
        return v;
    };
    for (std::size_t c = 0; c < static_cast<std::size_t>(d.genus); ++c)
        for (bool alpha : {true, false}) {
            const auto pts = alpha ? d.alpha_curve(c) : d.beta_curve(c);
            if (pts.empty())
                throw ValidationError(std::string(alpha ? "alpha " : "beta ") + std::to_string(c) +
                                      " has no intersection points, so its sides are unknown");
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const auto p = pts[j];
                // Jump arriving at p minus jump leaving p.
                auto row = jump(alpha ? d.alpha_in(p) : d.beta_in(p));
                const auto out = jump(alpha ? d.alpha_out(p) : d.beta_out(p));
                for (std::size_t r = 0; r < nr; ++r) row[r] -= out[r];
                s.rows.push_back(std::move(row));
                s.at.emplace_back(p, alpha);
            }
        }
    return s;
}

namespace detail {

// Right-hand side for domains from x to y: alpha rows get [p in y] - [p in x], beta rows the negative.
inline IntVector corner_rhs(const CornerSystem& s, const GeneratorTuple& x, const GeneratorTuple& y) {
    IntVector b(s.rows.size());
    auto in = [](const GeneratorTuple& t, std::size_t p) {
        for (auto q : t.points)
            if (q == p) return 1;
        return 0;
    };
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const auto [p, alpha] = s.at[i];
        const int v = in(y, p) - in(x, p);
        b[i] = alpha ? v : -v;
    }
    return b;
}

inline std::vector<IntVector> with_basepoint_row(const PointedDiagram& d, std::vector<IntVector> rows) {
    IntVector z(d.regions.size());
    z[d.basepoint] = 1;
    rows.push_back(std::move(z));
    return rows;
}

inline std::vector<IntVector> lattice_basis(const PointedDiagram& d) {
    return integer_kernel(with_basepoint_row(d, corner_system(d).rows), d.regions.size());
}

inline bool is_periodic(const CornerSystem& s, const IntVector& v) {
    for (const auto& row : s.rows) {
        mpz_class t = 0;
        for (std::size_t r = 0; r < v.size(); ++r) t += row[r] * v[r];
        if (t != 0) return false;
    }
    return true;
}

} // namespace detail

/// Hermite basis of periodic domains: boundary a sum of whole curves, zero at the basepoint.
inline std::vector<RegionDomain> periodic_domain_lattice(const PointedDiagram& d) {
    std::vector<RegionDomain> out;
    for (const auto& v : detail::lattice_basis(d)) out.push_back(detail::to_domain(v));
    return out;
}

/// Whether every curve segment sees a constant corner jump along its curve.
inline bool is_periodic(const PointedDiagram& d, const RegionDomain& p) {
    if (p.coefficients.size() != d.regions.size()) throw ValidationError("domain length differs from region count");
    return detail::is_periodic(corner_system(d), detail::to_int_vector(p));
}

struct Admissibility {
    bool admissible = true;
    std::optional<RegionDomain> witness;
};

/// Weakly admissible iff no nonzero lattice vector is componentwise nonnegative.
inline Admissibility is_weakly_admissible(const std::vector<RegionDomain>& lattice) {
    std::vector<IntVector> basis;
    for (const auto& v : lattice) basis.push_back(detail::to_int_vector(v));
    const auto w = nonnegative_lattice_vector(basis);
    if (!w) return {};
    return {false, detail::to_domain(*w)};
}

inline Admissibility is_weakly_admissible(const PointedDiagram& d) {
    return is_weakly_admissible(periodic_domain_lattice(d));
}

/// A domain from x to y with zero basepoint multiplicity, reduced modulo the periodic lattice.
inline std::optional<RegionDomain> domain_between(const PointedDiagram& d, const GeneratorTuple& x,
                                                  const GeneratorTuple& y) {
    const auto s = corner_system(d);
    auto rhs = detail::corner_rhs(s, x, y);
    rhs.push_back(0);
    const auto v = solve_integer(detail::with_basepoint_row(d, s.rows), rhs, d.regions.size());
    if (!v) return std::nullopt;
    return detail::to_domain(reduce_modulo(*v, detail::lattice_basis(d)));
}

struct SpincPartition {
    std::vector<std::size_t> class_of;
    std::size_t count = 0;

    std::string label(std::size_t i) const { return "s" + std::to_string(class_of.at(i)); }
};

/// Classes of generators joined by some domain, numbered by first appearance.
inline SpincPartition spin_c_partition(const PointedDiagram& d, const std::vector<GeneratorTuple>& gens) {
    SpincPartition out;
    std::vector<std::size_t> reps;
    for (const auto& x : gens) {
        std::size_t cls = reps.size();
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (domain_between(d, gens[reps[k]], x)) {
                cls = k;
                break;
            }
        if (cls == reps.size()) reps.push_back(out.class_of.size());
        out.class_of.push_back(cls);
    }
    out.count = reps.size();
    return out;
}

/// <c1(s_y), [P]> = chi(P) - 2 n_z(P) + 2 sum_{p in y} n_p(P), with n_p the quarter sum over corners at p.
inline std::int64_t chern_number(const PointedDiagram& d, const RegionDomain& p, const GeneratorTuple& y) {
    if (!is_periodic(d, p)) throw ValidationError("domain " + p.str() + " is not periodic");
    const auto& c = p.coefficients;
    std::int64_t four = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r) four += c[r] * d.regions[r].euler_measure4();
    four -= 8 * c[d.basepoint];
    for (auto pt : y.points)
        for (auto r : d.points.at(pt).quadrants) four += 2 * c[r];
    if (four % 4) throw DomainError("Chern number of " + p.str() + " is not an integer");
    return four / 4;
}

/// A disk supplied as input data: a domain from x to y and its count mod 2.
struct DiskInput {
    GeneratorTuple from;
    GeneratorTuple to;
    RegionDomain domain;
    int count = 1;
};

/// The twisted complex of a diagram: one generator per matching, labelled by parity and spin^c class;
/// a disk's class is the lattice coordinate of domain - reference - n_z [Sigma].
inline TwistedComplex assemble_complex(const PointedDiagram& d, const std::vector<DiskInput>& disks) {
    const auto gens = enumerate_generators(d);
    const auto part = spin_c_partition(d, gens);
    const auto basis = detail::lattice_basis(d);
    const auto s = corner_system(d);
    TwistedComplex c(basis.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        c.add_generator(generator_name(d, gens[i]), generator_parity(d, gens[i]), part.label(i));
    for (const auto& disk : disks) {
        const auto where = generator_name(d, disk.from) + "->" + generator_name(d, disk.to);
        if (disk.count != 0 && disk.count != 1) throw ValidationError("disk count must be 0 or 1 for " + where);
        if (disk.domain.coefficients.size() != d.regions.size())
            throw ValidationError("domain length differs from region count for " + where);
        for (auto x : disk.domain.coefficients)
            if (x < 0) throw ValidationError("disk " + where + " has a negative coefficient " + disk.domain.str());
        const auto v = detail::to_int_vector(disk.domain);
        const auto rhs = detail::corner_rhs(s, disk.from, disk.to);
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            mpz_class t = 0;
            for (std::size_t r = 0; r < v.size(); ++r) t += s.rows[i][r] * v[r];
            if (t != rhs[i]) throw ValidationError("domain " + disk.domain.str() + " does not connect " + where);
        }
        if (disk.count == 0) continue;
        const auto ref = domain_between(d, disk.from, disk.to);
        const auto nz = disk.domain.coefficients[d.basepoint];
        IntVector diff(v.size());
        for (std::size_t r = 0; r < v.size(); ++r) diff[r] = v[r] - ref->coefficients[r] - nz;
        std::vector<std::int64_t> exp;
        for (const auto& x : lattice_coordinates(diff, basis)) exp.push_back(x.get_si());
        c.toggle_disk(generator_name(d, disk.from), generator_name(d, disk.to),
                      DiskClass{MultiExponent(std::move(exp)), static_cast<std::size_t>(nz)});
    }
    require_valid(c);
    return c;
}

} // namespace pfh
