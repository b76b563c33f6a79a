#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "generators.hpp"
#include "pfh/complex/plus.hpp"
#include "pfh/heegaard/domains.hpp"
#include "pfh/heegaard/fixtures.hpp"
#include "pfh/models/fixtures.hpp"

using namespace pfh;
using pfh::testing::Gen;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

RegionDomain rd(std::initializer_list<std::int64_t> xs) { return RegionDomain{std::vector<std::int64_t>(xs)}; }

IntVector mul(const std::vector<IntVector>& a, const IntVector& v) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

std::vector<IntVector> random_int_matrix(Gen& g, std::size_t m, std::size_t n, long range = 3) {
    std::vector<IntVector> a(m, IntVector(n));
    for (auto& row : a)
        for (auto& x : row) x = g.uniform(-range, range);
    return a;
}

// Rank over Q by fraction-free elimination on a copy.
std::size_t rational_rank(std::vector<IntVector> a) {
    std::size_t rank = 0;
    const std::size_t n = a.empty() ? 0 : a.front().size();
    for (std::size_t c = 0; c < n && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            const mpz_class f = a[r][c], piv = a[rank][c];
            for (std::size_t j = 0; j < n; ++j) a[r][j] = a[r][j] * piv - a[rank][j] * f;
        }
        ++rank;
    }
    return rank;
}

bool nonnegative_nonzero(const IntVector& v) {
    bool any = false;
    for (const auto& x : v) {
        if (x < 0) return false;
        any = any || x != 0;
    }
    return any;
}

std::vector<PointedDiagram> shipped_diagrams() {
    return {sphere_diagram(), lens_space_diagram(3), lens_space_diagram(5), s2xs1_diagram(false),
            s2xs1_diagram(true), disjoint_curves_diagram()};
}

GeneratorTuple gen(std::size_t p) { return GeneratorTuple{{p}}; }

} // namespace

TEST(IntegerLattice, HermiteExamples) {
    auto h = hermite_basis({iv({2, 4}), iv({3, 5}), iv({0, 0})});
    EXPECT_EQ(h, (std::vector<IntVector>{iv({1, 1}), iv({0, 2})}));
    EXPECT_TRUE(hermite_basis({iv({0, 0, 0})}).empty());
    EXPECT_EQ(hermite_basis({iv({-3, 1})}), (std::vector<IntVector>{iv({3, -1})}));
}

TEST(IntegerLattice, KernelExamples) {
    EXPECT_EQ(integer_kernel({iv({1, 1, 0})}, 3), (std::vector<IntVector>{iv({1, -1, 0}), iv({0, 0, 1})}));
    EXPECT_TRUE(integer_kernel({iv({1, 0}), iv({0, 1})}, 2).empty());
    // 2x + 4y = 0 has primitive kernel (2, -1), not (4, -2).
    EXPECT_EQ(integer_kernel({iv({2, 4})}, 2), (std::vector<IntVector>{iv({2, -1})}));
}

TEST(IntegerLattice, KernelProperties) {
    Gen g(91);
    for (int it = 0; it < 200; ++it) {
        const auto m = static_cast<std::size_t>(g.uniform(1, 4)), n = static_cast<std::size_t>(g.uniform(1, 6));
        const auto a = random_int_matrix(g, m, n);
        const auto k = integer_kernel(a, n);
        EXPECT_EQ(k.size(), n - rational_rank(a));
        for (const auto& v : k) EXPECT_TRUE(detail::is_zero(mul(a, v)));
        EXPECT_EQ(hermite_basis(k), k);
        // Saturation: an integer vector in the rational kernel is an integer combination of the basis.
        if (!k.empty()) {
            IntVector w(n);
            for (const auto& v : k) detail::axpy(w, g.uniform(-3, 3), v);
            EXPECT_NO_THROW(lattice_coordinates(w, k));
        }
    }
}

TEST(IntegerLattice, SolveAndReduce) {
    EXPECT_FALSE(solve_integer({iv({2})}, iv({1}), 1));
    EXPECT_EQ(*solve_integer({iv({2})}, iv({6}), 1), iv({3}));
    EXPECT_FALSE(solve_integer({iv({1, 1}), iv({1, 1})}, iv({1, 2}), 2));
    Gen g(92);
    for (int it = 0; it < 200; ++it) {
        const auto m = static_cast<std::size_t>(g.uniform(1, 4)), n = static_cast<std::size_t>(g.uniform(1, 6));
        const auto a = random_int_matrix(g, m, n);
        IntVector v0(n);
        for (auto& x : v0) x = g.uniform(-4, 4);
        const auto b = mul(a, v0);
        const auto v = solve_integer(a, b, n);
        ASSERT_TRUE(v);
        EXPECT_EQ(mul(a, *v), b);
        // Every solution reduces to the same representative.
        const auto k = integer_kernel(a, n);
        EXPECT_EQ(reduce_modulo(*v, k), reduce_modulo(v0, k));
        auto shifted = v0;
        for (const auto& row : k) detail::axpy(shifted, g.uniform(-5, 5), row);
        EXPECT_EQ(reduce_modulo(shifted, k), reduce_modulo(v0, k));
    }
}

TEST(NonnegativeLatticeVector, Examples) {
    EXPECT_EQ(nonnegative_lattice_vector({iv({1, 1, 0})}), iv({1, 1, 0}));
    EXPECT_FALSE(nonnegative_lattice_vector({iv({1, -1})}));
    EXPECT_FALSE(nonnegative_lattice_vector({}));
    EXPECT_FALSE(nonnegative_lattice_vector({iv({1, -1, 0}), iv({0, 1, -1})}));
    const auto w = nonnegative_lattice_vector({iv({2, -1}), iv({-1, 1})});
    ASSERT_TRUE(w);
    EXPECT_TRUE(nonnegative_nonzero(*w));
}

TEST(NonnegativeLatticeVector, AgreesWithBoundedSearch) {
    Gen g(93);
    for (int it = 0; it < 150; ++it) {
        const auto r = static_cast<std::size_t>(g.uniform(1, 2)), len = static_cast<std::size_t>(g.uniform(2, 4));
        const auto basis = hermite_basis(random_int_matrix(g, r, len, 2));
        if (basis.empty()) continue;
        bool found = false;
        for (long c0 = -4; c0 <= 4 && !found; ++c0)
            for (long c1 = -4; c1 <= 4 && !found; ++c1) {
                IntVector v(len);
                detail::axpy(v, c0, basis[0]);
                if (basis.size() > 1) detail::axpy(v, c1, basis[1]);
                found = nonnegative_nonzero(v);
            }
        const auto w = nonnegative_lattice_vector(basis);
        if (found) {
            EXPECT_TRUE(w) << it;
        }
        if (w) {
            EXPECT_TRUE(nonnegative_nonzero(*w));
            EXPECT_NO_THROW(lattice_coordinates(*w, basis));
        }
    }
}

TEST(Diagram, ShippedDiagramsAreValid) {
    for (const auto& d : shipped_diagrams()) {
        EXPECT_TRUE(diagram_violations(d).empty()) << diagram_to_string(d);
        EXPECT_EQ(d.euler_measure4(), 4 * (2 - 2 * d.genus));
    }
}

TEST(Diagram, ViolationsAreNamed) {
    auto d = lens_space_diagram(3);
    d.regions[1].corners = 3;
    auto v = diagram_violations(d);
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v.front().find("R1"), std::string::npos);

    d = lens_space_diagram(3);
    std::swap(d.points[0].quadrants[NE], d.points[0].quadrants[NW]);
    v = diagram_violations(d);
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v.front().find("inconsistent sides"), std::string::npos);

    d = s2xs1_diagram();
    d.regions[0].euler = 1;
    d.regions[0].corners = 4;
    v = diagram_violations(d);
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v.front().find("Euler"), std::string::npos);

    d = sphere_diagram();
    d.basepoint = 7;
    EXPECT_THROW(require_valid(d), ValidationError);
}

TEST(Diagram, JsonRoundTripIsBitExact) {
    for (const auto& d : shipped_diagrams()) {
        const auto text = diagram_to_string(d);
        const auto back = diagram_from_json(parse_json_text(text));
        EXPECT_EQ(back, d);
        EXPECT_EQ(diagram_to_string(back), text);
    }
    EXPECT_THROW(diagram_from_json(parse_json_text(R"({"version": 1, "genus": 1})")), ParseError);
    EXPECT_THROW(diagram_from_json(parse_json_text(
                     R"({"version": 1, "genus": 1, "regions": [{"corners": 4}], "points": [{"alpha": [0], "beta": [0, 0], "quadrants": {}}], "basepoint": 0})")),
                 ParseError);
}

TEST(EnumerateGenerators, Examples) {
    EXPECT_EQ(enumerate_generators(sphere_diagram()).size(), 1u);
    EXPECT_EQ(enumerate_generators(lens_space_diagram(3)).size(), 3u);
    EXPECT_TRUE(enumerate_generators(disjoint_curves_diagram()).empty());
    const auto s = enumerate_generators(s2xs1_diagram());
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(generator_parity(s2xs1_diagram(), s[0]), 0);
    EXPECT_EQ(generator_parity(s2xs1_diagram(), s[1]), 1);
    EXPECT_EQ(enumerate_generators(lens_space_diagram(3)), enumerate_generators(lens_space_diagram(3)));
}

TEST(PeriodicLattice, Examples) {
    EXPECT_TRUE(periodic_domain_lattice(lens_space_diagram(3)).empty());
    EXPECT_TRUE(periodic_domain_lattice(sphere_diagram()).empty());
    EXPECT_EQ(periodic_domain_lattice(s2xs1_diagram(false)), (std::vector<RegionDomain>{rd({0, 1, -1})}));
    EXPECT_EQ(periodic_domain_lattice(s2xs1_diagram(true)), (std::vector<RegionDomain>{rd({1, 0, 2})}));
    EXPECT_THROW(periodic_domain_lattice(disjoint_curves_diagram()), ValidationError);
}

TEST(PeriodicLattice, WholeCurveBoundaryAndBasepoint) {
    for (const auto& d : {s2xs1_diagram(false), s2xs1_diagram(true), lens_space_diagram(4)})
        for (const auto& p : periodic_domain_lattice(d)) {
            EXPECT_EQ(p.coefficients[d.basepoint], 0);
            EXPECT_TRUE(is_periodic(d, p));
        }
    // The whole surface is periodic but sits at the basepoint.
    EXPECT_TRUE(is_periodic(s2xs1_diagram(), rd({1, 1, 1})));
    EXPECT_FALSE(is_periodic(s2xs1_diagram(), rd({0, 1, 0})));
}

TEST(Admissibility, Examples) {
    EXPECT_TRUE(is_weakly_admissible(std::vector<RegionDomain>{rd({1, -1})}).admissible);
    EXPECT_TRUE(is_weakly_admissible(std::vector<RegionDomain>{}).admissible);
    auto a = is_weakly_admissible(std::vector<RegionDomain>{rd({1, 1, 0})});
    EXPECT_FALSE(a.admissible);
    EXPECT_EQ(a.witness, rd({1, 1, 0}));

    EXPECT_TRUE(is_weakly_admissible(s2xs1_diagram(false)).admissible);
    EXPECT_TRUE(is_weakly_admissible(lens_space_diagram(3)).admissible);
    auto bad = is_weakly_admissible(s2xs1_diagram(true));
    EXPECT_FALSE(bad.admissible);
    EXPECT_EQ(bad.witness, rd({1, 0, 2}));
}

TEST(DomainBetween, Examples) {
    const auto lens = lens_space_diagram(3);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(domain_between(lens, gen(i), gen(i)), rd({0, 0, 0}));
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                EXPECT_FALSE(domain_between(lens, gen(i), gen(j)));
            }
    }
    EXPECT_EQ(domain_between(sphere_diagram(), gen(0), gen(0)), rd({0}));

    const auto s = s2xs1_diagram(false);
    const auto d01 = domain_between(s, gen(0), gen(1));
    ASSERT_TRUE(d01);
    EXPECT_EQ(d01->coefficients[s.basepoint], 0);
    // Either bigon joins q0 to q1 once the reference is fixed.
    const auto d10 = domain_between(s, gen(1), gen(0));
    ASSERT_TRUE(d10);
    RegionDomain loop{{d01->coefficients[0] + d10->coefficients[0], d01->coefficients[1] + d10->coefficients[1],
                       d01->coefficients[2] + d10->coefficients[2]}};
    EXPECT_TRUE(is_periodic(s, loop));
}

TEST(DomainBetween, RepresentativeIsIndependentOfLatticeShift) {
    const auto s = s2xs1_diagram(true);
    const auto ref = *domain_between(s, gen(0), gen(1));
    // B1 connects q0 to q1 and covers the basepoint; shifting by [Sigma] and lattice vectors keeps the class.
    const auto sys = corner_system(s);
    for (long k = -3; k <= 3; ++k) {
        IntVector v = iv({0, 1, 0});
        detail::axpy(v, k, iv({1, 0, 2}));
        detail::axpy(v, -1, iv({1, 1, 1}));
        EXPECT_EQ(reduce_modulo(v, detail::lattice_basis(s)), detail::to_int_vector(ref));
    }
    EXPECT_EQ(sys.rows.size(), 4u);
}

TEST(SpincPartition, Examples) {
    const auto lens = lens_space_diagram(3);
    auto p = spin_c_partition(lens, enumerate_generators(lens));
    EXPECT_EQ(p.count, 3u);
    EXPECT_EQ(p.class_of, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(spin_c_partition(sphere_diagram(), enumerate_generators(sphere_diagram())).count, 1u);
    const auto s = s2xs1_diagram();
    EXPECT_EQ(spin_c_partition(s, enumerate_generators(s)).count, 1u);
}

TEST(SpincPartition, IsAnEquivalence) {
    for (const auto& d : {lens_space_diagram(4), lens_space_diagram(6), s2xs1_diagram(false), s2xs1_diagram(true)}) {
        const auto gens = enumerate_generators(d);
        const auto part = spin_c_partition(d, gens);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const bool ij = domain_between(d, gens[i], gens[j]).has_value();
                EXPECT_EQ(ij, domain_between(d, gens[j], gens[i]).has_value());
                EXPECT_EQ(ij, part.class_of[i] == part.class_of[j]);
                for (std::size_t k = 0; k < gens.size(); ++k)
                    if (ij && domain_between(d, gens[j], gens[k])) {
                        EXPECT_TRUE(domain_between(d, gens[i], gens[k]));
                    }
            }
    }
}

TEST(ChernNumber, Examples) {
    const auto s = s2xs1_diagram(false);
    EXPECT_EQ(chern_number(s, rd({0, 0, 0}), gen(0)), 0);
    // B1 - B2: Euler measures cancel, the basepoint is outside and every corner average vanishes.
    EXPECT_EQ(chern_number(s, rd({0, 1, -1}), gen(0)), 0);
    EXPECT_EQ(chern_number(s, rd({0, 1, -1}), gen(1)), 0);
    EXPECT_THROW(chern_number(s, rd({0, 1, 0}), gen(0)), ValidationError);
    // The whole torus: measure 0, basepoint multiplicity 1, each corner average 1.
    EXPECT_EQ(chern_number(s, rd({1, 1, 1}), gen(0)), 0);
    const auto bad = s2xs1_diagram(true);
    // A + 2 B2: measures -1 + 2 * 1/2 = 0, basepoint outside, corner average at q0 is (0 + 1 + 2 + 1) / 4.
    EXPECT_EQ(chern_number(bad, rd({1, 0, 2}), gen(0)), 2);
    EXPECT_EQ(chern_number(bad, rd({1, 0, 2}), gen(1)), 2);
}

TEST(ChernNumber, LinearInTheDomain) {
    const auto s = s2xs1_diagram(true);
    const auto p = periodic_domain_lattice(s).front();
    for (std::int64_t k = -3; k <= 3; ++k) {
        RegionDomain q{p.coefficients};
        for (auto& x : q.coefficients) x *= k;
        for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(chern_number(s, q, gen(y)), k * chern_number(s, p, gen(y)));
    }
}

TEST(AssembleComplex, Examples) {
    const auto lens = lens_space_diagram(3);
    const auto c = assemble_complex(lens, {});
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c.b(), 0u);
    EXPECT_EQ(c.spinc_labels().size(), 3u);
    EXPECT_TRUE(validate(c).empty());
    EXPECT_EQ(hat_rank(c, Mode::trivial), 3u);

    // The non-admissible S^2 x S^1: one bigon over the basepoint joins the two generators.
    const auto s = s2xs1_diagram(true);
    const auto t = assemble_complex(s, {{gen(0), gen(1), rd({0, 1, 0}), 1}});
    EXPECT_TRUE(validate(t).empty());
    EXPECT_EQ(t.b(), 1u);
    ASSERT_EQ(t.entries().size(), 1u);
    EXPECT_EQ(t.entry(0, 1).front().nz, 1u);
    EXPECT_EQ(hat_rank(t, PerturbationClass::parse("1")), hat_rank(torus_bundle_model(), PerturbationClass::parse("1")));
    EXPECT_EQ(plus_decomposition(t, Specialization::custom(PerturbationClass::parse("1")), "s0"),
              plus_decomposition(torus_bundle_model(), Specialization::custom(PerturbationClass::parse("1")), "s0"));

    // Same disk counted zero times leaves the differential empty.
    EXPECT_TRUE(assemble_complex(s, {{gen(0), gen(1), rd({0, 1, 0}), 0}}).entries().empty());
}

TEST(AssembleComplex, RejectsBadDisks) {
    const auto s = s2xs1_diagram(true);
    EXPECT_THROW(assemble_complex(s, {{gen(0), gen(1), rd({0, 1, -1}), 1}}), ValidationError);
    EXPECT_THROW(assemble_complex(s, {{gen(0), gen(1), rd({1, 0, 0}), 1}}), ValidationError);
    EXPECT_THROW(assemble_complex(s, {{gen(0), gen(1), rd({0, 1, 0}), 2}}), ValidationError);
    // Both bigons from q0 to q1 and back compose to a nonzero square.
    EXPECT_THROW(assemble_complex(s, {{gen(0), gen(1), rd({0, 1, 0}), 1}, {gen(1), gen(0), rd({0, 0, 1}), 1}}),
                 ValidationError);
}

TEST(AssembleComplex, OutputAlwaysValidates) {
    // Every nonnegative domain from q0 to q1 with small coefficients, as a one-disk complex.
    const auto s = s2xs1_diagram(false);
    const auto sys = corner_system(s);
    std::size_t built = 0;
    for (std::int64_t a = 0; a <= 3; ++a)
        for (std::int64_t b1 = 0; b1 <= 3; ++b1)
            for (std::int64_t b2 = 0; b2 <= 3; ++b2) {
                const auto dom = rd({a, b1, b2});
                try {
                    const auto c = assemble_complex(s, {{gen(0), gen(1), dom, 1}});
                    EXPECT_TRUE(validate(c).empty());
                    EXPECT_EQ(c.entry(0, 1).front().nz, static_cast<std::size_t>(a));
                    ++built;
                } catch (const ValidationError&) {
                }
            }
    EXPECT_GT(built, 0u);
}
