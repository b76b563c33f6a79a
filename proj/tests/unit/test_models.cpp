#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "generators.hpp"
#include "pfh/complex/plus.hpp"
#include "pfh/linalg/minors.hpp"
#include "pfh/models/combinatorics.hpp"
#include "pfh/models/fixtures.hpp"

using namespace pfh;
using pfh::testing::Gen;

namespace {

// Pascal's triangle, independent of the multiplicative formula.
std::int64_t pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::int64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

std::vector<SigmaParams> sigma_sweep(int gmax) {
    std::vector<SigmaParams> out;
    for (int g = 2; g <= gmax; ++g)
        for (int k = 1; k <= g - 1; ++k) {
            out.emplace_back(g, k);
            out.emplace_back(g, -k);
        }
    return out;
}

} // namespace

TEST(Binomial, MatchesPascal) {
    for (int n = 0; n <= 40; ++n)
        for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), pascal(n, k)) << n << " " << k;
}

TEST(SigmaCounts, Examples) {
    auto a = sigma_counts(SigmaParams(2, 1));
    EXPECT_EQ(a.A, 0);
    EXPECT_EQ(a.A_prime, 0);
    EXPECT_EQ(a.B, 1);
    EXPECT_EQ(a.B_prime, 1);
    EXPECT_EQ(a.total(), 2);

    auto b = sigma_counts(SigmaParams(3, 1));
    EXPECT_EQ(b.A, 1);
    EXPECT_EQ(b.B, 4);
    EXPECT_EQ(b.total(), 10);
    EXPECT_EQ(sigma_generator_count(SigmaParams(3, 1)), 10);

    EXPECT_THROW(SigmaParams(2, 2), ValidationError);
    EXPECT_THROW(SigmaParams(3, 0), ValidationError);
    EXPECT_THROW(SigmaParams(1, 1), ValidationError);
    EXPECT_EQ(SigmaParams(4, -2).d(), 1);
}

TEST(SigmaCounts, ClassCountIdentity) {
    for (const auto& p : sigma_sweep(10)) {
        const auto c = sigma_counts(p);
        EXPECT_EQ(c.A, c.A_prime);
        EXPECT_EQ(c.B, c.B_prime);
        EXPECT_EQ(c.total(), 2 * pascal(2 * p.g - 1, p.d())) << p.str();
        EXPECT_EQ(c.total(), sigma_generator_count(p));
    }
}

TEST(Identities, AlternatingSumLemma) {
    for (int g = 1; 2 * g <= 40; ++g)
        for (int m = 1; m <= 2 * g; ++m) EXPECT_EQ(alternating_binomial_sum(g, m), pascal(2 * g - 2, m - 1)) << g << " " << m;
}

TEST(Identities, EulerCharacteristicSum) {
    for (int g = 2; g <= 8; ++g)
        for (int d = 0; d <= g - 1; ++d) EXPECT_EQ(chi_sum(g, d), chi_closed_form(g, d)) << g << " " << d;
    EXPECT_EQ(chi_closed_form(3, 1), 4);
    EXPECT_EQ(chi_closed_form(3, 0), -1);
}

TEST(XModuleRank, Examples) {
    EXPECT_EQ(x_module_rank(2, 0).rank, 1);
    auto x = x_module_rank(3, 1);
    EXPECT_EQ(x.rank, 8);
    ASSERT_EQ(x.profile.size(), 2u);
    EXPECT_EQ(x.profile[0], (std::pair<std::int64_t, std::int64_t>{1, 2}));
    EXPECT_EQ(x.profile[1], (std::pair<std::int64_t, std::int64_t>{6, 1}));
    EXPECT_EQ(x_module_rank(3, -1).rank, 0);
    EXPECT_TRUE(x_module_rank(3, -1).profile.empty());
    EXPECT_THROW(x_module_rank(3, 3), ValidationError);
}

TEST(T3Model, RanksAcrossModes) {
    const auto c = t3_model();
    ASSERT_TRUE(validate(c).empty());
    EXPECT_EQ(hat_rank(c, Mode::trivial), 6u);
    EXPECT_EQ(hat_rank(c, Mode::generic), 2u);
    // The alternating block has vanishing determinant but a nonzero 2x2 minor.
    auto block = hat_matrix(c).submatrix({3, 4, 5}, {0, 1, 2});
    EXPECT_EQ(rank_by_minors(block), 2u);
}

TEST(T3Model, EveryNonzeroEtaGivesRankTwo) {
    const auto c = t3_model();
    Gen g(71);
    std::size_t degenerate = 0;
    for (int i = 0; i < 100; ++i) {
        PerturbationClass eta = PerturbationClass::trivial(3);
        while (eta.is_trivial()) eta = g.perturbation(3);
        std::size_t zeros = 0;
        for (const auto& w : eta.weights()) zeros += w.sign() == 0;
        degenerate += zeros > 0;
        EXPECT_EQ(hat_rank(c, eta), 2u) << eta.str();
    }
    EXPECT_GT(degenerate, 0u);
    for (const char* s : {"1,0,0", "0,1,0", "0,0,1", "1,1,0", "0,-2,3", "1,1,1"})
        EXPECT_EQ(hat_rank(c, PerturbationClass::parse(s)), 2u) << s;
}

TEST(T3ChainFixture, Ranks) {
    const auto c = t3_chain_fixture();
    EXPECT_TRUE(validate(c).empty());
    EXPECT_EQ(c.b(), 3u);
    EXPECT_EQ(hat_rank(c, Mode::generic), 2u);
    EXPECT_EQ(hat_rank(c, Mode::trivial), 2u);
}

TEST(TorusBundleModel, Ranks) {
    const auto c = torus_bundle_model();
    EXPECT_TRUE(validate(c).empty());
    EXPECT_EQ(hat_rank(c, PerturbationClass::parse("1")), 2u);
    EXPECT_EQ(hat_rank(c, Mode::trivial), 2u);
    EXPECT_EQ(hat_rank(c, Mode::generic), 2u);
    auto d = plus_decomposition(c, Specialization::custom(PerturbationClass::parse("1")), "s0");
    EXPECT_EQ(d.torsion, (std::vector<TorsionPart>{{1, 0}}));
}

TEST(SigmaSkeleton, ShapeAndParities) {
    for (const auto& p : sigma_sweep(4)) {
        const auto c = figure6_complex(p);
        const auto counts = sigma_counts(p);
        ASSERT_EQ(static_cast<std::int64_t>(c.size()), counts.total());
        EXPECT_EQ(c.b(), static_cast<std::size_t>(2 * p.g));
        EXPECT_TRUE(validate(c).empty()) << p.str();
        EXPECT_EQ(c.spinc_labels(), (std::vector<std::string>{"k" + std::to_string(p.k)}));
        for (const auto& gen : c.generators()) {
            const bool prime = gen.name.find('\'') != std::string::npos;
            const int want = (gen.name[0] == 'a') == prime ? 1 : 0;
            EXPECT_EQ(gen.parity, want) << gen.name;
        }
        // No B -> B' disk avoids the basepoint.
        for (const auto& [k, v] : c.entries())
            if (c.generator(k.first).name[0] == 'b') {
                for (const auto& d : v) EXPECT_GT(d.nz, 0u);
            }
    }
    EXPECT_THROW(figure6_complex(SigmaParams(2, 1), Exponent(0)), ValidationError);
}

TEST(SigmaSkeleton, SeededVariantsAreValidAndKeepTheSkeletonConstraint) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = figure6_complex(SigmaParams(3, 1), Exponent(1, 10), seed);
        ASSERT_TRUE(validate(c).empty()) << seed;
        const auto base = c.index_of("b0");
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c.generator(j).name.rfind("b'", 0) != 0) continue;
            for (const auto& d : c.entry(base, j)) EXPECT_GT(d.nz, 0u) << seed;
        }
    }
}

TEST(SigmaSkeleton, DecompositionIsSeedInvariant) {
    const SigmaParams p(3, 1);
    const auto want = std::vector<TorsionPart>(4, {1, 1});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto d = plus_decomposition(figure6_complex(p, Exponent(1, 10), seed), Specialization::generic(), "k1");
        EXPECT_EQ(d.torsion, want) << seed;
        EXPECT_EQ(std::labs(euler_characteristic(d)), 4);
    }
}

TEST(RandomValidComplex, ValidAndRankInequality) {
    Gen g(81);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto c = random_valid_complex(seed, 6, 3);
        ASSERT_TRUE(validate(c).empty()) << seed;
        const auto generic = hat_rank(c, Mode::generic);
        const auto trivial = hat_rank(c, Mode::trivial);
        EXPECT_EQ((c.size() - trivial) % 2, 0u);
        const auto diffs = collect_differences(c);
        for (int t = 0; t < 5; ++t) {
            const auto eta = g.perturbation(3);
            const auto r = hat_rank(c, eta);
            EXPECT_LE(generic, r) << seed << " " << eta.str();
            EXPECT_LE(r, trivial) << seed << " " << eta.str();
            if (certify_generic(diffs, eta)) {
                EXPECT_EQ(r, generic) << seed << " " << eta.str();
            }
        }
    }
}

TEST(RandomValidComplex, DeterministicPerSeed) {
    EXPECT_EQ(random_valid_complex(5, 8, 2), random_valid_complex(5, 8, 2));
    EXPECT_EQ(random_valid_complex(0, 0, 2).size(), 0u);
    EXPECT_EQ(random_valid_complex(3, 1, 2).size(), 1u);
}
