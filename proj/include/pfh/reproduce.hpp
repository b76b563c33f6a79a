#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "pfh/complex/io.hpp"
#include "pfh/complex/perturbed.hpp"
#include "pfh/complex/plus.hpp"
#include "pfh/models/combinatorics.hpp"
#include "pfh/models/fixtures.hpp"

namespace pfh {

struct Check {
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string target;
    std::vector<Check> checks;

    void add(std::string claim, bool pass, std::string detail = {}) {
        checks.push_back({std::move(claim), pass, std::move(detail)});
    }
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    /// One "PASS claim: detail" line per check.
    std::string text() const {
        std::string s;
        for (const auto& c : checks) s += std::string(c.pass ? "PASS " : "FAIL ") + c.claim + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
        return s;
    }
    Json to_json() const {
        Json j;
        j["target"] = target;
        j["passed"] = passed();
        j["checks"] = Json::array();
        for (const auto& c : checks) j["checks"].push_back({{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
        return j;
    }
};

/// Nonzero class with weights +-p/q, p, q in 1..3; each weight is zero with probability 1/4.
inline PerturbationClass sample_eta(std::mt19937_64& rng, std::size_t b) {
    for (;;) {
        std::vector<Exponent> w;
        for (std::size_t i = 0; i < b; ++i) {
            if (rng() % 4 == 0) {
                w.emplace_back(0);
                continue;
            }
            const long p = 1 + static_cast<long>(rng() % 3), q = 1 + static_cast<long>(rng() % 3);
            w.emplace_back(rng() % 2 ? p : -p, q);
        }
        auto eta = PerturbationClass::custom(std::move(w));
        if (!eta.is_trivial()) return eta;
    }
}

/// Classes with one or two zero weights, the degenerate directions of the T^3 lattice.
inline std::vector<PerturbationClass> t3_axis_classes() {
    std::vector<PerturbationClass> out;
    for (const char* s : {"1,0,0", "0,1,0", "0,0,1", "-2/3,0,0", "1,1,0", "1,0,1", "0,1,1", "1,-1,0", "0,2,-1/3",
                          "5/2,0,-5/2", "1,1,1", "1,-1,1"})
        out.push_back(PerturbationClass::parse(s));
    return out;
}

inline SuiteResult reproduce_t3(std::uint64_t seed = 1, std::size_t samples = 100) {
    SuiteResult r{"t3", {}};
    const auto c = t3_model();
    r.add("t3_model validates", validate(c).empty());
    const auto trivial = hat_rank(c, Mode::trivial), generic = hat_rank(c, Mode::generic);
    r.add("t3_model trivial rank is 6", trivial == 6, "rank " + std::to_string(trivial));
    r.add("t3_model generic rank is 2", generic == 2, "rank " + std::to_string(generic));
    std::string bad;
    for (const auto& eta : t3_axis_classes())
        if (hat_rank(c, eta) != 2) bad += (bad.empty() ? "" : " ") + eta.str();
    r.add("t3_model rank is 2 on degenerate directions", bad.empty(),
          bad.empty() ? std::to_string(t3_axis_classes().size()) + " classes" : "rank differs at " + bad);
    std::mt19937_64 rng(seed);
    std::size_t good = 0;
    bad.clear();
    for (std::size_t i = 0; i < samples; ++i) {
        const auto eta = sample_eta(rng, 3);
        if (hat_rank(c, eta) == 2)
            ++good;
        else if (bad.empty())
            bad = eta.str();
    }
    r.add("t3_model rank is 2 on seeded random classes", good == samples,
          std::to_string(good) + "/" + std::to_string(samples) + (bad.empty() ? "" : ", first failure at " + bad));
    const auto chain = t3_chain_fixture();
    const auto cg = hat_rank(chain, Mode::generic);
    r.add("t3_chain generic rank is 2", cg == 2, "rank " + std::to_string(cg));
    const auto tb = hat_rank(torus_bundle_model(), PerturbationClass::parse("1"));
    r.add("torus bundle rank is 2 at eta = (1)", tb == 2, "rank " + std::to_string(tb));
    return r;
}

namespace detail {

inline bool is_expected_sigma(const UModuleDecomposition& d, std::int64_t expected) {
    if (d.total_free() != 0 || static_cast<std::int64_t>(d.torsion.size()) != expected) return false;
    for (const auto& t : d.torsion)
        if (t.k != 1) return false;
    return true;
}

inline std::string sigma_parity(const UModuleDecomposition& d) {
    std::array<std::size_t, 2> n{0, 0};
    for (const auto& t : d.torsion) ++n[static_cast<std::size_t>(t.parity)];
    return std::to_string(n[0]) + " even, " + std::to_string(n[1]) + " odd";
}

} // namespace detail

/// HF+ of the Sigma_g x S^1 skeleton in spin^c k against (A[U]/U)^C(2g-2, d), in generic mode and at seeded classes.
inline SuiteResult reproduce_sigma(const SigmaParams& p, std::uint64_t seed = 1, std::size_t samples = 10) {
    SuiteResult r{"sigma " + p.str(), {}};
    const int d = p.d();
    const auto expected = binomial(2 * p.g - 2, d);
    const auto want = "(A[U]/U)^" + std::to_string(expected);
    const auto counts = sigma_counts(p);
    r.add("generator classes sum to 2 C(2g-1, d)", counts.total() == sigma_generator_count(p),
          "d=" + std::to_string(d) + ", " + std::to_string(counts.total()) + " generators");
    const auto plain = figure6_complex(p);
    const auto mixed = figure6_complex(p, Exponent(1, 10), seed);
    const auto spinc = "k" + std::to_string(p.k);
    r.add("complexes validate", validate(plain).empty() && validate(mixed).empty());
    const auto generic = plus_decomposition(plain, Specialization::generic(), spinc);
    r.add("generic decomposition is " + want, detail::is_expected_sigma(generic, expected),
          generic.str() + " (" + detail::sigma_parity(generic) + ")");
    const auto conj = plus_decomposition(mixed, Specialization::generic(), spinc);
    r.add("conjugated generic decomposition is " + want, detail::is_expected_sigma(conj, expected), conj.str());
    std::mt19937_64 rng(seed);
    std::size_t good = 0;
    std::string bad;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto eta = sample_eta(rng, plain.b());
        const auto dec = plus_decomposition(mixed, Specialization::custom(eta), spinc);
        if (detail::is_expected_sigma(dec, expected))
            ++good;
        else if (bad.empty())
            bad = eta.str() + " gives " + dec.str();
    }
    r.add("decomposition is " + want + " at seeded classes", good == samples,
          std::to_string(good) + "/" + std::to_string(samples) + (bad.empty() ? "" : ", " + bad));
    const auto chi = euler_characteristic(generic);
    r.add("Euler characteristic has magnitude C(2g-2, d)", std::labs(chi) == expected,
          "chi = " + std::to_string(chi) + ", closed form " + std::to_string(chi_closed_form(p.g, d)));
    return r;
}

/// The alternating binomial lemma for 1 <= m <= 2g <= 2 gmax and the Euler sum for 2 <= g <= gmax.
inline SuiteResult reproduce_identity(int gmax) {
    SuiteResult r{"identity", {}};
    std::size_t cases = 0;
    std::string bad;
    for (int g = 1; g <= gmax; ++g)
        for (int m = 1; m <= 2 * g; ++m, ++cases)
            if (alternating_binomial_sum(g, m) != binomial(2 * g - 2, m - 1) && bad.empty())
                bad = "g=" + std::to_string(g) + ",m=" + std::to_string(m);
    r.add("sum (-1)^(i+1) i C(2g, m-i) = C(2g-2, m-1)", bad.empty(),
          std::to_string(cases) + " cases" + (bad.empty() ? "" : ", first failure " + bad));
    cases = 0;
    bad.clear();
    for (int g = 2; g <= gmax; ++g)
        for (int d = 0; d <= g - 1; ++d, ++cases)
            if (chi_sum(g, d) != chi_closed_form(g, d) && bad.empty())
                bad = "g=" + std::to_string(g) + ",d=" + std::to_string(d);
    r.add("sum (-1)^(i+1) (d-i+1) C(2g, i) = (-1)^(d-1) C(2g-2, d)", bad.empty(),
          std::to_string(cases) + " cases" + (bad.empty() ? "" : ", first failure " + bad));
    return r;
}

/// r_omega <= r_eta <= r_Omega on random complexes, with equality when eta is certified generic.
inline SuiteResult reproduce_inequality(std::size_t seeds, std::size_t samples = 5, std::uint64_t first_seed = 0,
                                        std::size_t size = 6, std::size_t b = 3) {
    SuiteResult r{"inequality", {}};
    std::size_t valid = 0, holds = 0, certified = 0, equal = 0;
    std::string bad;
    for (std::uint64_t seed = first_seed; seed < first_seed + seeds; ++seed) {
        const auto c = random_valid_complex(seed, size, b);
        if (validate(c).empty()) ++valid;
        const auto diffs = collect_differences(c);
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto eta = sample_eta(rng, b);
            const auto cmp = rank_inequality_check(c, eta);
            if (cmp.holds)
                ++holds;
            else if (bad.empty())
                bad = "seed " + std::to_string(seed) + " eta " + eta.str();
            if (certify_generic(diffs, eta)) {
                ++certified;
                if (cmp.r_eta == cmp.r_omega) ++equal;
            }
        }
    }
    const auto total = seeds * samples;
    r.add("random complexes validate", valid == seeds, std::to_string(valid) + "/" + std::to_string(seeds));
    r.add("r_omega <= r_eta <= r_Omega", holds == total,
          std::to_string(holds) + "/" + std::to_string(total) + (bad.empty() ? "" : ", first failure " + bad));
    r.add("r_eta = r_omega for certified classes", equal == certified,
          std::to_string(equal) + "/" + std::to_string(certified) + " certified");
    return r;
}

} // namespace pfh
