#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pfh/complex/twisted_complex.hpp"
#include "pfh/linalg/matrix.hpp"
#include "pfh/models/combinatorics.hpp"
#include "pfh/novikov/exponent.hpp"

namespace pfh {

namespace detail {

inline DiskClass disk(std::vector<std::int64_t> exp, std::size_t nz) { return {MultiExponent(std::move(exp)), nz}; }

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

} // namespace detail

/// Chain data of the non-admissible T^3 diagram: x -> y by a single disk with n_z = 1.
inline TwistedComplex t3_chain_fixture() {
    TwistedComplex c(3);
    c.add_generator("x", 0, "s0");
    c.add_generator("y", 1, "s0");
    c.toggle_disk("x", "y", detail::disk({0, 0, 0}, 1));
    return c;
}

/// Six generators; db_i = sum of u_j a_k over {i, j, k} = {1, 2, 3} with u_j = 1 + T^{e_j}.
inline TwistedComplex t3_model() {
    TwistedComplex c(3);
    for (int i = 1; i <= 3; ++i) c.add_generator("a" + std::to_string(i), 0, "s0");
    for (int i = 1; i <= 3; ++i) c.add_generator("b" + std::to_string(i), 1, "s0");
    auto u = [&](const std::string& from, const std::string& to, std::size_t j) {
        std::vector<std::int64_t> e(3, 0);
        e[j - 1] = 1;
        c.toggle_disk(from, to, detail::disk({0, 0, 0}, 0));
        c.toggle_disk(from, to, detail::disk(std::move(e), 0));
    };
    u("b1", "a2", 3);
    u("b1", "a3", 2);
    u("b2", "a1", 3);
    u("b2", "a3", 1);
    u("b3", "a1", 2);
    u("b3", "a2", 1);
    return c;
}

/// Two generators joined by the unique smallest disk, which crosses the basepoint once.
inline TwistedComplex torus_bundle_model() {
    TwistedComplex c(1);
    c.add_generator("x", 0, "s0");
    c.add_generator("y", 1, "s0");
    c.toggle_disk("x", "y", detail::disk({0}, 1));
    return c;
}

/// Replaces the differential M by N M N^{-1}, N = I + E with E strictly upper triangular,
/// parity preserving and carrying nonnegative n_z; homology is unchanged.
inline void conjugate_randomly(TwistedComplex& c, std::mt19937_64& rng, std::size_t count) {
    const std::size_t n = c.size(), b = c.b();
    if (n < 2 || b == 0) return;
    Matrix<GroupRingElement> e(n, n);
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t i = detail::below(rng, n), j = detail::below(rng, n);
        if (i == j || c.generator(i).parity != c.generator(j).parity) continue;
        if (i > j) std::swap(i, j);
        std::vector<std::int64_t> coords(b + 1, 0);
        while (std::all_of(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(b), [](auto x) { return x == 0; }))
            for (std::size_t k = 0; k < b; ++k) coords[k] = static_cast<std::int64_t>(rng() % 2);
        coords[b] = static_cast<std::int64_t>(rng() % 2);
        e(i, j) += GroupRingElement::monomial(MultiExponent(std::move(coords)));
    }
    const auto one = GroupRingElement::one(b + 1);
    auto identity = Matrix<GroupRingElement>::identity(n, one);
    auto forward = identity + e;
    auto inverse = identity;
    auto power = e;
    while (!power.is_zero()) {
        inverse = inverse + power;
        power = power * e;
    }
    c.assign_full_matrix(forward * c.full_matrix() * inverse);
}

/// The Sigma_g x S^1 skeleton in spin^c k: A -> A' by D' (n_z = 0) and B -> B' by D (n_z = 1).
///
/// Each mandatory disk carries area omega_D; as every entry is normalized to exponent 0,
/// omega_D does not change the lattice data. With a seed, the differential is conjugated.
inline TwistedComplex figure6_complex(const SigmaParams& p, const Exponent& omega_d = Exponent(1, 10),
                                      std::optional<std::uint64_t> higher_seed = std::nullopt) {
    if (omega_d.sign() <= 0) throw ValidationError("omega_D must be positive");
    const auto counts = sigma_counts(p);
    const std::size_t b = static_cast<std::size_t>(2 * p.g);
    const std::string spinc = "k" + std::to_string(p.k);
    TwistedComplex c(b);
    for (std::int64_t i = 0; i < counts.A; ++i) c.add_generator("a" + std::to_string(i), 0, spinc);
    for (std::int64_t i = 0; i < counts.A_prime; ++i) c.add_generator("a'" + std::to_string(i), 1, spinc);
    for (std::int64_t i = 0; i < counts.B; ++i) c.add_generator("b" + std::to_string(i), 1, spinc);
    for (std::int64_t i = 0; i < counts.B_prime; ++i) c.add_generator("b'" + std::to_string(i), 0, spinc);
    const std::vector<std::int64_t> zero(b, 0);
    for (std::int64_t i = 0; i < counts.A; ++i)
        c.toggle_disk("a" + std::to_string(i), "a'" + std::to_string(i), detail::disk(zero, 0));
    for (std::int64_t i = 0; i < counts.B; ++i)
        c.toggle_disk("b" + std::to_string(i), "b'" + std::to_string(i), detail::disk(zero, 1));
    if (higher_seed) {
        std::mt19937_64 rng(*higher_seed);
        conjugate_randomly(c, rng, c.size());
    }
    return c;
}

/// Disjoint pairs s -> t with random entries, plus singletons, shuffled and conjugated.
inline TwistedComplex random_valid_complex(std::uint64_t seed, std::size_t size, std::size_t b) {
    std::mt19937_64 rng(seed);
    const std::size_t pairs = size >= 2 ? detail::below(rng, size / 2 + 1) : 0;
    std::vector<int> parity(size);
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t i = 0; i < pairs; ++i) {
        parity[2 * i] = static_cast<int>(rng() % 2);
        parity[2 * i + 1] = 1 - parity[2 * i];
        arrows.emplace_back(2 * i, 2 * i + 1);
    }
    for (std::size_t i = 2 * pairs; i < size; ++i) parity[i] = static_cast<int>(rng() % 2);
    std::vector<std::size_t> order(size);
    for (std::size_t i = 0; i < size; ++i) order[i] = i;
    for (std::size_t i = size; i > 1; --i) std::swap(order[i - 1], order[detail::below(rng, i)]);
    std::vector<std::size_t> position(size);
    for (std::size_t i = 0; i < size; ++i) position[order[i]] = i;

    TwistedComplex c(b);
    for (std::size_t i = 0; i < size; ++i) c.add_generator("g" + std::to_string(i), parity[order[i]], "s0");
    for (const auto& [s, t] : arrows) {
        const std::size_t terms = 1 + detail::below(rng, 3);
        for (std::size_t k = 0; k < terms; ++k) {
            std::vector<std::int64_t> e(b);
            for (auto& x : e) x = static_cast<std::int64_t>(rng() % 3) - 1;
            const std::size_t nz = rng() % 4 == 0 ? 1 : 0;
            c.toggle_disk(position[s], position[t], detail::disk(std::move(e), nz));
        }
    }
    conjugate_randomly(c, rng, size);
    return c;
}

} // namespace pfh
