#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "pfh/errors.hpp"

namespace pfh {

/// C(n, k), zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Genus g and spin^c index k, with d = g - 1 - |k|.
struct SigmaParams {
    int g = 2;
    int k = 1;

    SigmaParams() = default;
    SigmaParams(int g_, int k_) : g(g_), k(k_) {
        if (g < 2) throw ValidationError("genus must be at least 2");
        if (k == 0) throw ValidationError("k must be nonzero");
        if (std::abs(k) > g - 1) throw ValidationError("|k| must be at most g - 1");
    }

    int d() const { return g - 1 - std::abs(k); }
    std::string str() const { return "g=" + std::to_string(g) + ",k=" + std::to_string(k); }
};

struct ClassCounts {
    std::int64_t A = 0;
    std::int64_t A_prime = 0;
    std::int64_t B = 0;
    std::int64_t B_prime = 0;

    std::int64_t total() const { return A + A_prime + B + B_prime; }
};

inline ClassCounts sigma_counts(const SigmaParams& p) {
    const int d = p.d();
    ClassCounts c;
    c.A = c.A_prime = binomial(2 * p.g - 2, d - 1);
    c.B = c.B_prime = binomial(2 * p.g - 2, d);
    return c;
}

/// 2 C(2g-1, d): the generator count in spin^c k.
inline std::int64_t sigma_generator_count(const SigmaParams& p) { return 2 * binomial(2 * p.g - 1, p.d()); }

struct XModuleRank {
    std::int64_t rank = 0;
    // (multiplicity C(2g, i), length d - i + 1) for i = 0..d.
    std::vector<std::pair<std::int64_t, std::int64_t>> profile;
};

inline XModuleRank x_module_rank(int g, int d) {
    XModuleRank x;
    if (d < 0) return x;
    if (g < 2 || d > g - 1) throw ValidationError("x_module_rank needs g >= 2 and 0 <= d <= g - 1");
    for (int i = 0; i <= d; ++i) {
        const std::int64_t mult = binomial(2 * g, i);
        x.profile.emplace_back(mult, d - i + 1);
        x.rank += mult * (d - i + 1);
    }
    return x;
}

/// sum_{i=1}^m (-1)^{i+1} i C(2g, m-i), summed term by term.
inline std::int64_t alternating_binomial_sum(int g, int m) {
    std::int64_t s = 0;
    for (int i = 1; i <= m; ++i) s += (i % 2 ? 1 : -1) * static_cast<std::int64_t>(i) * binomial(2 * g, m - i);
    return s;
}

/// sum_{i=0}^d (-1)^{i+1} (d-i+1) C(2g, i), summed term by term.
inline std::int64_t chi_sum(int g, int d) {
    std::int64_t s = 0;
    for (int i = 0; i <= d; ++i) s += (i % 2 ? 1 : -1) * static_cast<std::int64_t>(d - i + 1) * binomial(2 * g, i);
    return s;
}

/// (-1)^{d-1} C(2g-2, d).
inline std::int64_t chi_closed_form(int g, int d) { return ((d - 1) % 2 == 0 ? 1 : -1) * binomial(2 * g - 2, d); }

} // namespace pfh
