#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfh/complex/perturbed.hpp"
#include "pfh/errors.hpp"
#include "pfh/linalg/rank.hpp"
#include "pfh/linalg/smith.hpp"

namespace pfh {

struct TorsionPart {
    std::size_t k = 1;
    int parity = 0;

    friend bool operator==(const TorsionPart&, const TorsionPart&) = default;
    friend auto operator<=>(const TorsionPart&, const TorsionPart&) = default;
};

/// HF+ as a sum of A[U]/U^k pieces with parities, plus tower counts per parity.
struct UModuleDecomposition {
    std::vector<TorsionPart> torsion;
    std::array<std::size_t, 2> free_rank{0, 0};
    std::vector<std::string> diagnostics;

    std::size_t total_free() const { return free_rank[0] + free_rank[1]; }

    /// Multiplicity of each (k, parity).
    std::map<TorsionPart, std::size_t> counts() const {
        std::map<TorsionPart, std::size_t> m;
        for (const auto& t : torsion) ++m[t];
        return m;
    }

    /// "(A[U]/U)^4 + (A[U]/U^2)^1", ignoring parity; "0" when empty.
    std::string str() const {
        std::map<std::size_t, std::size_t> by_k;
        for (const auto& t : torsion) ++by_k[t.k];
        std::string s;
        for (const auto& [k, n] : by_k) {
            if (!s.empty()) s += " + ";
            s += "(A[U]/U" + (k == 1 ? std::string() : "^" + std::to_string(k)) + ")^" + std::to_string(n);
        }
        if (total_free()) s += (s.empty() ? "" : " + ") + std::string("A[U^-1]^") + std::to_string(total_free());
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const UModuleDecomposition& a, const UModuleDecomposition& b) {
        return a.torsion == b.torsion && a.free_rank == b.free_rank;
    }
};

inline const char* parity_name(int p) { return p ? "odd" : "even"; }

/// Sum of (-1)^parity k over torsion pieces, even counting +.
inline long euler_characteristic(const UModuleDecomposition& d) {
    if (d.total_free()) throw DomainError("Euler characteristic of an infinitely generated module");
    long chi = 0;
    for (const auto& t : d.torsion) chi += (t.parity ? -1L : 1L) * static_cast<long>(t.k);
    return chi;
}

inline constexpr std::size_t default_max_truncation = 64;

/// Generators [x, i], i <= N, indexed i * n + x; [x, i] -> [y, i - k] via the U^k coefficient.
template <class R>
Matrix<R> truncated_matrix(const Matrix<UPolynomial<R>>& u, std::size_t N) {
    const std::size_t n = u.rows();
    Matrix<R> m(n * (N + 1), n * (N + 1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto& cs = u(x, y).coefficients();
            for (std::size_t k = 0; k < cs.size(); ++k) {
                if (cs[k].is_zero()) continue;
                for (std::size_t i = k; i <= N; ++i) m(i * n + x, (i - k) * n + y) = cs[k];
            }
        }
    return m;
}

/// The plus complex cut off at level N.
struct PlusComplex {
    TwistedComplex base;
    Specialization coefficients;
    std::size_t truncation = 0;

    std::size_t dimension() const { return base.size() * (truncation + 1); }

    std::size_t homology_dimension() const {
        if (coefficients.mode() == Mode::generic) return homology_rank(truncated_matrix(u_matrix(base), truncation));
        const auto u = evaluate(u_matrix(base), coefficients.eta_for(base.b()));
        return homology_rank(truncated_matrix(u, truncation));
    }
};

namespace detail {

inline std::vector<std::size_t> with_parity(const TwistedComplex& c, int p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.generator(i).parity == p) out.push_back(i);
    return out;
}

// U-local Smith form of each parity block: rows are sources of parity p, columns their targets.
// An invariant factor U^k at a parity-p source gives A[U]/U^k at parity p.
template <class R>
UModuleDecomposition plus_by_smith(const TwistedComplex& c, const Matrix<UPolynomial<R>>& u) {
    UModuleDecomposition out;
    std::array<std::vector<std::size_t>, 2> idx{with_parity(c, 0), with_parity(c, 1)};
    std::array<std::size_t, 2> rank{0, 0};
    for (int p = 0; p < 2; ++p) {
        auto block = u.submatrix(idx[p], idx[1 - p]);
        auto s = smith_form_U_local(block);
        rank[p] = s.rank;
        for (auto k : s.torsion) out.torsion.push_back({k, p});
        for (auto& d : s.diagnostics) out.diagnostics.push_back(std::string(parity_name(p)) + ": " + d);
    }
    for (int p = 0; p < 2; ++p) out.free_rank[p] = idx[p].size() - rank[p] - rank[1 - p];
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

// Rows of the level-major truncated matrix whose generator has parity p.
inline std::vector<std::size_t> level_rows(const TwistedComplex& c, std::size_t N, int p) {
    std::vector<std::size_t> out;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t x = 0; x < n; ++x)
            if (c.generator(x).parity == p) out.push_back(i * n + x);
    return out;
}

inline std::vector<std::size_t> all_columns(std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = i;
    return out;
}

// Homology of the truncations C<=N. Once h(N) = h(N+1), every piece has k <= N+1; then
// g_p(L) = dim of the image of H_p(C<=L) in H_p(C<=2N+1) = sum over pieces of min(k, L+1),
// and successive differences of g recover the multiplicities.
template <class R>
UModuleDecomposition plus_by_truncation(const TwistedComplex& c, const Matrix<UPolynomial<R>>& u,
                                        std::size_t max_truncation) {
    auto h = [&](std::size_t N) { return homology_rank(truncated_matrix(u, N)); };
    std::size_t stable = 0;
    bool found = false;
    for (std::size_t N = 0; N <= max_truncation; N = N ? 2 * N : 1) {
        if (h(N) == h(N + 1)) {
            stable = N;
            found = true;
            break;
        }
    }
    if (!found)
        throw NotStabilized("plus complex homology still growing at truncation " + std::to_string(max_truncation));

    const std::size_t L = stable + 1;
    const std::size_t big = 2 * L + 1;
    const auto mb = truncated_matrix(u, big);
    const std::size_t n = c.size();
    std::array<std::size_t, 2> np{with_parity(c, 0).size(), with_parity(c, 1).size()};

    UModuleDecomposition out;
    for (int p = 0; p < 2; ++p) {
        const auto src = level_rows(c, big, 1 - p);
        const std::size_t rank_full = rank_elimination(mb.submatrix(src, all_columns(mb.cols())));
        // g[j] = g_p(j - 1), so g[0] = 0.
        std::vector<std::size_t> g(L + 2, 0);
        for (std::size_t lev = 0; lev <= L; ++lev) {
            const auto ml = truncated_matrix(u, lev);
            const std::size_t z = np[p] * (lev + 1) - rank_elimination(ml.submatrix(level_rows(c, lev, p),
                                                                                     all_columns(ml.cols())));
            std::vector<std::size_t> high;
            for (std::size_t col = (lev + 1) * n; col < mb.cols(); ++col)
                if (c.generator(col % n).parity == p) high.push_back(col);
            const std::size_t rank_high = rank_elimination(mb.submatrix(src, high));
            g[lev + 1] = z - rank_full + rank_high;
        }
        // at_least[k] = number of pieces with exponent >= k.
        std::vector<std::size_t> at_least(L + 2, 0);
        for (std::size_t k = 1; k <= L + 1; ++k) at_least[k] = g[k] - g[k - 1];
        for (std::size_t k = 1; k <= L; ++k) {
            if (at_least[k] < at_least[k + 1]) throw CrossCheckFailure("truncation profile is not monotone");
            for (std::size_t t = 0; t < at_least[k] - at_least[k + 1]; ++t) out.torsion.push_back({k, p});
        }
        if (at_least[L + 1]) throw CrossCheckFailure("torsion exponent beyond the stable truncation");
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

template <class R>
UModuleDecomposition plus_decomposition_over(const TwistedComplex& c, const Matrix<UPolynomial<R>>& u,
                                             std::size_t max_truncation) {
    auto a = plus_by_smith(c, u);
    if (a.total_free())
        throw NotStabilized("HF+ has " + std::to_string(a.total_free()) + " infinite tower(s) (" +
                            std::to_string(a.free_rank[0]) + " even, " + std::to_string(a.free_rank[1]) + " odd)");
    auto b = plus_by_truncation(c, u, max_truncation);
    if (!(a == b))
        throw CrossCheckFailure("Smith form gives " + a.str() + " but truncated homology gives " + b.str());
    return a;
}

} // namespace detail

/// Finitely generated HF+ of one spin^c summand, by Smith form and by truncation, cross-checked.
inline UModuleDecomposition plus_decomposition(const TwistedComplex& c, const Specialization& s,
                                               const std::string& spinc,
                                               std::size_t max_truncation = default_max_truncation) {
    const auto sub = c.restricted_to(spinc);
    if (sub.size() == 0) throw ValidationError("no generators in spin^c " + spinc);
    if (s.mode() == Mode::generic) return detail::plus_decomposition_over(sub, u_matrix(sub), max_truncation);
    return detail::plus_decomposition_over(sub, evaluate(u_matrix(sub), s.eta_for(sub.b())), max_truncation);
}

} // namespace pfh
