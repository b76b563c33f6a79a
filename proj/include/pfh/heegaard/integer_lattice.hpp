#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pfh/errors.hpp"

namespace pfh {

using IntVector = std::vector<mpz_class>;

namespace detail {

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline void axpy(IntVector& y, const mpz_class& a, const IntVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline bool is_zero(const IntVector& v, std::size_t from = 0, std::size_t to = static_cast<std::size_t>(-1)) {
    to = std::min(to, v.size());
    for (std::size_t i = from; i < to; ++i)
        if (v[i] != 0) return false;
    return true;
}

// Row echelon form over Z on columns [0, width) by unimodular row operations; the whole row is
// carried along, so trailing columns record the transformation. Returns the pivot columns.
// With reduce, pivots are positive and entries above them lie in [0, pivot).
inline std::vector<std::size_t> echelon(std::vector<IntVector>& rows, std::size_t width, bool reduce) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = rank; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[rank], rows[best]);
            bool cleared = true;
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[rank][col].get_mpz_t());
                axpy(rows[r], -q, rows[rank]);
                if (rows[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rank == rows.size() || rows[rank][col] == 0) continue;
        if (rows[rank][col] < 0)
            for (auto& x : rows[rank]) x = -x;
        if (reduce)
            for (std::size_t r = 0; r < rank; ++r) axpy(rows[r], -floor_div(rows[r][col], rows[rank][col]), rows[rank]);
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

} // namespace detail

/// Hermite normal form of the lattice spanned by rows; zero rows are dropped.
inline std::vector<IntVector> hermite_basis(std::vector<IntVector> rows) {
    if (rows.empty()) return rows;
    const auto pivots = detail::echelon(rows, rows.front().size(), true);
    rows.resize(pivots.size());
    return rows;
}

/// Basis of {v in Z^n : A v = 0} in Hermite normal form; A is given by its rows.
inline std::vector<IntVector> integer_kernel(const std::vector<IntVector>& a, std::size_t n) {
    const std::size_t m = a.size();
    std::vector<IntVector> t(n, IntVector(m + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) t[j][i] = a[i][j];
        t[j][m + j] = 1;
    }
    const auto rank = detail::echelon(t, m, false).size();
    std::vector<IntVector> kernel;
    for (std::size_t r = rank; r < n; ++r) kernel.emplace_back(t[r].begin() + static_cast<std::ptrdiff_t>(m), t[r].end());
    return hermite_basis(std::move(kernel));
}

/// Some v in Z^n with A v = b, or none.
inline std::optional<IntVector> solve_integer(const std::vector<IntVector>& a, const IntVector& b, std::size_t n) {
    const std::size_t m = a.size();
    std::vector<IntVector> t(n, IntVector(m + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) t[j][i] = a[i][j];
        t[j][m + j] = 1;
    }
    const auto pivots = detail::echelon(t, m, false);
    // Find w with sum_k w_k H_k = b on the echelon part H.
    IntVector rest = b;
    IntVector v(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const auto c = pivots[k];
        if (!mpz_divisible_p(rest[c].get_mpz_t(), t[k][c].get_mpz_t())) return std::nullopt;
        const mpz_class w = rest[c] / t[k][c];
        for (std::size_t i = 0; i < m; ++i) rest[i] -= w * t[k][i];
        for (std::size_t j = 0; j < n; ++j) v[j] += w * t[k][m + j];
    }
    if (!detail::is_zero(rest)) return std::nullopt;
    return v;
}

/// Canonical representative of v modulo a lattice in Hermite normal form.
inline IntVector reduce_modulo(IntVector v, const std::vector<IntVector>& basis) {
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        detail::axpy(v, -detail::floor_div(v[c], row[c]), row);
    }
    return v;
}

/// Coordinates of v in a Hermite basis; throws if v is not in the lattice.
inline IntVector lattice_coordinates(IntVector v, const std::vector<IntVector>& basis) {
    IntVector coords;
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) throw DomainError("vector is not in the lattice");
        const mpz_class q = v[c] / row[c];
        detail::axpy(v, -q, row);
        coords.push_back(q);
    }
    if (!detail::is_zero(v)) throw DomainError("vector is not in the lattice");
    return coords;
}

namespace detail {

// Phase-one simplex with Bland's rule: some x >= 0 with A x = b (b >= 0), or none.
inline std::optional<std::vector<mpq_class>> feasible_point(const std::vector<std::vector<mpq_class>>& a,
                                                           const std::vector<mpq_class>& b) {
    const std::size_t m = a.size(), n = a.empty() ? 0 : a.front().size();
    // Tableau columns: n variables, m artificials, right-hand side.
    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(n + m + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = b[i];
        basis[i] = n + i;
    }
    // Reduced costs of the objective sum of artificials.
    std::vector<mpq_class> cost(n + m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n + m; ++j)
            if (j < n || j == n + m) cost[j] -= t[i][j];
    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const mpq_class ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;
        const mpq_class p = t[leave][enter];
        for (auto& x : t[leave]) x /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const mpq_class f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        const mpq_class f = cost[enter];
        for (std::size_t j = 0; j <= n + m; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    if (cost[n + m] != 0) return std::nullopt;
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][n + m];
    return x;
}

} // namespace detail

/// A nonzero vector of the lattice spanned by the rows with every entry >= 0, or none.
/// Decided over Q by linear programming; the rational certificate is scaled to a primitive lattice vector.
inline std::optional<IntVector> nonnegative_lattice_vector(const std::vector<IntVector>& basis) {
    if (basis.empty()) return std::nullopt;
    const std::size_t r = basis.size(), len = basis.front().size();
    // Variables c+ (r), c- (r), s (len), t; rows: sum_k c_k basis_k - s = 0, sum s - t = 1.
    const std::size_t n = 2 * r + len + 1;
    std::vector<std::vector<mpq_class>> a(len + 1, std::vector<mpq_class>(n));
    std::vector<mpq_class> b(len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            a[i][k] = basis[k][i];
            a[i][r + k] = -basis[k][i];
        }
        a[i][2 * r + i] = -1;
    }
    for (std::size_t i = 0; i < len; ++i) a[len][2 * r + i] = 1;
    a[len][n - 1] = -1;
    b[len] = 1;
    const auto x = detail::feasible_point(a, b);
    if (!x) return std::nullopt;
    std::vector<mpq_class> c(r);
    mpz_class den = 1;
    for (std::size_t k = 0; k < r; ++k) {
        c[k] = (*x)[k] - (*x)[r + k];
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[k].get_den_mpz_t());
    }
    IntVector ic(r);
    mpz_class g = 0;
    for (std::size_t k = 0; k < r; ++k) {
        ic[k] = c[k].get_num() * (den / c[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic[k].get_mpz_t());
    }
    IntVector v(len);
    for (std::size_t k = 0; k < r; ++k) detail::axpy(v, ic[k] / g, basis[k]);
    return v;
}

} // namespace pfh
