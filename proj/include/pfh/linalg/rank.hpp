#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "pfh/errors.hpp"
#include "pfh/linalg/matrix.hpp"
#include "pfh/novikov/ring_traits.hpp"

namespace pfh {

namespace detail {

struct BareissResult {
    std::size_t rank = 0;
};

// Fraction-free elimination in place. After step k every trailing entry is a
// (k+2)-minor of the permuted input, so dividing by the previous pivot is exact.
// The pivot is the entry of least RingTraits key, ties to lowest row then column.
template <class R>
std::size_t bareiss_in_place(Matrix<R>& a, R* last_pivot = nullptr) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::optional<R> prev;
    std::size_t k = 0;
    for (; k < rows && k < cols; ++k) {
        std::size_t pi = rows, pj = cols;
        std::optional<decltype(RingTraits<R>::pivot_key(a(0, 0)))> best;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (a(i, j).is_zero()) continue;
                auto key = RingTraits<R>::pivot_key(a(i, j));
                if (!best || key < *best) {
                    best = std::move(key);
                    pi = i;
                    pj = j;
                }
            }
        if (!best) break;
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        const R piv = a(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const R lead = a(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                R v = piv * a(i, j);
                if (!lead.is_zero() && !a(k, j).is_zero()) v += lead * a(k, j);
                if (prev && !v.is_zero()) {
                    auto q = divide_exact(v, *prev);
                    if (!q) throw CrossCheckFailure("Bareiss division was not exact");
                    v = std::move(*q);
                }
                a(i, j) = std::move(v);
            }
            a(i, k) = R{};
        }
        prev = piv;
    }
    if (last_pivot && prev) *last_pivot = *prev;
    return k;
}

} // namespace detail

/// Rank over the fraction field of R by fraction-free (Bareiss) elimination.
template <class R>
std::size_t rank_elimination(Matrix<R> m) {
    return detail::bareiss_in_place(m);
}

/// Determinant of a square matrix over R (characteristic 2, so pivot swaps carry no sign).
template <class R>
R determinant(Matrix<R> m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    if (m.rows() == 0) throw DomainError("determinant of an empty matrix");
    R last;
    std::size_t r = detail::bareiss_in_place(m, &last);
    if (r < m.rows()) return R{};
    return last;
}

} // namespace pfh
