#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfh/linalg/matrix.hpp"
#include "pfh/linalg/upolynomial.hpp"
#include "pfh/novikov/fraction.hpp"
#include "pfh/novikov/ring_traits.hpp"

namespace pfh {

/// Smith normal form over F[U], F the fraction field of R, reported up to units.
///
/// torsion lists the U-adic valuations k > 0 of the nonzero invariant factors, sorted.
/// A factor U^k u(U) with u nonconstant cannot be normalized to a power of U; it is
/// kept in invariant_factors and described in diagnostics.
template <class R>
struct SmithForm {
    std::vector<UPolynomial<R>> invariant_factors;
    std::vector<std::size_t> torsion;
    std::size_t rank = 0;
    std::vector<std::string> diagnostics;
};

namespace detail {

template <class R>
class SmithWorker {
  public:
    explicit SmithWorker(Matrix<UPolynomial<R>> a) : a_(std::move(a)) {}

    SmithForm<R> run() {
        const std::size_t lim = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < lim; ++t) {
            if (!place_pivot(t)) break;
            for (;;) {
                clear_row_and_column(t);
                if (!fix_divisibility(t)) break;
            }
        }
        SmithForm<R> out;
        for (std::size_t t = 0; t < lim; ++t) {
            const auto& d = a_(t, t);
            if (d.is_zero()) break;
            out.invariant_factors.push_back(d);
            ++out.rank;
            const std::size_t v = d.valuation();
            if (v > 0) out.torsion.push_back(v);
            if (d.nonzero_count() > 1)
                out.diagnostics.push_back("invariant factor " + std::to_string(t) + " is not a power of U: " +
                                          d.str());
        }
        std::sort(out.torsion.begin(), out.torsion.end());
        return out;
    }

  private:
    // Moves a nonzero entry of least U-degree into (t,t).
    bool place_pivot(std::size_t t) {
        std::optional<std::size_t> best;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const auto& e = a_(i, j);
                if (e.is_zero()) continue;
                if (!best || e.degree() < *best) {
                    best = e.degree();
                    bi = i;
                    bj = j;
                }
            }
        if (!best) return false;
        a_.swap_rows(t, bi);
        a_.swap_cols(t, bj);
        return true;
    }

    // Row i <- lc(p) row_i + lc(e) U^s row_t, a unit operation over F[U].
    void reduce_row(std::size_t i, std::size_t t, std::size_t col) {
        const auto& p = a_(t, col);
        const auto& e = a_(i, col);
        const R c = p.leading();
        const R d = e.leading();
        const std::size_t s = e.degree() - p.degree();
        for (std::size_t j = 0; j < a_.cols(); ++j) {
            UPolynomial<R> v = a_(i, j).scaled(c);
            if (!a_(t, j).is_zero()) v += a_(t, j).scaled(d).shifted(s);
            a_(i, j) = std::move(v);
        }
        normalize_row(i);
    }
    void reduce_col(std::size_t j, std::size_t t, std::size_t row) {
        const auto& p = a_(row, t);
        const auto& e = a_(row, j);
        const R c = p.leading();
        const R d = e.leading();
        const std::size_t s = e.degree() - p.degree();
        for (std::size_t i = 0; i < a_.rows(); ++i) {
            UPolynomial<R> v = a_(i, j).scaled(c);
            if (!a_(i, t).is_zero()) v += a_(i, t).scaled(d).shifted(s);
            a_(i, j) = std::move(v);
        }
        normalize_col(j);
    }

    // Divides a row by a common factor of all its coefficients (a unit of F).
    void normalize_row(std::size_t i) {
        R g = row_content(i, true);
        if (g.is_zero() || is_one(g)) return;
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_(i, j) = a_(i, j).map_coefficients([&](const R& x) { return *divide_exact(x, g); });
    }
    void normalize_col(std::size_t j) {
        R g = row_content(j, false);
        if (g.is_zero() || is_one(g)) return;
        for (std::size_t i = 0; i < a_.rows(); ++i)
            a_(i, j) = a_(i, j).map_coefficients([&](const R& x) { return *divide_exact(x, g); });
    }
    static bool is_one(const R& g) { return g.is_monomial() && g.terms().front().is_zero(); }

    R row_content(std::size_t idx, bool row) {
        std::optional<R> g;
        const std::size_t n = row ? a_.cols() : a_.rows();
        for (std::size_t k = 0; k < n; ++k) {
            const auto& e = row ? a_(idx, k) : a_(k, idx);
            for (const auto& c : e.coefficients()) {
                if (c.is_zero()) continue;
                g = g ? RingTraits<R>::common_factor(*g, c) : RingTraits<R>::common_factor(c, c);
                if (is_one(*g)) return *g;
            }
        }
        return g ? *g : R{};
    }

    void clear_row_and_column(std::size_t t) {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                while (!a_(i, t).is_zero()) {
                    if (a_(i, t).degree() < a_(t, t).degree()) {
                        a_.swap_rows(i, t);
                        dirty = true;
                    }
                    reduce_row(i, t, t);
                }
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                while (!a_(t, j).is_zero()) {
                    if (a_(t, j).degree() < a_(t, t).degree()) {
                        a_.swap_cols(j, t);
                        dirty = true;
                    }
                    reduce_col(j, t, t);
                }
            }
        }
    }

    // If the pivot fails to divide some trailing entry, folds that row into row t.
    bool fix_divisibility(std::size_t t) {
        const auto& p = a_(t, t);
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(i, j).is_zero() || divides(p, a_(i, j))) continue;
                for (std::size_t k = 0; k < a_.cols(); ++k) a_(t, k) += a_(i, k);
                return true;
            }
        return false;
    }

    static bool divides(const UPolynomial<R>& p, UPolynomial<R> e) {
        const R c = p.leading();
        while (!e.is_zero() && e.degree() >= p.degree()) {
            const std::size_t s = e.degree() - p.degree();
            UPolynomial<R> v = e.scaled(c);
            v += p.scaled(e.leading()).shifted(s);
            e = std::move(v);
        }
        return e.is_zero();
    }

    Matrix<UPolynomial<R>> a_;
};

} // namespace detail

/// Smith form of a matrix over R[U], where R is an integral domain with exact division.
template <class R>
SmithForm<R> smith_form_U(const Matrix<UPolynomial<R>>& m) {
    return detail::SmithWorker<R>(m).run();
}

/// Smith form of a matrix over F[U] with fraction coefficients: each row is first
/// multiplied by the product of its denominators, which is a unit of F.
template <class R>
SmithForm<R> smith_form_U(const Matrix<UPolynomial<Fraction<R>>>& m) {
    Matrix<UPolynomial<R>> cleared(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::optional<R> scale;
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& c : m(i, j).coefficients())
                if (!c.is_zero()) scale = scale ? *scale * c.denominator() : c.denominator();
        if (!scale) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            cleared(i, j) = m(i, j).map_coefficients([&](const Fraction<R>& f) {
                return *divide_exact(f.numerator() * *scale, f.denominator());
            });
    }
    return smith_form_U(cleared);
}

/// Smith form localized at U: only the U-power parts of the invariant factors.
///
/// Works in F[U]/U^M with M = min(rows, cols) * deg + 1, which exceeds the valuation of
/// every nonzero invariant factor. The pivot is an entry of least U-valuation, U^v w with
/// w(0) != 0; row i becomes w row_i + (e / U^v) row_t, which needs no division because w
/// is a unit of the local ring. Invariant factors are reported as U^v.
template <class R>
SmithForm<R> smith_form_U_local(Matrix<UPolynomial<R>> a) {
    std::size_t deg = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) deg = std::max(deg, a(i, j).degree());
    const std::size_t precision = std::min(a.rows(), a.cols()) * deg + 1;
    auto truncate = [&](UPolynomial<R>& p) {
        if (!p.is_zero() && p.degree() >= precision) {
            std::vector<R> c(p.coefficients().begin(), p.coefficients().begin() + static_cast<std::ptrdiff_t>(precision));
            p = UPolynomial<R>(std::move(c));
        }
    };
    auto weight = [](const UPolynomial<R>& p) {
        std::size_t w = 0;
        for (const auto& c : p.coefficients()) w += c.size();
        return w;
    };
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) truncate(a(i, j));

    SmithForm<R> out;
    std::vector<bool> row_done(a.rows(), false), col_done(a.cols(), false);
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        std::size_t bv = 0, bw = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (col_done[j] || a(i, j).is_zero()) continue;
                const std::size_t v = a(i, j).valuation(), w = weight(a(i, j));
                if (!best || v < bv || (v == bv && w < bw)) {
                    best = {i, j};
                    bv = v;
                    bw = w;
                }
            }
        }
        if (!best) break;
        const auto [t, c] = *best;
        row_done[t] = col_done[c] = true;
        const std::size_t v = bv;
        // w = pivot / U^v, a unit of the local ring.
        const UPolynomial<R> w(std::vector<R>(a(t, c).coefficients().begin() + static_cast<std::ptrdiff_t>(v),
                                              a(t, c).coefficients().end()));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (row_done[i] || a(i, c).is_zero()) continue;
            const auto& e = a(i, c);
            const UPolynomial<R> q(std::vector<R>(e.coefficients().begin() + static_cast<std::ptrdiff_t>(v),
                                                  e.coefficients().end()));
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (col_done[j]) continue;
                UPolynomial<R> x = a(i, j).is_zero() ? UPolynomial<R>() : w * a(i, j);
                if (!a(t, j).is_zero()) x += q * a(t, j);
                truncate(x);
                a(i, j) = std::move(x);
            }
            a(i, c) = UPolynomial<R>();
            // Divide out a common factor of the row's coefficients, a unit of F.
            std::optional<R> g;
            for (std::size_t j = 0; j < a.cols() && !(g && g->is_monomial() && g->terms().front().is_zero()); ++j) {
                if (col_done[j]) continue;
                for (const auto& x : a(i, j).coefficients()) {
                    if (x.is_zero()) continue;
                    g = g ? RingTraits<R>::common_factor(*g, x) : RingTraits<R>::common_factor(x, x);
                }
            }
            if (g && !(g->is_monomial() && g->terms().front().is_zero()))
                for (std::size_t j = 0; j < a.cols(); ++j)
                    if (!col_done[j])
                        a(i, j) = a(i, j).map_coefficients([&](const R& x) { return *divide_exact(x, *g); });
        }
        out.invariant_factors.push_back(UPolynomial<R>::monomial(w.coefficient(0), v));
        ++out.rank;
        if (v > 0) out.torsion.push_back(v);
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

} // namespace pfh
