#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "pfh/errors.hpp"
#include "pfh/linalg/matrix.hpp"

namespace pfh {

inline constexpr std::size_t default_minor_cap = 6;

/// One monomial of a Leibniz expansion: a permutation and, per row, the chosen term index.
struct ExpansionTerm {
    std::vector<std::size_t> permutation;
    std::vector<std::size_t> choice;
};

/// Pairing of the expansion terms of a formal determinant by exponent sum.
template <class Exp>
struct CancellationReport {
    struct Pair {
        ExpansionTerm first;
        ExpansionTerm second;
        Exp exponent;
    };
    std::size_t total_terms = 0;
    std::vector<Pair> cancelled;
    std::vector<std::pair<ExpansionTerm, Exp>> survivors;
};

namespace detail {

template <class R>
using term_t = std::decay_t<decltype(std::declval<const R&>().terms().front())>;

// Calls f(perm) for every permutation of 0..n-1 whose entries are all nonzero.
template <class R, class F>
void for_each_supported_permutation(const Matrix<R>& m, F&& f) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == n) {
            f(perm);
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || m(row, c).is_zero()) continue;
            used[c] = true;
            perm[row] = c;
            self(self, row + 1);
            used[c] = false;
        }
    };
    rec(rec, 0);
}

// Leibniz determinant: every product is expanded and reduced mod 2 at the end.
template <class R>
R leibniz_det(const Matrix<R>& m) {
    std::vector<term_t<R>> all;
    bool any = false;
    for_each_supported_permutation(m, [&](const std::vector<std::size_t>& perm) {
        R prod = m(0, perm[0]);
        for (std::size_t i = 1; i < perm.size(); ++i) prod = prod * m(i, perm[i]);
        for (const auto& t : prod.terms()) all.push_back(t);
        any = true;
    });
    if (!any) return R{};
    return R::from_terms(std::move(all));
}

inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Rank as the largest size of a nonvanishing minor; minors are expanded by permutations.
template <class R>
std::size_t rank_by_minors(const Matrix<R>& m, std::size_t cap = default_minor_cap) {
    const std::size_t n = std::min(m.rows(), m.cols());
    if (n > cap) throw DomainError("minor oracle cap exceeded");
    std::size_t rank = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        bool found = false;
        std::vector<std::size_t> rs(k);
        std::iota(rs.begin(), rs.end(), 0);
        do {
            std::vector<std::size_t> cs(k);
            std::iota(cs.begin(), cs.end(), 0);
            do {
                if (!detail::leibniz_det(m.submatrix(rs, cs)).is_zero()) found = true;
            } while (!found && detail::next_subset(cs, m.cols()));
        } while (!found && detail::next_subset(rs, m.rows()));
        if (!found) break;
        rank = k;
    }
    return rank;
}

/// Determinant as a formal permutation sum, reporting which expansion terms cancel.
///
/// Terms are grouped by exponent sum and paired in expansion order; an odd group
/// leaves its last term as a survivor.
template <class R>
std::pair<R, CancellationReport<detail::term_t<R>>> det_formal(const Matrix<R>& m,
                                                                std::size_t cap = default_minor_cap) {
    using Exp = detail::term_t<R>;
    if (!m.is_square()) throw DomainError("det_formal of a non-square matrix");
    if (m.rows() > cap) throw DomainError("minor oracle cap exceeded");
    CancellationReport<Exp> report;
    if (m.rows() == 0) return {R{}, report};
    std::map<Exp, std::vector<ExpansionTerm>> groups;
    detail::for_each_supported_permutation(m, [&](const std::vector<std::size_t>& perm) {
        const std::size_t n = perm.size();
        std::vector<std::size_t> choice(n, 0);
        for (;;) {
            Exp e = m(0, perm[0]).terms()[choice[0]];
            for (std::size_t i = 1; i < n; ++i) e = e + m(i, perm[i]).terms()[choice[i]];
            groups[e].push_back({perm, choice});
            ++report.total_terms;
            std::size_t i = n;
            while (i-- > 0) {
                if (++choice[i] < m(i, perm[i]).size()) break;
                choice[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    });
    std::vector<Exp> surviving;
    for (auto& [e, terms] : groups) {
        std::size_t t = 0;
        for (; t + 1 < terms.size(); t += 2) report.cancelled.push_back({terms[t], terms[t + 1], e});
        if (t < terms.size()) {
            report.survivors.emplace_back(terms[t], e);
            surviving.push_back(e);
        }
    }
    return {R::from_terms(std::move(surviving)), report};
}

} // namespace pfh
