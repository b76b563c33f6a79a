#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfh/errors.hpp"
#include "pfh/novikov/exponent.hpp"

namespace pfh {

namespace detail {

// Sorts a multiset of exponents-like values and keeps those of odd multiplicity.
template <class T>
std::vector<T> reduce_mod2(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    std::vector<T> out;
    out.reserve(v.size());
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i + 1;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(std::move(v[i]));
        i = j;
    }
    return out;
}

// Symmetric difference of two strictly increasing sequences.
template <class T>
std::vector<T> symmetric_difference(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Finitely supported element of the Novikov field: a Z/2-combination of T^q, q rational.
///
/// The support is kept sorted and free of duplicates; an empty support is zero.
class NovikovPolynomial {
  public:
    NovikovPolynomial() = default;
    NovikovPolynomial(std::initializer_list<Exponent> exps) : terms_(detail::reduce_mod2(std::vector<Exponent>(exps))) {}
    static NovikovPolynomial from_terms(std::vector<Exponent> exps) {
        NovikovPolynomial p;
        p.terms_ = detail::reduce_mod2(std::move(exps));
        return p;
    }
    static NovikovPolynomial monomial(Exponent e) {
        NovikovPolynomial p;
        p.terms_.push_back(std::move(e));
        return p;
    }
    static NovikovPolynomial zero() { return {}; }
    static NovikovPolynomial one() { return monomial(Exponent(0)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Exponent>& terms() const { return terms_; }

    /// Minimum exponent of the support.
    const Exponent& valuation() const {
        if (terms_.empty()) throw DomainError("valuation of zero");
        return terms_.front();
    }
    /// Maximum exponent of the support.
    const Exponent& degree() const {
        if (terms_.empty()) throw DomainError("degree of zero");
        return terms_.back();
    }

    NovikovPolynomial shifted(const Exponent& by) const {
        NovikovPolynomial p;
        p.terms_.reserve(terms_.size());
        for (const auto& e : terms_) p.terms_.push_back(e + by);
        return p;
    }

    NovikovPolynomial& operator+=(const NovikovPolynomial& o) {
        terms_ = detail::symmetric_difference(terms_, o.terms_);
        return *this;
    }
    friend NovikovPolynomial operator+(const NovikovPolynomial& a, const NovikovPolynomial& b) {
        NovikovPolynomial p;
        p.terms_ = detail::symmetric_difference(a.terms_, b.terms_);
        return p;
    }
    // Characteristic 2.
    friend NovikovPolynomial operator-(const NovikovPolynomial& a, const NovikovPolynomial& b) { return a + b; }

    friend NovikovPolynomial operator*(const NovikovPolynomial& a, const NovikovPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_monomial()) return b.shifted(a.terms_.front());
        if (b.is_monomial()) return a.shifted(b.terms_.front());
        std::vector<Exponent> all;
        all.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) all.push_back(x + y);
        return from_terms(std::move(all));
    }
    NovikovPolynomial& operator*=(const NovikovPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const NovikovPolynomial&, const NovikovPolynomial&) = default;
    friend auto operator<=>(const NovikovPolynomial& a, const NovikovPolynomial& b) {
        return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                                      b.terms_.end());
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += "T^" + terms_[i].str();
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const NovikovPolynomial& p) { return os << p.str(); }

  private:
    std::vector<Exponent> terms_;
};

/// Quotient a/b when b divides a in the Laurent ring, std::nullopt otherwise.
inline std::optional<NovikovPolynomial> divide_exact(const NovikovPolynomial& a, const NovikovPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero()) return NovikovPolynomial{};
    if (b.is_monomial()) return a.shifted(-b.valuation());
    // Any quotient has support inside [val a - val b, deg a - deg b].
    const Exponent lo = a.valuation() - b.valuation();
    const Exponent hi = a.degree() - b.degree();
    if (hi < lo) return std::nullopt;
    NovikovPolynomial rem = a;
    std::vector<Exponent> quotient;
    while (!rem.is_zero()) {
        Exponent q = rem.degree() - b.degree();
        if (q < lo || q > hi) return std::nullopt;
        rem += b.shifted(q);
        quotient.push_back(std::move(q));
    }
    return NovikovPolynomial::from_terms(std::move(quotient));
}

/// Greatest common divisor, normalized to valuation 0 (monomials are units).
inline NovikovPolynomial gcd(const NovikovPolynomial& a, const NovikovPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.shifted(-b.valuation());
    if (b.is_zero()) return a.shifted(-a.valuation());
    NovikovPolynomial x = a.shifted(-a.valuation());
    NovikovPolynomial y = b.shifted(-b.valuation());
    if (x.is_monomial() || y.is_monomial()) return NovikovPolynomial::one();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        // x mod y in the polynomial ring Z/2[T^(1/L)]
        while (!x.is_zero() && x.degree() >= y.degree()) x += y.shifted(x.degree() - y.degree());
        if (!x.is_zero()) x = x.shifted(-x.valuation());
        std::swap(x, y);
    }
    return x;
}

} // namespace pfh
