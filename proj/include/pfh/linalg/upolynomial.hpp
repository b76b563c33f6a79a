#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pfh/errors.hpp"

namespace pfh {

/// Polynomial in U with coefficients in C; coefficient i multiplies U^i, trailing zeros trimmed.
template <class C>
class UPolynomial {
  public:
    UPolynomial() = default;
    UPolynomial(C c) {
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    UPolynomial(std::initializer_list<C> cs) : coeffs_(cs) { trim(); }
    explicit UPolynomial(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }

    static UPolynomial monomial(C c, std::size_t power) {
        UPolynomial p;
        if (c.is_zero()) return p;
        p.coeffs_.resize(power + 1);
        p.coeffs_[power] = std::move(c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const {
        if (coeffs_.empty()) throw DomainError("degree of zero");
        return coeffs_.size() - 1;
    }
    /// U-adic valuation: index of the lowest nonzero coefficient.
    std::size_t valuation() const {
        if (coeffs_.empty()) throw DomainError("valuation of zero");
        std::size_t i = 0;
        while (coeffs_[i].is_zero()) ++i;
        return i;
    }
    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_)
            if (!c.is_zero()) ++n;
        return n;
    }
    const C& leading() const {
        if (coeffs_.empty()) throw DomainError("leading coefficient of zero");
        return coeffs_.back();
    }
    const std::vector<C>& coefficients() const { return coeffs_; }
    C coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C{}; }

    UPolynomial shifted(std::size_t s) const {
        if (coeffs_.empty() || s == 0) return *this;
        UPolynomial p;
        p.coeffs_.resize(s);
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }
    UPolynomial scaled(const C& c) const {
        UPolynomial p;
        if (c.is_zero()) return p;
        p.coeffs_.reserve(coeffs_.size());
        for (const auto& x : coeffs_) p.coeffs_.push_back(x.is_zero() ? C{} : x * c);
        p.trim();
        return p;
    }
    template <class F>
    auto map_coefficients(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<D> out;
        out.reserve(coeffs_.size());
        for (const auto& x : coeffs_) out.push_back(x.is_zero() ? D{} : f(x));
        return UPolynomial<D>(std::move(out));
    }

    UPolynomial& operator+=(const UPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            if (!o.coeffs_[i].is_zero()) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        trim();
        return *this;
    }
    friend UPolynomial operator+(UPolynomial a, const UPolynomial& b) { return a += b; }
    friend UPolynomial operator-(UPolynomial a, const UPolynomial& b) { return a += b; }
    friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                if (!b.coeffs_[j].is_zero()) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return UPolynomial(std::move(out));
    }

    friend bool operator==(const UPolynomial&, const UPolynomial&) = default;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i].str() + ")";
            if (i == 1) s += "U";
            if (i > 1) s += "U^" + std::to_string(i);
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const UPolynomial& p) { return os << p.str(); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<C> coeffs_;
};

} // namespace pfh
