#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pfh/errors.hpp"
#include "pfh/novikov/novikov_polynomial.hpp"

namespace pfh {

/// A point of the lattice Z^b; the exponent of T^phi in Z/2[Z^b].
class MultiExponent {
  public:
    MultiExponent() = default;
    explicit MultiExponent(std::size_t b) : coords_(b, 0) {}
    MultiExponent(std::initializer_list<std::int64_t> c) : coords_(c) {}
    explicit MultiExponent(std::vector<std::int64_t> c) : coords_(std::move(c)) {}

    static MultiExponent unit(std::size_t b, std::size_t i) {
        MultiExponent e(b);
        e.coords_.at(i) = 1;
        return e;
    }

    std::size_t width() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
    }

    MultiExponent& operator+=(const MultiExponent& o) {
        check_width(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    MultiExponent& operator-=(const MultiExponent& o) {
        check_width(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    friend MultiExponent operator+(MultiExponent a, const MultiExponent& b) { return a += b; }
    friend MultiExponent operator-(MultiExponent a, const MultiExponent& b) { return a -= b; }
    friend MultiExponent operator-(MultiExponent a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    friend bool operator==(const MultiExponent&, const MultiExponent&) = default;
    friend auto operator<=>(const MultiExponent&, const MultiExponent&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords_[i]);
        }
        return s + ")";
    }

  private:
    void check_width(const MultiExponent& o) const {
        if (o.coords_.size() != coords_.size()) throw DomainError("multi-exponent width mismatch");
    }
    std::vector<std::int64_t> coords_;
};

/// Element of Z/2[Z^b], a finite set of multi-exponents.
///
/// Lex order on Z^b is used for leading terms; the zero element carries no width.
class GroupRingElement {
  public:
    GroupRingElement() = default;
    GroupRingElement(std::initializer_list<MultiExponent> e) : terms_(detail::reduce_mod2(std::vector<MultiExponent>(e))) {
        check_uniform();
    }
    static GroupRingElement from_terms(std::vector<MultiExponent> e) {
        GroupRingElement g;
        g.terms_ = detail::reduce_mod2(std::move(e));
        g.check_uniform();
        return g;
    }
    static GroupRingElement monomial(MultiExponent e) {
        GroupRingElement g;
        g.terms_.push_back(std::move(e));
        return g;
    }
    static GroupRingElement one(std::size_t b) { return monomial(MultiExponent(b)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<MultiExponent>& terms() const { return terms_; }
    const MultiExponent& leading() const {
        if (terms_.empty()) throw DomainError("leading term of zero");
        return terms_.back();
    }

    GroupRingElement shifted(const MultiExponent& by) const {
        GroupRingElement g;
        g.terms_.reserve(terms_.size());
        for (const auto& t : terms_) g.terms_.push_back(t + by);
        return g;
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement g;
        g.terms_ = detail::symmetric_difference(a.terms_, b.terms_);
        g.check_uniform();
        return g;
    }
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }
    GroupRingElement& operator+=(const GroupRingElement& o) { return *this = *this + o; }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_monomial()) return b.shifted(a.terms_.front());
        if (b.is_monomial()) return a.shifted(b.terms_.front());
        std::vector<MultiExponent> all;
        all.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) all.push_back(x + y);
        return from_terms(std::move(all));
    }
    GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
    friend auto operator<=>(const GroupRingElement& a, const GroupRingElement& b) {
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
    friend std::ostream& operator<<(std::ostream& os, const GroupRingElement& g) { return os << g.str(); }

  private:
    void check_uniform() const {
        for (const auto& t : terms_)
            if (t.width() != terms_.front().width()) throw DomainError("group ring terms of different widths");
    }
    std::vector<MultiExponent> terms_;
};

/// Quotient a/b in the Laurent ring Z/2[Z^b] when it exists.
inline std::optional<GroupRingElement> divide_exact(const GroupRingElement& a, const GroupRingElement& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero()) return GroupRingElement{};
    if (b.is_monomial()) return a.shifted(-b.leading());
    const std::size_t w = b.leading().width();
    if (a.leading().width() != w) throw DomainError("group ring width mismatch");
    // Newton polytopes add, so every quotient term lies in this coordinate box.
    std::vector<std::int64_t> lo(w), hi(w);
    for (std::size_t j = 0; j < w; ++j) {
        std::int64_t amin = a.terms().front()[j], amax = amin, bmin = b.terms().front()[j], bmax = bmin;
        for (const auto& t : a.terms()) amin = std::min(amin, t[j]), amax = std::max(amax, t[j]);
        for (const auto& t : b.terms()) bmin = std::min(bmin, t[j]), bmax = std::max(bmax, t[j]);
        lo[j] = amin - bmin;
        hi[j] = amax - bmax;
        if (hi[j] < lo[j]) return std::nullopt;
    }
    GroupRingElement rem = a;
    std::vector<MultiExponent> quotient;
    while (!rem.is_zero()) {
        MultiExponent q = rem.leading() - b.leading();
        for (std::size_t j = 0; j < w; ++j)
            if (q[j] < lo[j] || q[j] > hi[j]) return std::nullopt;
        rem += b.shifted(q);
        quotient.push_back(std::move(q));
    }
    return GroupRingElement::from_terms(std::move(quotient));
}

} // namespace pfh
