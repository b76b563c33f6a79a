#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "pfh/errors.hpp"
#include "pfh/novikov/ring_traits.hpp"

namespace pfh {

/// Element num/den of the fraction field of an integral domain R.
///
/// Kept lightly reduced: a common factor reported by RingTraits<R> is divided out,
/// but equality never relies on it (cross-multiplication is used).
template <class R>
class Fraction {
  public:
    Fraction() : num_(), den_(RingTraits<R>::one()) {}
    Fraction(R num) : num_(std::move(num)), den_(one_like(num_)) {}
    Fraction(R num, R den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("fraction with zero denominator");
        reduce();
    }

    const R& numerator() const { return num_; }
    const R& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Fraction inverse() const {
        if (num_.is_zero()) throw DomainError("division by zero");
        return Fraction(den_, num_);
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + b; }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        if (a.is_zero() || b.is_zero()) return Fraction(R{}, a.den_);
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const {
        if (num_.is_zero()) return "0";
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

  private:
    static R one_like(const R& r) {
        if constexpr (requires { r.terms().front().width(); }) {
            if (!r.is_zero()) return R::one(r.terms().front().width());
        }
        return RingTraits<R>::one();
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = one_like(den_);
            return;
        }
        if (auto q = divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = one_like(num_);
            return;
        }
        R g = RingTraits<R>::common_factor(num_, den_);
        if (!g.is_zero() && !(g == one_like(g))) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }

    R num_;
    R den_;
};

using FractionElement = Fraction<NovikovPolynomial>;

} // namespace pfh
