#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pfh/errors.hpp"

namespace pfh {

/// A rational exponent of the formal variable T, always held in lowest terms.
class Exponent {
  public:
    Exponent() = default;
    Exponent(long n) : q_(n) {}
    Exponent(long num, long den) {
        if (den == 0) throw DomainError("exponent with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Exponent(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading sign.
    static Exponent parse(std::string_view text) {
        std::string s(text);
        auto bad = [&] { return ParseError("invalid rational literal '" + s + "'"); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        auto is_int = [](std::string_view v, bool allow_sign) {
            if (v.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
            if (i == v.size()) return false;
            for (; i < v.size(); ++i)
                if (v[i] < '0' || v[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!is_int(num, true) || !is_int(den, false)) throw bad();
        if (num[0] == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Exponent(mpq_class(n, d));
    }

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Exponent& operator+=(const Exponent& o) {
        q_ += o.q_;
        return *this;
    }
    Exponent& operator-=(const Exponent& o) {
        q_ -= o.q_;
        return *this;
    }
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator-(const Exponent& a) { return Exponent(mpq_class(-a.q_)); }
    friend Exponent operator*(const Exponent& a, const Exponent& b) { return Exponent(mpq_class(a.q_ * b.q_)); }
    friend Exponent operator*(const Exponent& a, long k) { return Exponent(mpq_class(a.q_ * k)); }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.str(); }

  private:
    mpq_class q_{0};
};

} // namespace pfh
