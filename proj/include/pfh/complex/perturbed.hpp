#pragma once

#include <cstddef>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfh/complex/twisted_complex.hpp"
#include "pfh/linalg/homology.hpp"
#include "pfh/linalg/rank.hpp"
#include "pfh/linalg/upolynomial.hpp"
#include "pfh/novikov/perturbation.hpp"

namespace pfh {

enum class Mode { trivial, generic, custom };

/// How disk classes become coefficients: T^0, the formal group ring, or T^{eta.e}.
class Specialization {
  public:
    static Specialization trivial() { return Specialization(Mode::trivial, {}); }
    static Specialization generic() { return Specialization(Mode::generic, {}); }
    static Specialization custom(PerturbationClass eta) {
        if (eta.is_trivial()) return trivial();
        return Specialization(Mode::custom, std::move(eta));
    }

    Mode mode() const { return mode_; }
    const PerturbationClass& eta() const { return eta_; }

    /// The perturbation used for Novikov evaluation; generic mode has none.
    PerturbationClass eta_for(std::size_t b) const {
        if (mode_ == Mode::generic) throw DomainError("generic mode has no evaluation class");
        if (mode_ == Mode::trivial) return PerturbationClass::trivial(b);
        if (eta_.width() != b)
            throw ValidationError("perturbation has " + std::to_string(eta_.width()) + " weights, complex has b = " +
                                  std::to_string(b));
        return eta_;
    }

    std::string str() const {
        switch (mode_) {
        case Mode::trivial: return "trivial";
        case Mode::generic: return "generic";
        default: return "eta=" + eta_.str();
        }
    }

  private:
    Specialization(Mode m, PerturbationClass eta) : mode_(m), eta_(std::move(eta)) {}
    Mode mode_;
    PerturbationClass eta_;
};

/// Formal matrix of disks with a fixed n_z; row = source, column = target.
inline Matrix<GroupRingElement> disk_matrix(const TwistedComplex& c, std::size_t nz) {
    Matrix<GroupRingElement> m(c.size(), c.size());
    for (const auto& [k, v] : c.entries()) {
        std::vector<MultiExponent> t;
        for (const auto& d : v)
            if (d.nz == nz) t.push_back(d.exp);
        if (!t.empty()) m(k.first, k.second) = GroupRingElement::from_terms(std::move(t));
    }
    return m;
}

/// Matrix over R[U]: the U^k coefficient of entry (x, y) collects disks x->y with n_z = k.
inline Matrix<UPolynomial<GroupRingElement>> u_matrix(const TwistedComplex& c) {
    Matrix<UPolynomial<GroupRingElement>> m(c.size(), c.size());
    for (const auto& [k, v] : c.entries()) {
        std::vector<std::vector<MultiExponent>> by_nz;
        for (const auto& d : v) {
            if (d.nz >= by_nz.size()) by_nz.resize(d.nz + 1);
            by_nz[d.nz].push_back(d.exp);
        }
        std::vector<GroupRingElement> coeffs;
        for (auto& t : by_nz) coeffs.push_back(GroupRingElement::from_terms(std::move(t)));
        m(k.first, k.second) = UPolynomial<GroupRingElement>(std::move(coeffs));
    }
    return m;
}

inline Matrix<NovikovPolynomial> evaluate(const Matrix<GroupRingElement>& m, const PerturbationClass& eta) {
    return m.map([&](const GroupRingElement& g) { return evaluate(g, eta); });
}
inline Matrix<UPolynomial<NovikovPolynomial>> evaluate(const Matrix<UPolynomial<GroupRingElement>>& m,
                                                       const PerturbationClass& eta) {
    return m.map([&](const UPolynomial<GroupRingElement>& p) {
        return p.map_coefficients([&](const GroupRingElement& g) { return evaluate(g, eta); });
    });
}

/// Hat differential over the Novikov ring at eta (n_z = 0 disks only).
inline Matrix<NovikovPolynomial> hat_matrix(const TwistedComplex& c, const PerturbationClass& eta) {
    return evaluate(disk_matrix(c, 0), eta);
}
/// Hat differential over the group ring (generic mode).
inline Matrix<GroupRingElement> hat_matrix(const TwistedComplex& c) { return disk_matrix(c, 0); }

/// Calls f with the hat matrix specialized to the requested coefficients.
template <class F>
auto with_coefficients(const TwistedComplex& c, const Specialization& s, F&& f) {
    if (s.mode() == Mode::generic) return f(disk_matrix(c, 0));
    return f(evaluate(disk_matrix(c, 0), s.eta_for(c.b())));
}

inline std::size_t hat_rank(const TwistedComplex& c, const Specialization& s) {
    return with_coefficients(c, s, [](const auto& m) { return homology_rank(m); });
}
inline std::size_t hat_rank(const TwistedComplex& c, Mode m) {
    if (m == Mode::custom) throw DomainError("custom mode needs a perturbation class");
    return hat_rank(c, m == Mode::trivial ? Specialization::trivial() : Specialization::generic());
}
inline std::size_t hat_rank(const TwistedComplex& c, const PerturbationClass& eta) {
    return hat_rank(c, Specialization::custom(eta));
}

struct RankComparison {
    std::size_t r_omega = 0;
    std::size_t r_eta = 0;
    std::size_t r_Omega = 0;
    bool holds = false;
};

/// Generic, given and trivial hat ranks; holds iff r_omega <= r_eta <= r_Omega.
inline RankComparison rank_inequality_check(const TwistedComplex& c, const PerturbationClass& eta) {
    RankComparison r;
    r.r_omega = hat_rank(c, Mode::generic);
    r.r_eta = hat_rank(c, eta);
    r.r_Omega = hat_rank(c, Mode::trivial);
    r.holds = r.r_omega <= r.r_eta && r.r_eta <= r.r_Omega;
    return r;
}

inline constexpr std::size_t default_difference_cap = 200000;

/// Every difference of exponent sums that can arise between two terms of one minor.
///
/// A term of a minor picks one disk per row, so two terms differ by a sum over rows of
/// (0 or a difference of two classes in that row). The set is the Minkowski sum of the
/// per-row difference sets; all n_z levels are included so the set also covers the
/// truncated plus complexes.
inline std::vector<MultiExponent> collect_differences(const TwistedComplex& c,
                                                      std::size_t cap = default_difference_cap) {
    std::vector<std::set<MultiExponent>> rows(c.size());
    for (const auto& [k, v] : c.entries())
        for (const auto& d : v) rows[k.first].insert(d.exp);
    std::set<MultiExponent> acc{MultiExponent(c.b())};
    for (const auto& r : rows) {
        if (r.size() < 2) continue;
        std::set<MultiExponent> diffs{MultiExponent(c.b())};
        for (const auto& x : r)
            for (const auto& y : r)
                if (x != y) diffs.insert(x - y);
        std::set<MultiExponent> next;
        for (const auto& a : acc)
            for (const auto& d : diffs) {
                next.insert(a + d);
                if (next.size() > cap) throw DomainError("difference set exceeds cap " + std::to_string(cap));
            }
        acc = std::move(next);
    }
    acc.erase(MultiExponent(c.b()));
    return {acc.begin(), acc.end()};
}

/// eta_1 = 1, eta_{j+1} = 1 + sum_{i<=j} B_i eta_i with B_i the largest |coordinate i|;
/// the last nonzero coordinate of any difference then dominates the pairing.
inline PerturbationClass find_special_form(const TwistedComplex& c) {
    if (c.b() == 0) throw DomainError("no perturbation directions when b = 0");
    const auto diffs = collect_differences(c);
    std::vector<Exponent> w(c.b(), Exponent(0));
    if (diffs.empty()) {
        w[0] = Exponent(1);
        return mark_generic(PerturbationClass::custom(std::move(w)), diffs);
    }
    std::vector<long> bound(c.b(), 0);
    for (const auto& d : diffs)
        for (std::size_t j = 0; j < c.b(); ++j) bound[j] = std::max<long>(bound[j], std::labs(d[j]));
    mpz_class acc = 0;
    for (std::size_t j = 0; j < c.b(); ++j) {
        mpz_class eta = acc + 1;
        w[j] = Exponent(mpq_class(eta));
        acc += eta * bound[j];
    }
    return mark_generic(PerturbationClass::custom(std::move(w)), diffs);
}

} // namespace pfh
