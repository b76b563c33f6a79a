#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfh/errors.hpp"
#include "pfh/novikov/exponent.hpp"
#include "pfh/novikov/group_ring.hpp"
#include "pfh/novikov/novikov_polynomial.hpp"

namespace pfh {

enum class PerturbationKind { trivial, generic_certified, custom };

inline const char* to_string(PerturbationKind k) {
    switch (k) {
    case PerturbationKind::trivial: return "trivial";
    case PerturbationKind::generic_certified: return "generic-certified";
    case PerturbationKind::custom: return "custom";
    }
    return "?";
}

/// A real two-form restricted to the periodic lattice, with rational weights.
class PerturbationClass {
  public:
    PerturbationClass() = default;

    static PerturbationClass trivial(std::size_t b) {
        PerturbationClass p;
        p.weights_.assign(b, Exponent(0));
        p.kind_ = PerturbationKind::trivial;
        return p;
    }
    /// All-zero weights collapse to the trivial class.
    static PerturbationClass custom(std::vector<Exponent> weights) {
        PerturbationClass p;
        p.weights_ = std::move(weights);
        p.kind_ = p.all_zero() ? PerturbationKind::trivial : PerturbationKind::custom;
        return p;
    }
    static PerturbationClass parse(const std::string& csv) {
        std::vector<Exponent> w;
        std::size_t start = 0;
        while (start <= csv.size()) {
            auto end = csv.find(',', start);
            if (end == std::string::npos) end = csv.size();
            std::string item = csv.substr(start, end - start);
            item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
            w.push_back(Exponent::parse(item));
            start = end + 1;
        }
        return custom(std::move(w));
    }

    std::size_t width() const { return weights_.size(); }
    const std::vector<Exponent>& weights() const { return weights_; }
    PerturbationKind kind() const { return kind_; }
    bool is_trivial() const { return kind_ == PerturbationKind::trivial; }
    const std::vector<MultiExponent>& certified_against() const { return certificate_; }

    Exponent pair(const MultiExponent& e) const {
        if (e.width() != weights_.size()) throw DomainError("perturbation width does not match lattice rank");
        mpq_class s = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (e[i] != 0) s += weights_[i].value() * mpq_class(static_cast<long>(e[i]));
        return Exponent(std::move(s));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i) s += ",";
            s += weights_[i].str();
        }
        return s;
    }

    friend bool operator==(const PerturbationClass& a, const PerturbationClass& b) {
        return a.weights_ == b.weights_;
    }

  private:
    friend PerturbationClass mark_generic(PerturbationClass, std::vector<MultiExponent>);
    bool all_zero() const {
        return std::all_of(weights_.begin(), weights_.end(), [](const Exponent& e) { return e.is_zero(); });
    }
    std::vector<Exponent> weights_;
    PerturbationKind kind_ = PerturbationKind::trivial;
    std::vector<MultiExponent> certificate_;
};

/// Image of g under T^e -> T^{eta.e}; colliding terms cancel.
inline NovikovPolynomial evaluate(const GroupRingElement& g, const PerturbationClass& eta) {
    std::vector<Exponent> out;
    out.reserve(g.size());
    for (const auto& t : g.terms()) out.push_back(eta.pair(t));
    return NovikovPolynomial::from_terms(std::move(out));
}

/// True iff eta pairs nonzero with every nonzero vector of the set.
inline bool certify_generic(std::span<const MultiExponent> differences, const PerturbationClass& eta) {
    for (const auto& d : differences) {
        if (d.is_zero()) continue;
        if (eta.pair(d).is_zero()) return false;
    }
    return true;
}

inline PerturbationClass mark_generic(PerturbationClass eta, std::vector<MultiExponent> differences) {
    if (!certify_generic(differences, eta))
        throw DomainError("perturbation " + eta.str() + " vanishes on a collected difference");
    if (!eta.all_zero()) eta.kind_ = PerturbationKind::generic_certified;
    eta.certificate_ = std::move(differences);
    return eta;
}

} // namespace pfh
