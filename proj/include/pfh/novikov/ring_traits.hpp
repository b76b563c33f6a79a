#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>

#include "pfh/novikov/group_ring.hpp"
#include "pfh/novikov/novikov_polynomial.hpp"

namespace pfh {

/// Per-ring hooks used by the generic elimination kernels.
///
/// Every ring here is an integral domain with exact division; pivot_key orders
/// candidate pivots (smaller is preferred) and common_factor returns a nonzero
/// element dividing every argument, used to keep fraction-free rows small.
template <class R>
struct RingTraits;

template <>
struct RingTraits<NovikovPolynomial> {
    static NovikovPolynomial one() { return NovikovPolynomial::one(); }
    static Exponent pivot_key(const NovikovPolynomial& p) { return p.valuation(); }
    static NovikovPolynomial common_factor(const NovikovPolynomial& a, const NovikovPolynomial& b) {
        return gcd(a, b);
    }
    static bool is_unit(const NovikovPolynomial& p) { return p.is_monomial(); }
};

template <>
struct RingTraits<GroupRingElement> {
    static GroupRingElement one() { return GroupRingElement::one(0); }
    static auto pivot_key(const GroupRingElement& g) { return std::make_tuple(g.size(), g.leading()); }
    // Only monomial content is extracted: the componentwise minimum exponent.
    static GroupRingElement common_factor(const GroupRingElement& a, const GroupRingElement& b) {
        const GroupRingElement& ref = a.is_zero() ? b : a;
        if (ref.is_zero()) return {};
        MultiExponent lo = ref.terms().front();
        for (const auto* g : {&a, &b})
            for (const auto& t : g->terms())
                for (std::size_t j = 0; j < lo.width(); ++j) lo[j] = std::min(lo[j], t[j]);
        return GroupRingElement::monomial(lo);
    }
    static bool is_unit(const GroupRingElement& g) { return g.is_monomial(); }
};

} // namespace pfh
