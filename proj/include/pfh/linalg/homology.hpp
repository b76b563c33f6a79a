#pragma once

#include <cstddef>

#include "pfh/errors.hpp"
#include "pfh/linalg/matrix.hpp"
#include "pfh/linalg/rank.hpp"

namespace pfh {

/// dim Ker M - dim Im M = dim - 2 rank M for a square M with M^2 = 0.
template <class R>
std::size_t homology_rank(const Matrix<R>& m) {
    if (!m.is_square()) throw DomainError("differential must be square");
    if (!(m * m).is_zero()) throw ValidationError("not a differential");
    return m.rows() - 2 * rank_elimination(m);
}

} // namespace pfh
