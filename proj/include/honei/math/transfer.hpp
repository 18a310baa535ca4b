#pragma once

#include <honei/la/dense_vector.hpp>
#include <honei/la/dispatch.hpp>
#include <honei/la/operations.hpp>

namespace honei::math {

namespace detail {

inline std::size_t checked_side(const char* op, std::size_t len, std::size_t m) {
    if (m == 0 || len != m * m)
        throw DimensionMismatch(op, m * m, len);
    return m;
}

}  // namespace detail

/// Bilinear prolongation; fine grid has 2*m_coarse - 1 points per side.
template <Real T>
DenseVector<T> prolongate(BackendTag tag, const DenseVector<T>& coarse, std::size_t m_coarse) {
    detail::checked_side("prolongate", coarse.size(), m_coarse);
    const std::size_t mf = 2 * m_coarse - 1;
    DenseVector<T> fine(mf * mf, T(0));
    honei::detail::touch(coarse.block_id(), coarse.bytes(), tag, Access::Read);
    honei::detail::touch(fine.block_id(), fine.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, std::size_t)>("prolongate", tag, fine.data(), coarse.data(),
                                              m_coarse);
    return fine;
}

/// Full-weighting restriction; m_fine must be odd.
template <Real T>
DenseVector<T> restrict(BackendTag tag, const DenseVector<T>& fine, std::size_t m_fine) {
    detail::checked_side("restrict", fine.size(), m_fine);
    if (m_fine % 2 == 0 || m_fine < 3)
        throw InvalidArgument("restrict: fine grid side must be odd and >= 3");
    const std::size_t mc = (m_fine + 1) / 2;
    DenseVector<T> coarse(mc * mc, T(0));
    honei::detail::touch(fine.block_id(), fine.bytes(), tag, Access::Read);
    honei::detail::touch(coarse.block_id(), coarse.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, std::size_t)>("restrict", tag, coarse.data(), fine.data(), m_fine);
    return coarse;
}

}  // namespace honei::math
