#pragma once

#include <honei/la/operations.hpp>

namespace honei::math {

/// Damped Jacobi smoothing: x <- x + omega * D^-1 (b - A x), `steps` times.
template <Real T>
void jacobi_smooth(BackendTag tag, const BandedMatrix<T>& a, DenseVector<T>& x,
                   const DenseVector<T>& b, T omega, std::size_t steps) {
    const std::size_t n = a.order();
    if (x.size() != n)
        throw DimensionMismatch("jacobi_smooth", n, x.size());
    if (b.size() != n)
        throw DimensionMismatch("jacobi_smooth", n, b.size());

    const std::vector<T>* diag = a.band(0);
    if (!diag)
        throw InvalidArgument("jacobi_smooth: zero diagonal entry (diagonal band absent)");
    for (std::size_t i = 0; i < n; ++i)
        if ((*diag)[i] == T(0))
            throw InvalidArgument("jacobi_smooth: zero diagonal entry at row " + std::to_string(i));

    if (steps == 0) return;

    DenseVector<T> t(n, T(0));
    DenseVector<T> r(n, T(0));
    DenseVector<T> diag_vec(n, T(0));
    for (std::size_t i = 0; i < n; ++i) diag_vec[i] = (*diag)[i];

    for (std::size_t s = 0; s < steps; ++s) {
        banded_matvec(tag, a, x, t);
        scaled_sum(tag, r, b, t, T(1), T(-1));  // r = b - A x
        detail::touch(r.block_id(), r.bytes(), tag, Access::Read);
        detail::touch(diag_vec.block_id(), diag_vec.bytes(), tag, Access::Read);
        detail::touch(x.block_id(), x.bytes(), tag, Access::Write);
        dispatch<void(T*, const T*, const T*, T, std::size_t)>(
            "jacobi_update", tag, x.data(), r.data(), diag_vec.data(), omega, n);
    }
}

}  // namespace honei::math
