#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <honei/la/banded_matrix.hpp>
#include <honei/la/dense_vector.hpp>
#include <honei/la/dispatch.hpp>
#include <honei/la/kernels/banded.hpp>
#include <honei/util/memory_arbiter.hpp>

// Backend-dispatched linear algebra operations. Every operation drives the
// memory arbiter for each container argument (Read for inputs, Write for
// outputs) at the executing backend's location, then dispatches the kernel
// through the registry.

namespace honei {

namespace detail {

inline void touch(BlockId id, std::size_t bytes, BackendTag tag, Access mode) {
    MemoryArbiter::instance().acquire(id, bytes, backend_location(tag), mode);
}

template <Real T>
void require_same_size(const char* op, const DenseVector<T>& a, const DenseVector<T>& b) {
    if (a.size() != b.size())
        throw DimensionMismatch(op, a.size(), b.size());
}

/// Bands of A in ascending offset order, as raw views for the kernels.
template <Real T>
std::vector<kernels::BandView<T>> band_views(const BandedMatrix<T>& a) {
    std::vector<kernels::BandView<T>> views;
    views.reserve(a.band_count());
    for (const auto& [offset, data] : a.bands())
        views.push_back({offset, data.data()});
    return views;
}

template <Real T>
using MatvecSig = void(T*, const T*, std::size_t, const kernels::BandView<T>*, std::size_t);

template <Real T>
using MatvecQ1Sig = void(T*, const T*, std::size_t, std::size_t, const kernels::BandView<T>*);

/// Shared matvec entry: picks the unrolled Q1 kernel when the layout allows.
template <Real T>
void matvec_into(BackendTag tag, const BandedMatrix<T>& a, const DenseVector<T>& x,
                 DenseVector<T>& y) {
    if (a.order() != x.size())
        throw DimensionMismatch("banded_matvec", a.order(), x.size());
    require_same_size("banded_matvec", y, x);
    touch(a.block_id(), a.bytes(), tag, Access::Read);
    touch(x.block_id(), x.bytes(), tag, Access::Read);
    touch(y.block_id(), y.bytes(), tag, Access::Write);
    const auto views = band_views(a);
    if (a.has_full_q1_bands()) {
        dispatch<MatvecQ1Sig<T>>("banded_matvec_q1", tag, y.data(), x.data(), a.order(),
                                 a.grid_side(), views.data());
    } else {
        dispatch<MatvecSig<T>>("banded_matvec", tag, y.data(), x.data(), a.order(), views.data(),
                               views.size());
    }
}

}  // namespace detail

/// y <- y + alpha * x
template <Real T>
void axpy(BackendTag tag, DenseVector<T>& y, T alpha, const DenseVector<T>& x) {
    detail::require_same_size("axpy", y, x);
    detail::touch(x.block_id(), x.bytes(), tag, Access::Read);
    detail::touch(y.block_id(), y.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, T, std::size_t)>("axpy", tag, y.data(), x.data(), alpha, y.size());
}

/// r <- alpha * a + beta * b
template <Real T>
void scaled_sum(BackendTag tag, DenseVector<T>& r, const DenseVector<T>& a,
                const DenseVector<T>& b, T alpha, T beta) {
    detail::require_same_size("scaled_sum", r, a);
    detail::require_same_size("scaled_sum", a, b);
    detail::touch(a.block_id(), a.bytes(), tag, Access::Read);
    detail::touch(b.block_id(), b.bytes(), tag, Access::Read);
    detail::touch(r.block_id(), r.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, const T*, T, T, std::size_t)>(
        "scaled_sum", tag, r.data(), a.data(), b.data(), alpha, beta, r.size());
}

/// a <- a + b
template <Real T>
void sum(BackendTag tag, DenseVector<T>& a, const DenseVector<T>& b) {
    detail::require_same_size("sum", a, b);
    detail::touch(b.block_id(), b.bytes(), tag, Access::Read);
    detail::touch(a.block_id(), a.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, std::size_t)>("sum", tag, a.data(), b.data(), a.size());
}

/// a <- a - b
template <Real T>
void difference(BackendTag tag, DenseVector<T>& a, const DenseVector<T>& b) {
    detail::require_same_size("difference", a, b);
    detail::touch(b.block_id(), b.bytes(), tag, Access::Read);
    detail::touch(a.block_id(), a.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, std::size_t)>("difference", tag, a.data(), b.data(), a.size());
}

/// a <- a ⊙ b (elementwise product)
template <Real T>
void product(BackendTag tag, DenseVector<T>& a, const DenseVector<T>& b) {
    detail::require_same_size("product", a, b);
    detail::touch(b.block_id(), b.bytes(), tag, Access::Read);
    detail::touch(a.block_id(), a.bytes(), tag, Access::Write);
    dispatch<void(T*, const T*, std::size_t)>("product", tag, a.data(), b.data(), a.size());
}

/// a <- alpha * a
template <Real T>
void scale(BackendTag tag, DenseVector<T>& a, T alpha) {
    detail::touch(a.block_id(), a.bytes(), tag, Access::Write);
    dispatch<void(T*, T, std::size_t)>("scale", tag, a.data(), alpha, a.size());
}

template <Real T>
T dot(BackendTag tag, const DenseVector<T>& x, const DenseVector<T>& y) {
    detail::require_same_size("dot", x, y);
    detail::touch(x.block_id(), x.bytes(), tag, Access::Read);
    detail::touch(y.block_id(), y.bytes(), tag, Access::Read);
    return dispatch<T(const T*, const T*, std::size_t)>("dot", tag, x.data(), y.data(), x.size());
}

template <Real T>
T norm_l2(BackendTag tag, const DenseVector<T>& x, bool squared = false) {
    const T sq = dot(tag, x, x);
    return squared ? sq : static_cast<T>(std::sqrt(sq));
}

template <Real T>
void banded_matvec(BackendTag tag, const BandedMatrix<T>& a, const DenseVector<T>& x,
                   DenseVector<T>& y) {
    detail::matvec_into(tag, a, x, y);
}

template <Real T>
DenseVector<T> banded_matvec(BackendTag tag, const BandedMatrix<T>& a, const DenseVector<T>& x) {
    DenseVector<T> y(x.size(), T(0));
    detail::matvec_into(tag, a, x, y);
    return y;
}

/// s = ||alpha*y + beta*A*x||_2, fused single pass.
template <Real T>
T residual_norm(BackendTag tag, T alpha, const DenseVector<T>& y, T beta, const BandedMatrix<T>& a,
                const DenseVector<T>& x) {
    if (a.order() != x.size())
        throw DimensionMismatch("residual_norm", a.order(), x.size());
    detail::require_same_size("residual_norm", y, x);
    detail::touch(y.block_id(), y.bytes(), tag, Access::Read);
    detail::touch(a.block_id(), a.bytes(), tag, Access::Read);
    detail::touch(x.block_id(), x.bytes(), tag, Access::Read);
    const auto views = detail::band_views(a);
    using Sig = T(const T*, T, T, const T*, std::size_t, const kernels::BandView<T>*, std::size_t);
    const T sq = dispatch<Sig>("residual_norm", tag, y.data(), alpha, beta, x.data(), y.size(),
                               views.data(), views.size());
    return static_cast<T>(std::sqrt(sq));
}

/// Elementwise rounding to the target precision (round to nearest).
template <Real To, Real From>
DenseVector<To> convert_precision(const DenseVector<From>& x) {
    DenseVector<To> out(x.size(), To(0));
    detail::touch(x.block_id(), x.bytes(), BackendTag::Generic, Access::Read);
    detail::touch(out.block_id(), out.bytes(), BackendTag::Generic, Access::Write);
    dispatch<void(To*, const From*, std::size_t)>("convert", BackendTag::Generic, out.data(),
                                                  x.data(), x.size());
    return out;
}

/// Bandwise precision conversion of a banded matrix.
template <Real To, Real From>
BandedMatrix<To> convert_matrix(const BandedMatrix<From>& a) {
    BandedMatrix<To> out(a.order(), a.layout());
    std::vector<To> band(a.order());
    for (const auto& [offset, data] : a.bands()) {
        for (std::size_t i = 0; i < data.size(); ++i) band[i] = static_cast<To>(data[i]);
        out.insert_band(offset, band);
    }
    return out;
}

}  // namespace honei
