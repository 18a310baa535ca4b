#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <honei/la/kernels/reduction.hpp>
#include <honei/util/runtime.hpp>
#include <honei/util/thread_pool.hpp>

// Banded matrix-vector kernels. The contract shared by every variant:
//
//   y[i] = 0 + sum over stored bands in ascending offset order k of
//          band_k[i] * x[i + k], restricted to 0 <= i + k < n,
//
// evaluated as unfused multiply-then-add. Band-major, row-major, blocked,
// parallel and the unrolled Q1 kernel all perform the identical additions in
// the identical order per element, so their results are bit-identical.

namespace honei::kernels {

template <Real T>
struct BandView {
    std::ptrdiff_t offset;
    const T* data;
};

namespace detail {

template <Real T>
inline T row_value(const T* x, std::size_t n, const BandView<T>* bands, std::size_t nbands,
                   std::size_t i) {
    const auto si = static_cast<std::ptrdiff_t>(i);
    const auto sn = static_cast<std::ptrdiff_t>(n);
    T t = T(0);
    for (std::size_t b = 0; b < nbands; ++b) {
        const std::ptrdiff_t col = si + bands[b].offset;
        if (col >= 0 && col < sn) t += bands[b].data[i] * x[col];
    }
    return t;
}

template <Real T>
void rows(T* y, const T* x, std::size_t n, const BandView<T>* bands, std::size_t nbands,
          std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) y[i] = row_value(x, n, bands, nbands, i);
}

/// One row of the unrolled nine-band Q1 product (interior rows only:
/// m+1 <= i < n-(m+1), where every offset stays in range).
template <Real T>
inline T q1_interior_row(const T* x, const T* const* b, std::size_t m, std::size_t i) {
    T t = T(0);
    t += b[0][i] * x[i - m - 1];
    t += b[1][i] * x[i - m];
    t += b[2][i] * x[i - m + 1];
    t += b[3][i] * x[i - 1];
    t += b[4][i] * x[i];
    t += b[5][i] * x[i + 1];
    t += b[6][i] * x[i + m - 1];
    t += b[7][i] * x[i + m];
    t += b[8][i] * x[i + m + 1];
    return t;
}

template <Real T>
void q1_rows(T* y, const T* x, std::size_t n, std::size_t m, const BandView<T>* bands,
             std::size_t lo, std::size_t hi) {
    const T* b[9];
    for (int k = 0; k < 9; ++k) b[k] = bands[k].data;
    const std::size_t interior_lo = std::min(hi, std::max(lo, m + 1));
    const std::size_t interior_hi = std::max(interior_lo, std::min(hi, n - (m + 1)));
    rows(y, x, n, bands, 9, lo, interior_lo);
    for (std::size_t i = interior_lo; i < interior_hi; ++i) y[i] = q1_interior_row(x, b, m, i);
    rows(y, x, n, bands, 9, interior_hi, hi);
}

}  // namespace detail

namespace generic {

/// Band-major traversal over the band map.
template <Real T>
void banded_matvec(T* y, const T* x, std::size_t n, const BandView<T>* bands, std::size_t nbands) {
    std::fill(y, y + n, T(0));
    for (std::size_t b = 0; b < nbands; ++b) {
        const std::ptrdiff_t k = bands[b].offset;
        const std::size_t lo = k < 0 ? static_cast<std::size_t>(-k) : 0;
        const std::size_t hi = k > 0 ? n - static_cast<std::size_t>(k) : n;
        const T* band = bands[b].data;
        for (std::size_t i = lo; i < hi; ++i)
            y[i] += band[i] * x[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + k)];
    }
}

template <Real T>
void banded_matvec_q1(T* y, const T* x, std::size_t n, std::size_t m, const BandView<T>* bands) {
    detail::q1_rows(y, x, n, m, bands, 0, n);
}

/// s = ||alpha*y + beta*A*x||_2 squared, fused single pass over rows.
template <Real T>
T residual_norm_sq(const T* y, T alpha, T beta, const T* x, std::size_t n,
                   const BandView<T>* bands, std::size_t nbands) {
    const auto plan = ReductionPlan::current();
    return chunked_sum<T>(0, n, plan.block_size, [&](std::size_t i) {
        const T t = alpha * y[i] + beta * detail::row_value(x, n, bands, nbands, i);
        return t * t;
    });
}

}  // namespace generic

namespace blocked {

/// Row-major traversal in cache-sized chunks of rows.
template <Real T>
void banded_matvec(T* y, const T* x, std::size_t n, const BandView<T>* bands, std::size_t nbands) {
    const std::size_t block = Runtime::instance().config().block_size;
    for (std::size_t b = 0; b < n; b += block)
        detail::rows(y, x, n, bands, nbands, b, std::min(n, b + block));
}

template <Real T>
void banded_matvec_q1(T* y, const T* x, std::size_t n, std::size_t m, const BandView<T>* bands) {
    const std::size_t block = Runtime::instance().config().block_size;
    for (std::size_t b = 0; b < n; b += block)
        detail::q1_rows(y, x, n, m, bands, b, std::min(n, b + block));
}

template <Real T>
T residual_norm_sq(const T* y, T alpha, T beta, const T* x, std::size_t n,
                   const BandView<T>* bands, std::size_t nbands) {
    return generic::residual_norm_sq(y, alpha, beta, x, n, bands, nbands);
}

}  // namespace blocked

namespace parallel {

template <Real T>
void banded_matvec(T* y, const T* x, std::size_t n, const BandView<T>* bands, std::size_t nbands) {
    over_ranges(n, [&](IndexRange r) { detail::rows(y, x, n, bands, nbands, r.begin, r.end); });
}

template <Real T>
void banded_matvec_q1(T* y, const T* x, std::size_t n, std::size_t m, const BandView<T>* bands) {
    over_ranges(n, [&](IndexRange r) { detail::q1_rows(y, x, n, m, bands, r.begin, r.end); });
}

template <Real T>
T residual_norm_sq(const T* y, T alpha, T beta, const T* x, std::size_t n,
                   const BandView<T>* bands, std::size_t nbands) {
    return reduce_over_workers<T>(n, [&](std::size_t i) {
        const T t = alpha * y[i] + beta * detail::row_value(x, n, bands, nbands, i);
        return t * t;
    });
}

}  // namespace parallel

}  // namespace honei::kernels
