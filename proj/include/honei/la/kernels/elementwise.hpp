#pragma once

#include <algorithm>
#include <cstddef>

#include <honei/la/dense_vector.hpp>
#include <honei/util/runtime.hpp>
#include <honei/util/thread_pool.hpp>

// Elementwise kernels. Every variant evaluates the identical per-element
// expression, so results are bit-identical across backends (FP contraction
// is disabled project-wide).

namespace honei::kernels {

namespace generic {

template <Real T>
void axpy(T* y, const T* x, T alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

template <Real T>
void scaled_sum(T* r, const T* a, const T* b, T alpha, T beta, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) r[i] = alpha * a[i] + beta * b[i];
}

template <Real T>
void sum(T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] = a[i] + b[i];
}

template <Real T>
void difference(T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] = a[i] - b[i];
}

template <Real T>
void product(T* a, const T* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] = a[i] * b[i];
}

template <Real T>
void scale(T* a, T alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] = alpha * a[i];
}

template <Real To, Real From>
void convert(To* dst, const From* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<To>(src[i]);
}

template <Real T>
void jacobi_update(T* x, const T* r, const T* diag, T omega, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] + omega * (r[i] / diag[i]);
}

}  // namespace generic

namespace blocked {

// Cache-blocked with a 4-way unrolled inner loop. Per-element arithmetic is
// unchanged, so the output matches the generic kernel bit for bit.

template <Real T, typename Body>
void for_each_block(std::size_t n, Body body) {
    const std::size_t block = Runtime::instance().config().block_size;
    for (std::size_t b = 0; b < n; b += block) body(b, std::min(n, b + block));
}

template <Real T>
void axpy(T* y, const T* x, T alpha, std::size_t n) {
    for_each_block<T>(n, [&](std::size_t lo, std::size_t hi) {
        std::size_t i = lo;
        for (; i + 4 <= hi; i += 4) {
            y[i] = y[i] + alpha * x[i];
            y[i + 1] = y[i + 1] + alpha * x[i + 1];
            y[i + 2] = y[i + 2] + alpha * x[i + 2];
            y[i + 3] = y[i + 3] + alpha * x[i + 3];
        }
        for (; i < hi; ++i) y[i] = y[i] + alpha * x[i];
    });
}

template <Real T>
void scaled_sum(T* r, const T* a, const T* b, T alpha, T beta, std::size_t n) {
    for_each_block<T>(n, [&](std::size_t lo, std::size_t hi) {
        std::size_t i = lo;
        for (; i + 4 <= hi; i += 4) {
            r[i] = alpha * a[i] + beta * b[i];
            r[i + 1] = alpha * a[i + 1] + beta * b[i + 1];
            r[i + 2] = alpha * a[i + 2] + beta * b[i + 2];
            r[i + 3] = alpha * a[i + 3] + beta * b[i + 3];
        }
        for (; i < hi; ++i) r[i] = alpha * a[i] + beta * b[i];
    });
}

template <Real T>
void sum(T* a, const T* b, std::size_t n) {
    for_each_block<T>(n, [&](std::size_t lo, std::size_t hi) {
        generic::sum(a + lo, b + lo, hi - lo);
    });
}

template <Real T>
void difference(T* a, const T* b, std::size_t n) {
    for_each_block<T>(n, [&](std::size_t lo, std::size_t hi) {
        generic::difference(a + lo, b + lo, hi - lo);
    });
}

template <Real T>
void product(T* a, const T* b, std::size_t n) {
    for_each_block<T>(n, [&](std::size_t lo, std::size_t hi) {
        generic::product(a + lo, b + lo, hi - lo);
    });
}

template <Real T>
void scale(T* a, T alpha, std::size_t n) {
    for_each_block<T>(n, [&](std::size_t lo, std::size_t hi) {
        generic::scale(a + lo, alpha, hi - lo);
    });
}

}  // namespace blocked

namespace parallel {

// Static partition of [0, n) into worker_count contiguous ranges; each
// worker runs the generic loop on its disjoint range.

template <typename Body>
void over_ranges(std::size_t n, Body body) {
    const std::size_t workers = Runtime::instance().config().worker_count;
    parallel_run(workers, [&](std::size_t w) {
        const IndexRange range = partition_range(n, workers, w);
        if (range.size() > 0) body(range);
    });
}

template <Real T>
void axpy(T* y, const T* x, T alpha, std::size_t n) {
    over_ranges(n, [&](IndexRange r) { generic::axpy(y + r.begin, x + r.begin, alpha, r.size()); });
}

template <Real T>
void scaled_sum(T* r, const T* a, const T* b, T alpha, T beta, std::size_t n) {
    over_ranges(n, [&](IndexRange g) {
        generic::scaled_sum(r + g.begin, a + g.begin, b + g.begin, alpha, beta, g.size());
    });
}

template <Real T>
void sum(T* a, const T* b, std::size_t n) {
    over_ranges(n, [&](IndexRange r) { generic::sum(a + r.begin, b + r.begin, r.size()); });
}

template <Real T>
void difference(T* a, const T* b, std::size_t n) {
    over_ranges(n, [&](IndexRange r) { generic::difference(a + r.begin, b + r.begin, r.size()); });
}

template <Real T>
void product(T* a, const T* b, std::size_t n) {
    over_ranges(n, [&](IndexRange r) { generic::product(a + r.begin, b + r.begin, r.size()); });
}

template <Real T>
void scale(T* a, T alpha, std::size_t n) {
    over_ranges(n, [&](IndexRange r) { generic::scale(a + r.begin, alpha, r.size()); });
}

template <Real T>
void jacobi_update(T* x, const T* r, const T* diag, T omega, std::size_t n) {
    over_ranges(n, [&](IndexRange g) {
        generic::jacobi_update(x + g.begin, r + g.begin, diag + g.begin, omega, g.size());
    });
}

}  // namespace parallel

}  // namespace honei::kernels
