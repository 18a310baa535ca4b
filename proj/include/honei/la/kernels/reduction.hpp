#pragma once

#include <cstddef>
#include <vector>

#include <honei/la/dense_vector.hpp>
#include <honei/util/runtime.hpp>
#include <honei/util/thread_pool.hpp>

// Reductions follow a fixed plan: [0, n) is cut into ceil(n/block_size)
// chunks, each chunk is summed sequentially, and the partial sums are
// combined left to right. The Parallel variant additionally splits the index
// range into per-worker slices whose partials are combined in worker order.
// This makes every backend's reduction run-to-run deterministic for fixed
// (n, block_size, worker_count).

namespace honei::kernels {

/// Fixed blocking of [0, n) used by dot/norm reductions.
struct ReductionPlan {
    std::size_t block_size;

    static ReductionPlan current() {
        return {Runtime::instance().config().block_size};
    }
};

template <Real T, typename Term>
T chunked_sum(std::size_t lo, std::size_t hi, std::size_t block, Term term) {
    T total = T(0);
    for (std::size_t b = lo; b < hi; b += block) {
        const std::size_t end = b + block < hi ? b + block : hi;
        T partial = T(0);
        for (std::size_t i = b; i < end; ++i) partial += term(i);
        total += partial;
    }
    return total;
}

namespace generic {

template <Real T>
T dot(const T* x, const T* y, std::size_t n) {
    const auto plan = ReductionPlan::current();
    return chunked_sum<T>(0, n, plan.block_size, [&](std::size_t i) { return x[i] * y[i]; });
}

}  // namespace generic

namespace blocked {

template <Real T>
T dot(const T* x, const T* y, std::size_t n) {
    // Same plan and accumulation order as the generic kernel; the inner loop
    // is unrolled with a single running accumulator so values stay identical.
    const auto plan = ReductionPlan::current();
    T total = T(0);
    for (std::size_t b = 0; b < n; b += plan.block_size) {
        const std::size_t end = std::min(n, b + plan.block_size);
        T partial = T(0);
        std::size_t i = b;
        for (; i + 4 <= end; i += 4) {
            partial += x[i] * y[i];
            partial += x[i + 1] * y[i + 1];
            partial += x[i + 2] * y[i + 2];
            partial += x[i + 3] * y[i + 3];
        }
        for (; i < end; ++i) partial += x[i] * y[i];
        total += partial;
    }
    return total;
}

}  // namespace blocked

namespace parallel {

template <Real T, typename Term>
T reduce_over_workers(std::size_t n, Term term) {
    const std::size_t workers = Runtime::instance().config().worker_count;
    const auto plan = ReductionPlan::current();
    std::vector<T> partials(workers, T(0));
    parallel_run(workers, [&](std::size_t w) {
        const IndexRange range = partition_range(n, workers, w);
        partials[w] = chunked_sum<T>(range.begin, range.end, plan.block_size, term);
    });
    T total = T(0);
    for (const T p : partials) total += p;  // worker-index order
    return total;
}

template <Real T>
T dot(const T* x, const T* y, std::size_t n) {
    return reduce_over_workers<T>(n, [&](std::size_t i) { return x[i] * y[i]; });
}

}  // namespace parallel

}  // namespace honei::kernels
