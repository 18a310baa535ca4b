#pragma once

#include <cstddef>
#include <functional>

namespace honei {

struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
};

/// Contiguous slice `index` of [0, n) split into `parts` near-equal pieces.
IndexRange partition_range(std::size_t n, std::size_t parts, std::size_t index);

/// Runs body(0), ..., body(workers - 1) on `workers` threads and joins them
/// all before returning. With one worker the body runs on the calling thread.
/// The first exception thrown by any worker (lowest index) is rethrown.
void parallel_run(std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace honei
