#pragma once

#include <atomic>
#include <cstdint>

namespace honei {

/// Identity token of a container's storage block, used by the memory arbiter.
/// Deep copies receive a fresh id, views share the id of their source.
using BlockId = std::uint64_t;

inline BlockId next_block_id() {
    static std::atomic<BlockId> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace honei
