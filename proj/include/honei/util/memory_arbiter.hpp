#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include <honei/util/block_id.hpp>
#include <honei/util/tags.hpp>

namespace honei {

enum class Access { Read, Write };

/// Residency and transfer bookkeeping for container storage blocks.
///
/// Every block starts resident at Host on first touch. Read makes the block
/// valid at the requested location, copying from the current valid location
/// if needed. Write leaves the block valid and dirty at the requested
/// location only; since all kernels are read-modify-write, a Write transfers
/// first unless the block is already valid there. A dirty block is valid at
/// exactly one location.
///
/// All operations are atomic with respect to each other.
class MemoryArbiter {
public:
    /// Returns the number of transfers (0 or 1) this acquire performed.
    std::size_t acquire(BlockId block, std::size_t bytes, Location loc, Access mode);

    /// Drops bookkeeping for a block (storage released).
    void release(BlockId block);

    bool resident_at(BlockId block, Location loc) const;
    std::optional<Location> dirty_location(BlockId block) const;

    std::uint64_t transfer_count() const;
    std::uint64_t transfer_bytes() const;

    void reset();

    /// Process-wide arbiter used by the operation layer.
    static MemoryArbiter& instance();

private:
    struct BlockState {
        bool at_host = true;
        bool at_accel = false;
        std::optional<Location> dirty;
    };

    bool valid_at(const BlockState& s, Location loc) const {
        return loc == Location::Host ? s.at_host : s.at_accel;
    }

    mutable std::mutex mutex_;
    std::unordered_map<BlockId, BlockState> blocks_;
    std::uint64_t transfers_ = 0;
    std::uint64_t bytes_ = 0;
};

}  // namespace honei
