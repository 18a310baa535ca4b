#include <honei/util/memory_arbiter.hpp>

namespace honei {

std::size_t MemoryArbiter::acquire(BlockId block, std::size_t bytes, Location loc, Access mode) {
    std::lock_guard lock(mutex_);
    BlockState& s = blocks_[block];  // first touch: resident at Host, clean

    std::size_t performed = 0;
    if (!valid_at(s, loc)) {
        ++transfers_;
        bytes_ += bytes;
        performed = 1;
        if (loc == Location::Host) s.at_host = true;
        else s.at_accel = true;
        s.dirty.reset();  // both copies agree after the transfer
    }
    if (mode == Access::Write) {
        s.at_host = (loc == Location::Host);
        s.at_accel = (loc == Location::Accel);
        s.dirty = loc;
    }
    return performed;
}

void MemoryArbiter::release(BlockId block) {
    std::lock_guard lock(mutex_);
    blocks_.erase(block);
}

bool MemoryArbiter::resident_at(BlockId block, Location loc) const {
    std::lock_guard lock(mutex_);
    const auto it = blocks_.find(block);
    if (it == blocks_.end()) return loc == Location::Host;  // untouched blocks live at Host
    return valid_at(it->second, loc);
}

std::optional<Location> MemoryArbiter::dirty_location(BlockId block) const {
    std::lock_guard lock(mutex_);
    const auto it = blocks_.find(block);
    return it == blocks_.end() ? std::nullopt : it->second.dirty;
}

std::uint64_t MemoryArbiter::transfer_count() const {
    std::lock_guard lock(mutex_);
    return transfers_;
}

std::uint64_t MemoryArbiter::transfer_bytes() const {
    std::lock_guard lock(mutex_);
    return bytes_;
}

void MemoryArbiter::reset() {
    std::lock_guard lock(mutex_);
    blocks_.clear();
    transfers_ = 0;
    bytes_ = 0;
}

MemoryArbiter& MemoryArbiter::instance() {
    static MemoryArbiter arbiter;
    return arbiter;
}

}  // namespace honei
