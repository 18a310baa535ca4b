#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace honei {

/// Selects which kernel family executes an operation.
///
/// Generic is the portable reference implementation and is always available.
/// Blocked runs cache-blocked, unrolled loops; Parallel partitions index
/// ranges over worker threads and models an accelerator memory space.
enum class BackendTag : unsigned {
    Generic = 0,
    Blocked = 1,
    Parallel = 2,
};

inline constexpr std::size_t backend_count = 3;

/// Memory spaces tracked by the arbiter. Accel is a simulated accelerator
/// space driven by the Parallel backend.
enum class Location : unsigned {
    Host = 0,
    Accel = 1,
};

std::string_view to_string(BackendTag tag);
std::string_view to_string(Location loc);

/// Parses "generic" / "blocked" / "parallel"; throws UnknownBackend otherwise.
BackendTag parse_backend_tag(std::string_view name);

/// The memory space a backend's kernels read and write.
constexpr Location backend_location(BackendTag tag) {
    return tag == BackendTag::Parallel ? Location::Accel : Location::Host;
}

}  // namespace honei
