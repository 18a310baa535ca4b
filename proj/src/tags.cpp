#include <honei/util/tags.hpp>

#include <honei/util/exceptions.hpp>

namespace honei {

std::string_view to_string(BackendTag tag) {
    switch (tag) {
        case BackendTag::Generic: return "generic";
        case BackendTag::Blocked: return "blocked";
        case BackendTag::Parallel: return "parallel";
    }
    return "generic";
}

std::string_view to_string(Location loc) {
    return loc == Location::Host ? "host" : "accel";
}

BackendTag parse_backend_tag(std::string_view name) {
    if (name == "generic") return BackendTag::Generic;
    if (name == "blocked") return BackendTag::Blocked;
    if (name == "parallel") return BackendTag::Parallel;
    throw UnknownBackend(std::string(name));
}

}  // namespace honei
