#pragma once

#include <utility>

#include <honei/la/kernel_registry.hpp>
#include <honei/util/runtime.hpp>

namespace honei {

/// Runs the kernel registered under `name` on the backend selected by `tag`,
/// falling back to the Generic implementation when the tag has none.
template <typename Sig, typename... Args>
decltype(auto) dispatch(std::string_view name, BackendTag tag, Args&&... args) {
    auto fn = Runtime::instance().registry().lookup<Sig>(name, tag);
    return fn(std::forward<Args>(args)...);
}

}  // namespace honei
