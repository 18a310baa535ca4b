#pragma once

#include <honei/la/kernel_registry.hpp>
#include <honei/util/config.hpp>
#include <honei/util/memory_arbiter.hpp>

namespace honei {

/// Process-wide runtime state: configuration, kernel registry and the memory
/// arbiter. The configuration is loaded from $HONEI_CONFIG / ./.honeirc on
/// first use and can be replaced programmatically.
class Runtime {
public:
    static Runtime& instance();

    const RuntimeConfig& config() const { return config_; }
    void set_config(RuntimeConfig cfg) {
        cfg.validate();
        config_ = std::move(cfg);
    }

    KernelRegistry& registry() { return registry_; }
    MemoryArbiter& arbiter() { return MemoryArbiter::instance(); }

private:
    Runtime();

    RuntimeConfig config_;
    KernelRegistry registry_;
};

/// Registers the built-in kernels (float and double instantiations) with a
/// registry. Called once by the Runtime constructor.
void register_builtin_kernels(KernelRegistry& registry);

}  // namespace honei
