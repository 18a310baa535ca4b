#include <honei/util/runtime.hpp>

namespace honei {

Runtime::Runtime() : config_(load_config(default_config_path())) {
    config_.validate();
    register_builtin_kernels(registry_);
}

Runtime& Runtime::instance() {
    static Runtime runtime;
    return runtime;
}

}  // namespace honei
