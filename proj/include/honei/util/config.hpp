#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <honei/util/tags.hpp>

namespace honei {

/// Runtime parameters, loaded from a config file of one `key=value` per line
/// ('#' starts a comment). Recognized keys: worker_count, block_size,
/// default_backend.
struct RuntimeConfig {
    std::size_t worker_count = 1;
    std::size_t block_size = 4096;
    BackendTag default_backend = BackendTag::Generic;
    std::string source_path;                 ///< file the config came from; empty for defaults
    std::vector<std::string> warnings;       ///< unknown keys encountered while parsing

    static RuntimeConfig defaults();

    /// Throws InvalidArgument if worker_count < 1 or block_size is not a power of two >= 1.
    void validate() const;
};

/// Loads the config from `path`. A missing file yields defaults; malformed
/// lines raise ConfigParseError naming the line number.
RuntimeConfig load_config(const std::string& path);

/// $HONEI_CONFIG if set, otherwise ".honeirc" in the working directory.
std::string default_config_path();

}  // namespace honei
