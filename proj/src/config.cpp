#include <honei/util/config.hpp>

#include <cstdlib>
#include <fstream>
#include <thread>

#include <honei/util/exceptions.hpp>

namespace honei {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& path, std::size_t line, const std::string& value) {
    std::size_t pos = 0;
    unsigned long long parsed = 0;
    try {
        parsed = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw ConfigParseError(path, line, "expected a number, got '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigParseError(path, line, "expected a number, got '" + value + "'");
    return static_cast<std::size_t>(parsed);
}

bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

}  // namespace

RuntimeConfig RuntimeConfig::defaults() {
    RuntimeConfig cfg;
    cfg.worker_count = std::max(1u, std::thread::hardware_concurrency());
    cfg.block_size = 4096;
    cfg.default_backend = BackendTag::Generic;
    return cfg;
}

void RuntimeConfig::validate() const {
    if (worker_count < 1)
        throw InvalidArgument("worker_count must be >= 1");
    if (!is_power_of_two(block_size))
        throw InvalidArgument("block_size must be a power of two >= 1");
}

RuntimeConfig load_config(const std::string& path) {
    RuntimeConfig cfg = RuntimeConfig::defaults();
    std::ifstream in(path);
    if (!in)
        return cfg;  // missing file: defaults
    cfg.source_path = path;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(path, lineno, "expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigParseError(path, lineno, "empty key");

        if (key == "worker_count") {
            cfg.worker_count = parse_count(path, lineno, value);
            if (cfg.worker_count < 1)
                throw ConfigParseError(path, lineno, "worker_count must be >= 1");
        } else if (key == "block_size") {
            cfg.block_size = parse_count(path, lineno, value);
            if (!is_power_of_two(cfg.block_size))
                throw ConfigParseError(path, lineno, "block_size must be a power of two >= 1");
        } else if (key == "default_backend") {
            try {
                cfg.default_backend = parse_backend_tag(value);
            } catch (const UnknownBackend&) {
                throw ConfigParseError(path, lineno, "unknown backend '" + value + "'");
            }
        } else {
            cfg.warnings.push_back("unknown key '" + key + "' ignored (line " +
                                   std::to_string(lineno) + ")");
        }
    }
    return cfg;
}

std::string default_config_path() {
    if (const char* env = std::getenv("HONEI_CONFIG"); env && *env)
        return env;
    return ".honeirc";
}

}  // namespace honei
