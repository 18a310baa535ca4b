#pragma once

#include <any>
#include <array>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <typeindex>
#include <unordered_map>

#include <honei/util/exceptions.hpp>
#include <honei/util/tags.hpp>

namespace honei {

/// Kernel implementations keyed by (name, signature, backend tag).
///
/// Lookup falls back to the Generic entry when a tag has no specialisation;
/// an unregistered kernel name (or signature) is an error. Reentrant.
class KernelRegistry {
public:
    template <typename Sig>
    void add(const std::string& name, BackendTag tag, std::function<Sig> fn) {
        std::unique_lock lock(mutex_);
        table_[name][std::type_index(typeid(Sig))]
            .per_tag[static_cast<std::size_t>(tag)] = std::move(fn);
    }

    template <typename Sig>
    std::function<Sig> lookup(std::string_view name, BackendTag tag) const {
        std::shared_lock lock(mutex_);
        const auto it = table_.find(std::string(name));
        if (it == table_.end())
            throw UnknownKernel("no kernel registered under '" + std::string(name) + "'");
        const auto sig_it = it->second.find(std::type_index(typeid(Sig)));
        if (sig_it == it->second.end())
            throw UnknownKernel("kernel '" + std::string(name) +
                                "' is not registered for the requested signature");
        const Entry& entry = sig_it->second;
        const std::any& specialised = entry.per_tag[static_cast<std::size_t>(tag)];
        if (specialised.has_value())
            return std::any_cast<std::function<Sig>>(specialised);
        const std::any& generic = entry.per_tag[static_cast<std::size_t>(BackendTag::Generic)];
        if (generic.has_value())
            return std::any_cast<std::function<Sig>>(generic);
        throw UnknownKernel("kernel '" + std::string(name) +
                            "' has neither a specialisation for tag '" +
                            std::string(to_string(tag)) + "' nor a generic fallback");
    }

    bool contains(std::string_view name) const {
        std::shared_lock lock(mutex_);
        return table_.find(std::string(name)) != table_.end();
    }

private:
    struct Entry {
        std::array<std::any, backend_count> per_tag;
    };

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::unordered_map<std::type_index, Entry>> table_;
};

}  // namespace honei
