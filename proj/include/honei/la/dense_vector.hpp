#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <memory>

#include <honei/util/block_id.hpp>
#include <honei/util/exceptions.hpp>
#include <honei/util/memory_arbiter.hpp>

namespace honei {

template <typename T>
concept Real = std::floating_point<T>;

/// Contiguous vector of real values with explicit-copy semantics: copy
/// construction and assignment share the storage (a view, same block id);
/// only copy() duplicates the data and mints a fresh block id.
template <Real T>
class DenseVector {
public:
    using value_type = T;

    DenseVector(std::size_t len, T fill) : len_(len), id_(next_block_id()) {
        if (len == 0)
            throw InvalidArgument("DenseVector: zero length rejected");
        // the arbiter entry dies with the last view of this storage
        data_ = std::shared_ptr<T[]>(new T[len], [id = id_](T* p) {
            MemoryArbiter::instance().release(id);
            delete[] p;
        });
        for (std::size_t i = 0; i < len; ++i) data_[i] = fill;
    }

    DenseVector(const DenseVector&) = default;             // shared view
    DenseVector& operator=(const DenseVector&) = default;  // shared view
    DenseVector(DenseVector&&) noexcept = default;
    DenseVector& operator=(DenseVector&&) noexcept = default;

    /// Deep copy with a fresh block id.
    DenseVector copy() const {
        DenseVector out(len_, T(0));
        const T* src = data_.get();
        T* dst = out.data_.get();
        for (std::size_t i = 0; i < len_; ++i) dst[i] = src[i];
        return out;
    }

    void fill(T value) {
        T* p = data_.get();
        for (std::size_t i = 0; i < len_; ++i) p[i] = value;
    }

    std::size_t size() const { return len_; }
    std::size_t bytes() const { return len_ * sizeof(T); }
    BlockId block_id() const { return id_; }

    T* data() { return data_.get(); }
    const T* data() const { return data_.get(); }

    T& operator[](std::size_t i) {
        assert(i < len_);
        return data_[i];
    }
    const T& operator[](std::size_t i) const {
        assert(i < len_);
        return data_[i];
    }

    bool shares_storage_with(const DenseVector& other) const {
        return data_ == other.data_;
    }

private:
    std::shared_ptr<T[]> data_;
    std::size_t len_;
    BlockId id_;
};

/// Spec-level constructor alias: all elements equal `fill`, fresh block id.
template <Real T>
DenseVector<T> create_dense_vector(std::size_t len, T fill) {
    return DenseVector<T>(len, fill);
}

}  // namespace honei
