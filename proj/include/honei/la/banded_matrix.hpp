#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include <honei/la/dense_vector.hpp>
#include <honei/util/block_id.hpp>
#include <honei/util/exceptions.hpp>
#include <honei/util/memory_arbiter.hpp>

namespace honei {

enum class BandLayout {
    Arbitrary,  ///< any offsets in (-(n-1), n-1)
    Q1Fixed,    ///< exactly the nine offsets {0, ±1, ±(m-1), ±m, ±(m+1)}, n = m²
};

/// Nine band offsets of the Q1 tensor-product layout for an m×m point grid.
inline std::array<std::ptrdiff_t, 9> q1_band_offsets(std::size_t m) {
    const auto sm = static_cast<std::ptrdiff_t>(m);
    return {-(sm + 1), -sm, -(sm - 1), -1, 0, 1, sm - 1, sm, sm + 1};
}

/// Largest integer square root, or 0 if n is not a perfect square.
inline std::size_t exact_sqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : 0;
}

/// Square matrix stored as full-length diagonals at signed offsets.
///
/// Band at offset k stores entry (i, i+k) at slot i; slots whose column
/// index falls outside [0, n) are dead and kept at zero. Absent bands are
/// zero diagonals. Copy construction/assignment share storage (view, same
/// block id); copy() duplicates.
template <Real T>
class BandedMatrix {
public:
    using value_type = T;

    explicit BandedMatrix(std::size_t n, BandLayout layout = BandLayout::Arbitrary)
        : id_(next_block_id()) {
        if (n == 0)
            throw InvalidArgument("BandedMatrix: zero order rejected");
        if (layout == BandLayout::Q1Fixed && exact_sqrt(n) == 0)
            throw InvalidArgument("BandedMatrix: Q1Fixed layout requires a square order n = m²");
        store_ = std::shared_ptr<Store>(new Store, [id = id_](Store* s) {
            MemoryArbiter::instance().release(id);
            delete s;
        });
        store_->n = n;
        store_->layout = layout;
    }

    BandedMatrix(const BandedMatrix&) = default;             // shared view
    BandedMatrix& operator=(const BandedMatrix&) = default;  // shared view
    BandedMatrix(BandedMatrix&&) noexcept = default;
    BandedMatrix& operator=(BandedMatrix&&) noexcept = default;

    /// Deep copy with a fresh block id.
    BandedMatrix copy() const {
        BandedMatrix out(store_->n, store_->layout);
        out.store_->bands = store_->bands;
        return out;
    }

    std::size_t order() const { return store_->n; }
    BandLayout layout() const { return store_->layout; }
    BlockId block_id() const { return id_; }

    /// m with n = m² for Q1Fixed matrices.
    std::size_t grid_side() const { return exact_sqrt(store_->n); }

    std::size_t band_count() const { return store_->bands.size(); }
    std::size_t bytes() const { return band_count() * store_->n * sizeof(T); }

    /// Stores a full-length diagonal; reinsertion overwrites. Dead slots are
    /// zeroed. Throws on out-of-range offsets and, for Q1Fixed, on offsets
    /// outside the fixed nine-band set.
    void insert_band(std::ptrdiff_t offset, std::span<const T> values) {
        const std::size_t n = store_->n;
        if (values.size() != n)
            throw DimensionMismatch("insert_band", n, values.size());
        check_offset(offset);
        std::vector<T>& band = store_->bands[offset];
        band.assign(values.begin(), values.end());
        // dead slots: column index i+offset outside [0, n)
        if (offset < 0) {
            for (std::size_t i = 0; i < static_cast<std::size_t>(-offset); ++i) band[i] = T(0);
        } else {
            for (std::size_t i = n - static_cast<std::size_t>(offset); i < n; ++i) band[i] = T(0);
        }
    }

    /// nullptr if the band is absent (== zero diagonal).
    const std::vector<T>* band(std::ptrdiff_t offset) const {
        const auto it = store_->bands.find(offset);
        return it == store_->bands.end() ? nullptr : &it->second;
    }

    /// Bands in ascending offset order.
    const std::map<std::ptrdiff_t, std::vector<T>>& bands() const { return store_->bands; }

    /// True when all nine Q1 bands are stored (enables the unrolled kernel).
    bool has_full_q1_bands() const {
        if (store_->layout != BandLayout::Q1Fixed) return false;
        const std::size_t m = grid_side();
        if (m < 3) return false;  // offsets collapse below m = 3
        for (const auto off : q1_band_offsets(m))
            if (!store_->bands.contains(off)) return false;
        return true;
    }

private:
    struct Store {
        std::size_t n = 0;
        BandLayout layout = BandLayout::Arbitrary;
        std::map<std::ptrdiff_t, std::vector<T>> bands;
    };

    void check_offset(std::ptrdiff_t offset) const {
        const auto n = static_cast<std::ptrdiff_t>(store_->n);
        if (offset <= -n || offset >= n)
            throw InvalidArgument("insert_band: offset " + std::to_string(offset) +
                                  " out of range for order " + std::to_string(store_->n));
        if (store_->layout == BandLayout::Q1Fixed) {
            const auto allowed = q1_band_offsets(grid_side());
            for (const auto off : allowed)
                if (off == offset) return;
            throw InvalidArgument("insert_band: offset " + std::to_string(offset) +
                                  " not admitted by the Q1Fixed layout");
        }
    }

    std::shared_ptr<Store> store_;
    BlockId id_;
};

}  // namespace honei
