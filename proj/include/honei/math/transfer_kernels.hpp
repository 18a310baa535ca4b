#pragma once

#include <cstddef>

#include <honei/la/dense_vector.hpp>

// Grid transfer loops on tensor-product grids of m×m points.

namespace honei::kernels::generic {

/// Bilinear interpolation from an mc×mc grid to the (2mc-1)×(2mc-1) grid:
/// coincident nodes are copied, edge midpoints average two parents, cell
/// centers average four.
template <Real T>
void prolongate(T* fine, const T* coarse, std::size_t mc) {
    const std::size_t mf = 2 * mc - 1;
    for (std::size_t jf = 0; jf < mf; ++jf) {
        const std::size_t jc = jf / 2;
        const bool jodd = (jf % 2) != 0;
        for (std::size_t ifx = 0; ifx < mf; ++ifx) {
            const std::size_t ic = ifx / 2;
            const bool iodd = (ifx % 2) != 0;
            const std::size_t c = jc * mc + ic;
            T value;
            if (!jodd && !iodd) {
                value = coarse[c];
            } else if (!jodd) {
                value = T(0.5) * (coarse[c] + coarse[c + 1]);
            } else if (!iodd) {
                value = T(0.5) * (coarse[c] + coarse[c + mc]);
            } else {
                value = T(0.25) * (coarse[c] + coarse[c + 1] + coarse[c + mc] + coarse[c + mc + 1]);
            }
            fine[jf * mf + ifx] = value;
        }
    }
}

/// Full weighting from an mf×mf grid (mf odd) to the (mf+1)/2 grid: interior
/// coarse nodes apply the stencil (1/16)[1 2 1; 2 4 2; 1 2 1], boundary
/// nodes inject the coincident fine value.
template <Real T>
void restrict_full_weighting(T* coarse, const T* fine, std::size_t mf) {
    const std::size_t mc = (mf + 1) / 2;
    for (std::size_t jc = 0; jc < mc; ++jc) {
        for (std::size_t ic = 0; ic < mc; ++ic) {
            const std::size_t f = (2 * jc) * mf + 2 * ic;
            T value;
            if (jc == 0 || ic == 0 || jc == mc - 1 || ic == mc - 1) {
                value = fine[f];
            } else {
                const T edges = fine[f - 1] + fine[f + 1] + fine[f - mf] + fine[f + mf];
                const T corners = fine[f - mf - 1] + fine[f - mf + 1] + fine[f + mf - 1] +
                                  fine[f + mf + 1];
                value = (T(4) * fine[f] + T(2) * edges + corners) / T(16);
            }
            coarse[jc * mc + ic] = value;
        }
    }
}

}  // namespace honei::kernels::generic
