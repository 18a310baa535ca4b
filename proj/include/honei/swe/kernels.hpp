#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <honei/la/dense_vector.hpp>
#include <honei/la/kernels/elementwise.hpp>
#include <honei/util/thread_pool.hpp>

// Pointwise shallow-water kernels: physical fluxes, dry-state clamping,
// bed source term and wave-speed scan. Cells with depth below eps are dry:
// their velocities (and momentum contributions to the fluxes) are zero.

namespace honei::kernels {

namespace generic {

template <Real T>
void swe_fluxes(T* v1, T* v2, T* v3, T* w1, T* w2, T* w3, const T* h, const T* hu, const T* hv,
                T gravity, T eps, std::size_t n) {
    const T half_g = T(0.5) * gravity;
    for (std::size_t i = 0; i < n; ++i) {
        const T d = h[i];
        const bool dry = d < eps;
        const T mu = dry ? T(0) : hu[i];
        const T mv = dry ? T(0) : hv[i];
        const T vel1 = dry ? T(0) : hu[i] / d;
        const T vel2 = dry ? T(0) : hv[i] / d;
        const T pressure = half_g * d * d;
        v1[i] = mu;
        v2[i] = mu * vel1 + pressure;
        v3[i] = mu * vel2;
        w1[i] = mv;
        w2[i] = mu * vel2;
        w3[i] = mv * vel2 + pressure;
    }
}

template <Real T>
void swe_dry_clamp(T* h, T* hu, T* hv, T eps, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (h[i] < T(0)) h[i] = T(0);
        if (h[i] < eps) {
            hu[i] = T(0);
            hv[i] = T(0);
        }
    }
}

/// s2 = -g*h*db/dx, s3 = -g*h*db/dy; central differences, one-sided at walls.
template <Real T>
void swe_source(T* s2, T* s3, const T* h, const T* bed, T gravity, T dx, T dy, std::size_t mx,
                std::size_t my) {
    for (std::size_t iy = 0; iy < my; ++iy) {
        for (std::size_t ix = 0; ix < mx; ++ix) {
            const std::size_t i = iy * mx + ix;
            T dbdx;
            if (ix == 0) dbdx = (bed[i + 1] - bed[i]) / dx;
            else if (ix == mx - 1) dbdx = (bed[i] - bed[i - 1]) / dx;
            else dbdx = (bed[i + 1] - bed[i - 1]) / (T(2) * dx);
            T dbdy;
            if (iy == 0) dbdy = (bed[i + mx] - bed[i]) / dy;
            else if (iy == my - 1) dbdy = (bed[i] - bed[i - mx]) / dy;
            else dbdy = (bed[i + mx] - bed[i - mx]) / (T(2) * dy);
            s2[i] = -gravity * h[i] * dbdx;
            s3[i] = -gravity * h[i] * dbdy;
        }
    }
}

/// Largest |velocity| + sqrt(g*h) per direction over all cells.
template <Real T>
void swe_wave_speeds(const T* h, const T* hu, const T* hv, T gravity, T eps, std::size_t n,
                     double* lambda_x, double* lambda_y) {
    double lx = 0.0, ly = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::max(0.0, static_cast<double>(h[i]));
        const double c = std::sqrt(static_cast<double>(gravity) * d);
        const bool dry = h[i] < eps;
        const double u1 = dry ? 0.0 : static_cast<double>(hu[i]) / d;
        const double u2 = dry ? 0.0 : static_cast<double>(hv[i]) / d;
        lx = std::max(lx, std::abs(u1) + c);
        ly = std::max(ly, std::abs(u2) + c);
    }
    *lambda_x = lx;
    *lambda_y = ly;
}

}  // namespace generic

namespace parallel {

template <Real T>
void swe_fluxes(T* v1, T* v2, T* v3, T* w1, T* w2, T* w3, const T* h, const T* hu, const T* hv,
                T gravity, T eps, std::size_t n) {
    over_ranges(n, [&](IndexRange r) {
        const std::size_t o = r.begin;
        generic::swe_fluxes(v1 + o, v2 + o, v3 + o, w1 + o, w2 + o, w3 + o, h + o, hu + o, hv + o,
                            gravity, eps, r.size());
    });
}

template <Real T>
void swe_dry_clamp(T* h, T* hu, T* hv, T eps, std::size_t n) {
    over_ranges(n, [&](IndexRange r) {
        generic::swe_dry_clamp(h + r.begin, hu + r.begin, hv + r.begin, eps, r.size());
    });
}

}  // namespace parallel

/// Ghost-mirror wall closure: adds the stencil contributions that the banded
/// operators drop at domain edges. Reflective walls copy the depth and the
/// tangential momentum and mirror the normal momentum, which flips the sign
/// of the odd flux components; the per-component signs are passed in.
/// The resulting wall mass flux is exactly zero.
template <Real T>
void swe_add_boundary_terms(T* inc, const T* u, const T* v, const T* w, T cx, T cy, T lxcx, T lycy,
                            T sign_v, T sign_qx, T sign_w, T sign_qy, std::size_t mx,
                            std::size_t my) {
    for (std::size_t iy = 0; iy < my; ++iy) {
        const std::size_t left = iy * mx;
        const std::size_t right = left + mx - 1;
        inc[left] += cx * (sign_v * v[left]) + lxcx * (sign_qx * u[left]);
        inc[right] += -cx * (sign_v * v[right]) + lxcx * (sign_qx * u[right]);
    }
    for (std::size_t ix = 0; ix < mx; ++ix) {
        const std::size_t bottom = ix;
        const std::size_t top = (my - 1) * mx + ix;
        inc[bottom] += cy * (sign_w * w[bottom]) + lycy * (sign_qy * u[bottom]);
        inc[top] += -cy * (sign_w * w[top]) + lycy * (sign_qy * u[top]);
    }
}

}  // namespace honei::kernels
