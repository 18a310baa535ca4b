#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include <honei/swe/state.hpp>

// Direct stencil re-implementation of the relaxation update with explicit
// ghost-mirror indexing, independent of the banded-operator path. Double
// precision only; used to validate the linear-combination predictor.

namespace honei::testing {

struct SweOracle {
    std::size_t mx = 0, my = 0;
    double dx = 0, dy = 0, dt = 0, gravity = 0, eps = 0, lambda_x = 0, lambda_y = 0;

    // per-component ghost signs: {x-wall flux, x-wall state, y-wall flux, y-wall state}
    static constexpr double sv[3] = {-1.0, 1.0, -1.0};
    static constexpr double sqx[3] = {1.0, -1.0, 1.0};
    static constexpr double sw[3] = {-1.0, -1.0, 1.0};
    static constexpr double sqy[3] = {1.0, 1.0, -1.0};

    using Field = std::array<std::vector<double>, 3>;

    Field fluxes_x(const Field& u) const {
        Field v{std::vector<double>(mx * my), std::vector<double>(mx * my),
                std::vector<double>(mx * my)};
        for (std::size_t i = 0; i < mx * my; ++i) {
            const double h = u[0][i];
            const bool dry = h < eps;
            const double mu = dry ? 0.0 : u[1][i];
            const double u1 = dry ? 0.0 : u[1][i] / h;
            const double u2 = dry ? 0.0 : u[2][i] / h;
            v[0][i] = mu;
            v[1][i] = mu * u1 + 0.5 * gravity * h * h;
            v[2][i] = mu * u2;
        }
        return v;
    }

    Field fluxes_y(const Field& u) const {
        Field w{std::vector<double>(mx * my), std::vector<double>(mx * my),
                std::vector<double>(mx * my)};
        for (std::size_t i = 0; i < mx * my; ++i) {
            const double h = u[0][i];
            const bool dry = h < eps;
            const double mu = dry ? 0.0 : u[1][i];
            const double mv = dry ? 0.0 : u[2][i];
            const double u2 = dry ? 0.0 : u[2][i] / h;
            w[0][i] = mv;
            w[1][i] = mu * u2;
            w[2][i] = mv * u2 + 0.5 * gravity * h * h;
        }
        return w;
    }

    double at_x(const std::vector<double>& a, double sign, std::ptrdiff_t ix, std::size_t iy) const {
        if (ix < 0) return sign * a[iy * mx];
        if (ix >= static_cast<std::ptrdiff_t>(mx)) return sign * a[iy * mx + mx - 1];
        return a[iy * mx + static_cast<std::size_t>(ix)];
    }

    double at_y(const std::vector<double>& a, double sign, std::size_t ix, std::ptrdiff_t iy) const {
        if (iy < 0) return sign * a[ix];
        if (iy >= static_cast<std::ptrdiff_t>(my)) return sign * a[(my - 1) * mx + ix];
        return a[static_cast<std::size_t>(iy) * mx + ix];
    }

    /// out = base + scale * increment(eval); no clamp.
    Field stage(const Field& base, const Field& eval, const std::vector<double>& bed,
                double scale) const {
        const Field v = fluxes_x(eval);
        const Field w = fluxes_y(eval);
        const double cx = dt / (2.0 * dx);
        const double cy = dt / (2.0 * dy);

        Field out{std::vector<double>(mx * my), std::vector<double>(mx * my),
                  std::vector<double>(mx * my)};
        for (std::size_t iy = 0; iy < my; ++iy) {
            for (std::size_t ix = 0; ix < mx; ++ix) {
                const std::size_t i = iy * mx + ix;
                const auto sx = static_cast<std::ptrdiff_t>(ix);
                const auto sy = static_cast<std::ptrdiff_t>(iy);

                double dbdx;
                if (ix == 0) dbdx = (bed[i + 1] - bed[i]) / dx;
                else if (ix == mx - 1) dbdx = (bed[i] - bed[i - 1]) / dx;
                else dbdx = (bed[i + 1] - bed[i - 1]) / (2.0 * dx);
                double dbdy;
                if (iy == 0) dbdy = (bed[i + mx] - bed[i]) / dy;
                else if (iy == my - 1) dbdy = (bed[i] - bed[i - mx]) / dy;
                else dbdy = (bed[i + mx] - bed[i - mx]) / (2.0 * dy);
                const std::array<double, 3> source = {0.0, -gravity * eval[0][i] * dbdx,
                                                      -gravity * eval[0][i] * dbdy};

                for (int c = 0; c < 3; ++c) {
                    const double inc =
                        cx * (at_x(v[c], sv[c], sx - 1, iy) - at_x(v[c], sv[c], sx + 1, iy)) +
                        lambda_x * cx *
                            (at_x(eval[c], sqx[c], sx - 1, iy) - 2.0 * eval[c][i] +
                             at_x(eval[c], sqx[c], sx + 1, iy)) +
                        cy * (at_y(w[c], sw[c], ix, sy - 1) - at_y(w[c], sw[c], ix, sy + 1)) +
                        lambda_y * cy *
                            (at_y(eval[c], sqy[c], ix, sy - 1) - 2.0 * eval[c][i] +
                             at_y(eval[c], sqy[c], ix, sy + 1)) +
                        dt * source[c];
                    out[c][i] = base[c][i] + scale * inc;
                }
            }
        }
        return out;
    }

    void clamp(Field& u) const {
        for (std::size_t i = 0; i < mx * my; ++i) {
            if (u[0][i] < 0.0) u[0][i] = 0.0;
            if (u[0][i] < eps) {
                u[1][i] = 0.0;
                u[2][i] = 0.0;
            }
        }
    }

    Field step(const Field& u, const std::vector<double>& bed) const {
        Field half = stage(u, u, bed, 0.5);
        clamp(half);
        Field next = stage(u, half, bed, 1.0);
        clamp(next);
        return next;
    }
};

template <Real T>
SweOracle::Field to_field(const swe::SweState<T>& s) {
    SweOracle::Field f;
    for (int c = 0; c < 3; ++c) {
        f[c].resize(s.cells());
        for (std::size_t i = 0; i < s.cells(); ++i)
            f[c][i] = static_cast<double>(s.u[c][i]);
    }
    return f;
}

}  // namespace honei::testing
