#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include <honei/la/dense_vector.hpp>
#include <honei/la/dispatch.hpp>
#include <honei/la/operations.hpp>
#include <honei/util/exceptions.hpp>

namespace honei::swe {

/// Scheme parameters. lambda_x/lambda_y are the relaxation characteristic
/// speeds currently in force; the solver recomputes them from the state
/// every timestep (largest |velocity| + sqrt(g h) per direction).
struct SweParams {
    double dx = 5.0;          ///< meters
    double dy = 5.0;          ///< meters
    double dt = 0.0;          ///< seconds; <= 0 requests an automatic choice
    double gravity = 9.81;    ///< m/s²
    double lambda_x = 0.0;    ///< m/s
    double lambda_y = 0.0;    ///< m/s
    double eps_dry = 1e-6;    ///< minimum wet depth, meters

    double cfl_number() const {
        return dt * std::max(lambda_x / dx, lambda_y / dy);
    }
};

/// Conserved fields U = (h, hu1, hu2), the relaxation variables V ≈ F(U) and
/// W ≈ G(U), and the bed topography, all on an m_x × m_y cell grid stored
/// row-major with y varying slowest.
template <Real T>
struct SweState {
    std::size_t m_x = 0;
    std::size_t m_y = 0;
    std::array<DenseVector<T>, 3> u;
    std::array<DenseVector<T>, 3> v;
    std::array<DenseVector<T>, 3> w;
    DenseVector<T> bed;

    SweState(std::size_t mx, std::size_t my)
        : m_x(mx), m_y(my),
          u{DenseVector<T>(mx * my, T(0)), DenseVector<T>(mx * my, T(0)),
            DenseVector<T>(mx * my, T(0))},
          v{DenseVector<T>(mx * my, T(0)), DenseVector<T>(mx * my, T(0)),
            DenseVector<T>(mx * my, T(0))},
          w{DenseVector<T>(mx * my, T(0)), DenseVector<T>(mx * my, T(0)),
            DenseVector<T>(mx * my, T(0))},
          bed(mx * my, T(0)) {}

    std::size_t cells() const { return m_x * m_y; }

    SweState copy() const {
        SweState out(m_x, m_y);
        for (int c = 0; c < 3; ++c) {
            out.u[c] = u[c].copy();
            out.v[c] = v[c].copy();
            out.w[c] = w[c].copy();
        }
        out.bed = bed.copy();
        return out;
    }
};

enum class PrecisionMode {
    AllSingle,
    AllDouble,
    EveryKthDouble,    ///< steps with index % k == 0 run in double
    PredictionDouble,  ///< the RK2 prediction stage runs in double
};

struct PrecisionConfig {
    PrecisionMode mode = PrecisionMode::AllDouble;
    std::size_t k = 0;

    static PrecisionConfig all_single() { return {PrecisionMode::AllSingle, 0}; }
    static PrecisionConfig all_double() { return {PrecisionMode::AllDouble, 0}; }
    static PrecisionConfig every_kth_double(std::size_t k) {
        if (k < 2)
            throw InvalidArgument("PrecisionConfig: k must be >= 2");
        return {PrecisionMode::EveryKthDouble, k};
    }
    static PrecisionConfig prediction_double() { return {PrecisionMode::PredictionDouble, 0}; }
};

enum class Scenario {
    CircularDambreak,
    PartialDambreak,
    DryBedDambreak,
};

/// Point fluxes for one cell; velocities are zero below the dry threshold.
template <Real T>
std::array<T, 3> flux_f(const std::array<T, 3>& cell, T gravity, T eps_dry) {
    const T h = cell[0];
    const bool dry = h < eps_dry;
    const T mu = dry ? T(0) : cell[1];
    const T vel1 = dry ? T(0) : cell[1] / h;
    const T vel2 = dry ? T(0) : cell[2] / h;
    return {mu, mu * vel1 + T(0.5) * gravity * h * h, mu * vel2};
}

template <Real T>
std::array<T, 3> flux_g(const std::array<T, 3>& cell, T gravity, T eps_dry) {
    const T h = cell[0];
    const bool dry = h < eps_dry;
    const T mu = dry ? T(0) : cell[1];
    const T mv = dry ? T(0) : cell[2];
    const T vel2 = dry ? T(0) : cell[2] / h;
    return {mv, mu * vel2, mv * vel2 + T(0.5) * gravity * h * h};
}

/// Water volume, summed in double precision.
template <Real T>
double total_volume(const SweState<T>& state, const SweParams& params) {
    const T* h = state.u[0].data();
    double acc = 0.0;
    for (std::size_t i = 0; i < state.cells(); ++i) acc += static_cast<double>(h[i]);
    return acc * params.dx * params.dy;
}

template <Real T>
double relative_volume_error(const SweState<T>& state, const SweParams& params,
                             double reference_volume) {
    if (!(reference_volume > 0.0))
        throw InvalidArgument("relative_volume_error: reference volume must be positive");
    return std::abs(total_volume(state, params) - reference_volume) / reference_volume;
}

/// Refreshes V = F(U), W = G(U) through the dispatched flux kernel.
template <Real T>
void refresh_relaxation_variables(BackendTag tag, SweState<T>& s, const SweParams& p) {
    for (int c = 0; c < 3; ++c) {
        honei::detail::touch(s.u[c].block_id(), s.u[c].bytes(), tag, Access::Read);
        honei::detail::touch(s.v[c].block_id(), s.v[c].bytes(), tag, Access::Write);
        honei::detail::touch(s.w[c].block_id(), s.w[c].bytes(), tag, Access::Write);
    }
    using Sig = void(T*, T*, T*, T*, T*, T*, const T*, const T*, const T*, T, T, std::size_t);
    dispatch<Sig>("swe.fluxes", tag, s.v[0].data(), s.v[1].data(), s.v[2].data(), s.w[0].data(),
                  s.w[1].data(), s.w[2].data(), s.u[0].data(), s.u[1].data(), s.u[2].data(),
                  static_cast<T>(p.gravity), static_cast<T>(p.eps_dry), s.cells());
}

/// Initial conditions. CircularDambreak: depth h_in inside radius
/// 0.15·m·dx around the domain center, h_out outside, flat bed.
/// DryBedDambreak: the same with a dry exterior (h_out = 0).
/// PartialDambreak: left basin at h_in, right at h_out, separated by a
/// raised dry wall with a central breach.
template <Real T>
SweState<T> make_scenario(Scenario kind, std::size_t m, SweParams& params, double h_in = 10.0,
                          double h_out = 5.0) {
    if (m < 16)
        throw InvalidArgument("make_scenario: grid too small (need m >= 16)");
    SweState<T> state(m, m);
    T* h = state.u[0].data();

    const double lx = static_cast<double>(m) * params.dx;
    const double ly = static_cast<double>(m) * params.dy;

    switch (kind) {
        case Scenario::CircularDambreak:
        case Scenario::DryBedDambreak: {
            const double outside = kind == Scenario::DryBedDambreak ? 0.0 : h_out;
            const double r0 = 0.15 * static_cast<double>(m) * params.dx;
            for (std::size_t iy = 0; iy < m; ++iy) {
                const double y = (static_cast<double>(iy) + 0.5) * params.dy - ly / 2.0;
                for (std::size_t ix = 0; ix < m; ++ix) {
                    const double x = (static_cast<double>(ix) + 0.5) * params.dx - lx / 2.0;
                    h[iy * m + ix] =
                        static_cast<T>(std::hypot(x, y) <= r0 ? h_in : outside);
                }
            }
            if (kind == Scenario::DryBedDambreak)
                params.eps_dry = std::max(params.eps_dry, 1e-3);  // thin-film velocity bound
            break;
        }
        case Scenario::PartialDambreak: {
            T* bed = state.bed.data();
            const std::size_t wall = m / 2;
            const std::size_t gap_lo = (2 * m) / 5;
            const std::size_t gap_hi = (3 * m) / 5;
            const double wall_height = 3.0 * std::max(h_in, h_out);
            for (std::size_t iy = 0; iy < m; ++iy) {
                for (std::size_t ix = 0; ix < m; ++ix) {
                    const std::size_t i = iy * m + ix;
                    const bool on_wall = ix == wall && (iy < gap_lo || iy >= gap_hi);
                    if (on_wall) {
                        bed[i] = static_cast<T>(wall_height);
                        h[i] = T(0);  // dry wall crest
                    } else {
                        h[i] = static_cast<T>(ix <= wall ? h_in : h_out);
                    }
                }
            }
            // steep-bed wetting/drying: a sharper dry cutoff keeps spurious
            // velocities at the wall face bounded
            params.eps_dry = std::max(params.eps_dry, 0.05);
            break;
        }
    }

    // characteristic speeds of the initial state
    double lambda_x = 0.0, lambda_y = 0.0;
    using WaveSig = void(const T*, const T*, const T*, T, T, std::size_t, double*, double*);
    dispatch<WaveSig>("swe.wave_speeds", BackendTag::Generic, state.u[0].data(),
                      state.u[1].data(), state.u[2].data(), static_cast<T>(params.gravity),
                      static_cast<T>(params.eps_dry), state.cells(), &lambda_x, &lambda_y);
    params.lambda_x = lambda_x;
    params.lambda_y = lambda_y;
    if (params.dt <= 0.0) {
        // dry-bed fronts can reach several times the initial speed, flow
        // squeezed through the breach even more; keep CFL headroom accordingly
        double headroom = 0.45;
        if (kind == Scenario::DryBedDambreak) headroom = 0.2;
        if (kind == Scenario::PartialDambreak) headroom = 0.15;
        const double fastest = std::max(lambda_x, lambda_y);
        params.dt = headroom * std::min(params.dx, params.dy) / std::max(fastest, 1e-12);
    }

    refresh_relaxation_variables(BackendTag::Generic, state, params);
    return state;
}

}  // namespace honei::swe
