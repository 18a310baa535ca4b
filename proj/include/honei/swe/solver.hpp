#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <honei/la/banded_matrix.hpp>
#include <honei/la/operations.hpp>
#include <honei/swe/kernels.hpp>
#include <honei/swe/state.hpp>

// Fully explicit relaxation solver. Each timestep is a two-stage Runge-Kutta
// update (predict a half step, then correct) of the upwind-differenced
// relaxation system
//
//   u_new = a·u_old + M1·v_old + M2·w_old + M3·u_old + M4·u_old + dt·S(u_old) + B,
//
// where M1/M2 carry the flux advection (offsets ∓1 / ∓m_x), M3/M4 the
// upwind dissipation (offsets ±1 / ±m_x, scaled by the relaxation speeds),
// the uniform diagonal a = 1 - dt(λx/dx + λy/dy) rides on the explicit
// u_old term, and B closes reflective walls by ghost mirroring. Wall mass
// flux is exactly zero, so volume drift measures floating-point error only.

namespace honei::swe {

template <Real T>
struct PredictorOperators {
    BandedMatrix<T> m1;  ///< acts on V: central x-difference of the flux
    BandedMatrix<T> m2;  ///< acts on W: central y-difference of the flux
    BandedMatrix<T> m3;  ///< acts on U: x upwind dissipation
    BandedMatrix<T> m4;  ///< acts on U: y upwind dissipation
};

template <Real T>
struct PredictorAssembly {
    PredictorOperators<T> ops;
    std::array<DenseVector<T>, 3> v;
    std::array<DenseVector<T>, 3> w;
};

/// Coefficient of the explicit u_old term (the stencil diagonal).
inline double predictor_diagonal(const SweParams& p) {
    return 1.0 - p.dt * (p.lambda_x / p.dx + p.lambda_y / p.dy);
}

namespace detail {

inline void validate_step_params(const SweParams& p) {
    if (!(p.lambda_x > 0.0) || !(p.lambda_y > 0.0))
        throw InvalidArgument("predictor: relaxation speeds must be positive");
    const double limit = std::max(p.lambda_x / p.dx, p.lambda_y / p.dy);
    if (p.dt * limit > 1.0 + 1e-12)
        throw CflViolation(p.dt, 1.0 / limit);
}

/// The four 4-band operators for an mx×my grid. Band slots that would wrap
/// across a row edge (x neighbours of wall cells) are zeroed; the wall
/// closure supplies those terms. Bands for the other direction are stored
/// as zero diagonals so every operator carries exactly four bands.
template <Real T>
PredictorOperators<T> build_operators(std::size_t mx, std::size_t my, const SweParams& p) {
    const std::size_t n = mx * my;
    const auto smx = static_cast<std::ptrdiff_t>(mx);
    const T cx = static_cast<T>(p.dt / (2.0 * p.dx));
    const T cy = static_cast<T>(p.dt / (2.0 * p.dy));
    const T lxcx = static_cast<T>(p.lambda_x) * cx;
    const T lycy = static_cast<T>(p.lambda_y) * cy;

    std::vector<T> zero(n, T(0));
    std::vector<T> band(n);

    auto x_band = [&](T value, bool left_neighbour) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ix = i % mx;
            const bool wraps = left_neighbour ? ix == 0 : ix == mx - 1;
            band[i] = wraps ? T(0) : value;
        }
        return std::span<const T>(band);
    };
    auto y_band = [&](T value) {
        std::fill(band.begin(), band.end(), value);  // out-of-range slots die in insert_band
        return std::span<const T>(band);
    };

    PredictorOperators<T> ops{BandedMatrix<T>(n), BandedMatrix<T>(n), BandedMatrix<T>(n),
                              BandedMatrix<T>(n)};

    ops.m1.insert_band(-1, x_band(cx, true));
    ops.m1.insert_band(+1, x_band(-cx, false));
    ops.m1.insert_band(-smx, zero);
    ops.m1.insert_band(+smx, zero);

    ops.m2.insert_band(-smx, y_band(cy));
    ops.m2.insert_band(+smx, y_band(-cy));
    ops.m2.insert_band(-1, zero);
    ops.m2.insert_band(+1, zero);

    ops.m3.insert_band(-1, x_band(lxcx, true));
    ops.m3.insert_band(+1, x_band(lxcx, false));
    ops.m3.insert_band(-smx, zero);
    ops.m3.insert_band(+smx, zero);

    ops.m4.insert_band(-smx, y_band(lycy));
    ops.m4.insert_band(+smx, y_band(lycy));
    ops.m4.insert_band(-1, zero);
    ops.m4.insert_band(+1, zero);

    return ops;
}

// Reflective-wall sign pairs per component: (flux sign at x walls, state
// sign at x walls, flux sign at y walls, state sign at y walls).
template <Real T>
constexpr std::array<std::array<T, 4>, 3> wall_signs() {
    return {{{T(-1), T(1), T(-1), T(1)},    // h
             {T(1), T(-1), T(-1), T(1)},    // hu1 (normal at x walls)
             {T(-1), T(1), T(1), T(-1)}}};  // hu2 (normal at y walls)
}

/// out = base + scale * increment(eval), one RK stage without the clamp.
template <Real T>
void apply_stage(BackendTag tag, const PredictorOperators<T>& ops, const SweParams& p,
                 const std::array<DenseVector<T>, 3>& base,
                 const std::array<DenseVector<T>, 3>& eval,
                 const std::array<DenseVector<T>, 3>& eval_v,
                 const std::array<DenseVector<T>, 3>& eval_w, const DenseVector<T>& bed,
                 T scale, std::size_t mx, std::size_t my, std::array<DenseVector<T>, 3>& out) {
    const std::size_t n = mx * my;
    const T cx = static_cast<T>(p.dt / (2.0 * p.dx));
    const T cy = static_cast<T>(p.dt / (2.0 * p.dy));
    const T lxcx = static_cast<T>(p.lambda_x) * cx;
    const T lycy = static_cast<T>(p.lambda_y) * cy;

    // bed source (components 2 and 3 only)
    DenseVector<T> s2(n, T(0));
    DenseVector<T> s3(n, T(0));
    honei::detail::touch(eval[0].block_id(), eval[0].bytes(), tag, Access::Read);
    honei::detail::touch(bed.block_id(), bed.bytes(), tag, Access::Read);
    honei::detail::touch(s2.block_id(), s2.bytes(), tag, Access::Write);
    honei::detail::touch(s3.block_id(), s3.bytes(), tag, Access::Write);
    using SourceSig = void(T*, T*, const T*, const T*, T, T, T, std::size_t, std::size_t);
    dispatch<SourceSig>("swe.source", tag, s2.data(), s3.data(), eval[0].data(), bed.data(),
                        static_cast<T>(p.gravity), static_cast<T>(p.dx), static_cast<T>(p.dy),
                        mx, my);

    const auto signs = wall_signs<T>();
    DenseVector<T> increment(n, T(0));
    DenseVector<T> term(n, T(0));
    for (int c = 0; c < 3; ++c) {
        banded_matvec(tag, ops.m1, eval_v[c], increment);
        banded_matvec(tag, ops.m2, eval_w[c], term);
        sum(tag, increment, term);
        // Each direction's dissipation pairs with its own diagonal share so
        // the two cancel exactly on locally uniform data (keeps the update
        // strictly local even though lambda is recomputed globally).
        banded_matvec(tag, ops.m3, eval[c], term);
        axpy(tag, term, T(-2) * lxcx, eval[c]);
        sum(tag, increment, term);
        banded_matvec(tag, ops.m4, eval[c], term);
        axpy(tag, term, T(-2) * lycy, eval[c]);
        sum(tag, increment, term);
        if (c == 1) axpy(tag, increment, static_cast<T>(p.dt), s2);
        if (c == 2) axpy(tag, increment, static_cast<T>(p.dt), s3);
        kernels::swe_add_boundary_terms(increment.data(), eval[c].data(), eval_v[c].data(),
                                        eval_w[c].data(), cx, cy, lxcx, lycy, signs[c][0],
                                        signs[c][1], signs[c][2], signs[c][3], mx, my);
        scaled_sum(tag, out[c], base[c], increment, T(1), scale);
    }
}

template <Real T>
void dry_clamp(BackendTag tag, std::array<DenseVector<T>, 3>& u, const SweParams& p) {
    for (int c = 0; c < 3; ++c)
        honei::detail::touch(u[c].block_id(), u[c].bytes(), tag, Access::Write);
    dispatch<void(T*, T*, T*, T, std::size_t)>("swe.dry_clamp", tag, u[0].data(), u[1].data(),
                                               u[2].data(), static_cast<T>(p.eps_dry),
                                               u[0].size());
}

}  // namespace detail

/// Builds the four banded operators and the current relaxation variables
/// V = F(U), W = G(U). Validates the relaxation speeds and the CFL bound.
template <Real T>
PredictorAssembly<T> assemble_predictor(const SweState<T>& state, const SweParams& params) {
    detail::validate_step_params(params);
    const std::size_t n = state.cells();
    PredictorAssembly<T> out{detail::build_operators<T>(state.m_x, state.m_y, params),
                             {DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                              DenseVector<T>(n, T(0))},
                             {DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                              DenseVector<T>(n, T(0))}};
    using Sig = void(T*, T*, T*, T*, T*, T*, const T*, const T*, const T*, T, T, std::size_t);
    dispatch<Sig>("swe.fluxes", BackendTag::Generic, out.v[0].data(), out.v[1].data(),
                  out.v[2].data(), out.w[0].data(), out.w[1].data(), out.w[2].data(),
                  state.u[0].data(), state.u[1].data(), state.u[2].data(),
                  static_cast<T>(params.gravity), static_cast<T>(params.eps_dry), n);
    return out;
}

/// Bed source term S = (0, -g h ∂b/∂x, -g h ∂b/∂y).
template <Real T>
std::array<DenseVector<T>, 3> source_term(BackendTag tag, const SweState<T>& state,
                                          const SweParams& params) {
    const std::size_t n = state.cells();
    std::array<DenseVector<T>, 3> s{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                    DenseVector<T>(n, T(0))};
    using SourceSig = void(T*, T*, const T*, const T*, T, T, T, std::size_t, std::size_t);
    dispatch<SourceSig>("swe.source", tag, s[1].data(), s[2].data(), state.u[0].data(),
                        state.bed.data(), static_cast<T>(params.gravity),
                        static_cast<T>(params.dx), static_cast<T>(params.dy), state.m_x,
                        state.m_y);
    return s;
}

/// Current per-direction wave speeds max(|velocity| + sqrt(g h)).
template <Real T>
std::pair<double, double> wave_speeds(const SweState<T>& state, const SweParams& params) {
    double lx = 0.0, ly = 0.0;
    using WaveSig = void(const T*, const T*, const T*, T, T, std::size_t, double*, double*);
    dispatch<WaveSig>("swe.wave_speeds", BackendTag::Generic, state.u[0].data(),
                      state.u[1].data(), state.u[2].data(), static_cast<T>(params.gravity),
                      static_cast<T>(params.eps_dry), state.cells(), &lx, &ly);
    return {lx, ly};
}

namespace detail {

/// One full RK2 step at precision T with the relaxation speeds already set.
template <Real T>
void plain_step(BackendTag tag, SweState<T>& s, const SweParams& p) {
    auto assembly = assemble_predictor(s, p);
    s.v = assembly.v;
    s.w = assembly.w;

    const std::size_t n = s.cells();
    std::array<DenseVector<T>, 3> half{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                       DenseVector<T>(n, T(0))};
    apply_stage(tag, assembly.ops, p, s.u, s.u, s.v, s.w, s.bed, T(0.5), s.m_x, s.m_y, half);
    dry_clamp(tag, half, p);

    std::array<DenseVector<T>, 3> half_v{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                         DenseVector<T>(n, T(0))};
    std::array<DenseVector<T>, 3> half_w{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                         DenseVector<T>(n, T(0))};
    using Sig = void(T*, T*, T*, T*, T*, T*, const T*, const T*, const T*, T, T, std::size_t);
    dispatch<Sig>("swe.fluxes", tag, half_v[0].data(), half_v[1].data(), half_v[2].data(),
                  half_w[0].data(), half_w[1].data(), half_w[2].data(), half[0].data(),
                  half[1].data(), half[2].data(), static_cast<T>(p.gravity),
                  static_cast<T>(p.eps_dry), n);

    std::array<DenseVector<T>, 3> next{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                       DenseVector<T>(n, T(0))};
    apply_stage(tag, assembly.ops, p, s.u, half, half_v, half_w, s.bed, T(1), s.m_x, s.m_y, next);
    dry_clamp(tag, next, p);

    s.u = next;
    refresh_relaxation_variables(tag, s, p);
}

template <Real T>
SweState<double> to_double(const SweState<T>& s) {
    SweState<double> out(s.m_x, s.m_y);
    for (int c = 0; c < 3; ++c) out.u[c] = convert_precision<double>(s.u[c]);
    out.bed = convert_precision<double>(s.bed);
    return out;
}

template <Real T>
void check_finite(const SweState<T>& s, std::size_t step_index) {
    for (int c = 0; c < 3; ++c) {
        const T* p = s.u[c].data();
        for (std::size_t i = 0; i < s.cells(); ++i)
            if (!std::isfinite(static_cast<double>(p[i])))
                throw NonFiniteState(step_index);
    }
}

}  // namespace detail

/// Advances the state by one timestep. The relaxation speeds are recomputed
/// from the current state; the CFL precondition is checked against them.
/// Precision handling per the config: EveryKthDouble runs whole steps with
/// step_index % k == 0 in double; PredictionDouble runs the prediction
/// (half-update) stage in double and the correction in the state's single
/// precision. Aborts with NonFiniteState naming the step on blowup.
template <Real T>
void timestep(BackendTag tag, SweState<T>& state, const SweParams& params,
              const PrecisionConfig& config, std::size_t step_index) {
    SweParams p = params;
    const auto [lx, ly] = wave_speeds(state, p);
    if (!std::isfinite(lx) || !std::isfinite(ly))
        throw NonFiniteState(step_index);
    p.lambda_x = lx;
    p.lambda_y = ly;

    if constexpr (std::is_same_v<T, double>) {
        detail::plain_step(tag, state, p);
    } else {
        const bool double_step =
            config.mode == PrecisionMode::AllDouble ||
            (config.mode == PrecisionMode::EveryKthDouble && config.k >= 2 &&
             step_index % config.k == 0);
        if (double_step) {
            SweState<double> sd = detail::to_double(state);
            detail::plain_step(tag, sd, p);
            for (int c = 0; c < 3; ++c) state.u[c] = convert_precision<T>(sd.u[c]);
            refresh_relaxation_variables(tag, state, p);
        } else if (config.mode == PrecisionMode::PredictionDouble) {
            // prediction (half-update) stage in double, correction in single;
            // one conversion pair per timestep
            SweState<double> sd = detail::to_double(state);
            auto assembly_d = assemble_predictor(sd, p);
            const std::size_t n = state.cells();
            std::array<DenseVector<double>, 3> half_d{DenseVector<double>(n, 0.0),
                                                      DenseVector<double>(n, 0.0),
                                                      DenseVector<double>(n, 0.0)};
            detail::apply_stage(tag, assembly_d.ops, p, sd.u, sd.u, assembly_d.v, assembly_d.w,
                                sd.bed, 0.5, sd.m_x, sd.m_y, half_d);
            detail::dry_clamp(tag, half_d, p);
            std::array<DenseVector<T>, 3> half{convert_precision<T>(half_d[0]),
                                               convert_precision<T>(half_d[1]),
                                               convert_precision<T>(half_d[2])};

            auto assembly = assemble_predictor(state, p);
            state.v = assembly.v;
            state.w = assembly.w;
            std::array<DenseVector<T>, 3> half_v{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                                 DenseVector<T>(n, T(0))};
            std::array<DenseVector<T>, 3> half_w{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                                 DenseVector<T>(n, T(0))};
            using Sig =
                void(T*, T*, T*, T*, T*, T*, const T*, const T*, const T*, T, T, std::size_t);
            dispatch<Sig>("swe.fluxes", tag, half_v[0].data(), half_v[1].data(), half_v[2].data(),
                          half_w[0].data(), half_w[1].data(), half_w[2].data(), half[0].data(),
                          half[1].data(), half[2].data(), static_cast<T>(p.gravity),
                          static_cast<T>(p.eps_dry), n);
            std::array<DenseVector<T>, 3> next{DenseVector<T>(n, T(0)), DenseVector<T>(n, T(0)),
                                               DenseVector<T>(n, T(0))};
            detail::apply_stage(tag, assembly.ops, p, state.u, half, half_v, half_w, state.bed,
                                T(1), state.m_x, state.m_y, next);
            detail::dry_clamp(tag, next, p);
            state.u = next;
            refresh_relaxation_variables(tag, state, p);
        } else {
            detail::plain_step(tag, state, p);
        }
    }
    detail::check_finite(state, step_index);
}

struct DiagnosticsRow {
    std::size_t step = 0;
    double time = 0.0;
    double rel_vol_err = 0.0;
};

/// Runs `steps` timesteps, recording the relative volume error after each
/// one (row 0 is the initial state). `snapshot` may be empty; it is called
/// with (step, state) for the initial state and after every step.
template <Real T>
std::vector<DiagnosticsRow> run_simulation(
    BackendTag tag, SweState<T>& state, const SweParams& params, std::size_t steps,
    const PrecisionConfig& config,
    const std::function<void(std::size_t, const SweState<T>&)>& snapshot = {}) {
    std::vector<DiagnosticsRow> rows;
    rows.reserve(steps + 1);
    const double v0 = total_volume(state, params);
    rows.push_back({0, 0.0, 0.0});
    if (snapshot) snapshot(0, state);
    for (std::size_t s = 1; s <= steps; ++s) {
        timestep(tag, state, params, config, s - 1);
        rows.push_back({s, static_cast<double>(s) * params.dt,
                        relative_volume_error(state, params, v0)});
        if (snapshot) snapshot(s, state);
    }
    return rows;
}

}  // namespace honei::swe
