#include <honei/la/kernels/banded.hpp>
#include <honei/la/kernels/elementwise.hpp>
#include <honei/la/kernels/reduction.hpp>
#include <honei/math/transfer_kernels.hpp>
#include <honei/swe/kernels.hpp>
#include <honei/util/runtime.hpp>

// Built-in kernel table: every kernel name gets a Generic reference entry;
// Blocked and Parallel variants are registered where they exist, everything
// else falls back to Generic through the registry.

namespace honei {

namespace {

template <Real T>
void register_for(KernelRegistry& r) {
    namespace k = kernels;

    using AxpySig = void(T*, const T*, T, std::size_t);
    r.add<AxpySig>("axpy", BackendTag::Generic, k::generic::axpy<T>);
    r.add<AxpySig>("axpy", BackendTag::Blocked, k::blocked::axpy<T>);
    r.add<AxpySig>("axpy", BackendTag::Parallel, k::parallel::axpy<T>);

    using ScaledSumSig = void(T*, const T*, const T*, T, T, std::size_t);
    r.add<ScaledSumSig>("scaled_sum", BackendTag::Generic, k::generic::scaled_sum<T>);
    r.add<ScaledSumSig>("scaled_sum", BackendTag::Blocked, k::blocked::scaled_sum<T>);
    r.add<ScaledSumSig>("scaled_sum", BackendTag::Parallel, k::parallel::scaled_sum<T>);

    using BinarySig = void(T*, const T*, std::size_t);
    r.add<BinarySig>("sum", BackendTag::Generic, k::generic::sum<T>);
    r.add<BinarySig>("sum", BackendTag::Blocked, k::blocked::sum<T>);
    r.add<BinarySig>("sum", BackendTag::Parallel, k::parallel::sum<T>);
    r.add<BinarySig>("difference", BackendTag::Generic, k::generic::difference<T>);
    r.add<BinarySig>("difference", BackendTag::Blocked, k::blocked::difference<T>);
    r.add<BinarySig>("difference", BackendTag::Parallel, k::parallel::difference<T>);
    r.add<BinarySig>("product", BackendTag::Generic, k::generic::product<T>);
    r.add<BinarySig>("product", BackendTag::Blocked, k::blocked::product<T>);
    r.add<BinarySig>("product", BackendTag::Parallel, k::parallel::product<T>);

    using ScaleSig = void(T*, T, std::size_t);
    r.add<ScaleSig>("scale", BackendTag::Generic, k::generic::scale<T>);
    r.add<ScaleSig>("scale", BackendTag::Blocked, k::blocked::scale<T>);
    r.add<ScaleSig>("scale", BackendTag::Parallel, k::parallel::scale<T>);

    using DotSig = T(const T*, const T*, std::size_t);
    r.add<DotSig>("dot", BackendTag::Generic, k::generic::dot<T>);
    r.add<DotSig>("dot", BackendTag::Blocked, k::blocked::dot<T>);
    r.add<DotSig>("dot", BackendTag::Parallel, k::parallel::dot<T>);

    using MatvecSig = void(T*, const T*, std::size_t, const k::BandView<T>*, std::size_t);
    r.add<MatvecSig>("banded_matvec", BackendTag::Generic, k::generic::banded_matvec<T>);
    r.add<MatvecSig>("banded_matvec", BackendTag::Blocked, k::blocked::banded_matvec<T>);
    r.add<MatvecSig>("banded_matvec", BackendTag::Parallel, k::parallel::banded_matvec<T>);

    using MatvecQ1Sig = void(T*, const T*, std::size_t, std::size_t, const k::BandView<T>*);
    r.add<MatvecQ1Sig>("banded_matvec_q1", BackendTag::Generic, k::generic::banded_matvec_q1<T>);
    r.add<MatvecQ1Sig>("banded_matvec_q1", BackendTag::Blocked, k::blocked::banded_matvec_q1<T>);
    r.add<MatvecQ1Sig>("banded_matvec_q1", BackendTag::Parallel, k::parallel::banded_matvec_q1<T>);

    using ResidualSig = T(const T*, T, T, const T*, std::size_t, const k::BandView<T>*,
                          std::size_t);
    r.add<ResidualSig>("residual_norm", BackendTag::Generic, k::generic::residual_norm_sq<T>);
    r.add<ResidualSig>("residual_norm", BackendTag::Blocked, k::blocked::residual_norm_sq<T>);
    r.add<ResidualSig>("residual_norm", BackendTag::Parallel, k::parallel::residual_norm_sq<T>);

    using JacobiSig = void(T*, const T*, const T*, T, std::size_t);
    r.add<JacobiSig>("jacobi_update", BackendTag::Generic, k::generic::jacobi_update<T>);
    r.add<JacobiSig>("jacobi_update", BackendTag::Parallel, k::parallel::jacobi_update<T>);

    using TransferSig = void(T*, const T*, std::size_t);
    r.add<TransferSig>("prolongate", BackendTag::Generic, k::generic::prolongate<T>);
    r.add<TransferSig>("restrict", BackendTag::Generic, k::generic::restrict_full_weighting<T>);

    using FluxSig = void(T*, T*, T*, T*, T*, T*, const T*, const T*, const T*, T, T, std::size_t);
    r.add<FluxSig>("swe.fluxes", BackendTag::Generic, k::generic::swe_fluxes<T>);
    r.add<FluxSig>("swe.fluxes", BackendTag::Parallel, k::parallel::swe_fluxes<T>);

    using ClampSig = void(T*, T*, T*, T, std::size_t);
    r.add<ClampSig>("swe.dry_clamp", BackendTag::Generic, k::generic::swe_dry_clamp<T>);
    r.add<ClampSig>("swe.dry_clamp", BackendTag::Parallel, k::parallel::swe_dry_clamp<T>);

    using SourceSig = void(T*, T*, const T*, const T*, T, T, T, std::size_t, std::size_t);
    r.add<SourceSig>("swe.source", BackendTag::Generic, k::generic::swe_source<T>);

    using WaveSig = void(const T*, const T*, const T*, T, T, std::size_t, double*, double*);
    r.add<WaveSig>("swe.wave_speeds", BackendTag::Generic, k::generic::swe_wave_speeds<T>);
}

}  // namespace

void register_builtin_kernels(KernelRegistry& r) {
    register_for<float>(r);
    register_for<double>(r);

    r.add<void(float*, const double*, std::size_t)>(
        "convert", BackendTag::Generic, kernels::generic::convert<float, double>);
    r.add<void(double*, const float*, std::size_t)>(
        "convert", BackendTag::Generic, kernels::generic::convert<double, float>);
    r.add<void(double*, const double*, std::size_t)>(
        "convert", BackendTag::Generic, kernels::generic::convert<double, double>);
    r.add<void(float*, const float*, std::size_t)>(
        "convert", BackendTag::Generic, kernels::generic::convert<float, float>);
}

}  // namespace honei
