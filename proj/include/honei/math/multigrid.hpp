#pragma once

#include <chrono>
#include <cmath>
#include <vector>

#include <honei/la/operations.hpp>
#include <honei/math/conjugate_gradient.hpp>
#include <honei/math/jacobi.hpp>
#include <honei/math/solver_report.hpp>
#include <honei/math/transfer.hpp>

namespace honei::math {

struct SmootherParams {
    double omega = 0.7;      ///< Jacobi damping
    std::size_t steps = 2;   ///< pre- and postsmoothing sweeps
};

struct CoarseSolveParams {
    double tol = 1e-12;
    std::size_t maxit = 1000;
};

/// One refinement level: an m×m point grid with its Q1 stiffness matrix and
/// reusable work vectors for the cycle.
template <Real T>
struct GridLevel {
    std::size_t m = 0;
    BandedMatrix<T> a;
    DenseVector<T> residual;
    DenseVector<T> rhs;
    DenseVector<T> correction;
    std::vector<char> dirichlet;  ///< unit-row mask; corrections vanish there

    GridLevel(std::size_t m_, BandedMatrix<T> a_, std::vector<char> dirichlet_ = {})
        : m(m_), a(std::move(a_)), residual(m_ * m_, T(0)), rhs(m_ * m_, T(0)),
          correction(m_ * m_, T(0)), dirichlet(std::move(dirichlet_)) {}
};

/// Stiffness matrices and work vectors for levels 1..L, stored coarsest
/// first (index 0 is level 1 with a 3×3 point grid).
template <Real T>
class GridHierarchy {
public:
    GridHierarchy(SmootherParams smoother, CoarseSolveParams coarse)
        : smoother_(smoother), coarse_(coarse) {}

    void append_level(std::size_t m, BandedMatrix<T> a, std::vector<char> dirichlet = {}) {
        levels_.emplace_back(m, std::move(a), std::move(dirichlet));
    }

    std::size_t level_count() const { return levels_.size(); }
    GridLevel<T>& level(std::size_t i) { return levels_[i]; }
    const GridLevel<T>& level(std::size_t i) const { return levels_[i]; }
    GridLevel<T>& finest() { return levels_.back(); }
    const GridLevel<T>& finest() const { return levels_.back(); }

    const SmootherParams& smoother() const { return smoother_; }
    const CoarseSolveParams& coarse() const { return coarse_; }

private:
    SmootherParams smoother_;
    CoarseSolveParams coarse_;
    std::vector<GridLevel<T>> levels_;
};

/// One V-cycle on hierarchy index `level` (0 = coarsest): presmooth,
/// restrict the residual, recurse (CG on the coarsest level), prolongate and
/// correct, postsmooth.
template <Real T>
void v_cycle(BackendTag tag, GridHierarchy<T>& h, std::size_t level, DenseVector<T>& x,
             const DenseVector<T>& b) {
    if (level >= h.level_count())
        throw InvalidArgument("v_cycle: level index out of range");
    GridLevel<T>& lvl = h.level(level);
    if (level == 0) {
        cg_solve(tag, lvl.a, x, b, h.coarse().tol, h.coarse().maxit);
        return;
    }

    const auto omega = static_cast<T>(h.smoother().omega);
    jacobi_smooth(tag, lvl.a, x, b, omega, h.smoother().steps);

    banded_matvec(tag, lvl.a, x, lvl.residual);
    scaled_sum(tag, lvl.residual, b, lvl.residual, T(1), T(-1));

    GridLevel<T>& below = h.level(level - 1);
    below.rhs = restrict(tag, lvl.residual, lvl.m);
    // The stiffness stencil is h-independent, so the coarse defect needs the
    // adjoint factor 4: together with the averaging restriction this applies
    // exactly P^T to the residual at interior rows.
    scale(tag, below.rhs, T(4));
    // corrections live in the homogeneous subspace of the unit rows
    if (!below.dirichlet.empty())
        for (std::size_t i = 0; i < below.rhs.size(); ++i)
            if (below.dirichlet[i]) below.rhs[i] = T(0);
    below.correction.fill(T(0));
    v_cycle(tag, h, level - 1, below.correction, below.rhs);

    DenseVector<T> fine_correction = prolongate(tag, below.correction, below.m);
    axpy(tag, x, T(1), fine_correction);

    jacobi_smooth(tag, lvl.a, x, b, omega, h.smoother().steps);
}

/// Repeated V-cycles until ||b - Ax|| <= tol * ||b - Ax0|| or max_cycles.
template <Real T>
SolverReport multigrid_solve(BackendTag tag, GridHierarchy<T>& h, DenseVector<T>& x,
                             const DenseVector<T>& b, double tol, std::size_t max_cycles) {
    const auto start = std::chrono::steady_clock::now();
    SolverReport report;
    auto finish = [&](bool converged) {
        report.converged = converged;
        report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    GridLevel<T>& top = h.finest();
    const double r0 = static_cast<double>(residual_norm(tag, T(1), b, T(-1), top.a, x));
    report.residual_history.push_back(r0);
    if (r0 == 0.0)
        return finish(true);
    const double target = tol * r0;

    for (std::size_t cycle = 1; cycle <= max_cycles; ++cycle) {
        v_cycle(tag, h, h.level_count() - 1, x, b);
        const double res = static_cast<double>(residual_norm(tag, T(1), b, T(-1), top.a, x));
        report.residual_history.push_back(res);
        report.iterations = cycle;
        if (!std::isfinite(res)) {
            report.note = "non-finite residual";
            return finish(false);
        }
        if (res <= target)
            return finish(true);
    }
    report.note = "maximum cycles exceeded";
    return finish(false);
}

/// Defect correction in double precision, preconditioned by `inner_cycles`
/// V-cycles of the Inner-precision hierarchy applied to the converted defect
/// (correction started from zero each outer iteration).
template <Real Inner>
SolverReport mixed_defect_correct(BackendTag tag, GridHierarchy<double>& h_outer,
                                  GridHierarchy<Inner>& h_inner, DenseVector<double>& x,
                                  const DenseVector<double>& b, double tol,
                                  std::size_t max_outer, std::size_t inner_cycles = 2) {
    const auto start = std::chrono::steady_clock::now();
    if (h_outer.level_count() != h_inner.level_count() ||
        h_outer.finest().m != h_inner.finest().m)
        throw InvalidArgument("mixed_defect_correct: hierarchies describe different grids");

    SolverReport report;
    auto finish = [&](bool converged) {
        report.converged = converged;
        report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    GridLevel<double>& top = h_outer.finest();
    const std::size_t n = top.a.order();
    DenseVector<double> defect(n, 0.0);

    banded_matvec(tag, top.a, x, defect);
    scaled_sum(tag, defect, b, defect, 1.0, -1.0);
    const double d0 = norm_l2(tag, defect);
    report.residual_history.push_back(d0);
    if (d0 == 0.0)
        return finish(true);
    const double target = tol * d0;

    GridLevel<Inner>& inner_top = h_inner.finest();
    for (std::size_t outer = 1; outer <= max_outer; ++outer) {
        DenseVector<Inner> defect_inner = convert_precision<Inner>(defect);
        DenseVector<Inner> correction(n, Inner(0));
        for (std::size_t c = 0; c < inner_cycles; ++c)
            v_cycle(tag, h_inner, h_inner.level_count() - 1, correction, defect_inner);

        const double inner_res = static_cast<double>(residual_norm(
            tag, Inner(1), defect_inner, Inner(-1), inner_top.a, correction));
        const double inner_r0 = static_cast<double>(norm_l2(tag, defect_inner));
        if (inner_r0 > 0.0 && inner_res > 10.0 * inner_r0) {
            report.note = "inner solver diverged (residual grew beyond 10x)";
            report.iterations = outer;
            return finish(false);
        }

        DenseVector<double> correction_outer = convert_precision<double>(correction);
        axpy(tag, x, 1.0, correction_outer);

        banded_matvec(tag, top.a, x, defect);
        scaled_sum(tag, defect, b, defect, 1.0, -1.0);
        const double res = norm_l2(tag, defect);
        report.residual_history.push_back(res);
        report.iterations = outer;
        if (!std::isfinite(res)) {
            report.note = "non-finite residual";
            return finish(false);
        }
        if (res <= target)
            return finish(true);
    }
    report.note = "maximum outer iterations exceeded";
    return finish(false);
}

}  // namespace honei::math
