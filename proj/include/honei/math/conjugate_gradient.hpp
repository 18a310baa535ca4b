#pragma once

#include <chrono>
#include <cmath>

#include <honei/la/operations.hpp>
#include <honei/math/solver_report.hpp>

namespace honei::math {

/// Unpreconditioned conjugate gradients on a symmetric positive definite
/// system. Stops when ||b - Ax|| <= tol * ||b - Ax0||; breakdown (p'Ap <= 0
/// or a non-finite residual) and exceeded iteration budgets are reported
/// through the returned SolverReport, never thrown.
template <Real T>
SolverReport cg_solve(BackendTag tag, const BandedMatrix<T>& a, DenseVector<T>& x,
                      const DenseVector<T>& b, double tol, std::size_t maxit) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = a.order();
    if (x.size() != n)
        throw DimensionMismatch("cg_solve", n, x.size());
    if (b.size() != n)
        throw DimensionMismatch("cg_solve", n, b.size());

    SolverReport report;
    auto finish = [&](bool converged) {
        report.converged = converged;
        report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    DenseVector<T> r(n, T(0));
    DenseVector<T> q(n, T(0));
    banded_matvec(tag, a, x, q);
    scaled_sum(tag, r, b, q, T(1), T(-1));  // r = b - A x

    T rr = dot(tag, r, r);
    const double r0 = std::sqrt(static_cast<double>(rr));
    report.residual_history.push_back(r0);
    if (r0 == 0.0)
        return finish(true);
    const double target = tol * r0;

    DenseVector<T> p = r.copy();
    for (std::size_t it = 1; it <= maxit; ++it) {
        banded_matvec(tag, a, p, q);
        const T p_ap = dot(tag, p, q);
        if (!(p_ap > T(0))) {
            report.note = "breakdown: p'Ap <= 0";
            return finish(false);
        }
        const T alpha = rr / p_ap;
        axpy(tag, x, alpha, p);
        axpy(tag, r, -alpha, q);
        const T rr_next = dot(tag, r, r);
        const double res = std::sqrt(static_cast<double>(rr_next));
        report.residual_history.push_back(res);
        report.iterations = it;
        if (!std::isfinite(res)) {
            report.note = "breakdown: non-finite residual";
            return finish(false);
        }
        if (res <= target)
            return finish(true);
        const T beta = rr_next / rr;
        scaled_sum(tag, p, r, p, T(1), beta);  // p = r + beta p
        rr = rr_next;
    }
    report.note = "maximum iterations exceeded";
    return finish(false);
}

}  // namespace honei::math
