#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <honei/la/banded_matrix.hpp>
#include <honei/la/dense_vector.hpp>
#include <honei/la/operations.hpp>
#include <honei/math/multigrid.hpp>

// Q1 finite-element discretisation of -Δu = f on the unit square with nodes
// enumerated in tensor-product order. Refinement level L gives m = 2^L + 1
// points per side, n = m² unknowns and mesh width h = 1/2^L.

namespace honei::fem {

using ScalarField = std::function<double(double, double)>;

enum class BoundaryKind {
    PureDirichlet,          ///< Dirichlet values on all four edges
    DirichletLeftNeumann,   ///< Dirichlet on x = 0, natural (do-nothing) elsewhere
};

struct PoissonProblem {
    std::size_t level = 0;
    std::size_t m = 0;   ///< points per side, 2^level + 1
    double h = 0.0;      ///< mesh width, 1/2^level
    ScalarField f;       ///< right-hand side
    ScalarField u_exact; ///< may be empty; boundary data comes from it (or zero)
    BoundaryKind boundary = BoundaryKind::PureDirichlet;
};

namespace detail {

inline void check_level(std::size_t level) {
    if (level < 1 || level > 12)
        throw InvalidArgument("poisson: level must be in [1, 12]");
}

inline std::size_t points_per_side(std::size_t level) {
    return (std::size_t{1} << level) + 1;
}

inline bool is_dirichlet_node(std::size_t ix, std::size_t iy, std::size_t m, BoundaryKind bk) {
    if (bk == BoundaryKind::DirichletLeftNeumann) return ix == 0;
    return ix == 0 || iy == 0 || ix == m - 1 || iy == m - 1;
}

/// Element stiffness of the Laplacian on a square Q1 element, node order
/// (x0y0, x1y0, x0y1, x1y1); independent of the mesh width in 2D.
inline constexpr std::array<std::array<double, 4>, 4> q1_element_stiffness() {
    const double a = 4.0 / 6.0, b = -1.0 / 6.0, c = -2.0 / 6.0;
    return {{{a, b, b, c},
             {b, a, c, b},
             {b, c, a, b},
             {c, b, b, a}}};
}

}  // namespace detail

/// Tensor-product node index of grid point (ix, iy).
inline std::size_t iy_ix(std::size_t iy, std::size_t ix, std::size_t m) {
    return iy * m + ix;
}

/// Assembles the Q1 stiffness matrix with the fixed nine-band layout.
/// Interior rows carry the stencil (1/3)[-1 -1 -1; -1 8 -1; -1 -1 -1];
/// Dirichlet rows are replaced by unit rows (couplings from free rows to
/// Dirichlet columns are kept, so assembled interior rows are untouched).
inline BandedMatrix<double> assemble_q1_stiffness(
    std::size_t level, BoundaryKind bk = BoundaryKind::PureDirichlet) {
    detail::check_level(level);
    const std::size_t m = detail::points_per_side(level);
    const std::size_t n = m * m;
    const auto offsets = q1_band_offsets(m);
    const auto ke = detail::q1_element_stiffness();

    std::map<std::ptrdiff_t, std::vector<double>> bands;
    for (const auto off : offsets) bands[off] = std::vector<double>(n, 0.0);

    for (std::size_t ey = 0; ey + 1 < m; ++ey) {
        for (std::size_t ex = 0; ex + 1 < m; ++ex) {
            const std::array<std::size_t, 4> nodes = {
                iy_ix(ey, ex, m), iy_ix(ey, ex + 1, m), iy_ix(ey + 1, ex, m),
                iy_ix(ey + 1, ex + 1, m)};
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b)
                    bands[static_cast<std::ptrdiff_t>(nodes[b]) -
                          static_cast<std::ptrdiff_t>(nodes[a])][nodes[a]] += ke[a][b];
        }
    }

    for (std::size_t iy = 0; iy < m; ++iy) {
        for (std::size_t ix = 0; ix < m; ++ix) {
            if (!detail::is_dirichlet_node(ix, iy, m, bk)) continue;
            const std::size_t row = iy * m + ix;
            for (const auto off : offsets) bands[off][row] = 0.0;
            bands[0][row] = 1.0;
        }
    }

    BandedMatrix<double> a(n, BandLayout::Q1Fixed);
    for (const auto off : offsets) a.insert_band(off, bands[off]);
    return a;
}

/// Load vector by 2×2 Gauss quadrature per element; Dirichlet rows are set
/// to the boundary values (zero when `bc` is empty).
inline DenseVector<double> assemble_rhs(std::size_t level, const ScalarField& f,
                                        const ScalarField& bc,
                                        BoundaryKind bk = BoundaryKind::PureDirichlet) {
    detail::check_level(level);
    const std::size_t m = detail::points_per_side(level);
    const std::size_t n = m * m;
    const double h = 1.0 / static_cast<double>(m - 1);
    DenseVector<double> b(n, 0.0);

    const double gp = 1.0 / std::sqrt(3.0);  // Gauss points on [-1, 1]
    const std::array<double, 2> pts = {-gp, gp};
    const double jac = h * h / 4.0;

    for (std::size_t ey = 0; ey + 1 < m; ++ey) {
        for (std::size_t ex = 0; ex + 1 < m; ++ex) {
            const double x0 = static_cast<double>(ex) * h;
            const double y0 = static_cast<double>(ey) * h;
            const std::array<std::size_t, 4> nodes = {
                iy_ix(ey, ex, m), iy_ix(ey, ex + 1, m), iy_ix(ey + 1, ex, m),
                iy_ix(ey + 1, ex + 1, m)};
            for (const double xi : pts) {
                for (const double eta : pts) {
                    const double x = x0 + (xi + 1.0) * h / 2.0;
                    const double y = y0 + (eta + 1.0) * h / 2.0;
                    const double fv = f ? f(x, y) : 0.0;
                    const std::array<double, 4> phi = {
                        0.25 * (1.0 - xi) * (1.0 - eta), 0.25 * (1.0 + xi) * (1.0 - eta),
                        0.25 * (1.0 - xi) * (1.0 + eta), 0.25 * (1.0 + xi) * (1.0 + eta)};
                    for (std::size_t a = 0; a < 4; ++a)
                        b[nodes[a]] += jac * fv * phi[a];
                }
            }
        }
    }

    for (std::size_t iy = 0; iy < m; ++iy) {
        for (std::size_t ix = 0; ix < m; ++ix) {
            if (!detail::is_dirichlet_node(ix, iy, m, bk)) continue;
            const double x = static_cast<double>(ix) * h;
            const double y = static_cast<double>(iy) * h;
            b[iy * m + ix] = bc ? bc(x, y) : 0.0;
        }
    }
    return b;
}

/// Initial iterate carrying the boundary values (interior zero); keeps CG
/// iterates in the subspace where the Dirichlet residual vanishes.
inline DenseVector<double> dirichlet_guess(std::size_t level, const ScalarField& bc,
                                           BoundaryKind bk = BoundaryKind::PureDirichlet) {
    detail::check_level(level);
    const std::size_t m = detail::points_per_side(level);
    const double h = 1.0 / static_cast<double>(m - 1);
    DenseVector<double> x(m * m, 0.0);
    if (!bc) return x;
    for (std::size_t iy = 0; iy < m; ++iy)
        for (std::size_t ix = 0; ix < m; ++ix)
            if (detail::is_dirichlet_node(ix, iy, m, bk))
                x[iy * m + ix] = bc(static_cast<double>(ix) * h, static_cast<double>(iy) * h);
    return x;
}

/// Integral L2 error of the Q1 interpolant of u_h against u, by 2×2 Gauss
/// quadrature per element. Always evaluated in double precision.
template <Real T>
double l2_error(const DenseVector<T>& u_h, const ScalarField& u_exact, std::size_t level) {
    detail::check_level(level);
    const std::size_t m = detail::points_per_side(level);
    if (u_h.size() != m * m)
        throw DimensionMismatch("l2_error", m * m, u_h.size());
    const double h = 1.0 / static_cast<double>(m - 1);

    const double gp = 1.0 / std::sqrt(3.0);
    const std::array<double, 2> pts = {-gp, gp};
    const double jac = h * h / 4.0;

    double acc = 0.0;
    for (std::size_t ey = 0; ey + 1 < m; ++ey) {
        for (std::size_t ex = 0; ex + 1 < m; ++ex) {
            const double x0 = static_cast<double>(ex) * h;
            const double y0 = static_cast<double>(ey) * h;
            const std::array<double, 4> uv = {
                static_cast<double>(u_h[iy_ix(ey, ex, m)]),
                static_cast<double>(u_h[iy_ix(ey, ex + 1, m)]),
                static_cast<double>(u_h[iy_ix(ey + 1, ex, m)]),
                static_cast<double>(u_h[iy_ix(ey + 1, ex + 1, m)])};
            for (const double xi : pts) {
                for (const double eta : pts) {
                    const double x = x0 + (xi + 1.0) * h / 2.0;
                    const double y = y0 + (eta + 1.0) * h / 2.0;
                    const double uh =
                        0.25 * ((1.0 - xi) * (1.0 - eta) * uv[0] + (1.0 + xi) * (1.0 - eta) * uv[1] +
                                (1.0 - xi) * (1.0 + eta) * uv[2] + (1.0 + xi) * (1.0 + eta) * uv[3]);
                    const double diff = uh - u_exact(x, y);
                    acc += jac * diff * diff;
                }
            }
        }
    }
    return std::sqrt(acc);
}

/// Stiffness matrices for levels 1..L_max in the requested precision
/// (assembled in double, converted bandwise).
template <Real T>
math::GridHierarchy<T> build_hierarchy(std::size_t l_max,
                                       BoundaryKind bk = BoundaryKind::PureDirichlet,
                                       math::SmootherParams smoother = {},
                                       math::CoarseSolveParams coarse = {}) {
    detail::check_level(l_max);
    math::GridHierarchy<T> h(smoother, coarse);
    for (std::size_t level = 1; level <= l_max; ++level) {
        const std::size_t m = detail::points_per_side(level);
        std::vector<char> mask(m * m, 0);
        for (std::size_t iy = 0; iy < m; ++iy)
            for (std::size_t ix = 0; ix < m; ++ix)
                mask[iy * m + ix] = detail::is_dirichlet_node(ix, iy, m, bk) ? 1 : 0;
        BandedMatrix<double> a = assemble_q1_stiffness(level, bk);
        if constexpr (std::is_same_v<T, double>) {
            h.append_level(m, std::move(a), std::move(mask));
        } else {
            h.append_level(m, convert_matrix<T>(a), std::move(mask));
        }
    }
    return h;
}

/// The polynomial accuracy-study problem with pure Dirichlet boundaries:
///
///   u = x·y + (1/16)·x(1-x)·y(1-y),   f = -Δu = (1/8)(x(1-x) + y(1-y)).
///
/// The bilinear term is harmonic and reproduced exactly by Q1 elements, so
/// the discretisation error (and hence the reduction study) comes from the
/// bump alone while the solution itself stays O(1) in size.
inline PoissonProblem polynomial_problem(std::size_t level) {
    detail::check_level(level);
    static constexpr double bump = 1.0 / 16.0;
    PoissonProblem p;
    p.level = level;
    p.m = detail::points_per_side(level);
    p.h = 1.0 / static_cast<double>(p.m - 1);
    p.u_exact = [](double x, double y) {
        return x * y + bump * x * (1.0 - x) * y * (1.0 - y);
    };
    p.f = [](double x, double y) {
        return 2.0 * bump * (x * (1.0 - x) + y * (1.0 - y));
    };
    p.boundary = BoundaryKind::PureDirichlet;
    return p;
}

}  // namespace honei::fem
