#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <honei/fem/poisson.hpp>
#include <honei/math/multigrid.hpp>

#include "support/dense_oracle.hpp"
#include "support/oracles.hpp"

using namespace honei;
using namespace honei::fem;

namespace {

constexpr BackendTag G = BackendTag::Generic;

std::vector<std::size_t> free_nodes(std::size_t m) {
    std::vector<std::size_t> rows;
    for (std::size_t iy = 1; iy + 1 < m; ++iy)
        for (std::size_t ix = 1; ix + 1 < m; ++ix) rows.push_back(iy * m + ix);
    return rows;
}

}  // namespace

TEST_CASE("level-1 interior row is the 9-point stencil") {
    auto a = assemble_q1_stiffness(1);
    REQUIRE(a.order() == 9);
    auto dense = testing::DenseMatrixOracle::from_banded(a);
    const std::size_t center = 4;  // node (1,1) of the 3x3 grid
    for (std::size_t col = 0; col < 9; ++col) {
        if (col == center)
            CHECK(dense.at(center, col) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
        else
            CHECK(dense.at(center, col) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    }
}

TEST_CASE("dirichlet rows are unit rows") {
    for (const std::size_t level : {1ul, 2ul, 3ul}) {
        auto a = assemble_q1_stiffness(level);
        auto dense = testing::DenseMatrixOracle::from_banded(a);
        const std::size_t m = (std::size_t{1} << level) + 1;
        for (std::size_t iy = 0; iy < m; ++iy) {
            for (std::size_t ix = 0; ix < m; ++ix) {
                if (ix != 0 && iy != 0 && ix != m - 1 && iy != m - 1) continue;
                const std::size_t row = iy * m + ix;
                for (std::size_t col = 0; col < m * m; ++col)
                    CHECK(dense.at(row, col) == (row == col ? 1.0 : 0.0));
            }
        }
    }
}

TEST_CASE("stiffness is symmetric positive definite on the free block") {
    for (const std::size_t level : {1ul, 2ul, 3ul}) {
        auto a = assemble_q1_stiffness(level);
        auto dense = testing::DenseMatrixOracle::from_banded(a);
        const std::size_t m = (std::size_t{1} << level) + 1;
        const auto rows = free_nodes(m);
        for (const auto i : rows)
            for (const auto j : rows)
                CHECK(dense.at(i, j) == doctest::Approx(dense.at(j, i)).epsilon(1e-15));
        const auto pivots = dense.cholesky_pivots(rows);
        REQUIRE(pivots.size() == rows.size());
        for (const double p : pivots) CHECK(p > 0.0);
    }
}

TEST_CASE("level out of range is rejected") {
    CHECK_THROWS_AS(assemble_q1_stiffness(0), InvalidArgument);
    CHECK_THROWS_AS(assemble_q1_stiffness(13), InvalidArgument);
}

TEST_CASE("zero data assembles the zero load vector") {
    auto b = assemble_rhs(2, nullptr, nullptr);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == 0.0);
}

TEST_CASE("constant boundary data admits the constant solution") {
    const std::size_t level = 3;
    auto a = assemble_q1_stiffness(level);
    auto one = [](double, double) { return 1.0; };
    auto b = assemble_rhs(level, nullptr, one);

    DenseVector<double> ones(a.order(), 1.0);
    auto ax = banded_matvec(G, a, ones);
    for (std::size_t i = 0; i < a.order(); ++i)
        CHECK(ax[i] == doctest::Approx(b[i]).epsilon(1e-13));
}

TEST_CASE("level-5 multigrid solution matches the dense-oracle solve") {
    const std::size_t level = 5;
    const auto problem = polynomial_problem(level);
    auto h = build_hierarchy<double>(level);
    auto b = assemble_rhs(level, problem.f, problem.u_exact);
    const std::size_t n = h.finest().a.order();

    auto u = dirichlet_guess(level, problem.u_exact);
    math::multigrid_solve(G, h, u, b, 1e-13, 40);

    auto dense = testing::DenseMatrixOracle::from_banded(h.finest().a);
    std::vector<double> bs(b.data(), b.data() + n);
    const auto expected = dense.solve(bs);
    DenseVector<double> u_dense(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) u_dense[i] = expected[i];

    const double e_mg = l2_error(u, problem.u_exact, level);
    const double e_dense = l2_error(u_dense, problem.u_exact, level);
    CHECK(std::abs(e_mg - e_dense) <= 1e-12);
}

TEST_CASE("l2_error fundamentals") {
    SUBCASE("exact bilinear field gives zero error") {
        const std::size_t level = 3;
        const std::size_t m = 9;
        auto bilinear = [](double x, double y) { return 2.0 * x - 0.5 * y + x * y; };
        DenseVector<double> u(m * m, 0.0);
        const double h = 1.0 / 8.0;
        for (std::size_t iy = 0; iy < m; ++iy)
            for (std::size_t ix = 0; ix < m; ++ix)
                u[iy * m + ix] = bilinear(ix * h, iy * h);
        CHECK(l2_error(u, bilinear, level) <= 1e-14);
    }

    SUBCASE("constant offset has error equal to the offset") {
        const std::size_t level = 4;
        const std::size_t m = 17;
        auto linear = [](double x, double y) { return x + y; };
        const double c = 0.375;
        DenseVector<double> u(m * m, 0.0);
        const double h = 1.0 / 16.0;
        for (std::size_t iy = 0; iy < m; ++iy)
            for (std::size_t ix = 0; ix < m; ++ix)
                u[iy * m + ix] = linear(ix * h, iy * h) + c;
        CHECK(l2_error(u, linear, level) == doctest::Approx(c).epsilon(1e-12));
    }

    SUBCASE("size mismatch is rejected") {
        DenseVector<double> u(10, 0.0);
        CHECK_THROWS_AS(l2_error(u, [](double, double) { return 0.0; }, 3), DimensionMismatch);
    }
}

TEST_CASE("error reduction per level approaches 4") {
    std::vector<double> errors;
    for (std::size_t level = 3; level <= 5; ++level) {
        const auto problem = polynomial_problem(level);
        auto h = build_hierarchy<double>(level);
        auto b = assemble_rhs(level, problem.f, problem.u_exact);
        auto u = dirichlet_guess(level, problem.u_exact);
        auto report = math::multigrid_solve(G, h, u, b, 1e-10, 30);
        REQUIRE(report.converged);
        errors.push_back(l2_error(u, problem.u_exact, level));
    }
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double reduction = errors[i - 1] / errors[i];
        MESSAGE("reduction at level ", i + 3, ": ", reduction);
        CHECK(reduction >= 3.8);
        CHECK(reduction <= 4.2);
    }
}

TEST_CASE("hierarchy sizes follow (2^L + 1)^2") {
    auto h = build_hierarchy<double>(6);
    REQUIRE(h.level_count() == 6);
    const std::array<std::size_t, 6> expected = {9, 25, 81, 289, 1089, 4225};
    for (std::size_t i = 0; i < 6; ++i) CHECK(h.level(i).a.order() == expected[i]);

    auto h1 = build_hierarchy<double>(1);
    CHECK(h1.level_count() == 1);
}

TEST_CASE("single-precision matrices are the rounded double assembly") {
    auto hd = build_hierarchy<double>(3);
    auto hs = build_hierarchy<float>(3);
    for (std::size_t level = 0; level < 3; ++level) {
        const auto& ad = hd.level(level).a;
        const auto& as = hs.level(level).a;
        for (const auto& [offset, band] : ad.bands()) {
            const auto* single = as.band(offset);
            REQUIRE(single != nullptr);
            for (std::size_t i = 0; i < band.size(); ++i)
                CHECK((*single)[i] == static_cast<float>(band[i]));
        }
    }
}

TEST_CASE("mixed Dirichlet/Neumann assembly keeps free boundary rows") {
    auto a = assemble_q1_stiffness(2, BoundaryKind::DirichletLeftNeumann);
    auto dense = testing::DenseMatrixOracle::from_banded(a);
    const std::size_t m = 5;
    // left edge: unit rows
    for (std::size_t iy = 0; iy < m; ++iy) {
        const std::size_t row = iy * m;
        for (std::size_t col = 0; col < m * m; ++col)
            CHECK(dense.at(row, col) == (row == col ? 1.0 : 0.0));
    }
    // right edge stays assembled (natural boundary)
    const std::size_t right = 2 * m + (m - 1);
    CHECK(dense.at(right, right) != 1.0);

    // the system is still solvable by CG from a boundary-consistent guess
    const auto problem = polynomial_problem(2);
    auto b = assemble_rhs(2, problem.f, nullptr, BoundaryKind::DirichletLeftNeumann);
    DenseVector<double> x(m * m, 0.0);
    auto report = math::cg_solve(G, a, x, b, 1e-10, 500);
    CHECK(report.converged);
}
