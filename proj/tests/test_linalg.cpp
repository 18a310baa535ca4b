#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <honei/la/operations.hpp>

#include "support/dense_oracle.hpp"
#include "support/oracles.hpp"

using namespace honei;

namespace {

const std::array<BackendTag, 3> all_tags = {BackendTag::Generic, BackendTag::Blocked,
                                            BackendTag::Parallel};

template <typename T>
void check_bitwise(const DenseVector<T>& a, const DenseVector<T>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

}  // namespace

TEST_CASE("axpy basics") {
    DenseVector<double> y(2, 0.0);
    y[0] = 1.0;
    y[1] = 2.0;
    DenseVector<double> x(2, 5.0);
    axpy(BackendTag::Generic, y, 0.0, x);
    CHECK(y[0] == 1.0);
    CHECK(y[1] == 2.0);

    DenseVector<double> y2(3, 0.0);
    DenseVector<double> x2(3, 0.0);
    x2[0] = 1.0;
    x2[1] = 2.0;
    x2[2] = 3.0;
    axpy(BackendTag::Generic, y2, 2.0, x2);
    CHECK(y2[0] == 2.0);
    CHECK(y2[1] == 4.0);
    CHECK(y2[2] == 6.0);

    DenseVector<double> len3(3, 0.0);
    DenseVector<double> len4(4, 0.0);
    CHECK_THROWS_AS(axpy(BackendTag::Generic, len3, 1.0, len4), DimensionMismatch);
}

TEST_CASE("single precision axpy is bitwise equal across generic and blocked") {
    std::mt19937_64 rng(11);
    const std::size_t n = 100000;
    auto x = testing::random_vector_f(rng, n);
    auto y = testing::random_vector_f(rng, n);
    auto y2 = y.copy();
    axpy(BackendTag::Generic, y, 0.37f, x);
    axpy(BackendTag::Blocked, y2, 0.37f, x);
    check_bitwise(y, y2);
}

TEST_CASE("scaled_sum basics and axpy composition oracle") {
    DenseVector<double> a(2, 1.0);
    DenseVector<double> b(2, 2.0);
    DenseVector<double> r(2, 0.0);
    scaled_sum(BackendTag::Generic, r, a, b, 2.0, 3.0);
    CHECK(r[0] == 8.0);
    CHECK(r[1] == 8.0);

    scaled_sum(BackendTag::Generic, r, a, b, 1.0, 0.0);
    CHECK(r[0] == 1.0);

    std::mt19937_64 rng(13);
    const std::size_t n = 4097;
    auto va = testing::random_vector(rng, n);
    auto vb = testing::random_vector(rng, n);
    DenseVector<double> fused(n, 0.0);
    scaled_sum(BackendTag::Generic, fused, va, vb, 1.75, -0.5);

    auto composed = va.copy();
    scale(BackendTag::Generic, composed, 1.75);
    axpy(BackendTag::Generic, composed, -0.5, vb);
    check_bitwise(fused, composed);
}

TEST_CASE("elementwise family") {
    DenseVector<double> a(3, 0.0);
    a[0] = 1.0; a[1] = 2.0; a[2] = 3.0;
    DenseVector<double> b(3, 0.0);
    b[0] = 4.0; b[1] = 5.0; b[2] = 6.0;

    auto p = a.copy();
    product(BackendTag::Generic, p, b);
    CHECK(p[0] == 4.0);
    CHECK(p[1] == 10.0);
    CHECK(p[2] == 18.0);

    auto d = a.copy();
    difference(BackendTag::Generic, d, a);
    for (std::size_t i = 0; i < 3; ++i) CHECK(d[i] == 0.0);

    auto s = a.copy();
    scale(BackendTag::Generic, s, 1.0);
    check_bitwise(s, a);

    auto add = a.copy();
    sum(BackendTag::Generic, add, b);
    CHECK(add[2] == 9.0);
}

TEST_CASE("dot against the compensated-summation oracle") {
    DenseVector<double> e1(4, 0.0);
    e1[0] = 1.0;
    CHECK(dot(BackendTag::Generic, e1, e1) == 1.0);

    DenseVector<double> x(3, 0.0);
    x[0] = 1.0; x[1] = 2.0; x[2] = 3.0;
    DenseVector<double> ones(3, 1.0);
    CHECK(dot(BackendTag::Generic, x, ones) == 6.0);

    std::mt19937_64 rng(17);
    const std::size_t n = 10000;
    auto a = testing::random_vector(rng, n);
    auto b = testing::random_vector(rng, n);
    const double oracle = testing::kahan_dot(a, b);
    for (const auto tag : all_tags)
        CHECK(std::abs(dot(tag, a, b) - oracle) <= 1e-13 * std::abs(oracle));
}

TEST_CASE("norms") {
    DenseVector<double> zero(5, 0.0);
    CHECK(norm_l2(BackendTag::Generic, zero) == 0.0);

    DenseVector<double> v(2, 0.0);
    v[0] = 3.0;
    v[1] = 4.0;
    CHECK(norm_l2(BackendTag::Generic, v) == 5.0);
    CHECK(norm_l2(BackendTag::Generic, v, true) == dot(BackendTag::Generic, v, v));
}

TEST_CASE("banded matvec semantics") {
    BandedMatrix<double> identity(4);
    std::vector<double> ones(4, 1.0);
    identity.insert_band(0, ones);
    DenseVector<double> x(4, 0.0);
    for (std::size_t i = 0; i < 4; ++i) x[i] = static_cast<double>(i + 1);
    auto y = banded_matvec(BackendTag::Generic, identity, x);
    check_bitwise(y, x);

    BandedMatrix<double> shift(4);
    shift.insert_band(1, ones);
    auto shifted = banded_matvec(BackendTag::Generic, shift, x);
    CHECK(shifted[0] == 2.0);
    CHECK(shifted[1] == 3.0);
    CHECK(shifted[2] == 4.0);
    CHECK(shifted[3] == 0.0);

    DenseVector<double> wrong(3, 0.0);
    CHECK_THROWS_AS(banded_matvec(BackendTag::Generic, identity, wrong), DimensionMismatch);
}

TEST_CASE("nine-band matvec matches the dense oracle") {
    std::mt19937_64 rng(23);
    auto a = testing::random_spd_q1(rng, 9);  // n = 81
    auto x = testing::random_vector(rng, 81);
    auto y = banded_matvec(BackendTag::Generic, a, x);

    auto dense = testing::DenseMatrixOracle::from_banded(a);
    std::vector<double> xs(x.data(), x.data() + x.size());
    const auto expected = dense.matvec(xs);
    for (std::size_t i = 0; i < 81; ++i)
        CHECK(std::abs(y[i] - expected[i]) <= 1e-13 * std::max(1.0, std::abs(expected[i])));
}

TEST_CASE("q1 fast path is bitwise identical to the arbitrary path") {
    std::mt19937_64 rng(29);
    auto q1 = testing::random_spd_q1(rng, 7);  // Q1Fixed layout, n = 49

    // same bands in an Arbitrary-layout matrix
    BandedMatrix<double> arb(q1.order());
    for (const auto& [offset, band] : q1.bands()) arb.insert_band(offset, band);

    auto x = testing::random_vector(rng, q1.order());
    REQUIRE(q1.has_full_q1_bands());
    REQUIRE_FALSE(arb.has_full_q1_bands());
    for (const auto tag : all_tags) {
        auto fast = banded_matvec(tag, q1, x);
        auto slow = banded_matvec(tag, arb, x);
        check_bitwise(fast, slow);
    }
}

TEST_CASE("residual_norm composite kernel") {
    std::mt19937_64 rng(31);
    auto y = testing::random_vector(rng, 49);

    SUBCASE("beta = 0 reduces to the norm of y") {
        auto a = testing::random_spd_q1(rng, 7);
        const double got = residual_norm(BackendTag::Generic, 1.0, y, 0.0, a, y);
        CHECK(got == doctest::Approx(norm_l2(BackendTag::Generic, y)).epsilon(1e-14));
    }

    SUBCASE("identity cancellation") {
        BandedMatrix<double> identity(49);
        std::vector<double> ones(49, 1.0);
        identity.insert_band(0, ones);
        CHECK(residual_norm(BackendTag::Generic, 1.0, y, -1.0, identity, y) == 0.0);
    }

    SUBCASE("matches the composition of atomic operations") {
        auto a = testing::random_spd_q1(rng, 7);
        auto x = testing::random_vector(rng, 49);
        for (const auto tag : all_tags) {
            const double fused = residual_norm(tag, 0.8, y, -1.7, a, x);
            auto ax = banded_matvec(tag, a, x);
            DenseVector<double> combo(49, 0.0);
            scaled_sum(tag, combo, y, ax, 0.8, -1.7);
            const double composed = norm_l2(tag, combo);
            CHECK(std::abs(fused - composed) <= 1e-13 * std::max(1.0, composed));
        }
    }
}

TEST_CASE("precision conversion") {
    DenseVector<double> exact(2, 0.0);
    exact[0] = 1.0;
    exact[1] = 2.0;
    auto single = convert_precision<float>(exact);
    CHECK(single[0] == 1.0f);
    CHECK(single[1] == 2.0f);

    DenseVector<double> tiny(1, 1.0 + std::pow(2.0, -30));
    CHECK(convert_precision<float>(tiny)[0] == 1.0f);

    std::mt19937_64 rng(37);
    auto v = testing::random_vector(rng, 1000);
    auto round_trip = convert_precision<double>(convert_precision<float>(v));
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::abs(round_trip[i] - v[i]) <= std::pow(2.0, -24) * std::abs(v[i]));
        CHECK(round_trip[i] == static_cast<double>(static_cast<float>(v[i])));
    }
}

TEST_CASE("backend equivalence for elementwise kernels (property)") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> len(1, 3000);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = len(rng);
        auto x = testing::random_vector(rng, n);
        auto y = testing::random_vector(rng, n);

        auto ref = y.copy();
        axpy(BackendTag::Generic, ref, 0.77, x);
        for (const auto tag : {BackendTag::Blocked, BackendTag::Parallel}) {
            auto out = y.copy();
            axpy(tag, out, 0.77, x);
            check_bitwise(ref, out);
        }

        auto prod_ref = y.copy();
        product(BackendTag::Generic, prod_ref, x);
        for (const auto tag : {BackendTag::Blocked, BackendTag::Parallel}) {
            auto out = y.copy();
            product(tag, out, x);
            check_bitwise(prod_ref, out);
        }
    }
}

TEST_CASE("each backend's reduction is run-to-run deterministic") {
    std::mt19937_64 rng(43);
    auto x = testing::random_vector(rng, 12345);
    auto y = testing::random_vector(rng, 12345);
    for (const auto tag : all_tags) {
        const double first = dot(tag, x, y);
        for (int rep = 0; rep < 3; ++rep) CHECK(dot(tag, x, y) == first);
    }
}

TEST_CASE("operations drive the memory arbiter") {
    auto& arbiter = MemoryArbiter::instance();
    std::mt19937_64 rng(47);
    auto x = testing::random_vector(rng, 64);
    auto y = testing::random_vector(rng, 64);

    axpy(BackendTag::Parallel, y, 2.0, x);
    CHECK(arbiter.dirty_location(y.block_id()) == Location::Accel);
    CHECK(arbiter.resident_at(x.block_id(), Location::Accel));
    CHECK_FALSE(arbiter.resident_at(y.block_id(), Location::Host));

    // a host-side op on y must transfer it back
    const auto before = arbiter.transfer_count();
    scale(BackendTag::Generic, y, 1.0);
    CHECK(arbiter.transfer_count() == before + 1);
    CHECK(arbiter.dirty_location(y.block_id()) == Location::Host);
}
