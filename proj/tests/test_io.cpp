#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <honei/bench/bench_axpy.hpp>
#include <honei/io/height_field.hpp>
#include <honei/swe/state.hpp>

using namespace honei;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

/// 2x2 state with depths [[0,1],[2,3]] (row 0 = y = 0).
swe::SweState<double> tiny_state() {
    swe::SweState<double> state(2, 2);
    state.u[0][0] = 0.0;
    state.u[0][1] = 1.0;
    state.u[0][2] = 2.0;
    state.u[0][3] = 3.0;
    return state;
}

}  // namespace

TEST_CASE("height field CSV matches the documented layout") {
    const auto path = temp_file("honei_height.csv");
    io::write_height_field(tiny_state(), path, io::FieldFormat::Csv);
    CHECK(slurp(path) == "0,1\n2,3\n");
}

TEST_CASE("height field CSV round trip is exact") {
    swe::SweState<double> state(3, 2);
    state.u[0][0] = 1.0 / 3.0;
    state.u[0][1] = 2.0 / 7.0;
    state.u[0][2] = 1e-17;
    state.u[0][3] = 123456.789012345;
    state.u[0][4] = -0.25;
    state.u[0][5] = 3.0;
    const auto path = temp_file("honei_height_rt.csv");
    io::write_height_field(state, path, io::FieldFormat::Csv);
    const auto rows = io::read_height_csv(path);
    REQUIRE(rows.size() == 2);
    for (std::size_t iy = 0; iy < 2; ++iy) {
        REQUIRE(rows[iy].size() == 3);
        for (std::size_t ix = 0; ix < 3; ++ix)
            CHECK(rows[iy][ix] == state.u[0][iy * 3 + ix]);
    }
}

TEST_CASE("uniform PGM degenerates to zero pixels") {
    swe::SweState<double> state(2, 2);
    for (std::size_t i = 0; i < 4; ++i) state.u[0][i] = 7.5;
    const auto path = temp_file("honei_height.pgm");
    io::write_height_field(state, path, io::FieldFormat::Pgm);
    CHECK(slurp(path) == "P2\n2 2\n255\n0 0\n0 0\n");
}

TEST_CASE("PGM maps the depth range onto 0..255") {
    const auto path = temp_file("honei_height2.pgm");
    io::write_height_field(tiny_state(), path, io::FieldFormat::Pgm);
    CHECK(slurp(path) == "P2\n2 2\n255\n0 85\n170 255\n");
}

TEST_CASE("diagnostics CSV carries one row per step") {
    const std::vector<swe::DiagnosticsRow> rows = {{0, 0.0, 0.0}, {1, 0.25, 1.5e-9}};
    const auto path = temp_file("honei_diag.csv");
    io::write_diagnostics_csv(rows, path);
    const auto text = slurp(path);
    CHECK(text.find("step,time,rel_vol_err\n") == 0);
    CHECK(text.find("0,0,0\n") != std::string::npos);
    CHECK(text.find("1,0.25,1.5") != std::string::npos);
}

TEST_CASE("write failures are reported") {
    CHECK_THROWS_AS(io::write_height_field(tiny_state(), "/nonexistent_dir/x.csv",
                                           io::FieldFormat::Csv),
                    Error);
}

TEST_CASE("bench_axpy shapes and sanity") {
    SUBCASE("one size, one backend, one rep") {
        auto report = bench::bench_axpy<double>({8}, {BackendTag::Generic}, 1);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].mflops > 0.0);
        CHECK(report.rows[0].n == 8);
        CHECK(report.rows[0].precision == "double");
        CHECK(report.rows[0].reps == 1);
    }

    SUBCASE("row count is |sizes| x |backends|") {
        auto report = bench::bench_axpy<float>(
            {16, 256, 1024}, {BackendTag::Generic, BackendTag::Blocked, BackendTag::Parallel}, 2);
        CHECK(report.rows.size() == 9);
        std::ostringstream csv;
        bench::write_csv(report, csv);
        std::size_t lines = 0;
        for (const char ch : csv.str())
            if (ch == '\n') ++lines;
        CHECK(lines == 10);  // header + 9 rows
    }

    SUBCASE("unsorted sizes are rejected") {
        CHECK_THROWS_AS(bench::bench_axpy<double>({64, 8}, {BackendTag::Generic}, 1),
                        InvalidArgument);
    }
}

TEST_CASE("simulations write bit-identical diagnostics across runs") {
    auto run_once = [](const std::string& name) {
        swe::SweParams params;
        auto state = swe::make_scenario<double>(swe::Scenario::CircularDambreak, 20, params);
        auto rows = swe::run_simulation(BackendTag::Generic, state, params, 20,
                                        swe::PrecisionConfig::all_double());
        const auto path = temp_file(name);
        io::write_diagnostics_csv(rows, path);
        return slurp(path);
    };
    CHECK(run_once("honei_det_a.csv") == run_once("honei_det_b.csv"));
}
