// axpy microbenchmark across backends; emits a CSV report.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <honei/bench/bench_axpy.hpp>
#include <honei/util/runtime.hpp>

using namespace honei;

namespace {

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) sizes.push_back(std::stoul(item));
    return sizes;
}

std::vector<BackendTag> parse_backends(const std::string& csv) {
    std::vector<BackendTag> tags;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) tags.push_back(parse_backend_tag(item));
    return tags;
}

template <Real T>
int run(const std::vector<std::size_t>& sizes, const std::vector<BackendTag>& backends,
        std::size_t reps, const std::string& out_path) {
    const auto report = bench::bench_axpy<T>(sizes, backends, reps);

    if (out_path.empty()) {
        bench::write_csv(report, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open '" + out_path + "'");
        bench::write_csv(report, out);
    }

    // report-only check: threaded throughput should roughly keep up at large n
    double generic_best = 0.0, parallel_best = 0.0;
    for (const auto& row : report.rows) {
        if (row.n != sizes.back()) continue;
        if (row.backend == BackendTag::Generic) generic_best = row.mflops;
        if (row.backend == BackendTag::Parallel) parallel_best = row.mflops;
    }
    if (generic_best > 0.0 && parallel_best > 0.0 && parallel_best < 0.9 * generic_best)
        std::fprintf(stderr,
                     "warning: parallel backend reached only %.2fx of generic throughput at n=%zu\n",
                     parallel_best / generic_best, sizes.back());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axpy kernel microbenchmark"};

    std::string sizes_csv = "1024,4096,16384,65536,262144,1048576";
    std::string backends_csv = "generic,blocked,parallel";
    std::string precision = "double";
    std::size_t reps = 5;
    std::string out_path;
    std::string config_path;

    app.add_option("--sizes", sizes_csv, "comma-separated vector lengths, ascending");
    app.add_option("--backends", backends_csv, "comma-separated backend names");
    app.add_option("--precision", precision, "single | double")
        ->check(CLI::IsMember({"single", "double"}));
    app.add_option("--reps", reps, "timed repetitions per point (median is reported)");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--config", config_path, "runtime config file");

    CLI11_PARSE(app, argc, argv);

    try {
        auto& runtime = Runtime::instance();
        if (!config_path.empty())
            runtime.set_config(load_config(config_path));
        const auto sizes = parse_sizes(sizes_csv);
        const auto backends = parse_backends(backends_csv);
        if (precision == "single")
            return run<float>(sizes, backends, reps, out_path);
        return run<double>(sizes, backends, reps, out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
