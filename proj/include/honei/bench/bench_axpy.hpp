#pragma once

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <honei/io/height_field.hpp>
#include <honei/la/operations.hpp>

namespace honei::bench {

struct BenchRow {
    std::string kernel;
    BackendTag backend;
    std::size_t n = 0;
    std::string precision;
    double mflops = 0.0;  ///< flop_count / seconds / 1e6, flop_count = 2n for axpy
    double seconds = 0.0;
    std::size_t reps = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Times y <- y + alpha*x per (size, backend): one warmup run, then the
/// median of `reps` timings.
template <Real T>
BenchReport bench_axpy(const std::vector<std::size_t>& sizes,
                       const std::vector<BackendTag>& backends, std::size_t reps) {
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw InvalidArgument("bench_axpy: sizes must be sorted ascending");
    if (sizes.empty() || backends.empty() || reps == 0)
        throw InvalidArgument("bench_axpy: sizes, backends and reps must be non-empty");

    BenchReport report;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    for (const std::size_t n : sizes) {
        DenseVector<T> x(n, T(0));
        DenseVector<T> y(n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<T>(dist(rng));
            y[i] = static_cast<T>(dist(rng));
        }
        const T alpha = static_cast<T>(1.0 + 1.0 / 3.0);
        for (const BackendTag tag : backends) {
            axpy(tag, y, alpha, x);  // warmup
            std::vector<double> timings(reps);
            for (std::size_t rep = 0; rep < reps; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                axpy(tag, y, alpha, x);
                const auto t1 = std::chrono::steady_clock::now();
                timings[rep] = std::chrono::duration<double>(t1 - t0).count();
            }
            std::sort(timings.begin(), timings.end());
            const double median = timings[reps / 2];
            BenchRow row;
            row.kernel = "axpy";
            row.backend = tag;
            row.n = n;
            row.precision = sizeof(T) == 4 ? "single" : "double";
            row.seconds = median;
            row.mflops = median > 0.0 ? 2.0 * static_cast<double>(n) / median / 1e6 : 0.0;
            row.reps = reps;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

inline void write_csv(const BenchReport& report, std::ostream& out) {
    out << "kernel,backend,n,precision,mflops,seconds,reps\n";
    for (const auto& row : report.rows)
        out << row.kernel << ',' << to_string(row.backend) << ',' << row.n << ','
            << row.precision << ',' << io::format_full(row.mflops) << ','
            << io::format_full(row.seconds) << ',' << row.reps << '\n';
}

}  // namespace honei::bench
