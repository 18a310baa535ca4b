#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <honei/swe/solver.hpp>
#include <honei/swe/state.hpp>
#include <honei/util/exceptions.hpp>

namespace honei::io {

enum class FieldFormat { Csv, Pgm };

/// Round-trip-exact decimal rendering of a double.
inline std::string format_full(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

/// Writes the depth field. CSV: m_y rows of m_x comma-separated depths at
/// full precision, row 0 = y = 0. PGM: plain P2, depth mapped linearly onto
/// 0..255 over [min h, max h] of the frame; a constant frame maps to 0.
template <Real T>
void write_height_field(const swe::SweState<T>& state, const std::string& path,
                        FieldFormat format) {
    std::ofstream out(path);
    if (!out)
        throw Error("write_height_field: cannot open '" + path + "'");
    const T* h = state.u[0].data();
    const std::size_t mx = state.m_x, my = state.m_y;

    if (format == FieldFormat::Csv) {
        for (std::size_t iy = 0; iy < my; ++iy) {
            for (std::size_t ix = 0; ix < mx; ++ix) {
                if (ix) out << ',';
                out << format_full(static_cast<double>(h[iy * mx + ix]));
            }
            out << '\n';
        }
    } else {
        double lo = static_cast<double>(h[0]), hi = lo;
        for (std::size_t i = 1; i < mx * my; ++i) {
            lo = std::min(lo, static_cast<double>(h[i]));
            hi = std::max(hi, static_cast<double>(h[i]));
        }
        const double range = hi - lo;
        out << "P2\n" << mx << ' ' << my << "\n255\n";
        for (std::size_t iy = 0; iy < my; ++iy) {
            for (std::size_t ix = 0; ix < mx; ++ix) {
                int pixel = 0;
                if (range > 0.0)
                    pixel = static_cast<int>(
                        std::lround((static_cast<double>(h[iy * mx + ix]) - lo) / range * 255.0));
                if (ix) out << ' ';
                out << pixel;
            }
            out << '\n';
        }
    }
    if (!out)
        throw Error("write_height_field: write failed for '" + path + "'");
}

/// Reads a CSV height field back (test and tooling aid).
inline std::vector<std::vector<double>> read_height_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("read_height_csv: cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const auto comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            row.push_back(std::stod(cell));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// step,time,rel_vol_err per simulation step.
inline void write_diagnostics_csv(const std::vector<swe::DiagnosticsRow>& rows,
                                  const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("write_diagnostics_csv: cannot open '" + path + "'");
    out << "step,time,rel_vol_err\n";
    for (const auto& row : rows)
        out << row.step << ',' << format_full(row.time) << ',' << format_full(row.rel_vol_err)
            << '\n';
}

}  // namespace honei::io
