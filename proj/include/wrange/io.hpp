#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "wrange/matrix.hpp"
#include "wrange/nrange.hpp"

namespace wrange {

/// Reads a matrix file: a JSON object {"n": <dim>, "data": <n x n array of
/// [re, im] pairs>}. Malformed syntax, wrong shapes, and non-finite numbers
/// all raise io_error.
inline Matrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(path.string() + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("data"))
        throw io_error(path.string() + ": expected an object with n and data");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
        throw io_error(path.string() + ": n must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != n)
        throw io_error(path.string() + ": data must be an array of n rows");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = data[i];
        if (!row.is_array() || row.size() != n)
            throw io_error(path.string() + ": each row must hold n entries");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& cell = row[k];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw io_error(path.string() + ": entries must be [re, im] pairs");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw io_error(path.string() + ": entries must be finite");
            m(i, k) = cplx{re, im};
        }
    }
    return m;
}

/// Writes the matrix file format read by read_matrix_file. Numbers are
/// serialized with full round-trip precision, so read(write(X)) == X exactly.
inline void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
    detail::require_nonempty(m);
    const std::size_t n = m.dim();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < n; ++k)
            row.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"n", n}, {"data", std::move(rows)}};
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path.string());
    out << j.dump(1) << '\n';
    if (!out) throw io_error("failed writing " + path.string());
}

/// Writes boundary samples as CSV rows "theta,re,im", one row per sample and
/// no header, with 17 significant digits.
inline void write_boundary_csv(const std::filesystem::path& path,
                               const RangeBoundary& boundary) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path.string());
    char buf[128];
    for (std::size_t k = 0; k < boundary.points.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", boundary.angles[k],
                      boundary.points[k].real(), boundary.points[k].imag());
        out << buf;
    }
    if (!out) throw io_error("failed writing " + path.string());
}

}  // namespace wrange
