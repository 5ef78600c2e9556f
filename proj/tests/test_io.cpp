#include <catch2/catch_amalgamated.hpp>

#include <wrange/io.hpp>
#include <wrange/matrix.hpp>
#include <wrange/nrange.hpp>
#include <wrange/rng.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

using namespace wrange;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("wrange-io-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

fs::path write_text(const fs::path& dir, const std::string& name,
                    const std::string& body) {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << body;
    return p;
}

}  // namespace

TEST_CASE("matrix files round-trip exactly") {
    TempDir tmp;
    rng::Stream st(3, "test.io.gen", 0);
    for (std::size_t n : {1, 2, 5}) {
        Matrix x(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = st.complex_normal();
        // values with no short decimal form must survive unchanged
        x(0, 0) = cplx(1.0 / 3.0, -1e-15);
        fs::path p = tmp.path / ("m" + std::to_string(n) + ".json");
        write_matrix_file(p, x);
        REQUIRE(read_matrix_file(p) == x);
    }
}

TEST_CASE("hand-written file parses to the expected matrix") {
    TempDir tmp;
    fs::path p = write_text(tmp.path, "ok.json",
                            R"({"n": 2, "data": [[[0, 0], [2, 0]], [[0, 0], [0, 0]]]})");
    Matrix x = read_matrix_file(p);
    REQUIRE(x.dim() == 2);
    REQUIRE(x(0, 1) == cplx(2.0));
    REQUIRE(x(0, 0) == cplx(0.0));
}

TEST_CASE("unreadable and malformed files raise io errors") {
    TempDir tmp;
    REQUIRE_THROWS_AS(read_matrix_file(tmp.path / "absent.json"), io_error);

    auto bad = [&](const std::string& name, const std::string& body) {
        REQUIRE_THROWS_AS(read_matrix_file(write_text(tmp.path, name, body)), io_error);
    };
    bad("garbage.json", "not json at all {");
    bad("notobj.json", "[1, 2, 3]");
    bad("missing.json", R"({"n": 2})");
    bad("zero.json", R"({"n": 0, "data": []})");
    bad("negative.json", R"({"n": -2, "data": []})");
    bad("rows.json", R"({"n": 2, "data": [[[1, 0], [0, 0]]]})");
    bad("cols.json", R"({"n": 2, "data": [[[1, 0]], [[0, 0]]]})");
    bad("cell.json", R"({"n": 1, "data": [[[1]]]})");
    bad("type.json", R"({"n": 1, "data": [[["a", "b"]]]})");
    bad("scalar.json", R"({"n": 1, "data": [[3]]})");
}

TEST_CASE("boundary csv holds one full-precision row per sample") {
    TempDir tmp;
    Matrix x = Matrix::from_rows({{cplx(0.0), cplx(2.0)}, {cplx(0.0), cplx(0.0)}});
    RangeBoundary rb = range_boundary(x, 8);
    fs::path p = tmp.path / "boundary.csv";
    write_boundary_csv(p, rb);

    std::ifstream in(p);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string theta, re, im, extra;
        REQUIRE(std::getline(ls, theta, ','));
        REQUIRE(std::getline(ls, re, ','));
        REQUIRE(std::getline(ls, im, ','));
        REQUIRE_FALSE(std::getline(ls, extra, ','));
        // 17 significant digits reproduce the doubles exactly
        REQUIRE(std::stod(theta) == rb.angles[rows]);
        REQUIRE(std::stod(re) == rb.points[rows].real());
        REQUIRE(std::stod(im) == rb.points[rows].imag());
        ++rows;
    }
    REQUIRE(rows == 8);
}
