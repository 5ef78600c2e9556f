#include <catch2/catch_amalgamated.hpp>

#include <wrange/eig.hpp>
#include <wrange/matrix.hpp>
#include <wrange/randgen.hpp>
#include <wrange/rng.hpp>

#include <cmath>

using namespace wrange;

namespace {

Matrix random_hermitian(std::uint64_t seed, std::size_t n, double scale = 1.0) {
    rng::Stream st(seed, "test.eig.herm", 0);
    Matrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = scale * st.complex_normal();
    Matrix ga = adjoint(g);
    return cplx(0.5) * (g + ga);
}

double reconstruction_residual(const Matrix& h, const SpectralDecomposition& sd) {
    std::size_t n = h.dim();
    Matrix lam(n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = cplx(sd.eigenvalues[i]);
    Matrix rec = sd.eigenvectors * lam * adjoint(sd.eigenvectors);
    return frobenius_norm(rec - h);
}

double orthonormality_residual(const SpectralDecomposition& sd) {
    Matrix g = adjoint(sd.eigenvectors) * sd.eigenvectors;
    return frobenius_norm(g - Matrix::identity(g.dim()));
}

}  // namespace

TEST_CASE("diagonal input reproduces its diagonal, sorted descending") {
    Matrix h = Matrix::diagonal({cplx(3.0), cplx(-5.0)});
    SpectralDecomposition sd = hermitian_eig(h);
    REQUIRE(sd.eigenvalues.size() == 2);
    REQUIRE(sd.eigenvalues[0] == 3.0);
    REQUIRE(sd.eigenvalues[1] == -5.0);
    REQUIRE(reconstruction_residual(h, sd) <= 1e-14);
    REQUIRE(orthonormality_residual(sd) <= 1e-14);
}

TEST_CASE("2x2 exchange matrix has eigenvalues +-1") {
    // characteristic polynomial t^2 - 1
    Matrix h = Matrix::from_rows({{cplx(0.0), cplx(1.0)}, {cplx(1.0), cplx(0.0)}});
    std::vector<double> vals = hermitian_eigenvalues(h);
    REQUIRE(std::abs(vals[0] - 1.0) <= 1e-14);
    REQUIRE(std::abs(vals[1] + 1.0) <= 1e-14);
}

TEST_CASE("complex off-diagonal pair") {
    // [[1, 2i], [-2i, 1]]: eigenvalues 1 +- 2
    Matrix h = Matrix::from_rows({{cplx(1.0), cplx(0.0, 2.0)}, {cplx(0.0, -2.0), cplx(1.0)}});
    std::vector<double> vals = hermitian_eigenvalues(h);
    REQUIRE(std::abs(vals[0] - 3.0) <= 1e-14);
    REQUIRE(std::abs(vals[1] + 1.0) <= 1e-14);
}

TEST_CASE("decomposition invariants over random hermitian matrices") {
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 12);
        double scale = std::pow(10.0, static_cast<double>(seed % 5) - 2.0);
        Matrix h = random_hermitian(seed, n, scale);
        SpectralDecomposition sd = hermitian_eig(h);

        double hnorm = frobenius_norm(h);
        REQUIRE(reconstruction_residual(h, sd) <= 1e-10 * (1.0 + hnorm));
        REQUIRE(orthonormality_residual(sd) <= 1e-10);
        for (std::size_t i = 1; i < sd.eigenvalues.size(); ++i)
            REQUIRE(sd.eigenvalues[i - 1] >= sd.eigenvalues[i]);

        std::vector<double> vals = hermitian_eigenvalues(h);
        for (std::size_t i = 0; i < vals.size(); ++i)
            REQUIRE(std::abs(vals[i] - sd.eigenvalues[i]) <= 1e-12 * (1.0 + hnorm));
        ++count;
    }
    REQUIRE(count == 120);
}

TEST_CASE("trace and frobenius norm are preserved by the spectrum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::size_t n = 2 + static_cast<std::size_t>(seed % 7);
        Matrix h = random_hermitian(1000 + seed, n);
        std::vector<double> vals = hermitian_eigenvalues(h);

        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += h(i, i).real();
        double vsum = 0.0, vsq = 0.0;
        for (double v : vals) {
            vsum += v;
            vsq += v * v;
        }
        double fro = frobenius_norm(h);
        REQUIRE(std::abs(vsum - tr) <= 1e-11 * (1.0 + std::abs(tr) + fro));
        REQUIRE(std::abs(std::sqrt(vsq) - fro) <= 1e-11 * (1.0 + fro));
    }
}

TEST_CASE("clearly non-hermitian input is rejected") {
    Matrix h = Matrix::from_rows({{cplx(0.0), cplx(1.0)}, {cplx(0.0), cplx(0.0)}});
    REQUIRE_THROWS_AS(hermitian_eig(h), not_hermitian_error);
    REQUIRE_THROWS_AS(hermitian_eigenvalues(h), not_hermitian_error);
}

TEST_CASE("tiny asymmetry is symmetrized away") {
    Matrix h = Matrix::from_rows(
        {{cplx(1.0), cplx(0.5, 1e-13)}, {cplx(0.5), cplx(1.0)}});
    std::vector<double> vals;
    REQUIRE_NOTHROW(vals = hermitian_eigenvalues(h));
    REQUIRE(std::abs(vals[0] - 1.5) <= 1e-9);
    REQUIRE(std::abs(vals[1] - 0.5) <= 1e-9);
}

TEST_CASE("operator norm oracle values and invariances") {
    Matrix x = Matrix::from_rows({{cplx(0.0), cplx(2.0)}, {cplx(0.0), cplx(0.0)}});
    // X*X = diag(0, 4), largest singular value 2
    REQUIRE(std::abs(operator_norm(x) - 2.0) <= 1e-14);
    REQUIRE(operator_norm(Matrix(3)) == 0.0);

    Matrix one = Matrix::from_rows({{cplx(3.0, -4.0)}});
    REQUIRE(std::abs(operator_norm(one) - 5.0) <= 1e-14);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        std::size_t n = 1 + static_cast<std::size_t>(seed % 5);
        rng::Stream st(2000 + seed, "test.eig.gen", 0);
        Matrix x2(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x2(i, j) = st.complex_normal();
        double nx = operator_norm(x2);
        REQUIRE(nx >= 0.0);
        REQUIRE(nx <= frobenius_norm(x2) + 1e-12);
        REQUIRE(frobenius_norm(x2) <= std::sqrt(static_cast<double>(n)) * nx + 1e-10);
        REQUIRE(std::abs(operator_norm(adjoint(x2)) - nx) <= 1e-10 * (1.0 + nx));
        REQUIRE(std::abs(operator_norm(cplx(0.0, 2.0) * x2) - 2.0 * nx) <= 1e-10 * (1.0 + nx));

        rng::Stream ust(3000 + seed, "test.eig.unitary", 0);
        Matrix u = random_unitary(n, ust);
        REQUIRE(std::abs(operator_norm(u * x2 * adjoint(u)) - nx) <= 1e-9 * (1.0 + nx));
    }
}
