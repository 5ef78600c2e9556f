#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "wrange/matrix.hpp"

namespace wrange {

/// Eigensystem of a Hermitian matrix: real eigenvalues sorted in descending
/// order, eigenvector columns orthonormal and matching that order.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

namespace detail {

/// Cyclic complex Jacobi diagonalization, in place on a row-major Hermitian
/// buffer. Each pivot (p, q) is annihilated by the exact unitary eigenbasis of
/// the 2x2 pivot block, so the pivot entry is zeroed exactly and the
/// off-diagonal Frobenius mass decreases monotonically. Sweeps stop once that
/// mass falls below 1e-12 of the Frobenius norm. If `v` is non-null it must
/// hold the identity on entry and accumulates the eigenvector columns.
inline void jacobi_hermitian(cplx* h, std::size_t n, cplx* v) {
    if (n < 2) return;
    double fro2 = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) fro2 += std::norm(h[i]);
    const double off_tol2 = 1e-24 * fro2;
    const double skip = 1e-12 * std::sqrt(fro2) / static_cast<double>(n);
    constexpr int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off2 += std::norm(h[p * n + q]);
        if (2.0 * off2 <= off_tol2) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx beta = h[p * n + q];
                const double absb = std::abs(beta);
                if (absb <= skip) continue;

                const double ap = h[p * n + p].real();
                const double gq = h[q * n + q].real();
                const double delta = 0.5 * (ap - gq);
                const double r = std::hypot(delta, absb);
                // mu_plus - ap, computed without cancellation for delta >= 0
                const double dpl =
                    (delta >= 0.0) ? (absb * absb) / (r + delta) : (r - delta);
                const double nrm = std::sqrt(absb * absb + dpl * dpl);
                const cplx a = beta / nrm;
                const double b = dpl / nrm;
                const cplx ac = std::conj(a);
                const double mid = 0.5 * (ap + gq);
                const double mu_plus = mid + r;
                const double mu_minus = mid - r;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx t1 = h[k * n + p];
                    const cplx t2 = h[k * n + q];
                    h[k * n + p] = t1 * a + t2 * b;
                    h[k * n + q] = t2 * ac - t1 * b;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx t1 = h[p * n + k];
                    const cplx t2 = h[q * n + k];
                    h[p * n + k] = ac * t1 + b * t2;
                    h[q * n + k] = a * t2 - b * t1;
                }
                h[p * n + p] = mu_plus;
                h[q * n + q] = mu_minus;
                h[p * n + q] = cplx{};
                h[q * n + p] = cplx{};

                if (v) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx t1 = v[k * n + p];
                        const cplx t2 = v[k * n + q];
                        v[k * n + p] = t1 * a + t2 * b;
                        v[k * n + q] = t2 * ac - t1 * b;
                    }
                }
            }
        }
    }
}

inline double hermitian_deviation(const Matrix& h) {
    const std::size_t n = h.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += std::norm(h(i, j) - std::conj(h(j, i)));
    return std::sqrt(s);
}

/// Copies H into a raw buffer, averaging H with H*. Deviations beyond
/// 1e-8 * ||H||_F are rejected; anything smaller is symmetrized silently.
inline std::vector<cplx> symmetrized_buffer(const Matrix& h) {
    require_nonempty(h);
    const std::size_t n = h.dim();
    if (hermitian_deviation(h) > 1e-8 * frobenius_norm(h))
        throw not_hermitian_error("matrix is not Hermitian within tolerance");
    std::vector<cplx> buf(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            buf[i * n + j] = 0.5 * (h(i, j) + std::conj(h(j, i)));
    return buf;
}

/// Extreme diagonal entries after diagonalization.
inline void diagonal_extremes(const cplx* h, std::size_t n, double& lo, double& hi) {
    lo = hi = h[0].real();
    for (std::size_t i = 1; i < n; ++i) {
        const double d = h[i * n + i].real();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
}

}  // namespace detail

inline SpectralDecomposition hermitian_eig(const Matrix& h) {
    const std::size_t n = h.dim();
    auto buf = detail::symmetrized_buffer(h);
    std::vector<cplx> vec(n * n, cplx{});
    for (std::size_t i = 0; i < n; ++i) vec[i * n + i] = 1.0;
    detail::jacobi_hermitian(buf.data(), n, vec.data());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return buf[x * n + x].real() > buf[y * n + y].real();
    });

    SpectralDecomposition out{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = buf[src * n + src].real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vec[i * n + src];
    }
    return out;
}

/// Eigenvalues only, descending. Cheaper than hermitian_eig: no eigenvector
/// accumulation.
inline std::vector<double> hermitian_eigenvalues(const Matrix& h) {
    const std::size_t n = h.dim();
    auto buf = detail::symmetrized_buffer(h);
    detail::jacobi_hermitian(buf.data(), n, nullptr);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = buf[i * n + i].real();
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

/// Spectral norm: the largest singular value, computed as
/// sqrt(lambda_max(X* X)).
inline double operator_norm(const Matrix& x) {
    detail::require_nonempty(x);
    const std::size_t n = x.dim();
    Matrix gram = adjoint(x) * x;
    auto buf = detail::symmetrized_buffer(gram);
    detail::jacobi_hermitian(buf.data(), n, nullptr);
    double lo = 0.0, hi = 0.0;
    detail::diagonal_extremes(buf.data(), n, lo, hi);
    return std::sqrt(std::max(0.0, hi));
}

}  // namespace wrange
