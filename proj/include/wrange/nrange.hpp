#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wrange/detail/golden.hpp"
#include "wrange/eig.hpp"
#include "wrange/matrix.hpp"
#include "wrange/rng.hpp"

namespace wrange {

/// Value and maximizing unit vector of the support function
/// theta |-> lambda_max(Re(e^{i theta} X)).
struct SupportValue {
    double value = 0.0;
    std::vector<cplx> vector;
};

/// Boundary sampling of the field of values: points[k] = <X v_k, v_k> where
/// v_k is the top eigenvector of Re(e^{i angles[k]} X).
struct RangeBoundary {
    std::vector<double> angles;
    std::vector<cplx> points;
    std::vector<std::vector<cplx>> vectors;
};

namespace detail {

/// Shared machinery for sweeping the one-parameter Hermitian family
/// H(theta) = cos(theta) * Re(X) - sin(theta) * Im(X) = Re(e^{i theta} X).
/// One diagonalization yields both lambda_max(H(theta)) and, via
/// H(theta + pi) = -H(theta), the value at the antipodal angle. The work
/// buffer is reused across calls, so a sweep performs no allocation.
struct SupportScan {
    std::size_t n;
    std::vector<cplx> re, im, work;

    explicit SupportScan(const Matrix& x)
        : n(x.dim()), re(n * n), im(n * n), work(n * n) {
        auto parts = cartesian_decompose(x);
        for (std::size_t i = 0; i < n * n; ++i) {
            re[i] = parts.real_part.data()[i];
            im[i] = parts.imag_part.data()[i];
        }
    }

    /// (lambda_min, lambda_max) of H(theta).
    std::pair<double, double> extremes(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (std::size_t i = 0; i < n * n; ++i) work[i] = c * re[i] - s * im[i];
        jacobi_hermitian(work.data(), n, nullptr);
        double lo = 0.0, hi = 0.0;
        diagonal_extremes(work.data(), n, lo, hi);
        return {lo, hi};
    }

    double top(double theta) { return extremes(theta).second; }
};

}  // namespace detail

/// Largest eigenvalue of Re(e^{i theta} X) together with a maximizing unit
/// vector (ties resolved by the eigensolver's ordering).
inline SupportValue support_value(const Matrix& x, double theta) {
    if (!std::isfinite(theta)) throw parameter_error("support angle must be finite");
    detail::require_nonempty(x);
    const std::size_t n = x.dim();
    auto parts = cartesian_decompose(x);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Matrix h(n);
    for (std::size_t i = 0; i < n * n; ++i)
        h.data()[i] = c * parts.real_part.data()[i] - s * parts.imag_part.data()[i];
    auto eig = hermitian_eig(h);
    SupportValue out;
    out.value = eig.eigenvalues[0];
    out.vector.resize(n);
    double nrm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.vector[i] = eig.eigenvectors(i, 0);
        nrm2 += std::norm(out.vector[i]);
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (auto& z : out.vector) z *= inv;
    return out;
}

/// Numerical radius: the maximum modulus over the field of values, computed
/// as max_theta lambda_max(Re(e^{i theta} X)). A 1024-point angular grid
/// locates candidate peaks; golden-section refinement (bracket one grid step
/// wide, contracted to 1e-10) polishes every grid-local maximum plus the top
/// three grid values. Deterministic: no randomness, fixed evaluation order.
inline double numerical_radius(const Matrix& x) {
    detail::require_nonempty(x);
    detail::SupportScan scan(x);
    constexpr std::size_t grid = 1024;
    const double step = two_pi / static_cast<double>(grid);

    std::array<double, grid> f{};
    for (std::size_t k = 0; k < grid / 2; ++k) {
        const auto [lo, hi] = scan.extremes(static_cast<double>(k) * step);
        f[k] = hi;
        f[k + grid / 2] = -lo;
    }

    double best_f = f[0];
    std::size_t best_k = 0;
    for (std::size_t k = 1; k < grid; ++k) {
        if (f[k] > best_f) {
            best_f = f[k];
            best_k = k;
        }
    }

    // Candidate brackets: strict local maxima of the grid values, capped at
    // the eight largest, plus the three largest values overall.
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < grid; ++k) {
        const double prev = f[(k + grid - 1) % grid];
        const double next = f[(k + 1) % grid];
        if (f[k] >= prev && f[k] >= next && (f[k] > prev || f[k] > next))
            cand.push_back(k);
    }
    std::sort(cand.begin(), cand.end(),
              [&](std::size_t a, std::size_t b) { return f[a] > f[b]; });
    if (cand.size() > 8) cand.resize(8);

    std::array<std::size_t, grid> order{};
    for (std::size_t k = 0; k < grid; ++k) order[k] = k;
    std::partial_sort(order.begin(), order.begin() + 3, order.end(),
                      [&](std::size_t a, std::size_t b) { return f[a] > f[b]; });
    for (std::size_t t = 0; t < 3; ++t)
        if (std::find(cand.begin(), cand.end(), order[t]) == cand.end())
            cand.push_back(order[t]);
    if (cand.empty()) cand.push_back(best_k);

    double best_theta = static_cast<double>(best_k) * step;
    for (std::size_t k : cand) {
        const double center = static_cast<double>(k) * step;
        detail::golden_max([&](double t) { return scan.top(t); }, center - step,
                           center + step, 1e-10, best_theta, best_f);
    }
    return best_f;
}

/// m >= 3 boundary samples at equally spaced angles 2*pi*k/m.
inline RangeBoundary range_boundary(const Matrix& x, std::size_t m) {
    if (m < 3) throw parameter_error("boundary sampling needs at least 3 angles");
    detail::require_nonempty(x);
    const std::size_t n = x.dim();
    RangeBoundary out;
    out.angles.reserve(m);
    out.points.reserve(m);
    out.vectors.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double theta = two_pi * static_cast<double>(k) / static_cast<double>(m);
        SupportValue sv = support_value(x, theta);
        std::vector<cplx> xv = x * sv.vector;
        cplx p{};
        for (std::size_t i = 0; i < n; ++i) p += xv[i] * std::conj(sv.vector[i]);
        out.angles.push_back(theta);
        out.points.push_back(p);
        out.vectors.push_back(std::move(sv.vector));
    }
    return out;
}

/// Monte Carlo lower bound: max |<X v, v>| over `trials` Haar-uniform unit
/// vectors. Deterministic per (seed, trial index); never exceeds the true
/// numerical radius.
inline double radius_lower_bound_sample(const Matrix& x, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (trials == 0) throw parameter_error("sampling needs at least one trial");
    detail::require_nonempty(x);
    const std::size_t n = x.dim();
    double best = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        rng::Stream st(seed, "wrange.nrange.sample", t);
        const std::vector<cplx> v = st.unit_vector(n);
        const std::vector<cplx> xv = x * v;
        cplx p{};
        for (std::size_t i = 0; i < n; ++i) p += xv[i] * std::conj(v[i]);
        best = std::max(best, std::abs(p));
    }
    return best;
}

}  // namespace wrange
