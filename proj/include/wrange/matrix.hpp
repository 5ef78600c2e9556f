#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "wrange/errors.hpp"

namespace wrange {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// Dense square complex matrix with value semantics: every operation returns
/// a fresh matrix, so values can be shared freely between callers.
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(std::size_t n) : n_(n), a_(checked_size(n), cplx{}) {}

    Matrix(std::size_t n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != checked_size(n))
            throw dimension_error("entry count does not match an n-by-n matrix");
        ensure_finite();
    }

    /// Builds from row literals; the number of columns must equal the number
    /// of rows.
    static Matrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
        const std::size_t n = rows.size();
        Matrix m(n);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n) throw dimension_error("matrix literal is not square");
            std::size_t j = 0;
            for (const cplx& v : row) m(i, j++) = v;
            ++i;
        }
        m.ensure_finite();
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(std::initializer_list<cplx> entries) {
        Matrix m(entries.size());
        std::size_t i = 0;
        for (const cplx& v : entries) m(i, i) = v, ++i;
        return m;
    }

    std::size_t dim() const noexcept { return n_; }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
        return a_[i * n_ + j];
    }

    cplx* data() noexcept { return a_.data(); }
    const cplx* data() const noexcept { return a_.data(); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    static std::size_t checked_size(std::size_t n) {
        if (n == 0) throw dimension_error("matrix dimension must be positive");
        return n * n;
    }

    void ensure_finite() const {
        for (const cplx& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw parameter_error("matrix entries must be finite");
    }

    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

namespace detail {

inline void require_same_dim(const Matrix& x, const Matrix& y) {
    if (x.dim() != y.dim()) throw dimension_error("matrix dimensions differ");
}

inline void require_nonempty(const Matrix& x) {
    if (x.dim() == 0) throw dimension_error("matrix is empty");
}

}  // namespace detail

inline Matrix operator+(const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = x.data()[i] + y.data()[i];
    return out;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = x.data()[i] - y.data()[i];
    return out;
}

inline Matrix operator*(const cplx& s, const Matrix& x) {
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = s * x.data()[i];
    return out;
}

inline Matrix operator*(const Matrix& x, const cplx& s) { return s * x; }

/// Matrix product.
inline Matrix operator*(const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    detail::require_nonempty(x);
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx xik = x(i, k);
            if (xik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
        }
    }
    return out;
}

inline std::vector<cplx> operator*(const Matrix& x, const std::vector<cplx>& v) {
    const std::size_t n = x.dim();
    if (v.size() != n) throw dimension_error("vector length does not match matrix dimension");
    std::vector<cplx> out(n, cplx{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += x(i, j) * v[j];
    return out;
}

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& x) {
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(x(j, i));
    return out;
}

/// Entrywise (Schur) product.
inline Matrix hadamard(const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    const std::size_t n = x.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = x.data()[i] * y.data()[i];
    return out;
}

inline double frobenius_norm(const Matrix& x) {
    double s = 0.0;
    const std::size_t n = x.dim();
    for (std::size_t i = 0; i < n * n; ++i) s += std::norm(x.data()[i]);
    return std::sqrt(s);
}

inline double max_abs_entry(const Matrix& x) {
    double m = 0.0;
    const std::size_t n = x.dim();
    for (std::size_t i = 0; i < n * n; ++i) m = std::max(m, std::abs(x.data()[i]));
    return m;
}

inline double max_abs_diagonal(const Matrix& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x(i, i)));
    return m;
}

/// The two Hermitian parts of X = real_part + i*imag_part.
struct CartesianParts {
    Matrix real_part;
    Matrix imag_part;
};

/// Splits X into (X + X*)/2 and (X - X*)/(2i). Both parts are Hermitian by
/// construction, exactly (entry formulas are conjugate-symmetric in floating
/// point, not just up to rounding).
inline CartesianParts cartesian_decompose(const Matrix& x) {
    detail::require_nonempty(x);
    const std::size_t n = x.dim();
    CartesianParts parts{Matrix(n), Matrix(n)};
    constexpr cplx half_over_i{0.0, -0.5};  // 1/(2i)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx d = x(i, j);
            const cplx u = std::conj(x(j, i));
            parts.real_part(i, j) = 0.5 * (d + u);
            parts.imag_part(i, j) = half_over_i * (d - u);
        }
    }
    return parts;
}

}  // namespace wrange
