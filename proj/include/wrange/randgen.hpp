#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "wrange/eig.hpp"
#include "wrange/errors.hpp"
#include "wrange/matrix.hpp"
#include "wrange/rng.hpp"

namespace wrange {

/// Matrix families with known structure, used to hit the hypotheses of the
/// bound catalog.
enum class GenClass {
    general,
    hermitian,
    psd,
    pd,
    normal,
    commuting_pair,
    normal_commuting_pair,
    accretive,
    dissipative,
    accretive_dissipative,
    sectorial_with_index,
    rotated_sectorial,
};

inline std::string_view to_string(GenClass c) {
    switch (c) {
        case GenClass::general: return "general";
        case GenClass::hermitian: return "hermitian";
        case GenClass::psd: return "psd";
        case GenClass::pd: return "pd";
        case GenClass::normal: return "normal";
        case GenClass::commuting_pair: return "commuting-pair";
        case GenClass::normal_commuting_pair: return "normal-commuting-pair";
        case GenClass::accretive: return "accretive";
        case GenClass::dissipative: return "dissipative";
        case GenClass::accretive_dissipative: return "accretive-dissipative";
        case GenClass::sectorial_with_index: return "sectorial-with-index";
        case GenClass::rotated_sectorial: return "rotated-sectorial";
    }
    return "unknown";
}

/// Recipe for one deterministic draw. Identical specs produce identical
/// matrices on every platform. `alpha` is consumed only by the sectorial
/// classes, where it prescribes the exact sector half-angle.
struct GenSpec {
    GenClass cls = GenClass::general;
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    double scale = 1.0;
    double alpha = 0.0;
};

namespace detail {

inline Matrix gaussian(std::size_t n, double scale, rng::Stream& st) {
    Matrix g(n);
    for (std::size_t i = 0; i < n * n; ++i) g.data()[i] = scale * st.complex_normal();
    return g;
}

inline Matrix hermitian_draw(std::size_t n, double scale, rng::Stream& st) {
    const Matrix g = gaussian(n, scale, st);
    return cplx{0.5, 0.0} * (g + adjoint(g));
}

inline Matrix gram_psd(std::size_t n, double scale, rng::Stream& st) {
    const Matrix g = gaussian(n, 1.0, st);
    return cplx{scale / static_cast<double>(n), 0.0} * (g * adjoint(g));
}

/// Gram matrix plus a small ridge: eigenvalues at least 1e-3 * scale.
inline Matrix ridge_pd(std::size_t n, double scale, rng::Stream& st) {
    Matrix p = gram_psd(n, scale, st);
    for (std::size_t i = 0; i < n; ++i) p(i, i) += 1e-3 * scale;
    return p;
}

inline Matrix hermitian_sqrt(const Matrix& a) {
    const auto eig = hermitian_eig(a);
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx sum{};
            for (std::size_t k = 0; k < n; ++k)
                sum += eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k)) *
                       std::sqrt(std::max(0.0, eig.eigenvalues[k]));
            out(i, j) = sum;
        }
    return out;
}

}  // namespace detail

/// Haar-distributed unitary: modified Gram-Schmidt on a Gaussian matrix. The
/// triangular factor has positive real diagonal by construction, which fixes
/// the phase ambiguity and yields the Haar measure.
inline Matrix random_unitary(std::size_t n, rng::Stream& st) {
    if (n == 0) throw dimension_error("matrix dimension must be positive");
    for (;;) {
        Matrix q = detail::gaussian(n, 1.0, st);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i < j; ++i) {
                    cplx coeff{};
                    for (std::size_t k = 0; k < n; ++k)
                        coeff += q(k, j) * std::conj(q(k, i));
                    for (std::size_t k = 0; k < n; ++k) q(k, j) -= coeff * q(k, i);
                }
            }
            double nrm2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) nrm2 += std::norm(q(k, j));
            if (nrm2 < 1e-16) {
                ok = false;
                break;
            }
            const double inv = 1.0 / std::sqrt(nrm2);
            for (std::size_t k = 0; k < n; ++k) q(k, j) *= inv;
        }
        if (ok) return q;
    }
}

namespace detail {

inline void check_common(const GenSpec& spec) {
    if (spec.dim == 0) throw parameter_error("generator dimension must be positive");
    if (!(spec.scale > 0.0) || !std::isfinite(spec.scale))
        throw parameter_error("generator scale must be positive and finite");
}

inline void check_alpha(const GenSpec& spec) {
    if (!(spec.alpha >= 0.0 && spec.alpha < pi / 2))
        throw parameter_error("sector half-angle must lie in [0, pi/2)");
}

/// X = A^{1/2} (I + i S) A^{1/2} with A positive definite and S Hermitian
/// scaled so its extreme |eigenvalue| equals tan(alpha). The congruence
/// preserves the eigenvalues of S as the ratio Im/Re, so the sector index of
/// X is exactly alpha.
inline Matrix sectorial_draw(const GenSpec& spec) {
    check_alpha(spec);
    const std::size_t n = spec.dim;
    rng::Stream st_a(spec.seed, "wrange.gen.sectorial.re");
    const Matrix a = ridge_pd(n, spec.scale, st_a);
    if (spec.alpha == 0.0) return a;

    rng::Stream st_s(spec.seed, "wrange.gen.sectorial.slope");
    Matrix s = hermitian_draw(n, 1.0, st_s);
    auto vals = hermitian_eigenvalues(s);
    double smax = std::max(std::abs(vals.front()), std::abs(vals.back()));
    if (smax < 1e-12) {
        s = Matrix::identity(n);
        smax = 1.0;
    }
    const double factor = std::tan(spec.alpha) / smax;
    s = cplx{factor, 0.0} * s;

    const Matrix root = hermitian_sqrt(a);
    Matrix mid = Matrix::identity(n);
    for (std::size_t i = 0; i < n * n; ++i)
        mid.data()[i] += cplx{0.0, 1.0} * s.data()[i];
    return root * mid * root;
}

inline Matrix normal_draw(std::size_t n, double scale, std::uint64_t seed,
                          std::string_view tag) {
    rng::Stream st_u(seed, tag, 0);
    rng::Stream st_d(seed, tag, 1);
    const Matrix u = random_unitary(n, st_u);
    Matrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = scale * st_d.complex_normal();
    return u * d * adjoint(u);
}

/// Two cubic polynomials in a shared base matrix. They commute by
/// construction; when the base is normal, both values are normal too.
inline std::pair<Matrix, Matrix> polynomial_pair(const GenSpec& spec, Matrix base) {
    const std::size_t n = spec.dim;
    const double fro = frobenius_norm(base);
    base = (fro < 1e-12) ? Matrix::identity(n) : cplx{1.0 / fro, 0.0} * base;

    rng::Stream st_c(spec.seed, "wrange.gen.pair.coeff");
    Matrix x(n), y(n);
    Matrix power = Matrix::identity(n);
    for (int k = 0; k < 4; ++k) {
        const cplx ck = spec.scale * st_c.complex_normal();
        const cplx dk = spec.scale * st_c.complex_normal();
        for (std::size_t i = 0; i < n * n; ++i) {
            x.data()[i] += ck * power.data()[i];
            y.data()[i] += dk * power.data()[i];
        }
        if (k < 3) power = power * base;
    }
    return {std::move(x), std::move(y)};
}

}  // namespace detail

/// Draws one matrix of the requested class. Pair classes must go through
/// generate_pair instead.
inline Matrix generate(const GenSpec& spec) {
    detail::check_common(spec);
    const std::size_t n = spec.dim;
    switch (spec.cls) {
        case GenClass::general: {
            rng::Stream st(spec.seed, "wrange.gen.general");
            return detail::gaussian(n, spec.scale, st);
        }
        case GenClass::hermitian: {
            rng::Stream st(spec.seed, "wrange.gen.hermitian");
            return detail::hermitian_draw(n, spec.scale, st);
        }
        case GenClass::psd: {
            rng::Stream st(spec.seed, "wrange.gen.psd");
            return detail::gram_psd(n, spec.scale, st);
        }
        case GenClass::pd: {
            rng::Stream st(spec.seed, "wrange.gen.pd");
            return detail::ridge_pd(n, spec.scale, st);
        }
        case GenClass::normal:
            return detail::normal_draw(n, spec.scale, spec.seed, "wrange.gen.normal");
        case GenClass::accretive: {
            rng::Stream st_re(spec.seed, "wrange.gen.accretive.re");
            rng::Stream st_im(spec.seed, "wrange.gen.accretive.im");
            const Matrix re = detail::ridge_pd(n, spec.scale, st_re);
            const Matrix im = detail::hermitian_draw(n, spec.scale, st_im);
            return re + cplx{0.0, 1.0} * im;
        }
        case GenClass::dissipative: {
            rng::Stream st_re(spec.seed, "wrange.gen.dissipative.re");
            rng::Stream st_im(spec.seed, "wrange.gen.dissipative.im");
            const Matrix re = detail::hermitian_draw(n, spec.scale, st_re);
            const Matrix im = detail::ridge_pd(n, spec.scale, st_im);
            return re + cplx{0.0, 1.0} * im;
        }
        case GenClass::accretive_dissipative: {
            rng::Stream st_re(spec.seed, "wrange.gen.ad.re");
            rng::Stream st_im(spec.seed, "wrange.gen.ad.im");
            const Matrix re = detail::ridge_pd(n, spec.scale, st_re);
            const Matrix im = detail::ridge_pd(n, spec.scale, st_im);
            return re + cplx{0.0, 1.0} * im;
        }
        case GenClass::sectorial_with_index:
            return detail::sectorial_draw(spec);
        case GenClass::rotated_sectorial: {
            const Matrix x = detail::sectorial_draw(spec);
            rng::Stream st(spec.seed, "wrange.gen.sectorial.rotation");
            const double psi = st.uniform(0.0, two_pi);
            return cplx{std::cos(psi), std::sin(psi)} * x;
        }
        case GenClass::commuting_pair:
        case GenClass::normal_commuting_pair:
            throw parameter_error("pair classes require generate_pair");
    }
    throw parameter_error("unknown generator class");
}

/// Draws a commuting pair (two polynomials in a shared base matrix).
inline std::pair<Matrix, Matrix> generate_pair(const GenSpec& spec) {
    detail::check_common(spec);
    switch (spec.cls) {
        case GenClass::commuting_pair: {
            rng::Stream st(spec.seed, "wrange.gen.pair.base");
            return detail::polynomial_pair(spec, detail::gaussian(spec.dim, 1.0, st));
        }
        case GenClass::normal_commuting_pair:
            return detail::polynomial_pair(
                spec,
                detail::normal_draw(spec.dim, 1.0, spec.seed, "wrange.gen.pair.normal"));
        default:
            throw parameter_error("not a pair class; use generate");
    }
}

}  // namespace wrange
