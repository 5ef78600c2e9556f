#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrange/eig.hpp"
#include "wrange/matrix.hpp"
#include "wrange/nrange.hpp"
#include "wrange/sector.hpp"

namespace wrange {

enum class BoundKind { product, hadamard };
enum class BoundArity { binary, variadic };

/// Catalog entry: a numerical-radius upper bound for a product or entrywise
/// product, valid under `hypothesis`, with the constant described by
/// `constant_form`.
struct BoundSpec {
    std::string id;
    BoundKind kind = BoundKind::product;
    BoundArity arity = BoundArity::binary;
    std::string hypothesis;
    std::string constant_form;
};

/// One evaluation of a bound on concrete factors. `applicable` reports
/// whether the factors satisfy the hypothesis within tolerance; `ratio` is
/// lhs/rhs when the right side is positive and the hypothesis holds; `slack`
/// is rhs - lhs. `details` carries the per-bound diagnostics (half-angles,
/// rotations, per-factor radii, hypothesis residuals).
struct BoundReport {
    std::string id;
    bool applicable = false;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> ratio;
    double slack = 0.0;
    std::map<std::string, double> details;
};

/// Evaluation knobs. `alpha`, when set, replaces the computed sector index of
/// every sectorial factor: the factor must fit the supplied half-angle within
/// `membership_slack`, and the bound's constant then uses the supplied value.
struct EvalOptions {
    double membership_slack = 1e-6;
    std::optional<double> alpha;
    double violation_tol = 1e-7;
};

inline const std::vector<BoundSpec>& catalog() {
    static const std::vector<BoundSpec> entries = {
        {"GEN4", BoundKind::product, BoundArity::binary, "general", "4"},
        {"HAD2", BoundKind::hadamard, BoundArity::binary, "general", "2"},
        {"COMM2", BoundKind::product, BoundArity::binary, "commuting", "2"},
        {"NORMCOMM1", BoundKind::product, BoundArity::binary, "normal-factor+commuting",
         "1"},
        {"NORMHAD", BoundKind::hadamard, BoundArity::binary, "normal-factor", "1"},
        {"PSDHAD", BoundKind::hadamard, BoundArity::binary, "psd-left-factor",
         "max_j a_jj"},
        {"SECPROD", BoundKind::product, BoundArity::binary, "sectorial",
         "sec(alpha_1) sec(alpha_2)"},
        {"SECPROD-SAME", BoundKind::product, BoundArity::binary, "sectorial",
         "sec(alpha)^2 with alpha = max(alpha_1, alpha_2)"},
        {"ADPROD2", BoundKind::product, BoundArity::binary, "accretive-dissipative",
         "2"},
        {"ACCPROD", BoundKind::product, BoundArity::binary, "accretive-or-dissipative",
         "1 + a^2 with a = max slope"},
        {"SECPROD-M", BoundKind::product, BoundArity::variadic, "sectorial",
         "prod_j sec(alpha_j)"},
        {"ADPROD-M", BoundKind::product, BoundArity::variadic, "accretive-dissipative",
         "2^(m/2)"},
        {"ACCPROD-M", BoundKind::product, BoundArity::variadic,
         "accretive-or-dissipative", "(1 + a^2)^(m/2) with a = max slope"},
        {"SECHAD", BoundKind::hadamard, BoundArity::binary, "sectorial",
         "sec(alpha_1) sec(alpha_2)"},
        {"SECHAD-M", BoundKind::hadamard, BoundArity::variadic, "sectorial",
         "prod_j sec(alpha_j)"},
        {"ADHAD-M", BoundKind::hadamard, BoundArity::variadic, "accretive-dissipative",
         "2^(m/2)"},
        {"ACCHAD-M", BoundKind::hadamard, BoundArity::variadic,
         "accretive-or-dissipative", "(1 + a^2)^(m/2) with a = max slope"},
        {"DIAGHAD", BoundKind::hadamard, BoundArity::binary, "sectorial",
         "sec(alpha_1) sec(alpha_2) min(maxdiag(X) w(Y), maxdiag(Y) w(X))"},
        {"TANHAD", BoundKind::hadamard, BoundArity::binary, "sectorial",
         "min((1+tan(alpha_1)) w(Re(z1 X)) w(Y), (1+tan(alpha_2)) w(X) w(Re(z2 Y)))"},
    };
    return entries;
}

inline const BoundSpec& catalog_entry(std::string_view id) {
    for (const auto& spec : catalog())
        if (spec.id == id) return spec;
    throw catalog_error("unknown bound id: " + std::string(id));
}

namespace detail {

inline Matrix product_of(const std::vector<Matrix>& fs) {
    Matrix out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = out * fs[i];
    return out;
}

inline Matrix hadamard_of(const std::vector<Matrix>& fs) {
    Matrix out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = hadamard(out, fs[i]);
    return out;
}

inline double commutator_residual(const Matrix& x, const Matrix& y) {
    return frobenius_norm(x * y - y * x);
}

inline bool commute(const Matrix& x, const Matrix& y) {
    return commutator_residual(x, y) <=
           1e-10 * (1.0 + frobenius_norm(x) * frobenius_norm(y));
}

inline double normality_residual(const Matrix& x) {
    return frobenius_norm(adjoint(x) * x - x * adjoint(x));
}

inline bool is_normal_matrix(const Matrix& x) {
    const double fro = frobenius_norm(x);
    return normality_residual(x) <= 1e-10 * (1.0 + fro * fro);
}

inline bool is_hermitian_psd(const Matrix& x) {
    const double fro = frobenius_norm(x);
    if (hermitian_deviation(x) > 1e-10 * (1.0 + fro)) return false;
    return hermitian_eigenvalues(x).back() >= -1e-10 * (1.0 + fro);
}

/// Sector half-angle plus rotation for one factor. Without an override the
/// half-angle is the computed optimal index; with one, the factor must fit
/// the supplied half-angle (within the membership slack), which then feeds
/// the bound's constant.
struct SectorWitness {
    bool ok = false;
    double alpha = 0.0;
    double rotation = 0.0;
};

inline SectorWitness sector_witness(const Matrix& x, const EvalOptions& opt) {
    SectorClassification cls;
    try {
        cls = optimal_rotation(x);
    } catch (const degenerate_input_error&) {
        return {};
    }
    if (!cls.sectorial) return {};
    if (opt.alpha) {
        if (*cls.index <= *opt.alpha + opt.membership_slack)
            return {true, *opt.alpha, *cls.rotation};
        return {};
    }
    return {true, *cls.index, *cls.rotation};
}

inline std::vector<SectorWitness> sector_witnesses(const std::vector<Matrix>& fs,
                                                   const EvalOptions& opt) {
    std::vector<SectorWitness> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(sector_witness(f, opt));
    return out;
}

/// Slope of the half-plane factor: tan of the sector index of X when X is
/// accretive, or of -iX when X is dissipative (rotating the upper half-plane
/// onto the right one). Nullopt when neither applies.
inline std::optional<double> halfplane_slope(const Matrix& x) {
    if (is_accretive(x)) return std::tan(accretive_sector_index(x));
    const Matrix turned = cplx{0.0, -1.0} * x;
    if (is_accretive(turned)) return std::tan(accretive_sector_index(turned));
    return std::nullopt;
}

/// Numerical radius of a Hermitian matrix: its spectral radius.
inline double hermitian_radius(const Matrix& h) {
    const auto vals = hermitian_eigenvalues(h);
    return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

inline BoundReport finish(std::string id, bool applicable, double lhs, double rhs,
                          std::map<std::string, double> details) {
    BoundReport r;
    r.id = std::move(id);
    r.applicable = applicable;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    if (applicable && rhs > 0.0) r.ratio = lhs / rhs;
    r.details = std::move(details);
    return r;
}

inline double composed_radius(BoundKind kind, const std::vector<Matrix>& fs) {
    return numerical_radius(kind == BoundKind::product ? product_of(fs)
                                                       : hadamard_of(fs));
}

inline std::vector<double> factor_radii(const std::vector<Matrix>& fs) {
    std::vector<double> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(numerical_radius(f));
    return out;
}

inline double product_of_values(const std::vector<double>& vs) {
    double p = 1.0;
    for (double v : vs) p *= v;
    return p;
}

inline void add_indexed(std::map<std::string, double>& details, std::string_view stem,
                        const std::vector<double>& vs) {
    for (std::size_t j = 0; j < vs.size(); ++j)
        details[std::string(stem) + "_" + std::to_string(j + 1)] = vs[j];
}

// ---- per-bound evaluators ------------------------------------------------

inline BoundReport eval_const_bound(const BoundSpec& spec, double constant,
                                    bool applicable, const std::vector<Matrix>& fs,
                                    std::map<std::string, double> details) {
    const auto radii = factor_radii(fs);
    add_indexed(details, "omega", radii);
    const double lhs = composed_radius(spec.kind, fs);
    const double rhs = constant * product_of_values(radii);
    return finish(spec.id, applicable, lhs, rhs, std::move(details));
}

inline BoundReport eval_sector_bound(const BoundSpec& spec, const std::vector<Matrix>& fs,
                                     const EvalOptions& opt, bool same_alpha) {
    const auto wits = sector_witnesses(fs, opt);
    bool applicable = true;
    for (const auto& w : wits) applicable = applicable && w.ok;

    std::map<std::string, double> details;
    const auto radii = factor_radii(fs);
    add_indexed(details, "omega", radii);
    const double lhs = composed_radius(spec.kind, fs);

    double rhs = 0.0;
    if (applicable) {
        std::vector<double> alphas, rotations;
        for (const auto& w : wits) {
            alphas.push_back(w.alpha);
            rotations.push_back(w.rotation);
        }
        add_indexed(details, "alpha", alphas);
        add_indexed(details, "rotation", rotations);
        double constant = 1.0;
        if (same_alpha) {
            const double amax = std::max(alphas[0], alphas[1]);
            const double sec = 1.0 / std::cos(amax);
            constant = sec * sec;
            details["alpha"] = amax;
        } else {
            for (double a : alphas) constant /= std::cos(a);
        }
        rhs = constant * product_of_values(radii);
    }
    return finish(spec.id, applicable, lhs, rhs, std::move(details));
}

inline BoundReport eval_ad_bound(const BoundSpec& spec, const std::vector<Matrix>& fs) {
    bool applicable = true;
    for (const auto& f : fs) applicable = applicable && is_accretive_dissipative(f);
    const double m = static_cast<double>(fs.size());
    std::map<std::string, double> details;
    details["factors"] = m;
    return eval_const_bound(spec, std::pow(2.0, 0.5 * m), applicable, fs,
                            std::move(details));
}

inline BoundReport eval_slope_bound(const BoundSpec& spec, const std::vector<Matrix>& fs) {
    std::map<std::string, double> details;
    bool applicable = true;
    double a = 0.0;
    std::vector<double> slopes;
    for (const auto& f : fs) {
        const auto s = halfplane_slope(f);
        if (!s) {
            applicable = false;
            break;
        }
        slopes.push_back(*s);
        a = std::max(a, *s);
    }
    if (applicable) {
        add_indexed(details, "slope", slopes);
        details["slope"] = a;
    }
    const double m = static_cast<double>(fs.size());
    const double constant = applicable ? std::pow(1.0 + a * a, 0.5 * m) : 0.0;
    const auto radii = factor_radii(fs);
    add_indexed(details, "omega", radii);
    const double lhs = composed_radius(spec.kind, fs);
    const double rhs = constant * product_of_values(radii);
    return finish(spec.id, applicable, lhs, rhs, std::move(details));
}

inline BoundReport eval_diaghad(const BoundSpec& spec, const std::vector<Matrix>& fs,
                                const EvalOptions& opt) {
    const auto wits = sector_witnesses(fs, opt);
    const bool applicable = wits[0].ok && wits[1].ok;
    const double wx = numerical_radius(fs[0]);
    const double wy = numerical_radius(fs[1]);
    const double dx = max_abs_diagonal(fs[0]);
    const double dy = max_abs_diagonal(fs[1]);
    std::map<std::string, double> details{{"omega_1", wx},
                                          {"omega_2", wy},
                                          {"max_diag_1", dx},
                                          {"max_diag_2", dy}};
    const double lhs = numerical_radius(hadamard_of(fs));
    double rhs = 0.0;
    if (applicable) {
        details["alpha_1"] = wits[0].alpha;
        details["alpha_2"] = wits[1].alpha;
        rhs = std::min(dx * wy, dy * wx) /
              (std::cos(wits[0].alpha) * std::cos(wits[1].alpha));
    }
    return finish(spec.id, applicable, lhs, rhs, std::move(details));
}

inline BoundReport eval_tanhad(const BoundSpec& spec, const std::vector<Matrix>& fs,
                               const EvalOptions& opt) {
    const auto wits = sector_witnesses(fs, opt);
    const bool applicable = wits[0].ok && wits[1].ok;
    const double wx = numerical_radius(fs[0]);
    const double wy = numerical_radius(fs[1]);
    std::map<std::string, double> details{{"omega_1", wx}, {"omega_2", wy}};
    const double lhs = numerical_radius(hadamard_of(fs));
    double rhs = 0.0;
    if (applicable) {
        // The half-angle pairs with the rotation that realizes it, so the
        // "real part" factor is taken after that rotation.
        const cplx z1{std::cos(wits[0].rotation), std::sin(wits[0].rotation)};
        const cplx z2{std::cos(wits[1].rotation), std::sin(wits[1].rotation)};
        const double rx = hermitian_radius(cartesian_decompose(z1 * fs[0]).real_part);
        const double ry = hermitian_radius(cartesian_decompose(z2 * fs[1]).real_part);
        const double first = (1.0 + std::tan(wits[0].alpha)) * rx * wy;
        const double second = (1.0 + std::tan(wits[1].alpha)) * wx * ry;
        const double amax = std::max(wits[0].alpha, wits[1].alpha);
        rhs = std::min(first, second);
        details["alpha_1"] = wits[0].alpha;
        details["alpha_2"] = wits[1].alpha;
        details["omega_re_1"] = rx;
        details["omega_re_2"] = ry;
        details["rhs_first"] = first;
        details["rhs_second"] = second;
        details["alpha_max"] = amax;
        details["rhs_uniform"] = (1.0 + std::tan(amax)) * wx * wy;
    }
    return finish(spec.id, applicable, lhs, rhs, std::move(details));
}

}  // namespace detail

/// Evaluates one catalog bound on concrete factors. Binary bounds take
/// exactly two factors; variadic bounds take two or more. All factors must
/// share one dimension.
inline BoundReport evaluate(std::string_view id, const std::vector<Matrix>& factors,
                            const EvalOptions& opt = {}) {
    const BoundSpec& spec = catalog_entry(id);
    if (spec.arity == BoundArity::binary && factors.size() != 2)
        throw parameter_error(spec.id + " expects exactly 2 factors");
    if (factors.size() < 2) throw parameter_error("bounds need at least 2 factors");
    for (const auto& f : factors) {
        detail::require_nonempty(f);
        detail::require_same_dim(factors.front(), f);
    }

    using detail::eval_const_bound;
    const auto& fs = factors;

    if (spec.id == "GEN4") return eval_const_bound(spec, 4.0, true, fs, {});
    if (spec.id == "HAD2") return eval_const_bound(spec, 2.0, true, fs, {});
    if (spec.id == "COMM2") {
        const double resid = detail::commutator_residual(fs[0], fs[1]);
        return eval_const_bound(spec, 2.0, detail::commute(fs[0], fs[1]), fs,
                                {{"commutator_residual", resid}});
    }
    if (spec.id == "NORMCOMM1") {
        const bool n1 = detail::is_normal_matrix(fs[0]);
        const bool n2 = detail::is_normal_matrix(fs[1]);
        const bool applicable = (n1 || n2) && detail::commute(fs[0], fs[1]);
        return eval_const_bound(
            spec, 1.0, applicable, fs,
            {{"commutator_residual", detail::commutator_residual(fs[0], fs[1])},
             {"normal_1", n1 ? 1.0 : 0.0},
             {"normal_2", n2 ? 1.0 : 0.0}});
    }
    if (spec.id == "NORMHAD") {
        const bool n1 = detail::is_normal_matrix(fs[0]);
        const bool n2 = detail::is_normal_matrix(fs[1]);
        return eval_const_bound(spec, 1.0, n1 || n2, fs,
                                {{"normal_1", n1 ? 1.0 : 0.0},
                                 {"normal_2", n2 ? 1.0 : 0.0}});
    }
    if (spec.id == "PSDHAD") {
        const bool applicable = detail::is_hermitian_psd(fs[0]);
        const double dx = max_abs_diagonal(fs[0]);
        const double wy = numerical_radius(fs[1]);
        const double lhs = numerical_radius(hadamard(fs[0], fs[1]));
        return detail::finish(spec.id, applicable, lhs, dx * wy,
                              {{"max_diag_1", dx}, {"omega_2", wy}});
    }
    if (spec.id == "SECPROD" || spec.id == "SECHAD" || spec.id == "SECPROD-M" ||
        spec.id == "SECHAD-M")
        return detail::eval_sector_bound(spec, fs, opt, false);
    if (spec.id == "SECPROD-SAME") return detail::eval_sector_bound(spec, fs, opt, true);
    if (spec.id == "ADPROD2" || spec.id == "ADPROD-M" || spec.id == "ADHAD-M")
        return detail::eval_ad_bound(spec, fs);
    if (spec.id == "ACCPROD" || spec.id == "ACCPROD-M" || spec.id == "ACCHAD-M")
        return detail::eval_slope_bound(spec, fs);
    if (spec.id == "DIAGHAD") return detail::eval_diaghad(spec, fs, opt);
    if (spec.id == "TANHAD") return detail::eval_tanhad(spec, fs, opt);
    throw catalog_error("unknown bound id: " + spec.id);
}

/// Whether the report flags a genuine violation: applicable and lhs exceeding
/// rhs by more than the relative tolerance.
inline bool is_violation(const BoundReport& r, double rel_tol = 1e-7) {
    return r.applicable && r.lhs > r.rhs * (1.0 + rel_tol);
}

/// Evaluates every catalog bound on the factor list: binary bounds on the
/// first two factors, variadic bounds on the whole list. Reports are sorted
/// by bound id.
inline std::vector<BoundReport> verify_all(const std::vector<Matrix>& factors,
                                           const EvalOptions& opt = {}) {
    if (factors.size() < 2) throw parameter_error("bounds need at least 2 factors");
    std::vector<BoundReport> reports;
    reports.reserve(catalog().size());
    const std::vector<Matrix> head{factors[0], factors[1]};
    for (const auto& spec : catalog()) {
        const auto& args = (spec.arity == BoundArity::binary) ? head : factors;
        reports.push_back(evaluate(spec.id, args, opt));
    }
    std::sort(reports.begin(), reports.end(),
              [](const BoundReport& a, const BoundReport& b) { return a.id < b.id; });
    return reports;
}

}  // namespace wrange
