#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrange/bounds.hpp"
#include "wrange/randgen.hpp"
#include "wrange/rng.hpp"

namespace wrange {

/// Fuzz sweep configuration. Dimensions are cycled over trials in order.
/// `alpha`, when set, both parameterizes the sectorial generators and is
/// passed to the evaluator as the half-angle override; otherwise half-angles
/// are drawn per factor and the evaluator uses each factor's computed index.
struct FuzzOptions {
    std::uint64_t trials = 500;
    std::vector<std::size_t> dims = {2, 3, 4, 6};
    std::uint64_t seed = 0;
    std::optional<double> alpha;
    std::size_t variadic_factors = 3;
    double scale = 1.0;
    double membership_slack = 1e-6;
    double violation_tol = 1e-7;
};

struct FuzzViolation {
    std::uint64_t trial = 0;
    std::size_t dim = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// Aggregate of one bound's sweep: how many instances matched the
/// hypothesis, the worst and mean lhs/rhs ratio over those, and every
/// violation. Reproducible from (id, seed) alone.
struct FuzzSummary {
    std::string id;
    std::string generator;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t applicable = 0;
    double worst_ratio = 0.0;
    double mean_ratio = 0.0;
    std::vector<FuzzViolation> violations;
};

namespace detail {

inline double draw_half_angle(rng::Stream& st) { return st.uniform(0.0, 0.47 * pi); }

/// Factors matching the hypothesis of `spec`, drawn deterministically from
/// the trial seed.
inline std::vector<Matrix> fuzz_factors(const BoundSpec& spec, std::size_t dim,
                                        std::uint64_t trial_seed,
                                        const FuzzOptions& opt, std::string& label) {
    const std::size_t m =
        (spec.arity == BoundArity::binary) ? 2 : std::max<std::size_t>(2, opt.variadic_factors);
    auto sub = [&](std::uint64_t j) { return rng::derive_seed(trial_seed, "factor", j); };
    const std::string& id = spec.id;

    if (id == "GEN4" || id == "HAD2") {
        label = "general";
        return {generate({GenClass::general, dim, sub(0), opt.scale}),
                generate({GenClass::general, dim, sub(1), opt.scale})};
    }
    if (id == "COMM2") {
        label = "commuting-pair";
        auto [x, y] = generate_pair({GenClass::commuting_pair, dim, trial_seed, opt.scale});
        return {std::move(x), std::move(y)};
    }
    if (id == "NORMCOMM1") {
        label = "normal-commuting-pair";
        auto [x, y] =
            generate_pair({GenClass::normal_commuting_pair, dim, trial_seed, opt.scale});
        return {std::move(x), std::move(y)};
    }
    if (id == "NORMHAD") {
        label = "normal+general";
        Matrix a = generate({GenClass::normal, dim, sub(0), opt.scale});
        Matrix b = generate({GenClass::general, dim, sub(1), opt.scale});
        rng::Stream coin(trial_seed, "wrange.fuzz.order");
        std::vector<Matrix> out;
        if (coin.below(2) == 0) {
            out.push_back(std::move(a));
            out.push_back(std::move(b));
        } else {
            out.push_back(std::move(b));
            out.push_back(std::move(a));
        }
        return out;
    }
    if (id == "PSDHAD") {
        label = "psd+general";
        return {generate({GenClass::psd, dim, sub(0), opt.scale}),
                generate({GenClass::general, dim, sub(1), opt.scale})};
    }
    if (id == "ADPROD2" || id == "ADPROD-M" || id == "ADHAD-M") {
        label = "accretive-dissipative";
        std::vector<Matrix> out;
        for (std::size_t j = 0; j < m; ++j)
            out.push_back(generate({GenClass::accretive_dissipative, dim, sub(j), opt.scale}));
        return out;
    }
    if (id == "ACCPROD" || id == "ACCPROD-M" || id == "ACCHAD-M") {
        label = "accretive-or-dissipative";
        rng::Stream coin(trial_seed, "wrange.fuzz.halfplane");
        const GenClass cls =
            (coin.below(2) == 0) ? GenClass::accretive : GenClass::dissipative;
        std::vector<Matrix> out;
        for (std::size_t j = 0; j < m; ++j)
            out.push_back(generate({cls, dim, sub(j), opt.scale}));
        return out;
    }
    // remaining ids are the sectorial family
    label = "rotated-sectorial";
    rng::Stream angles(trial_seed, "wrange.fuzz.alpha");
    const double shared = draw_half_angle(angles);
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < m; ++j) {
        double alpha;
        if (opt.alpha)
            alpha = *opt.alpha;
        else if (id == "SECPROD-SAME")
            alpha = shared;
        else
            alpha = (j == 0) ? shared : draw_half_angle(angles);
        out.push_back(generate({GenClass::rotated_sectorial, dim, sub(j), opt.scale, alpha}));
    }
    return out;
}

}  // namespace detail

/// Sweeps one bound over `opt.trials` hypothesis-matching random instances.
/// Deterministic per (bound id, seed): trial draws depend only on those and
/// the trial index.
inline FuzzSummary fuzz_bound(std::string_view id, const FuzzOptions& opt) {
    const BoundSpec& spec = catalog_entry(id);
    if (opt.dims.empty()) throw parameter_error("fuzz needs at least one dimension");
    for (std::size_t d : opt.dims)
        if (d == 0) throw parameter_error("fuzz dimensions must be positive");
    if (opt.variadic_factors < 2)
        throw parameter_error("variadic bounds need at least 2 factors");

    EvalOptions eopt;
    eopt.membership_slack = opt.membership_slack;
    eopt.alpha = opt.alpha;
    eopt.violation_tol = opt.violation_tol;

    FuzzSummary sum;
    sum.id = spec.id;
    sum.seed = opt.seed;
    sum.trials = opt.trials;

    double ratio_total = 0.0;
    std::uint64_t ratio_count = 0;
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
        const std::size_t dim = opt.dims[t % opt.dims.size()];
        const std::uint64_t trial_seed =
            rng::derive_seed(opt.seed, "wrange.fuzz." + spec.id, t);
        const auto factors = detail::fuzz_factors(spec, dim, trial_seed, opt, sum.generator);
        const BoundReport report = evaluate(spec.id, factors, eopt);
        if (!report.applicable) continue;
        ++sum.applicable;
        if (report.ratio) {
            ratio_total += *report.ratio;
            ++ratio_count;
            sum.worst_ratio = std::max(sum.worst_ratio, *report.ratio);
        }
        if (is_violation(report, opt.violation_tol))
            sum.violations.push_back(
                {t, dim, report.lhs, report.rhs, report.ratio.value_or(0.0)});
    }
    if (ratio_count > 0) sum.mean_ratio = ratio_total / static_cast<double>(ratio_count);
    return sum;
}

/// Sweeps the whole catalog in catalog order.
inline std::vector<FuzzSummary> fuzz_catalog(const FuzzOptions& opt) {
    std::vector<FuzzSummary> out;
    out.reserve(catalog().size());
    for (const auto& spec : catalog()) out.push_back(fuzz_bound(spec.id, opt));
    return out;
}

}  // namespace wrange
