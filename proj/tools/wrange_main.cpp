// Command line front end: classify, radius, range, verify, fuzz. Every
// command prints a JSON report to stdout; reports are deterministic for fixed
// inputs except for the timestamp field. Exit codes: 0 success, 1 at least
// one bound violation, 2 malformed input or usage.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <wrange/wrange.hpp>

namespace {

using nlohmann::json;

std::string iso_timestamp() {
    const std::time_t tt = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json report_skeleton(const std::string& command) {
    json j;
    j["command"] = command;
    j["version"] = wrange::version;
    j["timestamp"] = iso_timestamp();
    j["inputs"] = json::object();
    j["outputs"] = json::object();
    j["violations"] = json::array();
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json to_json(const wrange::BoundReport& r) {
    json j;
    j["id"] = r.id;
    j["applicable"] = r.applicable;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
    j["slack"] = r.slack;
    j["details"] = json::object();
    for (const auto& [key, value] : r.details) j["details"][key] = value;
    return j;
}

json to_json(const wrange::FuzzSummary& s) {
    json j;
    j["id"] = s.id;
    j["generator"] = s.generator;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["applicable"] = s.applicable;
    j["worst_ratio"] = s.worst_ratio;
    j["mean_ratio"] = s.mean_ratio;
    j["violations"] = json::array();
    for (const auto& v : s.violations)
        j["violations"].push_back({{"trial", v.trial},
                                   {"dim", v.dim},
                                   {"lhs", v.lhs},
                                   {"rhs", v.rhs},
                                   {"ratio", v.ratio}});
    return j;
}

struct ClassifyArgs {
    std::string file;
};

int run_classify(const ClassifyArgs& a) {
    const wrange::Matrix x = wrange::read_matrix_file(a.file);
    const auto cls = wrange::optimal_rotation(x);
    json j = report_skeleton("classify");
    j["inputs"]["file"] = a.file;
    auto& out = j["outputs"];
    out["accretive"] = cls.accretive;
    out["dissipative"] = cls.dissipative;
    out["accretive_dissipative"] = cls.accretive_dissipative;
    out["sectorial"] = cls.sectorial;
    out["rotation"] = cls.rotation ? json(*cls.rotation) : json(nullptr);
    out["index"] = cls.index ? json(*cls.index) : json(nullptr);
    emit(j);
    return 0;
}

struct RadiusArgs {
    std::string file;
};

int run_radius(const RadiusArgs& a) {
    const wrange::Matrix x = wrange::read_matrix_file(a.file);
    const double omega = wrange::numerical_radius(x);
    const double norm = wrange::operator_norm(x);
    json j = report_skeleton("radius");
    j["inputs"]["file"] = a.file;
    auto& out = j["outputs"];
    out["omega"] = omega;
    out["operator_norm"] = norm;
    out["lower"] = 0.5 * norm;
    out["upper"] = norm;
    out["bracket_satisfied"] =
        omega >= 0.5 * norm - 1e-8 && omega <= norm + 1e-8;
    emit(j);
    return 0;
}

struct RangeArgs {
    std::string file;
    std::size_t samples = 360;
    std::string out;
};

int run_range(const RangeArgs& a) {
    const wrange::Matrix x = wrange::read_matrix_file(a.file);
    const auto boundary = wrange::range_boundary(x, a.samples);
    wrange::write_boundary_csv(a.out, boundary);
    json j = report_skeleton("range");
    j["inputs"]["file"] = a.file;
    j["inputs"]["samples"] = a.samples;
    j["outputs"]["csv"] = a.out;
    j["outputs"]["samples"] = boundary.points.size();
    emit(j);
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> files;
    std::string bound = "all";
    double slack = 1e-6;
    std::optional<double> alpha;
    double rhs_scale = 1.0;
};

int run_verify(const VerifyArgs& a) {
    std::vector<wrange::Matrix> factors;
    factors.reserve(a.files.size());
    for (const auto& f : a.files) factors.push_back(wrange::read_matrix_file(f));

    wrange::EvalOptions opt;
    opt.membership_slack = a.slack;
    opt.alpha = a.alpha;

    std::vector<wrange::BoundReport> reports;
    if (a.bound == "all")
        reports = wrange::verify_all(factors, opt);
    else
        reports.push_back(wrange::evaluate(a.bound, factors, opt));

    json j = report_skeleton("verify");
    j["inputs"]["files"] = a.files;
    j["inputs"]["bound"] = a.bound;
    j["inputs"]["slack"] = a.slack;
    j["inputs"]["alpha"] = a.alpha ? json(*a.alpha) : json(nullptr);
    j["inputs"]["rhs_scale"] = a.rhs_scale;
    auto& out = j["outputs"];
    out["reports"] = json::array();
    for (const auto& r : reports) out["reports"].push_back(to_json(r));
    for (const auto& r : reports) {
        const double rhs = r.rhs * a.rhs_scale;
        if (r.applicable && r.lhs > rhs * (1.0 + opt.violation_tol))
            j["violations"].push_back({{"id", r.id}, {"lhs", r.lhs}, {"rhs", rhs}});
    }
    emit(j);
    return j["violations"].empty() ? 0 : 1;
}

struct FuzzArgs {
    std::string bound = "all";
    std::uint64_t trials = 500;
    std::vector<std::size_t> dims;
    std::uint64_t seed = 0;
    std::optional<double> alpha;
    std::size_t arity = 3;
    double scale = 1.0;
    double slack = 1e-6;
};

int run_fuzz(const FuzzArgs& a) {
    wrange::FuzzOptions opt;
    opt.trials = a.trials;
    if (!a.dims.empty()) opt.dims = a.dims;
    opt.seed = a.seed;
    opt.alpha = a.alpha;
    opt.variadic_factors = a.arity;
    opt.scale = a.scale;
    opt.membership_slack = a.slack;

    std::vector<wrange::FuzzSummary> summaries;
    if (a.bound == "all")
        summaries = wrange::fuzz_catalog(opt);
    else
        summaries.push_back(wrange::fuzz_bound(a.bound, opt));

    json j = report_skeleton("fuzz");
    j["inputs"]["bound"] = a.bound;
    j["inputs"]["trials"] = a.trials;
    j["inputs"]["dims"] = opt.dims;
    j["inputs"]["seed"] = a.seed;
    j["inputs"]["alpha"] = a.alpha ? json(*a.alpha) : json(nullptr);
    j["inputs"]["arity"] = a.arity;
    j["inputs"]["scale"] = a.scale;
    j["outputs"]["summaries"] = json::array();
    for (const auto& s : summaries) j["outputs"]["summaries"].push_back(to_json(s));
    for (const auto& s : summaries)
        for (const auto& v : s.violations)
            j["violations"].push_back({{"id", s.id},
                                       {"trial", v.trial},
                                       {"dim", v.dim},
                                       {"lhs", v.lhs},
                                       {"rhs", v.rhs}});
    emit(j);
    return j["violations"].empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical range analysis"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "sector classification of a matrix");
    classify->add_option("file", ca.file, "matrix file")->required();

    RadiusArgs ra;
    auto* radius = app.add_subcommand("radius", "numerical radius and norm bracket");
    radius->add_option("file", ra.file, "matrix file")->required();

    RangeArgs ga;
    auto* range = app.add_subcommand("range", "boundary samples of the field of values");
    range->add_option("file", ga.file, "matrix file")->required();
    range->add_option("--samples", ga.samples, "number of boundary angles (>= 3)")
        ->capture_default_str();
    range->add_option("--out", ga.out, "output CSV path")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "evaluate catalog bounds on factors");
    verify->add_option("files", va.files, "matrix files (factors, in order)")
        ->required()
        ->expected(2, -1);
    verify->add_option("--bound", va.bound, "bound id or 'all'")->capture_default_str();
    verify->add_option("--slack", va.slack, "sector membership slack")
        ->capture_default_str();
    verify->add_option("--alpha", va.alpha, "sector half-angle override");
    verify->add_option("--rhs-scale", va.rhs_scale,
                       "scale right sides before the violation check; values "
                       "below 1 deliberately corrupt the bound table to "
                       "exercise the failure exit path")
        ->capture_default_str();

    FuzzArgs fa;
    auto* fuzz = app.add_subcommand("fuzz", "randomized sweeps of catalog bounds");
    fuzz->add_option("--bound", fa.bound, "bound id or 'all'")->capture_default_str();
    fuzz->add_option("--n", fa.trials, "trials per bound")->capture_default_str();
    fuzz->add_option("--dim", fa.dims,
                     "matrix dimension; repeatable, default cycles 2,3,4,6");
    fuzz->add_option("--seed", fa.seed, "master seed")->capture_default_str();
    fuzz->add_option("--alpha", fa.alpha, "sector half-angle for sectorial draws");
    fuzz->add_option("--arity", fa.arity, "factor count for variadic bounds")
        ->capture_default_str();
    fuzz->add_option("--scale", fa.scale, "generator scale")->capture_default_str();
    fuzz->add_option("--slack", fa.slack, "sector membership slack")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(ca);
        if (app.got_subcommand(radius)) return run_radius(ra);
        if (app.got_subcommand(range)) return run_range(ga);
        if (app.got_subcommand(verify)) return run_verify(va);
        if (app.got_subcommand(fuzz)) return run_fuzz(fa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
