// adjq: adjusted quantile statistics on step CDFs.
//
// Subcommands: stat, convert, lattice, coupling, check, explain.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "adjq/adjusted.hpp"
#include "adjq/comonotone.hpp"
#include "adjq/error.hpp"
#include "adjq/harness.hpp"
#include "adjq/json_io.hpp"
#include "adjq/quantiles.hpp"

namespace {

using adjq::errc;
using adjq::fail;
using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open \"" + path + "\"");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json load_json(const std::string& path) { return adjq::parse_json_text(slurp(path)); }

// CSV ingestion: one sample per line, optional second column weight. Blank
// lines are skipped; every data line must have the same column count.
adjq::StepCDF load_cdf_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open \"" + path + "\"");

    std::vector<double> samples, weights;
    int columns = 0;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& ch : line) {
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        }
        std::istringstream row(line);
        double sample = 0.0;
        if (!(row >> sample)) {
            std::string rest;
            if (row.clear(), row >> rest) {
                fail(errc::parse_error,
                     path + ":" + std::to_string(line_no) + ": expected a number, got \"" +
                         rest + "\"");
            }
            continue;  // blank line
        }
        double weight = 0.0;
        const bool has_weight = static_cast<bool>(row >> weight);
        std::string extra;
        if (row >> extra) {
            fail(errc::parse_error,
                 path + ":" + std::to_string(line_no) + ": too many fields");
        }
        const int this_columns = has_weight ? 2 : 1;
        if (columns == 0) columns = this_columns;
        if (columns != this_columns) {
            fail(errc::parse_error,
                 path + ":" + std::to_string(line_no) + ": inconsistent column count");
        }
        samples.push_back(sample);
        if (has_weight) weights.push_back(weight);
    }
    if (samples.empty()) fail(errc::empty_input, path + ": no samples");
    if (columns == 2) return adjq::StepCDF::from_samples(samples, weights);
    return adjq::StepCDF::from_samples(samples);
}

adjq::StepCDF load_cdf(const std::string& path, const std::string& format) {
    if (format == "json") return adjq::step_cdf_from_json(load_json(path));
    return load_cdf_csv(path);
}

void emit(const json& report, const std::string& output_path) {
    const std::string text = report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) fail(errc::parse_error, "cannot write \"" + output_path + "\"");
        out << text;
    }
}

// ---------------------------------------------------------------------------
// Statistic specification shared by `stat` and `explain`.
// ---------------------------------------------------------------------------

struct StatSpec {
    std::string shape_path, handicap_path, dual_shape_path, dual_handicap_path;
    double quantile = -1.0;

    using Loaded = std::variant<adjq::ShapeFn, adjq::HandicapFn, adjq::DualShapeFn,
                                adjq::DualHandicapFn>;

    void add_options(CLI::App& cmd) {
        auto* shape = cmd.add_option("--shape", shape_path, "shape template JSON");
        auto* handicap = cmd.add_option("--handicap", handicap_path, "handicap JSON");
        auto* quant = cmd.add_option("--quantile", quantile, "plain quantile level in (0,1)");
        auto* dshape = cmd.add_option("--dual-shape", dual_shape_path, "dual shape JSON");
        auto* dhandicap =
            cmd.add_option("--dual-handicap", dual_handicap_path, "dual handicap JSON");
        shape->excludes(handicap, quant, dshape, dhandicap);
        handicap->excludes(quant, dshape, dhandicap);
        quant->excludes(dshape, dhandicap);
        dshape->excludes(dhandicap);
    }

    Loaded load() const {
        if (!shape_path.empty()) return adjq::shape_from_json(load_json(shape_path));
        if (!handicap_path.empty()) return adjq::handicap_from_json(load_json(handicap_path));
        if (quantile >= 0.0) return adjq::quantile_handicap(quantile);
        if (!dual_shape_path.empty()) {
            return adjq::dual_shape_from_json(load_json(dual_shape_path));
        }
        if (!dual_handicap_path.empty()) {
            return adjq::dual_handicap_from_json(load_json(dual_handicap_path));
        }
        fail(errc::validation_error,
             "exactly one of --shape/--handicap/--quantile/--dual-shape/--dual-handicap "
             "is required");
    }
};

struct StatOutcome {
    adjq::AdjustedQuantileReport report;
    bool crosscheck_ok;
};

StatOutcome evaluate_statistic(const adjq::StepCDF& f, const StatSpec::Loaded& spec) {
    constexpr double kTol = 1e-9;
    StatOutcome out{};
    try {
        if (const auto* shape = std::get_if<adjq::ShapeFn>(&spec)) {
            out.report = adjq::max_adjusted_quantile_report(f, *shape);
            out.crosscheck_ok =
                std::abs(out.report.value -
                         adjq::max_adjusted_quantile(f, adjq::handicap_of(*shape))) <= kTol;
        } else if (const auto* handicap = std::get_if<adjq::HandicapFn>(&spec)) {
            out.report = adjq::max_adjusted_quantile_report(f, *handicap);
            out.crosscheck_ok =
                std::abs(out.report.value -
                         adjq::max_adjusted_quantile(f, adjq::shape_of(*handicap))) <= kTol;
        } else if (const auto* dual_shape = std::get_if<adjq::DualShapeFn>(&spec)) {
            out.report = adjq::min_adjusted_quantile_report(f, *dual_shape);
            out.crosscheck_ok =
                std::abs(out.report.value +
                         adjq::max_adjusted_quantile(adjq::reflect(f),
                                                     adjq::primal_of(*dual_shape))) <= kTol;
        } else {
            const auto& dual_handicap = std::get<adjq::DualHandicapFn>(spec);
            out.report = adjq::min_adjusted_quantile_report(f, dual_handicap);
            out.crosscheck_ok =
                std::abs(out.report.value +
                         adjq::max_adjusted_quantile(adjq::reflect(f),
                                                     adjq::primal_of(dual_handicap))) <= kTol;
        }
    } catch (const adjq::Error&) {
        out.crosscheck_ok = false;
    }
    return out;
}

json spec_to_json(const StatSpec::Loaded& spec) {
    return std::visit([](const auto& s) { return adjq::to_json(s); }, spec);
}

const char* spec_kind(const StatSpec::Loaded& spec) {
    switch (spec.index()) {
        case 0: return "shape";
        case 1: return "handicap";
        case 2: return "dual_shape";
        default: return "dual_handicap";
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int run_stat(const std::string& input, const std::string& format, const StatSpec& spec,
             const std::string& output) {
    const adjq::StepCDF f = load_cdf(input, format);
    const StatSpec::Loaded loaded = spec.load();
    const StatOutcome outcome = evaluate_statistic(f, loaded);
    emit(json{{"statistic_value", outcome.report.value},
              {"binding_alpha", outcome.report.binding_alpha},
              {"binding_quantile", outcome.report.binding_quantile},
              {"representation_crosscheck", outcome.crosscheck_ok ? "pass" : "fail"}},
         output);
    return 0;
}

// The primal shape form serves as a conversion pivot; every representation
// mirrors to it and back without arithmetic beyond level complements.
adjq::ShapeFn pivot_shape(const StatSpec::Loaded& loaded) {
    return std::visit(
        [](const auto& s) -> adjq::ShapeFn {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, adjq::ShapeFn>) {
                return s;
            } else if constexpr (std::is_same_v<T, adjq::HandicapFn>) {
                return adjq::shape_of(s);
            } else if constexpr (std::is_same_v<T, adjq::DualShapeFn>) {
                return adjq::primal_of(s);
            } else {
                return adjq::shape_of(adjq::primal_of(s));
            }
        },
        loaded);
}

StatSpec::Loaded from_pivot(const adjq::ShapeFn& pivot, std::size_t kind_index) {
    switch (kind_index) {
        case 0: return pivot;
        case 1: return adjq::handicap_of(pivot);
        case 2: return adjq::dual_of(pivot);
        default: return adjq::dual_of(adjq::handicap_of(pivot));
    }
}

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool nearly_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!nearly_equal(a[i], b[i])) return false;
    }
    return true;
}

// Round-trip comparison for conversions. Primal copies round trip bitwise;
// the mirrored forms complement their levels, which can drift by an ulp for
// non-dyadic values, so the flag tolerates that much.
bool nearly_equal(const StatSpec::Loaded& a, const StatSpec::Loaded& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& lhs) {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b);
            if constexpr (std::is_same_v<T, adjq::ShapeFn>) {
                return nearly_equal(lhs.jump_points(), rhs.jump_points()) &&
                       nearly_equal(lhs.jump_levels(), rhs.jump_levels());
            } else if constexpr (std::is_same_v<T, adjq::DualShapeFn>) {
                return nearly_equal(lhs.base_level(), rhs.base_level()) &&
                       nearly_equal(lhs.jump_points(), rhs.jump_points()) &&
                       nearly_equal(lhs.jump_levels(), rhs.jump_levels());
            } else {
                return nearly_equal(lhs.cut_points(), rhs.cut_points()) &&
                       nearly_equal(lhs.values(), rhs.values());
            }
        },
        a);
}

int run_convert(const StatSpec& spec, const std::string& to, const std::string& output) {
    const StatSpec::Loaded loaded = spec.load();
    const adjq::ShapeFn pivot = pivot_shape(loaded);

    std::size_t target_index = 0;
    if (to == "handicap") {
        target_index = 1;
    } else if (to == "dual-shape") {
        target_index = 2;
    } else if (to == "dual-handicap") {
        target_index = 3;
    }
    const StatSpec::Loaded converted = from_pivot(pivot, target_index);
    const json result = spec_to_json(converted);

    bool round_trip_ok = false;
    try {
        round_trip_ok = nearly_equal(from_pivot(pivot_shape(converted), loaded.index()), loaded);
    } catch (const adjq::Error&) {
        round_trip_ok = false;
    }

    emit(json{{"input_kind", spec_kind(loaded)},
              {"output_kind", to},
              {"result", result},
              {"round_trip_ok", round_trip_ok}},
         output);
    return 0;
}

int run_lattice(const std::vector<std::string>& inputs, const std::string& format,
                const std::string& output) {
    const adjq::StepCDF f = load_cdf(inputs[0], format);
    const adjq::StepCDF g = load_cdf(inputs[1], format);
    emit(json{{"join", adjq::to_json(adjq::join(f, g))},
              {"meet", adjq::to_json(adjq::meet(f, g))}},
         output);
    return 0;
}

int run_coupling(const std::vector<std::string>& inputs, const std::string& format,
                 const std::string& output) {
    const adjq::StepCDF f = load_cdf(inputs[0], format);
    const adjq::StepCDF g = load_cdf(inputs[1], format);
    const adjq::FiniteJoint coupled = adjq::comonotone_coupling(f, g);
    emit(json{{"coupling", adjq::to_json(coupled)},
              {"comonotonic", adjq::is_comonotonic(coupled)},
              {"marginals_reproduced", adjq::marginal_cdf(coupled, adjq::Coord::X) == f &&
                                           adjq::marginal_cdf(coupled, adjq::Coord::Y) == g},
              {"join_matches", adjq::rv_join_cdf(coupled) == adjq::join(f, g)},
              {"meet_matches", adjq::rv_meet_cdf(coupled) == adjq::meet(f, g)}},
         output);
    return 0;
}

int run_check(std::uint64_t seed, int trials, bool inject_counterexamples,
              const std::string& output) {
    adjq::SuiteConfig config;
    config.master_seed = seed;
    config.trials = trials;
    config.include_counterexamples = inject_counterexamples;
    const auto reports = adjq::run_property_suite(config);

    int total_failures = 0;
    json checks = json::array();
    for (const auto& r : reports) {
        total_failures += r.failures;
        checks.push_back(adjq::to_json(r));
    }
    emit(json{{"master_seed", seed},
              {"trials", trials},
              {"total_failures", total_failures},
              {"checks", checks}},
         output);
    return total_failures == 0 ? 0 : 2;
}

int run_explain(const StatSpec& spec, const std::string& input, const std::string& format,
                const std::string& output) {
    const StatSpec::Loaded loaded = spec.load();

    json equivalents;
    try {
        const adjq::ShapeFn pivot = pivot_shape(loaded);
        equivalents = json{{"shape", adjq::to_json(pivot)},
                           {"handicap", adjq::to_json(adjq::handicap_of(pivot))},
                           {"dual_shape", adjq::to_json(adjq::dual_of(pivot))},
                           {"dual_handicap",
                            adjq::to_json(adjq::dual_of(adjq::handicap_of(pivot)))}};
    } catch (const adjq::Error& e) {
        equivalents = json{{"unavailable", e.what()}};
    }

    json report{{"kind", spec_kind(loaded)},
                {"statistic", spec_to_json(loaded)},
                {"equivalents", equivalents}};

    if (!input.empty()) {
        const adjq::StepCDF f = load_cdf(input, format);
        const StatOutcome outcome = evaluate_statistic(f, loaded);
        const bool maximal = loaded.index() <= 1;

        // Candidate levels of the defining sup/inf, one row per cell.
        std::vector<double> candidates;
        for (double v : f.levels()) {
            if (v < 1.0) candidates.push_back(v);
        }
        json cells = json::array();
        const auto add_cell = [&](double alpha, double quantile, double penalty) {
            if (std::isinf(penalty)) return;
            cells.push_back(json{{"alpha", alpha},
                                 {"quantile", quantile},
                                 {"penalty", penalty},
                                 {"adjusted", quantile - penalty},
                                 {"binding", alpha == outcome.report.binding_alpha}});
        };
        if (maximal) {
            const adjq::HandicapFn handicap =
                (loaded.index() == 0)
                    ? adjq::handicap_of(std::get<adjq::ShapeFn>(loaded))
                    : std::get<adjq::HandicapFn>(loaded);
            for (double cut : handicap.cut_points()) candidates.push_back(cut);
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (double alpha : candidates) {
                if (alpha > handicap.finite_threshold()) continue;
                add_cell(alpha, adjq::lower_quantile(f, alpha), handicap.eval(alpha));
            }
        } else {
            const adjq::DualHandicapFn handicap =
                (loaded.index() == 2)
                    ? adjq::dual_of(adjq::handicap_of(
                          adjq::primal_of(std::get<adjq::DualShapeFn>(loaded))))
                    : std::get<adjq::DualHandicapFn>(loaded);
            for (double cut : handicap.cut_points()) candidates.push_back(cut);
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (double alpha : candidates) {
                if (alpha < handicap.finite_threshold()) continue;
                add_cell(alpha, adjq::upper_quantile(f, alpha), handicap.eval(alpha));
            }
        }
        report["input"] = json{{"statistic_value", outcome.report.value},
                               {"binding_alpha", outcome.report.binding_alpha},
                               {"binding_quantile", outcome.report.binding_quantile},
                               {"cells", cells}};
    }

    emit(report, output);
    return 0;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ADJQ_SEED")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const std::uint64_t value = std::stoull(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return value;
        } catch (const std::exception&) {
            fail(errc::parse_error, std::string("ADJQ_SEED is not an integer: \"") +
                                        std::getenv("ADJQ_SEED") + "\"");
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjusted quantile statistics on step CDFs"};
    app.require_subcommand(1);

    std::string input, format = "csv", output, convert_to;
    std::vector<std::string> pair_inputs;
    StatSpec spec;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int trials = 10000;
    bool inject_mean = false;

    auto* stat = app.add_subcommand("stat", "compute a statistic of a distribution");
    stat->add_option("--input", input, "samples CSV or step CDF JSON")->required();
    stat->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"csv", "json"}));
    spec.add_options(*stat);
    stat->add_option("--output", output, "write the JSON report here instead of stdout");

    auto* convert = app.add_subcommand("convert", "convert between statistic representations");
    spec.add_options(*convert);
    convert->add_option("--to", convert_to, "target representation")
        ->required()
        ->check(CLI::IsMember({"shape", "handicap", "dual-shape", "dual-handicap"}));
    convert->add_option("--output", output, "write the JSON report here instead of stdout");

    auto* lattice = app.add_subcommand("lattice", "join and meet of two distributions");
    lattice->add_option("inputs", pair_inputs, "two distribution inputs")
        ->expected(2)
        ->required();
    lattice->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"csv", "json"}));
    lattice->add_option("--output", output, "write the JSON report here instead of stdout");

    auto* coupling = app.add_subcommand("coupling", "comonotone coupling of two distributions");
    coupling->add_option("inputs", pair_inputs, "two distribution inputs")
        ->expected(2)
        ->required();
    coupling->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"csv", "json"}));
    coupling->add_option("--output", output, "write the JSON report here instead of stdout");

    auto* check = app.add_subcommand("check", "run the property suite");
    auto* seed_opt = check->add_option("--seed", seed, "master seed (default: ADJQ_SEED or 1)");
    check->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);
    check->add_flag("--inject-mean", inject_mean,
                    "also run the non-example statistics, which must fail");
    check->add_option("--output", output, "write the JSON report here instead of stdout");

    auto* explain = app.add_subcommand("explain", "describe a statistic and its candidate cells");
    spec.add_options(*explain);
    explain->add_option("--input", input, "optional distribution to tabulate against");
    explain->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"csv", "json"}));
    explain->add_option("--output", output, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
        seed_given = seed_opt->count() > 0;

        if (stat->parsed()) return run_stat(input, format, spec, output);
        if (convert->parsed()) return run_convert(spec, convert_to, output);
        if (lattice->parsed()) return run_lattice(pair_inputs, format, output);
        if (coupling->parsed()) return run_coupling(pair_inputs, format, output);
        if (check->parsed()) {
            return run_check(seed_given ? seed : default_seed(), trials, inject_mean, output);
        }
        if (explain->parsed()) return run_explain(spec, input, format, output);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const adjq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
