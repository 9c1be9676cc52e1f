// Command-line front end: forward evaluation, moment tables, approximant
// construction, reconstruction from measurement CSVs, equivalence reports,
// and the benchmark suites.
//
// Exit codes: 0 success (reconstruct additionally requires convergence and a
// feasible certificate), 1 failed mathematical construction, 2 invalid
// flags/schemas/domains, 3 reconstruction that did not converge (the JSON is
// still written).

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stpade/benchmarks.hpp"
#include "stpade/errors.hpp"
#include "stpade/inverse.hpp"
#include "stpade/io.hpp"
#include "stpade/materials.hpp"
#include "stpade/measure.hpp"
#include "stpade/pade.hpp"
#include "stpade/spectral.hpp"
#include "stpade/stieltjes.hpp"

namespace {

using namespace stpade;

constexpr int kExitMathFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotConverged = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    save_text(path, content);
}

std::complex<double> parse_complex(const std::string& token) {
    const auto comma = token.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return {re, 0.0};
        }
        const std::string re_part = token.substr(0, comma);
        const std::string im_part = token.substr(comma + 1);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) throw std::invalid_argument(token);
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) throw std::invalid_argument(token);
        return {re, im};
    } catch (const std::exception&) {
        throw ConfigError("cannot parse '" + token + "' as a number or re,im pair");
    }
}

struct SourceFlags {
    std::string measure_path;
    std::string model_name;
    double fraction = 0.5;
};

void add_source_flags(CLI::App* cmd, SourceFlags& flags) {
    cmd->add_option("--measure", flags.measure_path, "spectral measure JSON file");
    cmd->add_option("--model", flags.model_name,
                    "composite archetype: laminate-parallel, laminate-perpendicular, "
                    "hs2d, checkerboard");
    cmd->add_option("--fraction", flags.fraction, "volume fraction for --model")
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
}

CompositeModel model_from_name(const std::string& name, double p) {
    if (name == "laminate-parallel") return CompositeModel::laminate_parallel(p);
    if (name == "laminate-perpendicular") return CompositeModel::laminate_perpendicular(p);
    if (name == "hs2d") return CompositeModel::hashin_shtrikman_2d(p);
    if (name == "checkerboard") return CompositeModel::checkerboard();
    throw ConfigError("unknown model '" + name +
                      "'; expected laminate-parallel, laminate-perpendicular, hs2d or "
                      "checkerboard");
}

SpectralMeasure resolve_measure(const SourceFlags& flags) {
    const bool has_measure = !flags.measure_path.empty();
    const bool has_model = !flags.model_name.empty();
    if (has_measure == has_model)
        throw ConfigError("exactly one of --measure and --model is required");
    if (has_measure) return load_measure(flags.measure_path);
    return spectral_measure_of(model_from_name(flags.model_name, flags.fraction));
}

int cmd_forward(const SourceFlags& source, const std::vector<std::string>& s_tokens,
                const std::string& output) {
    if (s_tokens.empty()) throw ConfigError("forward needs at least one --s value");
    const bool has_model = !source.model_name.empty();
    SpectralMeasure measure;
    CompositeModel model;
    if (has_model && source.measure_path.empty()) {
        model = model_from_name(source.model_name, source.fraction);
    } else {
        measure = resolve_measure(source);
    }
    std::ostringstream os;
    os << "re_s,im_s,re_F,im_F\n";
    for (const std::string& token : s_tokens) {
        const SPoint s{parse_complex(token)};
        const std::complex<double> value =
            has_model ? effective_F(model, s) : eval_F(measure, s);
        os << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << ','
           << format_double(value.real()) << ',' << format_double(value.imag()) << '\n';
    }
    write_output(output, os.str());
    return 0;
}

int cmd_moments(const SourceFlags& source, int count, const std::string& output) {
    const MomentSequence mu = moments(resolve_measure(source), count);
    std::ostringstream os;
    os << "m,value\n";
    for (std::size_t m = 0; m < mu.size(); ++m)
        os << m << ',' << format_double(mu[m]) << '\n';
    write_output(output, os.str());
    return 0;
}

nlohmann::json approximant_to_json(const PadeApproximant& approx) {
    nlohmann::json j;
    j["numerator"] = approx.numerator;
    j["denominator"] = approx.denominator;
    j["L"] = approx.L;
    j["M"] = approx.M;
    j["variable"] =
        approx.variable == PadeVariable::xi_standard ? "xi_standard" : "s_nonstandard";
    j["series_offset"] = approx.series_offset;
    return j;
}

int cmd_pade(const SourceFlags& source, int L, int M, int count, const std::string& output) {
    const SpectralMeasure measure = resolve_measure(source);
    if (count <= 0) count = L + M + 1;
    const MomentSequence mu = moments(measure, count);
    const PadeApproximant approx = solve_standard_pade(mu, L, M);
    const AccuracyReport accuracy = verify_accuracy_through_order(approx, mu);

    nlohmann::json j;
    j["approximant"] = approximant_to_json(approx);
    j["accuracy"] = {{"passed", accuracy.passed},
                     {"max_deviation", accuracy.max_deviation},
                     {"tolerance", accuracy.tolerance},
                     {"orders_checked", accuracy.orders_checked}};
    if (M >= 1 && L == M - 1) {
        try {
            const PoleResidueForm prf = to_pole_residue(approx);
            j["pole_residue"] = pole_residue_to_json(prf);
            j["pole_residue"]["certificate"] = {{"passed", prf.certificate.passed},
                                                {"violations", prf.certificate.violations}};
            const NonstandardForm ns = to_nonstandard(prf);
            j["nonstandard"] = {
                {"form_s", pole_residue_to_json(ns.form_s)},
                {"numerator", ns.approximant.numerator},
                {"denominator", ns.approximant.denominator},
                {"prenormalization_linear_coefficient",
                 ns.prenormalization_linear_coefficient},
            };
        } catch (const Error& e) {
            j["pole_residue_error"] = std::string(e.what());
        }
    }
    write_output(output, j.dump(2) + "\n");
    return 0;
}

int cmd_reconstruct(const std::string& data_path, const ReconstructionConfig& config,
                    const std::string& output) {
    const FrequencyDataset data = load_dataset_csv(data_path);
    const ReconstructionResult result = reconstruct(data, config);
    write_output(output, reconstruction_to_json(result).dump(2) + "\n");

    std::ostringstream os;
    os << "pole s_n                 residue A_n\n";
    for (const auto& pr : result.form.pairs)
        os << format_double(pr.pole) << "  " << format_double(pr.residue) << '\n';
    os << "moments:";
    for (std::size_t m = 0; m < result.moments.size(); ++m)
        os << ' ' << format_double(result.moments[m]);
    os << '\n';
    os << "residual (rms): " << format_double(result.residual)
       << "  relative: " << format_double(result.relative_residual) << '\n';
    const char* status = result.status == ReconstructionStatus::converged ? "converged"
                         : result.status == ReconstructionStatus::best_effort
                             ? "best_effort"
                             : "no_contrast";
    os << "status: " << status << " after " << result.iterations << " iterations\n";
    if (!result.certificate.feasible || !result.form.certificate.passed) {
        os << "certificate: FAILED\n";
        for (const auto& note : result.certificate.notes) os << "  " << note << '\n';
        for (const auto& v : result.form.certificate.violations) os << "  " << v << '\n';
    } else {
        os << "certificate: ok (residue sum " << format_double(result.certificate.residue_sum)
           << ")\n";
    }
    std::cout << os.str();

    const bool ok = result.status == ReconstructionStatus::converged &&
                    result.certificate.feasible && result.form.certificate.passed;
    return ok ? 0 : kExitNotConverged;
}

int cmd_equivalence(const std::string& path_a, const std::string& path_b, int N_max) {
    if (N_max < 1) throw ConfigError("equivalence needs N >= 1");
    const SpectralMeasure a = load_measure(path_a);
    const SpectralMeasure b = load_measure(path_b);
    const MomentSequence mu_a = moments(a, N_max + 1);
    const MomentSequence mu_b = moments(b, N_max + 1);
    bool all_agree = true;
    std::cout << "N  moment-match  table-match  agreement\n";
    for (int N = 1; N <= N_max; ++N) {
        const bool mom = sn_equivalent(mu_a, mu_b, N);
        std::cout << N << "  " << (mom ? "true " : "false") << "         ";
        try {
            const bool tab = pade_table_equal(mu_a, mu_b, N);
            std::cout << (tab ? "true " : "false") << "        "
                      << (mom == tab ? "agree" : "DISAGREE") << '\n';
            if (mom != tab) all_agree = false;
        } catch (const NonExistenceError& e) {
            std::cout << "undecided    (" << e.what() << ")\n";
        }
    }
    return all_agree ? 0 : kExitMathFailure;
}

int cmd_benchmark(const std::string& suite, std::uint64_t seed) {
    const std::vector<BenchmarkCase> cases = run_suite(suite, seed);
    bool all = true;
    for (const BenchmarkCase& c : cases) {
        std::ostringstream time;
        time.setf(std::ios::fixed);
        time.precision(2);
        time << c.seconds;
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << time.str()
                  << " s): " << c.detail << '\n';
        if (!c.passed) all = false;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stieltjes-function toolkit: forward evaluation, Pade construction, "
                 "spectral reconstruction and benchmarks"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for every randomized stage");

    SourceFlags forward_source;
    std::vector<std::string> s_tokens;
    std::string forward_output = "-";
    CLI::App* forward = app.add_subcommand("forward", "evaluate F(s) on a grid");
    add_source_flags(forward, forward_source);
    forward->add_option("--s", s_tokens, "s values, each 're' or 're,im'");
    forward->add_option("--output", forward_output, "CSV path or - for stdout");

    SourceFlags moments_source;
    int moment_count = 10;
    std::string moments_output = "-";
    CLI::App* moments_cmd = app.add_subcommand("moments", "print leading moments");
    add_source_flags(moments_cmd, moments_source);
    moments_cmd->add_option("--count", moment_count, "number of moments")
        ->check(CLI::PositiveNumber);
    moments_cmd->add_option("--output", moments_output, "CSV path or - for stdout");

    SourceFlags pade_source;
    int pade_L = 0;
    int pade_M = 1;
    int pade_count = 0;
    std::string pade_output = "-";
    CLI::App* pade = app.add_subcommand("pade", "construct the [L/M] approximant");
    add_source_flags(pade, pade_source);
    pade->add_option("--L", pade_L, "numerator degree")->required();
    pade->add_option("--M", pade_M, "denominator degree")->required();
    pade->add_option("--count", pade_count, "moments to use (default L+M+1)");
    pade->add_option("--output", pade_output, "JSON path or - for stdout");

    std::string data_path;
    std::string reconstruct_output = "result.json";
    ReconstructionConfig config;
    CLI::App* rec = app.add_subcommand("reconstruct", "fit poles/residues to a dataset");
    rec->add_option("--data", data_path, "measurement CSV")->required();
    rec->add_option("--M", config.M, "number of poles")->check(CLI::PositiveNumber);
    rec->add_option("--max-iterations", config.max_iterations, "iteration cap per start")
        ->check(CLI::PositiveNumber);
    rec->add_option("--tolerance", config.tolerance, "relative-residual target");
    rec->add_option("--multistart", config.multistart_count, "number of starts")
        ->check(CLI::PositiveNumber);
    rec->add_option("--output", reconstruct_output, "result JSON path or - for stdout");

    std::string eq_a, eq_b;
    int eq_N = 6;
    CLI::App* eq = app.add_subcommand("equivalence",
                                      "compare moment and approximant-table predicates");
    eq->add_option("--a", eq_a, "first measure JSON")->required();
    eq->add_option("--b", eq_b, "second measure JSON")->required();
    eq->add_option("--N", eq_N, "largest order to test");

    std::string suite = "all";
    CLI::App* bench = app.add_subcommand("benchmark", "run a named check suite");
    bench->add_option("--suite", suite,
                      "roundtrip, existence, structure, series, reconstruction, "
                      "equivalence, oracle, signlaw, noise, or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (app.got_subcommand(forward))
            return cmd_forward(forward_source, s_tokens, forward_output);
        if (app.got_subcommand(moments_cmd))
            return cmd_moments(moments_source, moment_count, moments_output);
        if (app.got_subcommand(pade))
            return cmd_pade(pade_source, pade_L, pade_M, pade_count, pade_output);
        if (app.got_subcommand(rec)) {
            config.seed = seed;
            return cmd_reconstruct(data_path, config, reconstruct_output);
        }
        if (app.got_subcommand(eq)) return cmd_equivalence(eq_a, eq_b, eq_N);
        if (app.got_subcommand(bench)) return cmd_benchmark(suite, seed);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMathFailure;
    }
    return kExitBadInput;
}
