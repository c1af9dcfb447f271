// fqdiff: mean-square displacement experiments for the time-fractional
// Schroedinger equation.
//
//   fqdiff run --alpha 0.5 --beta 1 --datum annulus --out-csv msd.csv --out-json report.json
//   fqdiff run --config experiment.json
//   fqdiff constants --alpha 0.8 --beta 0.4 --lambda-minus 1 --lambda-plus 1.1
//   fqdiff selftest
//
// Exit status: 0 ok, 1 runtime failure, 2 validation failure.

#include "fqd/experiment.hpp"
#include "fqd/selftest.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct Overrides {
    std::string config_path;
    std::optional<double> alpha, beta;
    std::optional<int> dimension;
    std::optional<std::string> datum;
    std::optional<double> lambda_minus, lambda_plus;
    std::optional<double> t_min, t_max;
    std::optional<int> ppd;
    std::optional<double> rel_tol, abs_tol;
    std::optional<std::string> out_csv, out_json;
};

void add_config_options(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--config", o.config_path, "JSON experiment config; flags override its fields");
    cmd->add_option("--alpha", o.alpha, "Caputo order alpha in (0,1]");
    cmd->add_option("--beta", o.beta, "phase exponent beta in (0,1]");
    cmd->add_option("--dim", o.dimension, "spatial dimension d >= 1");
    cmd->add_option("--datum", o.datum, "initial datum class: gaussian | annulus");
    cmd->add_option("--lambda-minus", o.lambda_minus, "annulus inner radius in frequency");
    cmd->add_option("--lambda-plus", o.lambda_plus, "annulus outer radius in frequency");
    cmd->add_option("--t-min", o.t_min, "first sample time (default: regime fitting window)");
    cmd->add_option("--t-max", o.t_max, "last sample time (default: regime fitting window)");
    cmd->add_option("--ppd", o.ppd, "sample points per decade of t");
    cmd->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--out-csv", o.out_csv, "CSV output path (t,d2,theory_leading)");
    cmd->add_option("--out-json", o.out_json, "JSON report path (default: stdout)");
}

fqd::ExperimentConfig build_config(const Overrides& o)
{
    fqd::ExperimentConfig c = o.config_path.empty() ? fqd::ExperimentConfig{}
                                                    : fqd::load_config(o.config_path);
    if (o.alpha) c.alpha = *o.alpha;
    if (o.beta) c.beta = *o.beta;
    if (o.dimension) c.dimension = *o.dimension;
    if (o.datum) c.datum.cls = *o.datum;
    if (o.lambda_minus) c.datum.lambda_minus = *o.lambda_minus;
    if (o.lambda_plus) c.datum.lambda_plus = *o.lambda_plus;
    if (o.t_min) c.time_grid.t_min = *o.t_min;
    if (o.t_max) c.time_grid.t_max = *o.t_max;
    if (o.ppd) c.time_grid.points_per_decade = *o.ppd;
    if (o.rel_tol) c.quadrature.rel_tol = *o.rel_tol;
    if (o.abs_tol) c.quadrature.abs_tol = *o.abs_tol;
    if (o.out_csv) c.outputs.csv_path = *o.out_csv;
    if (o.out_json) c.outputs.json_path = *o.out_json;
    c.validate();
    return c;
}

int cmd_run(const Overrides& o)
{
    const fqd::ExperimentResult res = fqd::run_experiment(build_config(o));
    fqd::write_outputs(res);
    if (res.config.outputs.json_path.empty())
        std::cout << res.json.dump(2) << '\n';
    return kExitOk;
}

int cmd_constants(const Overrides& o)
{
    std::cout << fqd::constants_json(build_config(o)).dump(2) << '\n';
    return kExitOk;
}

int cmd_selftest(const fqd::SelftestOptions& opts)
{
    const auto results = fqd::run_selftest(opts);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%-4s  %-28s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        failed += r.passed ? 0 : 1;
    }
    std::printf("%zu checks, %d failed\n", results.size(), failed);
    return failed == 0 ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mean-square displacement of the time-fractional Schroedinger equation"};
    app.set_version_flag("--version", std::string(fqd::kToolVersion));
    app.require_subcommand(1);

    Overrides run_opts, const_opts;
    CLI::App* run = app.add_subcommand("run", "sample D2(t), fit the regime law and write CSV/JSON");
    add_config_options(run, run_opts);
    CLI::App* constants = app.add_subcommand("constants", "print the closed-form regime constants");
    add_config_options(constants, const_opts);

    fqd::SelftestOptions st;
    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--inject-crossover", st.crossover_radius,
                         "force the Mittag-Leffler series/asymptotic crossover radius (fault injection)");
    selftest->add_option("--inject-ballistic-tol", st.ballistic_tolerance,
                         "|alpha-beta| tolerance for the regime classifier (fault injection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "fqdiff: error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (*run)
            return cmd_run(run_opts);
        if (*constants)
            return cmd_constants(const_opts);
        return cmd_selftest(st);
    } catch (const fqd::ConfigError& e) {
        std::cerr << "fqdiff: error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "fqdiff: error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
