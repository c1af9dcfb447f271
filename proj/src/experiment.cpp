#include "fqd/experiment.hpp"

#include "fqd/gamma.hpp"
#include "fqd/msd.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace fqd {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg)
{
    throw ConfigError(msg);
}

bool is_gaussian(const DatumConfig& d)
{
    return d.cls == "gaussian";
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json optional_json(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

}  // namespace

void ExperimentConfig::validate() const
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail("alpha must lie in (0,1]");
    if (!(beta > 0.0 && beta <= 1.0))
        fail("beta must lie in (0,1]");
    if (dimension < 1)
        fail("dimension must be >= 1");
    if (datum.cls != "gaussian" && datum.cls != "annulus")
        fail("datum.class must be \"gaussian\" or \"annulus\"");
    if (!is_gaussian(datum)
        && !(datum.lambda_minus > 0.0 && datum.lambda_plus > datum.lambda_minus
             && std::isfinite(datum.lambda_plus)))
        fail("annulus support needs 0 < lambda_minus < lambda_plus < inf");

    const Regime regime = indices().regime();
    if (is_gaussian(datum) && regime == Regime::SubordinateDecay)
        fail("alpha < beta needs an annulus datum: the t^(-2 alpha) coefficient diverges for "
             "data supported near the origin");
    if (is_gaussian(datum) && regime == Regime::ExponentialGrowth)
        fail("alpha > beta needs an annulus datum: the growth rate is unbounded for data of "
             "unbounded frequency support");

    if (time_grid.points_per_decade < 1)
        fail("time_grid.points_per_decade must be >= 1");
    const bool explicit_grid = time_grid.t_min != 0.0 || time_grid.t_max != 0.0;
    if (explicit_grid && !(time_grid.t_min > 0.0 && time_grid.t_max > time_grid.t_min
                           && std::isfinite(time_grid.t_max)))
        fail("time grid needs 0 < t_min < t_max");
    if (regime == Regime::ExponentialGrowth && explicit_grid) {
        const double horizon = regime3_horizon(indices(), make_datum());
        if (time_grid.t_max > horizon)
            fail("t_max = " + fmt(time_grid.t_max) + " exceeds the growth-regime horizon T_max = "
                 + fmt(horizon));
    }
    if (explicit_grid && log_grid(time_grid.t_min, time_grid.t_max, time_grid.points_per_decade).size()
                             < kMinFitSamples)
        fail("time grid must contain at least 10 points; widen it or raise points_per_decade");

    if (!(quadrature.rel_tol > 0.0 && quadrature.rel_tol < 1.0))
        fail("quadrature.rel_tol must lie in (0,1)");
    if (!(quadrature.abs_tol >= 0.0) || !std::isfinite(quadrature.abs_tol))
        fail("quadrature.abs_tol must be finite and >= 0");
}

ExperimentConfig ExperimentConfig::resolved() const
{
    validate();
    ExperimentConfig c = *this;
    if (c.time_grid.t_min == 0.0 && c.time_grid.t_max == 0.0) {
        const FitWindow w = default_window(indices(), make_datum());
        c.time_grid.t_min = w.t_min;
        c.time_grid.t_max = w.t_max;
    }
    c.validate();
    return c;
}

InitialDatum ExperimentConfig::make_datum() const
{
    if (is_gaussian(datum))
        return InitialDatum::gaussian(dimension);
    return InitialDatum::annulus(datum.lambda_minus, datum.lambda_plus, dimension);
}

QuadratureSpec ExperimentConfig::quadrature_spec() const
{
    QuadratureSpec q;
    q.rel_tol = quadrature.rel_tol;
    q.abs_tol = quadrature.abs_tol;
    return q;
}

std::vector<double> ExperimentConfig::grid() const
{
    return log_grid(time_grid.t_min, time_grid.t_max, time_grid.points_per_decade);
}

json to_json(const ExperimentConfig& c)
{
    return json{
        {"alpha", c.alpha},
        {"beta", c.beta},
        {"dimension", c.dimension},
        {"datum",
         {{"class", c.datum.cls},
          {"lambda_minus", c.datum.lambda_minus},
          {"lambda_plus", c.datum.lambda_plus}}},
        {"time_grid",
         {{"t_min", c.time_grid.t_min},
          {"t_max", c.time_grid.t_max},
          {"points_per_decade", c.time_grid.points_per_decade}}},
        {"quadrature", {{"rel_tol", c.quadrature.rel_tol}, {"abs_tol", c.quadrature.abs_tol}}},
        {"outputs", {{"csv_path", c.outputs.csv_path}, {"json_path", c.outputs.json_path}}},
    };
}

ExperimentConfig config_from_json(const json& j)
{
    ExperimentConfig c;
    try {
        if (!j.is_object())
            fail("config must be a JSON object");
        auto get = [](const json& obj, const char* key, auto& field) {
            if (obj.contains(key))
                obj.at(key).get_to(field);
        };
        get(j, "alpha", c.alpha);
        get(j, "beta", c.beta);
        get(j, "dimension", c.dimension);
        if (j.contains("datum")) {
            const json& d = j.at("datum");
            get(d, "class", c.datum.cls);
            get(d, "lambda_minus", c.datum.lambda_minus);
            get(d, "lambda_plus", c.datum.lambda_plus);
        }
        if (j.contains("time_grid")) {
            const json& g = j.at("time_grid");
            get(g, "t_min", c.time_grid.t_min);
            get(g, "t_max", c.time_grid.t_max);
            get(g, "points_per_decade", c.time_grid.points_per_decade);
        }
        if (j.contains("quadrature")) {
            const json& q = j.at("quadrature");
            get(q, "rel_tol", c.quadrature.rel_tol);
            get(q, "abs_tol", c.quadrature.abs_tol);
        }
        if (j.contains("outputs")) {
            const json& o = j.at("outputs");
            get(o, "csv_path", c.outputs.csv_path);
            get(o, "json_path", c.outputs.json_path);
        }
    } catch (const json::exception& e) {
        fail(std::string("malformed config: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

double theory_leading_term(const ExperimentConfig& cfg, double t)
{
    const FractionalIndices idx = cfg.indices();
    const InitialDatum datum = cfg.make_datum();
    const QuadratureSpec quad = cfg.quadrature_spec();
    switch (idx.regime()) {
    case Regime::SubordinateDecay:
        return coeff_regime1(datum, idx.alpha, quad) * std::pow(t, -2.0 * idx.alpha);
    case Regime::Ballistic:
        return coeff_regime2(datum, idx.alpha, quad) * t * t;
    case Regime::ExponentialGrowth:
        return leading_regime3(idx, datum, t, quad);
    }
    return 0.0;
}

namespace {

json rate_formula_note(const ExperimentConfig& cfg, const RegimeReport& rep)
{
    json note{
        {"implemented", "r = 2 cos(pi beta / (2 alpha)) Lambda^(2/alpha)"},
        {"alternative", "r = 2 cos(pi beta / alpha) Lambda^(2/alpha)"},
        {"message",
         "Two forms of the growth rate are in circulation for alpha > beta; the one with "
         "pi beta / (2 alpha) follows from the large-argument behavior of E_{alpha,alpha} on the "
         "ray arg z = -pi beta / 2 and is used for all brackets here."},
    };
    if (rep.regime == Regime::ExponentialGrowth) {
        const RateBounds alt = rate_bounds_regime3_alt(cfg.indices(), cfg.make_datum());
        note["alternative_bracket"] = {alt.r_minus, alt.r_plus};
        note["fitted_rate_in_alternative_bracket"] =
            rep.fitted_rate && *rep.fitted_rate >= alt.r_minus && *rep.fitted_rate <= alt.r_plus;
    }
    return note;
}

json report_json(const ExperimentConfig& cfg, const RegimeReport& rep)
{
    json fitted{
        {"exponent", optional_json(rep.fitted_exponent)},
        {"rate", optional_json(rep.fitted_rate)},
        {"coefficient", rep.fitted_coefficient},
        {"r_squared", rep.r_squared},
    };
    json theory{
        {"exponent", optional_json(rep.theory_exponent)},
        {"coefficient", optional_json(rep.theory_coefficient)},
        {"rate_bracket", rep.theory_rate_bracket
                             ? json{rep.theory_rate_bracket->lo, rep.theory_rate_bracket->hi}
                             : json(nullptr)},
    };
    if (rep.regime == Regime::ExponentialGrowth)
        theory["horizon"] = regime3_horizon(cfg.indices(), cfg.make_datum());
    json deviations{
        {"exponent", optional_json(rep.deviations.exponent)},
        {"coefficient", optional_json(rep.deviations.coefficient)},
        {"endpoint_coefficient", optional_json(rep.deviations.endpoint_coefficient)},
        {"rate_vs_midpoint", optional_json(rep.deviations.rate_vs_midpoint)},
        {"rate_in_bracket", rep.deviations.rate_in_bracket ? json(*rep.deviations.rate_in_bracket)
                                                           : json(nullptr)},
    };
    return json{
        {"config", to_json(cfg)},
        {"regime", std::string(regime_name(rep.regime))},
        {"fitted", fitted},
        {"theory", theory},
        {"deviations", deviations},
        {"quadrature_converged", rep.series.converged},
        {"samples", rep.series.times.size()},
        {"rate_formula_note", rate_formula_note(cfg, rep)},
        {"tool_version", kToolVersion},
    };
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config)
{
    ExperimentResult res;
    res.config = config.resolved();
    const ExperimentConfig& cfg = res.config;
    res.report = verify(cfg.indices(), cfg.make_datum(), cfg.grid(), cfg.quadrature_spec());

    std::ostringstream csv;
    csv << "t,d2,theory_leading\n";
    for (std::size_t i = 0; i < res.report.series.times.size(); ++i) {
        const double t = res.report.series.times[i];
        const double lead = theory_leading_term(cfg, t);
        res.theory_leading.push_back(lead);
        csv << fmt(t) << ',' << fmt(res.report.series.values[i]) << ',' << fmt(lead) << '\n';
    }
    res.csv = csv.str();
    res.json = report_json(cfg, res.report);
    return res;
}

void write_outputs(const ExperimentResult& result)
{
    auto write = [](const std::string& path, const std::string& text) {
        if (path.empty())
            return;
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw Error("cannot write '" + path + "'");
        out << text;
        if (!out)
            throw Error("failed writing '" + path + "'");
    };
    write(result.config.outputs.csv_path, result.csv);
    write(result.config.outputs.json_path, result.json.dump(2) + "\n");
}

json constants_json(const ExperimentConfig& config)
{
    const ExperimentConfig cfg = config.resolved();
    const FractionalIndices idx = cfg.indices();
    const InitialDatum datum = cfg.make_datum();
    const QuadratureSpec quad = cfg.quadrature_spec();
    json j{
        {"config", to_json(cfg)},
        {"regime", std::string(regime_name(idx.regime()))},
        {"unit_sphere_area", unit_sphere_area(cfg.dimension)},
        {"tool_version", kToolVersion},
    };
    switch (idx.regime()) {
    case Regime::SubordinateDecay:
        j["exponent"] = -2.0 * idx.alpha;
        j["coeff_regime1"] = coeff_regime1(datum, idx.alpha, quad);
        break;
    case Regime::Ballistic:
        j["exponent"] = 2.0;
        j["coeff_regime2"] = coeff_regime2(datum, idx.alpha, quad);
        break;
    case Regime::ExponentialGrowth: {
        const RateBounds r = rate_bounds_regime3(idx, datum);
        j["rate_bracket"] = {r.r_minus, r.r_plus};
        j["horizon"] = regime3_horizon(idx, datum);
        break;
    }
    }
    return j;
}

}  // namespace fqd
