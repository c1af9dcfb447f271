#pragma once

// Experiment driver: a JSON-serializable configuration, validation, and the
// CSV / JSON report produced by `fqdiff run`.

#include "fqd/asymptotics.hpp"
#include "fqd/datum.hpp"
#include "fqd/errors.hpp"
#include "fqd/indices.hpp"
#include "fqd/quadrature.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fqd {

inline constexpr const char* kToolVersion = "fqdiff 1.0.0";

/// Raised by ExperimentConfig::validate(); maps to exit status 2.
class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

struct DatumConfig {
    std::string cls = "annulus";  // "gaussian" or "annulus"
    double lambda_minus = 1.0;
    double lambda_plus = 2.0;
    bool operator==(const DatumConfig&) const = default;
};

struct TimeGridConfig {
    // Zero t_min / t_max select the regime's default fitting window.
    double t_min = 0.0;
    double t_max = 0.0;
    int points_per_decade = 40;
    bool operator==(const TimeGridConfig&) const = default;
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    bool operator==(const QuadratureConfig&) const = default;
};

struct OutputsConfig {
    std::string csv_path;
    std::string json_path;
    bool operator==(const OutputsConfig&) const = default;
};

struct ExperimentConfig {
    double alpha = 1.0;
    double beta = 1.0;
    int dimension = 1;
    DatumConfig datum;
    TimeGridConfig time_grid;
    QuadratureConfig quadrature;
    OutputsConfig outputs;

    bool operator==(const ExperimentConfig&) const = default;

    /// Throws ConfigError with a one-line message on the first violated rule.
    void validate() const;
    /// Copy with the default fitting window filled in where t_min / t_max are zero.
    ExperimentConfig resolved() const;

    FractionalIndices indices() const { return {alpha, beta}; }
    InitialDatum make_datum() const;
    QuadratureSpec quadrature_spec() const;
    std::vector<double> grid() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
/// Missing fields keep their defaults; wrong types raise ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

struct ExperimentResult {
    ExperimentConfig config;  // resolved
    RegimeReport report;
    std::vector<double> theory_leading;
    std::string csv;
    nlohmann::json json;
};

/// Leading large-t term of D2 for the configured regime at time t.
double theory_leading_term(const ExperimentConfig& cfg, double t);

/// Validates, samples, fits and renders the outputs (without writing files).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes result.csv / result.json to the configured paths (empty paths are skipped).
void write_outputs(const ExperimentResult& result);

/// Closed-form constants for the configured datum and indices.
nlohmann::json constants_json(const ExperimentConfig& cfg);

}  // namespace fqd
