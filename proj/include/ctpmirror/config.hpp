/// @file config.hpp
/// @brief Declarative JSON run configuration with strict schema validation

#pragma once

#include "ctpmirror/cavity.hpp"
#include "ctpmirror/dynamics.hpp"
#include "ctpmirror/thermal.hpp"
#include "ctpmirror/trajectory.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ctpm {

struct CavityConfig
{
	double d = 1.0;
	std::optional<int> K_max;
	std::optional<double> omega_pl;
};

struct TrajectoryConfig
{
	std::string kind = "gaussian";   ///< gaussian | windowed_sine | file
	// gaussian
	double A = 0.01;
	double tau = 2.0;
	std::optional<double> half_width;  ///< default 10 tau
	// windowed_sine
	double Omega_d = 0.0;
	int n_cycles = 20;
	double ramp_cycles = 3.0;
	double pad = 0.0;
	// file
	std::string path;
	// shared; default d / (40 K_max), i.e. 40 samples per fastest kernel period
	std::optional<double> dt;
};

struct SolverConfig
{
	double dt = 0.0;
	long steps = 0;
	bool accel = true;
	std::string precision = "double";  ///< double | extended
};

struct OutputConfig
{
	std::string dir = "ctp_mirror_out";
	std::vector<std::string> formats{"csv", "json"};

	bool wants(const std::string& format) const;
};

struct CasimirConfig
{
	double sigma_max_over_d = 0.1;
	int points = 0;
};

/// Parsed configuration. Temperature is given in units of the fundamental mode
/// frequency pi/d and converted on access.
struct RunConfig
{
	CavityConfig cavity;
	double T_over_omega1 = 0.0;
	MirrorSpec mirror;
	double x0 = 0.0;
	double v0 = 0.0;
	TrajectoryConfig trajectory;
	SolverConfig solver;
	OutputConfig outputs;
	CasimirConfig casimir;

	/// Throws ConfigError when neither K_max nor omega_pl is given.
	CavitySpec cavity_spec() const;
	double temperature() const;
	ThermalSpectrum thermal() const;
	TimeGrid solver_grid() const;

	/// Effective configuration with defaults resolved.
	nlohmann::json effective() const;
};

/// Parses and validates. Unknown keys, wrong types and non-physical values raise
/// ConfigError.
RunConfig parse_config(const nlohmann::json& doc);

/// Reads a file; a missing or unreadable file raises IoError.
RunConfig load_config(const std::string& path);

} // namespace ctpm
