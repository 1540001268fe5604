/// @file config.cpp
/// @brief JSON configuration parsing and validation

#include "ctpmirror/config.hpp"

#include "ctpmirror/errors.hpp"
#include "ctpmirror/precision.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ctpm {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where)
{
	if (!j.is_object())
	{
		throw ConfigError(where + " must be an object");
	}
}

void reject_unknown(const json& j, const std::string& where, const std::set<std::string>& allowed)
{
	for (const auto& item : j.items())
	{
		if (allowed.count(item.key()) == 0)
		{
			throw ConfigError("unknown key '" + where + "." + item.key() + "'");
		}
	}
}

double number(const json& j, const std::string& key, const std::string& where)
{
	const auto& v = j.at(key);
	if (!v.is_number())
	{
		throw ConfigError(where + "." + key + " must be a number");
	}
	const double x = v.get<double>();
	if (!std::isfinite(x))
	{
		throw ConfigError(where + "." + key + " must be finite");
	}
	return x;
}

double positive(const json& j, const std::string& key, const std::string& where)
{
	const double x = number(j, key, where);
	if (!(x > 0))
	{
		throw ConfigError(where + "." + key + " must be positive");
	}
	return x;
}

long integer(const json& j, const std::string& key, const std::string& where)
{
	const auto& v = j.at(key);
	if (!v.is_number_integer())
	{
		throw ConfigError(where + "." + key + " must be an integer");
	}
	return v.get<long>();
}

bool boolean(const json& j, const std::string& key, const std::string& where)
{
	const auto& v = j.at(key);
	if (!v.is_boolean())
	{
		throw ConfigError(where + "." + key + " must be a boolean");
	}
	return v.get<bool>();
}

std::string string(const json& j, const std::string& key, const std::string& where)
{
	const auto& v = j.at(key);
	if (!v.is_string())
	{
		throw ConfigError(where + "." + key + " must be a string");
	}
	return v.get<std::string>();
}

std::vector<double> number_array(const json& j, const std::string& key, const std::string& where)
{
	const auto& v = j.at(key);
	if (!v.is_array())
	{
		throw ConfigError(where + "." + key + " must be an array of numbers");
	}
	std::vector<double> out;
	for (const auto& e : v)
	{
		if (!e.is_number())
		{
			throw ConfigError(where + "." + key + " must be an array of numbers");
		}
		out.push_back(e.get<double>());
	}
	return out;
}

void parse_cavity(const json& j, RunConfig& cfg)
{
	require_object(j, "cavity");
	reject_unknown(j, "cavity", {"d", "K_max", "omega_pl"});
	if (j.contains("d"))
	{
		cfg.cavity.d = positive(j, "d", "cavity");
	}
	if (j.contains("K_max"))
	{
		const long K = integer(j, "K_max", "cavity");
		if (K < 1 || K > 100000)
		{
			throw ConfigError("cavity.K_max must lie in [1, 100000]");
		}
		cfg.cavity.K_max = static_cast<int>(K);
	}
	if (j.contains("omega_pl"))
	{
		cfg.cavity.omega_pl = positive(j, "omega_pl", "cavity");
	}
}

void parse_mirror(const json& j, RunConfig& cfg)
{
	require_object(j, "mirror");
	reject_unknown(j, "mirror", {"m", "Omega", "potential", "x0", "v0"});
	if (j.contains("m"))
	{
		cfg.mirror.m = positive(j, "m", "mirror");
	}
	if (j.contains("Omega"))
	{
		cfg.mirror.potential.Omega = number(j, "Omega", "mirror");
		if (cfg.mirror.potential.Omega < 0)
		{
			throw ConfigError("mirror.Omega must be non-negative");
		}
	}
	if (j.contains("x0"))
	{
		cfg.x0 = number(j, "x0", "mirror");
	}
	if (j.contains("v0"))
	{
		cfg.v0 = number(j, "v0", "mirror");
	}
	if (!j.contains("potential"))
	{
		return;
	}
	const auto& p = j.at("potential");
	if (p.is_string())
	{
		const auto kind = p.get<std::string>();
		if (kind == "harmonic")
		{
			cfg.mirror.potential.kind = PotentialKind::Harmonic;
		}
		else if (kind == "free")
		{
			cfg.mirror.potential.kind = PotentialKind::Free;
		}
		else
		{
			throw ConfigError("mirror.potential must be 'harmonic', 'free' or a tabulated object");
		}
		return;
	}
	require_object(p, "mirror.potential");
	reject_unknown(p, "mirror.potential", {"kind", "x", "dVdx"});
	if (string(p, "kind", "mirror.potential") != "tabulated")
	{
		throw ConfigError("mirror.potential object must have kind 'tabulated'");
	}
	cfg.mirror.potential.kind = PotentialKind::Tabulated;
	cfg.mirror.potential.x = number_array(p, "x", "mirror.potential");
	cfg.mirror.potential.dVdx = number_array(p, "dVdx", "mirror.potential");
	try
	{
		cfg.mirror.potential.validate();
	}
	catch (const DomainError& e)
	{
		throw ConfigError(std::string("mirror.potential: ") + e.what());
	}
}

void parse_trajectory(const json& j, RunConfig& cfg)
{
	require_object(j, "trajectory");
	reject_unknown(j, "trajectory", {"kind", "params", "grid"});
	auto& t = cfg.trajectory;
	if (!j.contains("kind"))
	{
		throw ConfigError("trajectory.kind is required");
	}
	t.kind = string(j, "kind", "trajectory");
	const json params = j.value("params", json::object());
	const json grid = j.value("grid", json::object());
	require_object(params, "trajectory.params");
	require_object(grid, "trajectory.grid");

	if (t.kind == "gaussian")
	{
		reject_unknown(params, "trajectory.params", {"A", "tau"});
		reject_unknown(grid, "trajectory.grid", {"dt", "half_width"});
		if (params.contains("A"))
		{
			t.A = number(params, "A", "trajectory.params");
		}
		if (params.contains("tau"))
		{
			t.tau = positive(params, "tau", "trajectory.params");
		}
		if (grid.contains("half_width"))
		{
			t.half_width = positive(grid, "half_width", "trajectory.grid");
		}
	}
	else if (t.kind == "windowed_sine")
	{
		reject_unknown(params, "trajectory.params", {"A", "Omega_d", "n_cycles", "ramp_cycles"});
		reject_unknown(grid, "trajectory.grid", {"dt", "pad"});
		if (params.contains("A"))
		{
			t.A = number(params, "A", "trajectory.params");
		}
		if (!params.contains("Omega_d"))
		{
			throw ConfigError("trajectory.params.Omega_d is required for windowed_sine");
		}
		t.Omega_d = positive(params, "Omega_d", "trajectory.params");
		if (params.contains("n_cycles"))
		{
			t.n_cycles = static_cast<int>(integer(params, "n_cycles", "trajectory.params"));
		}
		if (params.contains("ramp_cycles"))
		{
			t.ramp_cycles = positive(params, "ramp_cycles", "trajectory.params");
		}
		if (t.n_cycles < 2 || t.ramp_cycles < 1.0 || 2.0 * t.ramp_cycles > t.n_cycles)
		{
			throw ConfigError("windowed_sine needs ramp_cycles >= 1 and 2 ramp_cycles <= n_cycles");
		}
		if (grid.contains("pad"))
		{
			t.pad = number(grid, "pad", "trajectory.grid");
			if (t.pad < 0)
			{
				throw ConfigError("trajectory.grid.pad must be non-negative");
			}
		}
	}
	else if (t.kind == "file")
	{
		reject_unknown(params, "trajectory.params", {"path"});
		reject_unknown(grid, "trajectory.grid", {});
		t.path = string(params, "path", "trajectory.params");
	}
	else
	{
		throw ConfigError("trajectory.kind must be one of gaussian, windowed_sine, file");
	}
	if (grid.contains("dt"))
	{
		t.dt = positive(grid, "dt", "trajectory.grid");
	}
}

void parse_solver(const json& j, RunConfig& cfg)
{
	require_object(j, "solver");
	reject_unknown(j, "solver", {"dt", "steps", "accel", "precision"});
	if (j.contains("dt"))
	{
		cfg.solver.dt = positive(j, "dt", "solver");
	}
	if (j.contains("steps"))
	{
		cfg.solver.steps = integer(j, "steps", "solver");
		if (cfg.solver.steps < 1)
		{
			throw ConfigError("solver.steps must be at least 1");
		}
	}
	if (j.contains("accel"))
	{
		cfg.solver.accel = boolean(j, "accel", "solver");
	}
	if (j.contains("precision"))
	{
		cfg.solver.precision = string(j, "precision", "solver");
		if (cfg.solver.precision != "double" && cfg.solver.precision != "extended")
		{
			throw ConfigError("solver.precision must be 'double' or 'extended'");
		}
	}
}

void parse_outputs(const json& j, RunConfig& cfg)
{
	require_object(j, "outputs");
	reject_unknown(j, "outputs", {"dir", "formats"});
	if (j.contains("dir"))
	{
		cfg.outputs.dir = string(j, "dir", "outputs");
	}
	if (j.contains("formats"))
	{
		const auto& f = j.at("formats");
		if (!f.is_array())
		{
			throw ConfigError("outputs.formats must be an array");
		}
		cfg.outputs.formats.clear();
		for (const auto& e : f)
		{
			if (!e.is_string() || (e.get<std::string>() != "csv" && e.get<std::string>() != "json"))
			{
				throw ConfigError("outputs.formats entries must be 'csv' or 'json'");
			}
			cfg.outputs.formats.push_back(e.get<std::string>());
		}
	}
}

void parse_casimir(const json& j, RunConfig& cfg)
{
	require_object(j, "casimir");
	reject_unknown(j, "casimir", {"sigma_max_over_d", "points"});
	if (j.contains("sigma_max_over_d"))
	{
		cfg.casimir.sigma_max_over_d = positive(j, "sigma_max_over_d", "casimir");
	}
	if (j.contains("points"))
	{
		cfg.casimir.points = static_cast<int>(integer(j, "points", "casimir"));
		// 0 selects the size automatically
		if (cfg.casimir.points != 0 && (cfg.casimir.points < 2 || cfg.casimir.points > 12))
		{
			throw ConfigError("casimir.points must be 0 (automatic) or lie in [2, 12]");
		}
	}
}

} // namespace

bool OutputConfig::wants(const std::string& format) const
{
	return std::find(formats.begin(), formats.end(), format) != formats.end();
}

CavitySpec RunConfig::cavity_spec() const
{
	CavitySpec spec;
	spec.d = cavity.d;
	if (cavity.K_max)
	{
		spec.K_max = *cavity.K_max;
		// without an explicit cutoff, place it half a mode spacing above K_max
		spec.omega_pl = cavity.omega_pl ? *cavity.omega_pl : (spec.K_max + 0.5) * pi<double>() / spec.d;
	}
	else if (cavity.omega_pl)
	{
		spec.omega_pl = *cavity.omega_pl;
		spec.K_max = plasma_mode_limit(spec.d, spec.omega_pl);
		if (spec.K_max < 1)
		{
			throw ConfigError("cavity.omega_pl is below the fundamental mode frequency pi/d");
		}
	}
	else
	{
		throw ConfigError("cavity needs K_max or omega_pl");
	}
	return spec;
}

double RunConfig::temperature() const
{
	return T_over_omega1 * pi<double>() / cavity.d;
}

ThermalSpectrum RunConfig::thermal() const
{
	return ThermalSpectrum(temperature());
}

TimeGrid RunConfig::solver_grid() const
{
	if (!(solver.dt > 0) || solver.steps < 1)
	{
		throw ConfigError("solver.dt and solver.steps are required");
	}
	return {0.0, solver.dt, static_cast<std::size_t>(solver.steps) + 1};
}

json RunConfig::effective() const
{
	json j;
	j["cavity"]["d"] = cavity.d;
	if (cavity.K_max || cavity.omega_pl)
	{
		const auto spec = cavity_spec();
		j["cavity"]["K_max"] = spec.K_max;
		j["cavity"]["omega_pl"] = spec.omega_pl;
	}
	j["thermal"]["T"] = T_over_omega1;
	j["mirror"]["m"] = mirror.m;
	j["mirror"]["Omega"] = mirror.potential.Omega;
	j["mirror"]["x0"] = x0;
	j["mirror"]["v0"] = v0;
	switch (mirror.potential.kind)
	{
	case PotentialKind::Harmonic:
		j["mirror"]["potential"] = "harmonic";
		break;
	case PotentialKind::Free:
		j["mirror"]["potential"] = "free";
		break;
	case PotentialKind::Tabulated:
		j["mirror"]["potential"] = {{"kind", "tabulated"}, {"x", mirror.potential.x}, {"dVdx", mirror.potential.dVdx}};
		break;
	}
	auto& t = j["trajectory"];
	t["kind"] = trajectory.kind;
	if (trajectory.kind == "gaussian")
	{
		t["params"] = {{"A", trajectory.A}, {"tau", trajectory.tau}};
		t["grid"]["half_width"] = trajectory.half_width.value_or(10.0 * trajectory.tau);
	}
	else if (trajectory.kind == "windowed_sine")
	{
		t["params"] = {{"A", trajectory.A}, {"Omega_d", trajectory.Omega_d}, {"n_cycles", trajectory.n_cycles},
					   {"ramp_cycles", trajectory.ramp_cycles}};
		t["grid"]["pad"] = trajectory.pad;
	}
	else
	{
		t["params"] = {{"path", trajectory.path}};
		t["grid"] = json::object();
	}
	if (trajectory.dt)
	{
		t["grid"]["dt"] = *trajectory.dt;
	}
	else if (trajectory.kind != "file" && (cavity.K_max || cavity.omega_pl))
	{
		t["grid"]["dt"] = cavity.d / (40.0 * cavity_spec().K_max);
	}
	j["solver"] = {{"accel", solver.accel}, {"precision", solver.precision}};
	// unset time stepping stays absent so the effective config parses back
	if (solver.dt > 0)
	{
		j["solver"]["dt"] = solver.dt;
	}
	if (solver.steps > 0)
	{
		j["solver"]["steps"] = solver.steps;
	}
	j["outputs"] = {{"dir", outputs.dir}, {"formats", outputs.formats}};
	j["casimir"] = {{"sigma_max_over_d", casimir.sigma_max_over_d}, {"points", casimir.points}};
	return j;
}

RunConfig parse_config(const json& doc)
{
	require_object(doc, "config");
	reject_unknown(doc, "config", {"cavity", "thermal", "mirror", "trajectory", "solver", "outputs", "casimir"});
	RunConfig cfg;
	try
	{
		if (doc.contains("cavity"))
		{
			parse_cavity(doc.at("cavity"), cfg);
		}
		if (doc.contains("thermal"))
		{
			const auto& th = doc.at("thermal");
			require_object(th, "thermal");
			reject_unknown(th, "thermal", {"T"});
			if (th.contains("T"))
			{
				cfg.T_over_omega1 = number(th, "T", "thermal");
				if (cfg.T_over_omega1 < 0)
				{
					throw ConfigError("thermal.T must be non-negative");
				}
			}
		}
		if (doc.contains("mirror"))
		{
			parse_mirror(doc.at("mirror"), cfg);
		}
		if (doc.contains("trajectory"))
		{
			parse_trajectory(doc.at("trajectory"), cfg);
		}
		if (doc.contains("solver"))
		{
			parse_solver(doc.at("solver"), cfg);
		}
		if (doc.contains("outputs"))
		{
			parse_outputs(doc.at("outputs"), cfg);
		}
		if (doc.contains("casimir"))
		{
			parse_casimir(doc.at("casimir"), cfg);
		}
	}
	catch (const json::exception& e)
	{
		throw ConfigError(std::string("malformed config: ") + e.what());
	}
	return cfg;
}

RunConfig load_config(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw IoError("cannot open config file '" + path + "'");
	}
	std::stringstream buffer;
	buffer << in.rdbuf();
	json doc;
	try
	{
		doc = json::parse(buffer.str());
	}
	catch (const json::parse_error& e)
	{
		throw ConfigError(std::string("config is not valid JSON: ") + e.what());
	}
	return parse_config(doc);
}

} // namespace ctpm
