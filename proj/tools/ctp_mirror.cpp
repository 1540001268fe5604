/// @file ctp_mirror.cpp
/// @brief Batch front-end: kernels, casimir, evolve, balance and spectrum runs

#include "ctpmirror/casimir.hpp"
#include "ctpmirror/config.hpp"
#include "ctpmirror/dynamics.hpp"
#include "ctpmirror/energetics.hpp"
#include "ctpmirror/errors.hpp"
#include "ctpmirror/kernels.hpp"
#include "ctpmirror/output.hpp"
#include "ctpmirror/precision.hpp"
#include "ctpmirror/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace ctpm;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* const kUnits = "natural units c = hbar = k_B = 1; lengths and times in the same unit as d";

struct Context
{
	RunConfig cfg;
	fs::path out_dir;
	bool include_casimir_force = false;
	double tolerance = 1e-3;

	std::string config_line() const { return "config: " + cfg.effective().dump(); }

	void write_csv(CsvTable table, const std::string& name, const std::string& columns) const
	{
		table.comment("units: " + std::string(kUnits) + "; " + columns);
		table.comment(config_line());
		table.write(out_dir / name);
	}

	void write_report(json doc, const std::string& name) const
	{
		doc["units"] = kUnits;
		doc["config"] = cfg.effective();
		write_json(out_dir / name, doc);
	}
};

std::string fmt(double x)
{
	std::ostringstream os;
	os.precision(10);
	os << x;
	return os.str();
}

MirrorKernels build_kernels(const RunConfig& cfg)
{
	const auto spec = cfg.cavity_spec();
	spec.validate();
	return MirrorKernels(spec, cfg.thermal());
}

double trajectory_dt(const RunConfig& cfg)
{
	return cfg.trajectory.dt.value_or(cfg.cavity.d / (40.0 * cfg.cavity_spec().K_max));
}

Trajectory<double> build_trajectory(const RunConfig& cfg)
{
	const auto& t = cfg.trajectory;
	if (t.kind == "gaussian")
	{
		const auto grid = TimeGrid::centered(t.half_width.value_or(10.0 * t.tau), trajectory_dt(cfg));
		return gaussian_pulse<double>(t.A, t.tau, grid);
	}
	if (t.kind == "windowed_sine")
	{
		return windowed_sine(t.A, t.Omega_d, t.n_cycles, t.ramp_cycles, trajectory_dt(cfg), t.pad);
	}
	return read_trajectory_csv(t.path);
}

Trajectory<ExtendedReal> build_extended_trajectory(const RunConfig& cfg)
{
	const auto& t = cfg.trajectory;
	if (t.kind == "gaussian")
	{
		const auto grid = TimeGrid::centered(t.half_width.value_or(10.0 * t.tau), trajectory_dt(cfg));
		return gaussian_pulse<ExtendedReal>(ExtendedReal(t.A), ExtendedReal(t.tau), grid);
	}
	const auto d = build_trajectory(cfg);
	Trajectory<ExtendedReal> out;
	out.t0 = d.t0;
	out.dt = d.dt;
	out.x.assign(d.x.begin(), d.x.end());
	out.v.assign(d.v.begin(), d.v.end());
	return out;
}

template <typename Real>
void write_trajectory(const Context& ctx, const Trajectory<Real>& traj)
{
	CsvTable table({"t", "x", "v"});
	for (std::size_t i = 0; i < traj.size(); ++i)
	{
		table.row({to_double(traj.time(i)), to_double(traj.x[i]), to_double(traj.v[i])});
	}
	ctx.write_csv(std::move(table), "trajectory.csv", "t [time], x [length], v [length/time]");
}

void warn(const std::vector<std::string>& warnings)
{
	for (const auto& w : warnings)
	{
		std::cerr << json{{"warning", w}}.dump() << '\n';
	}
}

void run_kernels(const Context& ctx)
{
	const auto mk = build_kernels(ctx.cfg);
	const int K = mk.K();
	const double d = mk.cavity().d;
	const auto table = mk.spectral_table();

	double fdt_error = 0;
	for (const auto& e : table)
	{
		const double rhs = mk.thermal().z(e.omega_sum) * e.im_mu;
		if (e.nu != 0)
		{
			fdt_error = std::max(fdt_error, std::abs(e.nu - rhs) / std::abs(e.nu));
		}
	}

	if (ctx.cfg.outputs.wants("csv"))
	{
		CsvTable g({"j", "k", "g"});
		const auto& coupling = mk.coupling();
		for (int j = 1; j <= K; ++j)
		{
			for (int k = 1; k <= K; ++k)
			{
				g.row({static_cast<double>(j), static_cast<double>(k), coupling(j, k)});
			}
		}
		ctx.write_csv(std::move(g), "g_matrix.csv", "g dimensionless");

		// every kernel line is a multiple of pi/d, so [0, 2d] is one full period
		const double dt = d / (40.0 * K);
		const auto samples = static_cast<std::size_t>(std::llround(2.0 * d / dt));
		CsvTable k00({"t", "N", "M"});
		CsvTable k11({"t", "N", "M"});
		for (std::size_t i = 0; i <= samples; ++i)
		{
			const double t = static_cast<double>(i) * dt;
			const auto a = mk.kernel_00(t);
			const auto b = mk.kernel_11(t);
			k00.row({t, a.N_plus + a.N_minus, a.M_plus});
			k11.row({t, b.N, b.M});
		}
		ctx.write_csv(std::move(k00), "kernels_00.csv", "t [time], N = N_+^00 + N_-^00 and M = M_+^00 [1/time^2]");
		ctx.write_csv(std::move(k11), "kernels_11.csv", "t [time], N = N_+^11 + N_-^11 and M = M_+^11 + M_-^11 [dimensionless]");

		CsvTable spectral({"k", "j", "omega_sum", "nu", "im_mu"});
		for (const auto& e : table)
		{
			spectral.row({static_cast<double>(e.k), static_cast<double>(e.j), e.omega_sum, e.nu, e.im_mu});
		}
		ctx.write_csv(std::move(spectral), "spectral.csv", "omega_sum [1/time], nu and im_mu dimensionless");
	}
	if (ctx.cfg.outputs.wants("json"))
	{
		ctx.write_report({{"K_max", K},
						  {"d", d},
						  {"T", mk.thermal().temperature()},
						  {"N_minus_00", mk.kernel_00(0.0).N_minus},
						  {"mass_shift_sigma", 0.1 * d},
						  {"mass_shift", mk.mass_shift(0.1 * d)},
						  {"fdt_max_rel_error", fdt_error}},
						 "kernels.json");
	}
	std::cout << "kernels: K_max=" << K << " fdt_max_rel_error=" << fmt(fdt_error) << " out=" << ctx.out_dir.string()
			  << '\n';
}

void run_casimir(const Context& ctx)
{
	const double d = ctx.cfg.cavity.d;
	const double T = ctx.cfg.temperature();
	CasimirOptions opt;
	opt.sigma_max_over_d = ctx.cfg.casimir.sigma_max_over_d;
	opt.points = ctx.cfg.casimir.points;
	const auto r = renormalized_density(d, T, opt);
	const double expected_T0 = -pi<double>() / (24.0 * d * d);
	const double expected_highT = T / (2.0 * d);
	if (ctx.cfg.outputs.wants("json"))
	{
		ctx.write_report({{"d", d},
						  {"T", T},
						  {"T_over_omega1", ctx.cfg.T_over_omega1},
						  {"sigma_grid", r.sigma_values},
						  {"regularized", r.regularized},
						  {"freespace", r.freespace},
						  {"renormalized", r.renormalized},
						  {"model_error", r.model_error},
						  {"expected_T0", expected_T0},
						  {"expected_highT", expected_highT}},
						 "casimir.json");
	}
	std::cout << "casimir: eps_ren=" << fmt(r.renormalized) << " model_error=" << fmt(r.model_error)
			  << " expected_T0=" << fmt(expected_T0) << " expected_highT=" << fmt(expected_highT) << '\n';
}

void run_evolve(const Context& ctx)
{
	const auto& cfg = ctx.cfg;
	const auto mk = build_kernels(cfg);
	EvolveOptions opt;
	opt.accel = cfg.solver.accel;
	opt.include_casimir_force = ctx.include_casimir_force;
	if (opt.include_casimir_force)
	{
		opt.casimir_density = renormalized_density(cfg.cavity.d, cfg.temperature()).renormalized;
	}
	const auto r = evolve(cfg.mirror, mk, cfg.x0, cfg.v0, cfg.solver_grid(), opt);
	warn(r.diagnostics.warnings);
	if (cfg.outputs.wants("csv"))
	{
		write_trajectory(ctx, r.trajectory);
		CsvTable forces({"t", "F_x", "F_xdot"});
		for (std::size_t i = 0; i < r.trajectory.size(); ++i)
		{
			forces.row({r.trajectory.time(i), r.force_x[i], r.force_xdot[i]});
		}
		ctx.write_csv(std::move(forces), "forces.csv", "t [time], F_x and F_xdot [mass length/time^2]");
	}
	if (cfg.outputs.wants("json"))
	{
		const auto& dg = r.diagnostics;
		ctx.write_report({{"steps", dg.steps},
						  {"lambda", std::isnan(dg.lambda) ? json(nullptr) : json(dg.lambda)},
						  {"max_energy_drift", dg.max_energy_drift},
						  {"work_x", dg.work_x},
						  {"work_xdot", dg.work_xdot},
						  {"casimir_density", opt.casimir_density},
						  {"x_final", r.trajectory.x.back()},
						  {"v_final", r.trajectory.v.back()},
						  {"warnings", dg.warnings}},
						 "evolve.json");
	}
	std::cout << "evolve: steps=" << r.diagnostics.steps << " x_final=" << fmt(r.trajectory.x.back())
			  << " work=" << fmt(r.diagnostics.work_x + r.diagnostics.work_xdot)
			  << " max_energy_drift=" << fmt(r.diagnostics.max_energy_drift) << '\n';
}

template <typename Real>
EnergyReport balance_for(const Context& ctx, const MirrorKernels& mk, const Trajectory<Real>& traj)
{
	const auto with_v = traj.has_velocity() ? traj : traj.with_velocity();
	if (ctx.cfg.outputs.wants("csv"))
	{
		write_trajectory(ctx, with_v);
	}
	return balance_report(with_v, mk, ctx.cfg.solver.accel);
}

bool run_balance(const Context& ctx)
{
	const auto& cfg = ctx.cfg;
	const auto mk = build_kernels(cfg);
	const EnergyReport r = cfg.solver.precision == "extended"
							   ? balance_for(ctx, mk, build_extended_trajectory(cfg))
							   : balance_for(ctx, mk, build_trajectory(cfg));
	warn(r.warnings);
	const bool passed = r.balance_residual < ctx.tolerance;
	if (cfg.outputs.wants("csv"))
	{
		CsvTable modes({"k", "j", "omega_sum", "contribution"});
		for (const auto& m : r.mode_breakdown)
		{
			modes.row({static_cast<double>(m.k), static_cast<double>(m.j), m.omega_sum, m.contribution});
		}
		ctx.write_csv(std::move(modes), "mode_breakdown.csv", "omega_sum [1/time], contribution [energy]");
	}
	if (cfg.outputs.wants("json"))
	{
		ctx.write_report({{"E_x", r.E_x},
						  {"E_xdot", r.E_xdot},
						  {"E_diss_time", r.E_diss_time},
						  {"E_x_freq", r.E_x_freq},
						  {"E_xdot_freq", r.E_xdot_freq},
						  {"E_diss_freq", r.E_diss_freq},
						  {"P_trans", r.P_trans},
						  {"E_trans", r.E_trans},
						  {"balance_residual", r.balance_residual},
						  {"tolerance", ctx.tolerance},
						  {"passed", passed},
						  {"precision", cfg.solver.precision},
						  {"warnings", r.warnings}},
						 "balance.json");
	}
	std::cout << "balance: residual=" << fmt(r.balance_residual) << " E_trans=" << fmt(r.E_trans)
			  << " E_diss_time=" << fmt(r.E_diss_time) << " P_trans=" << fmt(r.P_trans)
			  << (passed ? " ok" : " FAILED") << '\n';
	return passed;
}

void run_spectrum(const Context& ctx)
{
	auto traj = build_trajectory(ctx.cfg);
	if (!traj.has_velocity())
	{
		traj = traj.with_velocity();
	}
	const auto s = spectrum_of(traj);
	if (ctx.cfg.outputs.wants("csv"))
	{
		write_trajectory(ctx, traj);
		CsvTable table({"omega", "re", "im"});
		for (std::size_t i = 0; i < s.omega.size(); ++i)
		{
			table.row({s.omega[i], s.xt[i].real(), s.xt[i].imag()});
		}
		ctx.write_csv(std::move(table), "spectrum.csv", "omega [1/time], x~ = (1/2pi) int x e^{-i omega t} dt [length time]");
	}
	std::size_t peak = 0;
	for (std::size_t i = 0; i < s.omega.size(); ++i)
	{
		if (std::abs(s.xt[i]) > std::abs(s.xt[peak]))
		{
			peak = i;
		}
	}
	std::cout << "spectrum: samples=" << traj.size() << " bins=" << s.omega.size() << " peak_omega=" << fmt(std::abs(s.omega[peak]))
			  << " peak_abs=" << fmt(std::abs(s.xt[peak])) << '\n';
}

int fail(const std::string& kind, const std::string& message, int code)
{
	std::cerr << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
	return code;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Moving-mirror cavity back-reaction toolkit"};
	app.require_subcommand(1);
	std::string config_path;
	std::optional<std::string> out_dir;
	long seed = 0;
	bool casimir_force = false;
	double tolerance = 1e-3;

	const std::vector<std::pair<std::string, std::string>> commands{
		{"kernels", "coupling matrix, kernel samples and spectral tables"},
		{"casimir", "renormalized static energy density"},
		{"evolve", "self-consistent mirror evolution with memory forces"},
		{"balance", "time-domain dissipation against radiated energy on a prescribed trajectory"},
		{"spectrum", "Fourier spectrum of a prescribed trajectory"}};
	for (const auto& [name, help] : commands)
	{
		auto* sub = app.add_subcommand(name, help);
		sub->add_option("--config", config_path, "JSON run configuration")->required();
		sub->add_option("--out", out_dir, "output directory (overrides outputs.dir)");
		sub->add_option("--seed", seed, "reserved; no stochastic components");
		if (name == "evolve")
		{
			sub->add_flag("--include-casimir-force", casimir_force, "add the static force from the renormalized density");
		}
		if (name == "balance")
		{
			sub->add_option("--tolerance", tolerance, "residual above which the run fails (exit 3)");
		}
	}

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp& e)
	{
		return app.exit(e);
	}
	catch (const CLI::CallForAllHelp& e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError& e)
	{
		return fail("usage", e.what(), 2);
	}

	const std::string command = app.get_subcommands().front()->get_name();
	try
	{
		Context ctx;
		ctx.cfg = load_config(config_path);
		ctx.out_dir = out_dir.value_or(ctx.cfg.outputs.dir);
		ctx.include_casimir_force = casimir_force;
		ctx.tolerance = tolerance;
		if (command == "kernels")
		{
			run_kernels(ctx);
		}
		else if (command == "casimir")
		{
			run_casimir(ctx);
		}
		else if (command == "evolve")
		{
			run_evolve(ctx);
		}
		else if (command == "balance")
		{
			if (!run_balance(ctx))
			{
				return fail("numerical", "balance residual above tolerance " + fmt(tolerance), 3);
			}
		}
		else
		{
			run_spectrum(ctx);
		}
	}
	catch (const ConfigError& e)
	{
		return fail("config", e.what(), 2);
	}
	catch (const DomainError& e)
	{
		return fail("domain", e.what(), 2);
	}
	catch (const NumericalError& e)
	{
		return fail("numerical", e.what(), 3);
	}
	catch (const IoError& e)
	{
		return fail("io", e.what(), 4);
	}
	catch (const std::exception& e)
	{
		return fail("internal", e.what(), 1);
	}
	return 0;
}
