/// @file dynamics.cpp
/// @brief Memory forces and the predictor-corrector integrator

#include "ctpmirror/dynamics.hpp"

#include "ctpmirror/casimir.hpp"
#include "ctpmirror/errors.hpp"
#include "ctpmirror/memory.hpp"
#include "ctpmirror/precision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ctpm {

double Potential::gradient(double m, double xq) const
{
	switch (kind)
	{
	case PotentialKind::Harmonic:
		return m * Omega * Omega * xq;
	case PotentialKind::Free:
		return 0.0;
	case PotentialKind::Tabulated:
		break;
	}
	if (xq < x.front() || xq > x.back())
	{
		throw DomainError("position " + std::to_string(xq) + " outside the tabulated potential range");
	}
	const auto hi = std::upper_bound(x.begin(), x.end(), xq);
	const auto i = static_cast<std::size_t>(std::min<std::ptrdiff_t>(hi - x.begin(), static_cast<std::ptrdiff_t>(x.size()) - 1));
	const double s = (xq - x[i - 1]) / (x[i] - x[i - 1]);
	return dVdx[i - 1] + s * (dVdx[i] - dVdx[i - 1]);
}

double Potential::energy(double m, double xq) const
{
	switch (kind)
	{
	case PotentialKind::Harmonic:
		return 0.5 * m * Omega * Omega * xq * xq;
	case PotentialKind::Free:
		return 0.0;
	case PotentialKind::Tabulated:
		break;
	}
	if (xq < x.front() || xq > x.back())
	{
		throw DomainError("position " + std::to_string(xq) + " outside the tabulated potential range");
	}
	double v = 0.0;
	for (std::size_t i = 1; i < x.size(); ++i)
	{
		const double right = std::min(xq, x[i]);
		if (right <= x[i - 1])
		{
			break;
		}
		v += 0.5 * (dVdx[i - 1] + gradient(m, right)) * (right - x[i - 1]);
	}
	return v;
}

void Potential::validate() const
{
	if (kind == PotentialKind::Harmonic && !(Omega >= 0))
	{
		throw DomainError("harmonic frequency Omega must be non-negative");
	}
	if (kind == PotentialKind::Tabulated)
	{
		if (x.size() < 2 || x.size() != dVdx.size())
		{
			throw DomainError("tabulated potential needs matching x and dVdx arrays of length >= 2");
		}
		if (!std::is_sorted(x.begin(), x.end()) || std::adjacent_find(x.begin(), x.end()) != x.end())
		{
			throw DomainError("tabulated potential x grid must be strictly ascending");
		}
	}
}

void MirrorSpec::validate() const
{
	if (!(m > 0) || !std::isfinite(m))
	{
		throw DomainError("mirror mass m must be positive");
	}
	potential.validate();
}

double MirrorSpec::x_zpf() const
{
	if (potential.kind != PotentialKind::Harmonic || !(potential.Omega > 0))
	{
		throw DomainError("x_zpf needs a harmonic potential with Omega > 0");
	}
	return std::sqrt(1.0 / (2.0 * m * potential.Omega));
}

double coupling_parameter(const MirrorSpec& mirror, const CavitySpec& cavity)
{
	mirror.validate();
	cavity.validate();
	if (mirror.potential.kind != PotentialKind::Harmonic || mirror.potential.Omega == 0)
	{
		throw DomainError("coupling parameter undefined for Omega = 0");
	}
	return mirror.x_zpf() / cavity.d * cavity.omega_pl / mirror.potential.Omega;
}

double force_x_prefactor(double d)
{
	return -4.0 / (d * d);
}

double force_xdot_prefactor(double d)
{
	return 1.0 / (d * d);
}

template <typename Real>
ForceHistories<Real> optical_forces(const Trajectory<Real>& traj, const MirrorKernels& kernels, bool accel)
{
	traj.validate();
	const Trajectory<Real> tv = traj.has_velocity() ? traj : traj.with_velocity();
	const auto fk = kernels.force_kernels<Real>();
	const double d = kernels.cavity().d;
	ForceHistories<Real> out;
	if (accel)
	{
		out.force_x = memory_integral(fk.m00, KernelParity::Sine, tv.dt, tv.x);
		out.force_xdot = memory_integral(fk.m11_dot, KernelParity::Cosine, tv.dt, tv.v);
	}
	else
	{
		out.force_x.resize(tv.size());
		out.force_xdot.resize(tv.size());
		for (std::size_t n = 0; n < tv.size(); ++n)
		{
			out.force_x[n] = direct_memory_integral(fk.m00, KernelParity::Sine, tv.dt, tv.x, n);
			out.force_xdot[n] = direct_memory_integral(fk.m11_dot, KernelParity::Cosine, tv.dt, tv.v, n);
		}
	}
	const Real cx(force_x_prefactor(d));
	const Real cv(force_xdot_prefactor(d));
	for (auto& f : out.force_x)
	{
		f *= cx;
	}
	for (auto& f : out.force_xdot)
	{
		f *= cv;
	}
	return out;
}

template ForceHistories<double> optical_forces(const Trajectory<double>&, const MirrorKernels&, bool);
template ForceHistories<ExtendedReal> optical_forces(const Trajectory<ExtendedReal>&, const MirrorKernels&, bool);

double force_x(const Trajectory<double>& traj, const MirrorKernels& kernels, std::size_t t_index)
{
	traj.validate();
	if (t_index >= traj.size())
	{
		throw DomainError("time index outside the trajectory");
	}
	const auto fk = kernels.force_kernels<double>();
	return force_x_prefactor(kernels.cavity().d) *
		   direct_memory_integral(fk.m00, KernelParity::Sine, traj.dt, traj.x, t_index);
}

double force_xdot(const Trajectory<double>& traj, const MirrorKernels& kernels, std::size_t t_index)
{
	traj.validate();
	if (t_index >= traj.size())
	{
		throw DomainError("time index outside the trajectory");
	}
	const Trajectory<double> tv = traj.has_velocity() ? traj : traj.with_velocity();
	const auto fk = kernels.force_kernels<double>();
	return force_xdot_prefactor(kernels.cavity().d) *
		   direct_memory_integral(fk.m11_dot, KernelParity::Cosine, tv.dt, tv.v, t_index);
}

namespace {

// Literal trapezoid history with the same peek/push interface as the recursion.
class DirectConvolution
{
public:
	DirectConvolution(const LatticeSeries<double>& kernel, KernelParity parity, double dt)
		: kernel_(kernel), parity_(parity), dt_(dt)
	{
	}

	double peek(double u)
	{
		history_.push_back(u);
		const double value = direct_memory_integral(kernel_, parity_, dt_, history_, history_.size() - 1);
		history_.pop_back();
		return value;
	}

	double push(double u)
	{
		history_.push_back(u);
		return direct_memory_integral(kernel_, parity_, dt_, history_, history_.size() - 1);
	}

private:
	LatticeSeries<double> kernel_;
	KernelParity parity_;
	double dt_;
	std::vector<double> history_;
};

// Memory forces switched off.
class NoConvolution
{
public:
	double peek(double) { return 0.0; }
	double push(double) { return 0.0; }
};

template <typename Conv>
void integrate(const MirrorSpec& mirror, Conv& conv_x, Conv& conv_v, double cx, double cv, double x0, double v0,
			   const TimeGrid& grid, const EvolveOptions& options, double d, EvolutionResult& out)
{
	const double m = mirror.m;
	const double dt = grid.dt;
	const std::size_t n = grid.n;
	auto& traj = out.trajectory;
	traj.t0 = grid.t0;
	traj.dt = dt;
	traj.x.assign(n, 0.0);
	traj.v.assign(n, 0.0);
	out.force_x.assign(n, 0.0);
	out.force_xdot.assign(n, 0.0);

	auto static_force = [&](double xq) {
		return options.include_casimir_force ? static_casimir_force(options.casimir_density, d, xq) : 0.0;
	};
	auto accel = [&](double xq, double fx, double fv) { return (fx + fv + static_force(xq) - mirror.potential.gradient(m, xq)) / m; };
	auto mech = [&](double xq, double vq) { return 0.5 * m * vq * vq + mirror.potential.energy(m, xq); };

	traj.x[0] = x0;
	traj.v[0] = v0;
	out.force_x[0] = cx * conv_x.push(x0);
	out.force_xdot[0] = cv * conv_v.push(v0);
	double a = accel(x0, out.force_x[0], out.force_xdot[0]);

	// conserved combination: mechanical energy minus work of the non-potential forces
	const double c0 = mech(x0, v0);
	double scale = std::max(std::abs(c0), std::numeric_limits<double>::min());
	double work = 0.0;
	double& wx = out.diagnostics.work_x;
	double& wv = out.diagnostics.work_xdot;

	for (std::size_t i = 1; i < n; ++i)
	{
		const double x = traj.x[i - 1];
		const double v = traj.v[i - 1];
		const double xp = x + dt * v + 0.5 * dt * dt * a;
		const double vp = v + dt * a;
		const double ap = accel(xp, cx * conv_x.peek(xp), cv * conv_v.peek(vp));
		const double vn = v + 0.5 * dt * (a + ap);
		const double xn = x + 0.5 * dt * (v + vn);
		const double fx = cx * conv_x.push(xn);
		const double fv = cv * conv_v.push(vn);
		a = accel(xn, fx, fv);
		if (!std::isfinite(xn) || !std::isfinite(vn) || !std::isfinite(a))
		{
			throw NumericalError("non-finite state at step " + std::to_string(i));
		}
		traj.x[i] = xn;
		traj.v[i] = vn;
		out.force_x[i] = fx;
		out.force_xdot[i] = fv;

		const double wx_step = 0.5 * dt * (v * out.force_x[i - 1] + vn * fx);
		const double wv_step = 0.5 * dt * (v * out.force_xdot[i - 1] + vn * fv);
		wx += wx_step;
		wv += wv_step;
		work += wx_step + wv_step + 0.5 * dt * (v * static_force(x) + vn * static_force(xn));

		const double e = mech(xn, vn);
		scale = std::max(scale, std::abs(work));
		const double drift = std::abs(e - work - c0) / scale;
		out.diagnostics.max_energy_drift = std::max(out.diagnostics.max_energy_drift, drift);
		if (drift > options.drift_limit)
		{
			throw NumericalError("step-size instability: energy balance drifted by " + std::to_string(drift) +
								 " (limit " + std::to_string(options.drift_limit) + ") at step " + std::to_string(i) +
								 "; reduce dt");
		}
	}
	out.diagnostics.steps = n - 1;
}

} // namespace

EvolutionResult evolve(const MirrorSpec& mirror, const MirrorKernels& kernels, double x0, double v0,
					   const TimeGrid& grid, const EvolveOptions& options)
{
	mirror.validate();
	grid.validate();
	const double d = kernels.cavity().d;
	EvolutionResult out;
	out.diagnostics.lambda = std::numeric_limits<double>::quiet_NaN();
	if (mirror.potential.kind == PotentialKind::Harmonic && mirror.potential.Omega > 0)
	{
		out.diagnostics.lambda = coupling_parameter(mirror, kernels.cavity());
		if (options.memory_forces && out.diagnostics.lambda >= 1.0)
		{
			throw DomainError("coupling parameter lambda = " + std::to_string(out.diagnostics.lambda) +
							  " >= 1: perturbative treatment not valid");
		}
		if (out.diagnostics.lambda > 0.1)
		{
			out.diagnostics.warnings.push_back("coupling parameter lambda = " + std::to_string(out.diagnostics.lambda) +
											   " exceeds 0.1");
		}
	}
	if (std::abs(x0) / d > 0.05)
	{
		out.diagnostics.warnings.push_back("initial displacement exceeds 5% of d");
	}
	if (x0 != 0.0 && options.memory_forces)
	{
		out.diagnostics.warnings.push_back("memory integrals start at t_i with x(t_i) != 0; early forces carry a switch-on transient");
	}

	const double cx = force_x_prefactor(d);
	const double cv = force_xdot_prefactor(d);
	if (!options.memory_forces)
	{
		NoConvolution cx_conv, cv_conv;
		integrate(mirror, cx_conv, cv_conv, cx, cv, x0, v0, grid, options, d, out);
	}
	else
	{
		const auto fk = kernels.force_kernels<double>();
		if (options.accel)
		{
			MemoryConvolution<double> conv_x(fk.m00, KernelParity::Sine, grid.dt);
			MemoryConvolution<double> conv_v(fk.m11_dot, KernelParity::Cosine, grid.dt);
			integrate(mirror, conv_x, conv_v, cx, cv, x0, v0, grid, options, d, out);
		}
		else
		{
			DirectConvolution conv_x(fk.m00, KernelParity::Sine, grid.dt);
			DirectConvolution conv_v(fk.m11_dot, KernelParity::Cosine, grid.dt);
			integrate(mirror, conv_x, conv_v, cx, cv, x0, v0, grid, options, d, out);
		}
	}
	return out;
}

} // namespace ctpm
