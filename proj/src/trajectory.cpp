/// @file trajectory.cpp
/// @brief Time grids and prescribed mirror trajectories

#include "ctpmirror/trajectory.hpp"

#include "ctpmirror/errors.hpp"
#include "ctpmirror/precision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ctpm {

TimeGrid TimeGrid::centered(double half_width, double dt)
{
	if (!(dt > 0) || !(half_width > 0))
	{
		throw DomainError("centered grid needs positive half width and step");
	}
	const auto half = static_cast<std::size_t>(std::ceil(half_width / dt - 1e-9));
	return {-static_cast<double>(half) * dt, dt, 2 * half + 1};
}

void TimeGrid::validate() const
{
	if (!(dt > 0) || !std::isfinite(dt))
	{
		throw DomainError("grid step dt must be positive");
	}
	if (n < 2)
	{
		throw DomainError("grid needs at least two samples");
	}
}

template <typename Real>
void Trajectory<Real>::validate() const
{
	if (!(dt > 0))
	{
		throw DomainError("trajectory step dt must be positive");
	}
	if (x.size() < 2)
	{
		throw DomainError("trajectory needs at least two samples");
	}
	if (!v.empty() && v.size() != x.size())
	{
		throw DomainError("velocity samples do not match displacement samples");
	}
}

template <typename Real>
Trajectory<Real> Trajectory<Real>::with_velocity() const
{
	validate();
	Trajectory out = *this;
	const std::size_t n = x.size();
	out.v.assign(n, Real(0));
	if (n < 5)
	{
		for (std::size_t i = 0; i < n; ++i)
		{
			const std::size_t lo = i == 0 ? 0 : i - 1;
			const std::size_t hi = i + 1 == n ? i : i + 1;
			out.v[i] = (x[hi] - x[lo]) / (dt * static_cast<long>(hi - lo));
		}
		return out;
	}
	const Real h12 = 12 * dt;
	out.v[0] = (-25 * x[0] + 48 * x[1] - 36 * x[2] + 16 * x[3] - 3 * x[4]) / h12;
	out.v[1] = (-3 * x[0] - 10 * x[1] + 18 * x[2] - 6 * x[3] + x[4]) / h12;
	for (std::size_t i = 2; i + 2 < n; ++i)
	{
		out.v[i] = (x[i - 2] - 8 * x[i - 1] + 8 * x[i + 1] - x[i + 2]) / h12;
	}
	out.v[n - 2] = (3 * x[n - 1] + 10 * x[n - 2] - 18 * x[n - 3] + 6 * x[n - 4] - x[n - 5]) / h12;
	out.v[n - 1] = (25 * x[n - 1] - 48 * x[n - 2] + 36 * x[n - 3] - 16 * x[n - 4] + 3 * x[n - 5]) / h12;
	return out;
}

template <typename Real>
Trajectory<Real> gaussian_pulse(const Real& A, const Real& tau, const TimeGrid& grid)
{
	using std::exp;
	grid.validate();
	if (!(tau > 0))
	{
		throw DomainError("pulse width tau must be positive");
	}
	const double half = 0.5 * static_cast<double>(grid.n - 1) * grid.dt;
	if (half < 6.0 * static_cast<double>(tau) * (1.0 - 1e-12))
	{
		throw DomainError("grid half width " + std::to_string(half) + " shorter than 6 tau = " +
						  std::to_string(6.0 * static_cast<double>(tau)));
	}
	Trajectory<Real> traj;
	traj.t0 = Real(grid.t0);
	traj.dt = Real(grid.dt);
	traj.x.resize(grid.n);
	// offsets from the midpoint in units of dt/2 keep the sample times exact
	const long twice_mid = static_cast<long>(grid.n - 1);
	for (std::size_t i = 0; i < grid.n; ++i)
	{
		const Real s = traj.dt * (2 * static_cast<long>(i) - twice_mid) / (2 * tau);
		traj.x[i] = A * exp(-s * s);
	}
	return traj;
}

Trajectory<double> windowed_sine(double A, double Omega_d, int n_cycles, double ramp_cycles, double dt, double pad)
{
	if (!(Omega_d > 0) || n_cycles < 1 || !(dt > 0) || !(pad >= 0))
	{
		throw DomainError("windowed sine needs Omega_d > 0, n_cycles >= 1, dt > 0, pad >= 0");
	}
	if (ramp_cycles < 1.0 || 2.0 * ramp_cycles > n_cycles)
	{
		throw DomainError("ramp must span at least one cycle and at most half the drive");
	}
	const double period = 2.0 * pi<double>() / Omega_d;
	const double support = n_cycles * period;
	const double ramp = ramp_cycles * period;
	const double centre = 0.5 * support;
	const TimeGrid grid = TimeGrid::centered(centre + pad, dt);

	Trajectory<double> traj;
	traj.t0 = centre + grid.t0;
	traj.dt = dt;
	traj.x.resize(grid.n);
	for (std::size_t i = 0; i < grid.n; ++i)
	{
		const double t = centre + grid.time(i);
		if (t <= 0.0 || t >= support)
		{
			continue;
		}
		double w = 1.0;
		const double edge = std::min(t, support - t);
		if (edge < ramp)
		{
			w = 0.5 * (1.0 - std::cos(pi<double>() * edge / ramp));
		}
		traj.x[i] = A * w * std::sin(Omega_d * t);
	}
	return traj;
}

double max_relative_displacement(const Trajectory<double>& traj, double d)
{
	double peak = 0.0;
	for (double xi : traj.x)
	{
		peak = std::max(peak, std::abs(xi));
	}
	return peak / d;
}

template struct Trajectory<double>;
template struct Trajectory<ExtendedReal>;
template Trajectory<double> gaussian_pulse(const double&, const double&, const TimeGrid&);
template Trajectory<ExtendedReal> gaussian_pulse(const ExtendedReal&, const ExtendedReal&, const TimeGrid&);

} // namespace ctpm
