/// @file trajectory.hpp
/// @brief Mirror displacement sampled on a uniform time grid

#pragma once

#include <cstddef>
#include <vector>

namespace ctpm {

struct TimeGrid
{
	double t0 = 0;
	double dt = 1;
	std::size_t n = 2;

	/// Odd sample count symmetric about zero covering at least [-half_width, half_width].
	static TimeGrid centered(double half_width, double dt);

	double time(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
	void validate() const;
};

/// Samples x_i = x(t0 + i dt) with optional velocities v_i.
template <typename Real>
struct Trajectory
{
	Real t0{0};
	Real dt{1};
	std::vector<Real> x;
	std::vector<Real> v;

	std::size_t size() const { return x.size(); }
	bool has_velocity() const { return !v.empty(); }
	Real time(std::size_t i) const { return t0 + dt * static_cast<long>(i); }

	/// Throws DomainError if dt <= 0, fewer than two samples, or v has the wrong length.
	void validate() const;

	/// Copy with v from centered 4th-order differences (one-sided 4th order at the edges).
	Trajectory with_velocity() const;
};

/// A exp(-(t - t_mid)^2 / tau^2), t_mid the grid midpoint. The grid must reach 6 tau
/// on both sides.
template <typename Real>
Trajectory<Real> gaussian_pulse(const Real& A, const Real& tau, const TimeGrid& grid);

/// A w(t) sin(Omega_d t) on [0, n_cycles 2 pi / Omega_d] with raised-cosine ramps of
/// `ramp_cycles` periods, zero outside. The grid is symmetric about the support
/// centre and extends `pad` beyond each end.
Trajectory<double> windowed_sine(double A, double Omega_d, int n_cycles, double ramp_cycles, double dt, double pad);

/// max |x| / d.
double max_relative_displacement(const Trajectory<double>& traj, double d);

} // namespace ctpm
