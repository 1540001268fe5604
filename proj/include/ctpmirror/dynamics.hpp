/// @file dynamics.hpp
/// @brief Optical back-reaction forces and the semiclassical mirror equation of motion

#pragma once

#include "ctpmirror/cavity.hpp"
#include "ctpmirror/kernels.hpp"
#include "ctpmirror/trajectory.hpp"

#include <string>
#include <vector>

namespace ctpm {

enum class PotentialKind
{
	Harmonic,
	Free,
	Tabulated
};

/// Confining potential. Tabulated potentials give V'(x) on an ascending x grid and
/// are interpolated linearly; V is its running trapezoid integral from x.front().
struct Potential
{
	PotentialKind kind = PotentialKind::Harmonic;
	double Omega = 0;
	std::vector<double> x;
	std::vector<double> dVdx;

	double gradient(double m, double xq) const;
	double energy(double m, double xq) const;
	void validate() const;
};

struct MirrorSpec
{
	double m = 1;
	Potential potential;

	void validate() const;
	/// sqrt(1 / (2 m Omega)); throws DomainError unless harmonic with Omega > 0.
	double x_zpf() const;
};

/// (x_zpf / d)(omega_pl / Omega).
double coupling_parameter(const MirrorSpec& mirror, const CavitySpec& cavity);

/// Force prefactors multiplying the memory integrals of M_+^00 (on x) and of the
/// time derivative of M^11 (on xdot).
double force_x_prefactor(double d);
double force_xdot_prefactor(double d);

template <typename Real>
struct ForceHistories
{
	std::vector<Real> force_x;
	std::vector<Real> force_xdot;
};

/// F_x and F_xdot at every sample of a prescribed trajectory; velocities are taken
/// from the trajectory or, if absent, from 4th-order differences. `accel` selects the
/// sliding recursion over the literal O(N^2) sum.
template <typename Real>
ForceHistories<Real> optical_forces(const Trajectory<Real>& traj, const MirrorKernels& kernels, bool accel = true);

/// Single-sample literal trapezoid sums.
double force_x(const Trajectory<double>& traj, const MirrorKernels& kernels, std::size_t t_index);
double force_xdot(const Trajectory<double>& traj, const MirrorKernels& kernels, std::size_t t_index);

struct EvolveOptions
{
	bool memory_forces = true;       ///< false drops both optical forces
	bool accel = true;               ///< sliding recursion instead of literal sums
	bool include_casimir_force = false;
	double casimir_density = 0;      ///< renormalized density used by the static force
	double drift_limit = 1.0;        ///< allowed |C - C0| / max(|C0|, |W|) for C = E_mech - W
};

struct SolverDiagnostics
{
	std::size_t steps = 0;
	double lambda = 0;               ///< NaN when undefined (free mirror)
	double max_energy_drift = 0;     ///< relative drift of E_mech - W
	double work_x = 0;               ///< trapezoid sum of v F_x dt
	double work_xdot = 0;
	std::vector<std::string> warnings;
};

struct EvolutionResult
{
	Trajectory<double> trajectory;   ///< with solver velocities
	std::vector<double> force_x;
	std::vector<double> force_xdot;
	SolverDiagnostics diagnostics;
};

/// m x'' + V'(x) = F_x + F_xdot by a fixed-step predictor-corrector: Taylor predictor,
/// memory forces re-evaluated at the predicted endpoint, one trapezoid corrector.
/// Second order in dt. Throws NumericalError on NaN or when E_mech - W drifts past
/// `drift_limit`, and DomainError when lambda >= 1 with memory forces on.
EvolutionResult evolve(const MirrorSpec& mirror, const MirrorKernels& kernels, double x0, double v0,
					   const TimeGrid& grid, const EvolveOptions& options = {});

} // namespace ctpm
