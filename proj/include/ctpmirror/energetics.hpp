/// @file energetics.hpp
/// @brief Dissipated mechanical energy, transition probability and radiated energy

#pragma once

#include "ctpmirror/kernels.hpp"
#include "ctpmirror/spectrum.hpp"
#include "ctpmirror/trajectory.hpp"

#include <string>
#include <vector>

namespace ctpm {

/// Contribution of the signed mode pair (k, j) to the frequency-domain dissipated energy.
struct ModeContribution
{
	int k = 0;
	int j = 0;
	double omega_sum = 0;
	double contribution = 0;
};

struct EnergyReport
{
	double E_x = 0;            ///< time domain, position force
	double E_xdot = 0;         ///< time domain, velocity force
	double E_diss_time = 0;
	double E_x_freq = 0;       ///< k = j block of the spectral sum
	double E_xdot_freq = 0;    ///< k != j block
	double E_diss_freq = 0;
	double P_trans = 0;
	double E_trans = 0;
	double balance_residual = 0;  ///< |E_trans + E_diss_time| / max(|E_trans|, 1e-30)
	std::vector<ModeContribution> mode_breakdown;
	std::vector<std::string> warnings;
};

template <typename Real>
struct TimeDomainEnergy
{
	Real E_x{0};
	Real E_xdot{0};
	std::vector<std::string> warnings;
};

/// Trapezoid integrals of xdot F_x and xdot F_xdot over the grid.
template <typename Real>
TimeDomainEnergy<Real> dissipated_energy_time(const Trajectory<Real>& traj, const MirrorKernels& kernels, bool accel = true);

/// |x~|^2 at the lattice frequencies n pi / d for n = 0..2K. Entries whose frequency
/// carries no spectral weight are left at zero.
template <typename Real>
std::vector<Real> lattice_power(const Trajectory<Real>& traj, const MirrorKernels& kernels);
std::vector<double> lattice_power(const Spectrum& spectrum, const MirrorKernels& kernels);

template <typename Real>
struct SpectralEnergy
{
	Real E_x{0};
	Real E_xdot{0};
	Real E_diss{0};
	Real E_trans{0};
	Real P_trans{0};
	std::vector<ModeContribution> breakdown;
};

/// Discrete double sums over signed pairs, built from one term list:
///   E_diss  = -(2 pi^2 / d^2) sum (w_k + w_j) Im W_mu |x~|^2
///   E_trans = -E_diss, term by term
///   P_trans =  (2 pi^2 / d^2) sum z(w_k + w_j) Im W_mu |x~|^2, w_k + w_j != 0
/// with W_mu = i w_k w_j (z_k + z_j) / 4 the regularized dissipation weight.
template <typename Real>
SpectralEnergy<Real> spectral_energies(const std::vector<Real>& power, const MirrorKernels& kernels);

enum class SpectralMode
{
	Discrete,
	Continuum
};

/// Continuum mode evaluates -2 iint (w + w')^3 |x~_{w+w'}|^2 Im mu_{ww'} over
/// |w|, |w'| <= omega_pl by nested adaptive quadrature.
double dissipated_energy_freq(const Spectrum& spectrum, const MirrorKernels& kernels,
							  SpectralMode mode = SpectralMode::Discrete);
double transition_probability(const Spectrum& spectrum, const MirrorKernels& kernels);
double radiated_energy(const Spectrum& spectrum, const MirrorKernels& kernels);

/// Time-domain dissipation against the spectral radiated energy on one trajectory.
template <typename Real>
EnergyReport balance_report(const Trajectory<Real>& traj, const MirrorKernels& kernels, bool accel = true);

} // namespace ctpm
