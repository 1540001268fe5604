/// @file kernels.hpp
/// @brief Mode, pair and mirror fluctuation/dissipation kernels

#pragma once

#include "ctpmirror/cavity.hpp"
#include "ctpmirror/thermal.hpp"

#include <vector>

namespace ctpm {

struct PairKernelValues
{
	double nu_plus = 0;
	double nu_minus = 0;
	double mu_plus = 0;
	double mu_minus = 0;
};

struct Kernel00Values
{
	double N_plus = 0;
	double N_minus = 0;
	double M_plus = 0;
};

/// Channel sums N_+^11 + N_-^11 and M_+^11 + M_-^11.
struct Kernel11Values
{
	double N = 0;
	double M = 0;
};

/// nu_kj (real) and the imaginary part of mu_kj (mu_kj itself is purely imaginary).
struct SpectralCoefficient
{
	double nu = 0;
	double im_mu = 0;
};

/// (w_k + w_j)^2 times the spectral coefficients, finite on the k = -j channel.
struct RegularizedWeight
{
	double w_nu = 0;
	double im_w_mu = 0;
};

struct SpectralEntry
{
	int k = 0;
	int j = 0;
	double omega_sum = 0;
	double nu = 0;
	double im_mu = 0;
};

/// One aggregated spectral line of a kernel: f(t) contains amplitude * e^{i omega t}.
struct SpectralLine
{
	int n = 0;          ///< lattice index, omega = n pi / d
	double omega = 0;
	double im_amplitude = 0;
};

/// f(t) = sum_i coef[i] * s(index[i] * spacing * t) with s = sin or cos.
/// Every kernel frequency of a cavity of length d is a multiple of pi/d, so the
/// memory kernels are stored per lattice index.
template <typename Real>
struct LatticeSeries
{
	Real spacing{0};
	std::vector<int> index;
	std::vector<Real> coef;

	std::size_t size() const { return index.size(); }
	Real frequency(std::size_t i) const { return spacing * index[i]; }
};

/// Memory kernels entering the optical forces: M_+^00 as a sine series and the
/// time derivative of M_+^11 + M_-^11 as a cosine series.
template <typename Real>
struct ForceKernels
{
	LatticeSeries<Real> m00;
	LatticeSeries<Real> m11_dot;
};

/// Kernel machinery for a cavity of K_max modes at temperature T.
///
/// Signed mode labels follow w_{-k} = -w_k and z_{-k} = -z_k.
class MirrorKernels
{
public:
	MirrorKernels(const CavitySpec& cavity, const ThermalSpectrum& thermal);

	const CavitySpec& cavity() const { return cavity_; }
	const ThermalSpectrum& thermal() const { return thermal_; }
	const CouplingMatrix& coupling() const { return g_; }
	int K() const { return cavity_.K_max; }

	/// Signed mode frequency; k != 0, |k| <= K_max.
	double omega(int k) const;
	double z(int k) const;

	double micro_nu(int k, double t) const;
	double micro_mu(int k, double t) const;
	PairKernelValues pair_kernels(int k, int j, double t) const;

	Kernel00Values kernel_00(double t) const;
	Kernel11Values kernel_11(double t) const;
	/// d/dt (M_+^11 + M_-^11), differentiated term by term.
	double kernel_11_mdot(double t) const;

	/// Throws DomainError on the singular channel k = -j.
	SpectralCoefficient spectral_coefficient(int k, int j) const;
	RegularizedWeight regularized_weight(int k, int j) const;

	/// All signed pairs with k != -j, rows ordered by k then j.
	std::vector<SpectralEntry> spectral_table() const;

	/// Lines of M_+^00 (at 2 w_k) and of M_+^11 + M_-^11 (at w_k + w_j, |k| != |j|)
	/// aggregated from the spectral coefficients, n from -2K to 2K.
	std::vector<SpectralLine> spectral_lines_00() const;
	std::vector<SpectralLine> spectral_lines_11() const;

	/// sum_{k,j} g_kj^2 nu_k(0) exp(-sigma w_k); diagnostic only.
	double mass_shift(double sigma) const;

	template <typename Real>
	ForceKernels<Real> force_kernels() const;

private:
	void check_mode(int k) const;

	CavitySpec cavity_;
	ThermalSpectrum thermal_;
	CouplingMatrix g_;
	// time-domain kernels aggregated per lattice index
	LatticeSeries<double> n00_plus_;
	double n00_minus_ = 0;
	LatticeSeries<double> m00_;
	LatticeSeries<double> n11_;
	LatticeSeries<double> m11_;
};

} // namespace ctpm
