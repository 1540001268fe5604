/// @file energetics.cpp
/// @brief Dissipated energy, radiated energy and transition probability

#include "ctpmirror/energetics.hpp"

#include "ctpmirror/dynamics.hpp"
#include "ctpmirror/errors.hpp"
#include "ctpmirror/precision.hpp"
#include "ctpmirror/summation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

namespace ctpm {

namespace {

// Im W_mu for signed labels in Real arithmetic
template <typename Real>
struct WeightTable
{
	Real spacing;
	std::vector<Real> z;  // z[k + K], k = -K..K (k = 0 unused)
	int K;

	WeightTable(const MirrorKernels& kernels)
		: spacing(pi<Real>() / Real(kernels.cavity().d)), K(kernels.K())
	{
		z.assign(static_cast<std::size_t>(2 * K + 1), Real(0));
		for (int k = 1; k <= K; ++k)
		{
			const Real zk = kernels.thermal().z<Real>(spacing * k);
			z[static_cast<std::size_t>(K + k)] = zk;
			z[static_cast<std::size_t>(K - k)] = -zk;
		}
	}

	const Real& zk(int k) const { return z[static_cast<std::size_t>(k + K)]; }

	Real im_w_mu(int k, int j) const
	{
		return (spacing * k) * (spacing * j) * (zk(k) + zk(j)) / 4;
	}
};

template <typename Real>
std::vector<bool> weighted_indices(const WeightTable<Real>& w)
{
	const int K = w.K;
	std::vector<bool> needed(static_cast<std::size_t>(2 * K + 1), false);
	for (int k = -K; k <= K; ++k)
	{
		for (int j = -K; j <= K; ++j)
		{
			if (k != 0 && j != 0 && k + j != 0 && w.im_w_mu(k, j) != 0)
			{
				needed[static_cast<std::size_t>(std::abs(k + j))] = true;
			}
		}
	}
	return needed;
}

template <typename Real>
Real trapezoid_product(const std::vector<Real>& a, const std::vector<Real>& b, const Real& dt)
{
	std::vector<Real> terms(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
	{
		terms[i] = a[i] * b[i];
	}
	terms.front() /= 2;
	terms.back() /= 2;
	return dt * pairwise_sum(terms);
}

std::string format_double(double v)
{
	std::ostringstream os;
	os.precision(3);
	os << v;
	return os.str();
}

template <typename Real>
double max_abs(const std::vector<Real>& v)
{
	double m = 0.0;
	for (const auto& x : v)
	{
		m = std::max(m, std::abs(static_cast<double>(x)));
	}
	return m;
}

} // namespace

template <typename Real>
TimeDomainEnergy<Real> dissipated_energy_time(const Trajectory<Real>& traj, const MirrorKernels& kernels, bool accel)
{
	traj.validate();
	const Trajectory<Real> tv = traj.has_velocity() ? traj : traj.with_velocity();
	const auto forces = optical_forces(tv, kernels, accel);
	TimeDomainEnergy<Real> out;
	out.E_x = trapezoid_product(tv.v, forces.force_x, tv.dt);
	out.E_xdot = trapezoid_product(tv.v, forces.force_xdot, tv.dt);

	const double peak = max_abs(tv.x);
	const double edge = std::max(std::abs(static_cast<double>(tv.x.front())), std::abs(static_cast<double>(tv.x.back())));
	if (peak > 0 && edge > 1e-12 * peak)
	{
		// the dropped tail carries roughly |v F| dt per missing sample
		const double tail = std::abs(static_cast<double>(tv.v.back() * (forces.force_x.back() + forces.force_xdot.back()))) *
							static_cast<double>(tv.dt);
		out.warnings.push_back("trajectory does not decay at the grid ends (|x_edge|/max|x| = " + format_double(edge / peak) +
							   "); endpoint contribution per sample ~ " + format_double(tail));
	}
	return out;
}

template <typename Real>
std::vector<Real> lattice_power(const Trajectory<Real>& traj, const MirrorKernels& kernels)
{
	const WeightTable<Real> weights(kernels);
	const auto needed = weighted_indices(weights);
	std::vector<Real> power(needed.size(), Real(0));
	for (std::size_t n = 0; n < needed.size(); ++n)
	{
		if (needed[n])
		{
			power[n] = dtft_at(traj, Real(weights.spacing * static_cast<long>(n))).norm();
		}
	}
	return power;
}

std::vector<double> lattice_power(const Spectrum& spectrum, const MirrorKernels& kernels)
{
	const WeightTable<double> weights(kernels);
	const auto needed = weighted_indices(weights);
	std::vector<double> power(needed.size(), 0.0);
	for (std::size_t n = 0; n < needed.size(); ++n)
	{
		if (needed[n])
		{
			power[n] = std::norm(spectrum.at(weights.spacing * static_cast<double>(n)));
		}
	}
	return power;
}

template <typename Real>
SpectralEnergy<Real> spectral_energies(const std::vector<Real>& power, const MirrorKernels& kernels)
{
	const WeightTable<Real> weights(kernels);
	const int K = weights.K;
	if (power.size() != static_cast<std::size_t>(2 * K + 1))
	{
		throw DomainError("lattice power table has the wrong length");
	}
	const Real d(kernels.cavity().d);
	const Real pref = 2 * pi<Real>() * pi<Real>() / (d * d);

	std::vector<Real> all, diag, offdiag, trans, prob;
	SpectralEnergy<Real> out;
	out.breakdown.reserve(static_cast<std::size_t>(4 * K * K));
	for (int k = -K; k <= K; ++k)
	{
		for (int j = -K; j <= K; ++j)
		{
			if (k == 0 || j == 0)
			{
				continue;
			}
			const Real sum = weights.spacing * (k + j);
			const Real w = weights.im_w_mu(k, j);
			const Real& p = power[static_cast<std::size_t>(std::abs(k + j))];
			const Real term = -pref * sum * w * p;
			all.push_back(term);
			(k == j ? diag : offdiag).push_back(term);
			trans.push_back(-term);
			if (k + j != 0)
			{
				prob.push_back(pref * kernels.thermal().z<Real>(sum) * w * p);
			}
			out.breakdown.push_back({k, j, static_cast<double>(sum), static_cast<double>(term)});
		}
	}
	out.E_x = pairwise_sum(diag);
	out.E_xdot = pairwise_sum(offdiag);
	out.E_diss = pairwise_sum(all);
	out.E_trans = pairwise_sum(trans);
	out.P_trans = pairwise_sum(prob);
	return out;
}

double dissipated_energy_freq(const Spectrum& spectrum, const MirrorKernels& kernels, SpectralMode mode)
{
	if (mode == SpectralMode::Discrete)
	{
		return spectral_energies(lattice_power(spectrum, kernels), kernels).E_diss;
	}

	using boost::math::quadrature::gauss_kronrod;
	const double w_pl = kernels.cavity().omega_pl;
	const ThermalSpectrum& thermal = kernels.thermal();
	const double T = thermal.temperature();
	auto wz = [&](double w) { return w == 0.0 ? 2.0 * T : w * thermal.z(w); };
	// G(s) = int w (s - w) (z(w) + z(s - w)) / 4 dw, with |w|, |s - w| <= omega_pl
	auto inner = [&](double s) {
		const double lo = std::max(-w_pl, s - w_pl);
		const double hi = std::min(w_pl, s + w_pl);
		auto f = [&](double w) { return ((s - w) * wz(w) + w * wz(s - w)) / 4.0; };
		// z jumps at w = 0 and w = s when T = 0
		std::vector<double> cuts{lo};
		for (double c : {std::min(0.0, s), std::max(0.0, s)})
		{
			if (c > cuts.back() && c < hi)
			{
				cuts.push_back(c);
			}
		}
		cuts.push_back(hi);
		double total = 0.0;
		for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
		{
			total += gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 12, 1e-11);
		}
		return total;
	};
	// s G(s) |x~_s|^2 is even in s
	auto outer = [&](double s) { return s * inner(s) * std::norm(spectrum.at(s)); };
	double error = 0.0;
	double l1 = 0.0;
	const double half = gauss_kronrod<double, 31>::integrate(outer, 0.0, 2.0 * w_pl, 15, 1e-9, &error, &l1);
	if (error > 1e-6 * l1)
	{
		throw NumericalError("continuum dissipation quadrature did not converge");
	}
	return -2.0 * 2.0 * half;
}

double transition_probability(const Spectrum& spectrum, const MirrorKernels& kernels)
{
	return spectral_energies(lattice_power(spectrum, kernels), kernels).P_trans;
}

double radiated_energy(const Spectrum& spectrum, const MirrorKernels& kernels)
{
	return spectral_energies(lattice_power(spectrum, kernels), kernels).E_trans;
}

template <typename Real>
EnergyReport balance_report(const Trajectory<Real>& traj, const MirrorKernels& kernels, bool accel)
{
	const auto time = dissipated_energy_time(traj, kernels, accel);
	const auto power = lattice_power(traj, kernels);
	const auto freq = spectral_energies(power, kernels);

	EnergyReport r;
	r.E_x = static_cast<double>(time.E_x);
	r.E_xdot = static_cast<double>(time.E_xdot);
	const Real e_time = time.E_x + time.E_xdot;
	r.E_diss_time = static_cast<double>(e_time);
	r.E_x_freq = static_cast<double>(freq.E_x);
	r.E_xdot_freq = static_cast<double>(freq.E_xdot);
	r.E_diss_freq = static_cast<double>(freq.E_diss);
	r.E_trans = static_cast<double>(freq.E_trans);
	r.P_trans = static_cast<double>(freq.P_trans);
	const Real denom = std::max(Real(abs(freq.E_trans)), Real(1e-30));
	r.balance_residual = static_cast<double>(abs(freq.E_trans + e_time) / denom);
	r.mode_breakdown = freq.breakdown;
	r.warnings = time.warnings;
	if (r.P_trans > 0.3)
	{
		r.warnings.push_back("transition probability " + format_double(r.P_trans) + " exceeds 0.3; perturbative regime doubtful");
	}
	// weight at the sum frequencies below what the working precision resolves; the
	// transform's rounding floor grows with the largest phase w t it evaluates
	using std::abs;
	const Real t_max = std::max(abs(traj.time(0)), abs(traj.time(traj.size() - 1)));
	const Real phase = std::max(Real(1), Real(2 * kernels.K()) * pi<Real>() / Real(kernels.cavity().d) * t_max);
	const Real eps = std::numeric_limits<Real>::epsilon() * phase;
	Real peak{0};
	for (std::size_t n = 1; n < power.size(); ++n)
	{
		peak = std::max(peak, power[n]);
	}
	if (peak <= 64 * eps * eps * dtft_at(traj, Real(0)).norm())
	{
		r.warnings.push_back("spectrum has no resolvable weight at the mode-sum frequencies; energies are at the rounding floor");
	}
	if (r.E_trans == 0.0 && r.E_diss_time == 0.0)
	{
		r.balance_residual = 0.0;
	}
	return r;
}

template TimeDomainEnergy<double> dissipated_energy_time(const Trajectory<double>&, const MirrorKernels&, bool);
template TimeDomainEnergy<ExtendedReal> dissipated_energy_time(const Trajectory<ExtendedReal>&, const MirrorKernels&, bool);
template std::vector<double> lattice_power(const Trajectory<double>&, const MirrorKernels&);
template std::vector<ExtendedReal> lattice_power(const Trajectory<ExtendedReal>&, const MirrorKernels&);
template SpectralEnergy<double> spectral_energies(const std::vector<double>&, const MirrorKernels&);
template SpectralEnergy<ExtendedReal> spectral_energies(const std::vector<ExtendedReal>&, const MirrorKernels&);
template EnergyReport balance_report(const Trajectory<double>&, const MirrorKernels&, bool);
template EnergyReport balance_report(const Trajectory<ExtendedReal>&, const MirrorKernels&, bool);

} // namespace ctpm
