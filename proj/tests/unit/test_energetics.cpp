/// @file test_energetics.cpp
/// @brief Dissipated energy, transition probability, radiated energy and the balance

#include "ctpmirror/energetics.hpp"
#include "ctpmirror/errors.hpp"
#include "ctpmirror/precision.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctpm;

namespace {

constexpr double kPi = std::numbers::pi;

MirrorKernels make(int K, double T, double d = 1.0)
{
	CavitySpec spec;
	spec.d = d;
	spec.K_max = K;
	spec.omega_pl = (K + 0.5) * kPi / d;
	return MirrorKernels(spec, ThermalSpectrum(T));
}

double gaussian_power(double A, double tau, double w)
{
	const double amp = A * tau / (2 * std::sqrt(kPi)) * std::exp(-w * w * tau * tau / 4);
	return amp * amp;
}

// literal double sums over signed pairs with the analytic pulse spectrum
struct Oracle
{
	long double E_diss = 0;
	long double P_trans = 0;
};

Oracle oracle(const MirrorKernels& mk, double A, double tau)
{
	const double d = mk.cavity().d;
	const long double pref = 2 * kPi * kPi / (d * d);
	const ThermalSpectrum& th = mk.thermal();
	Oracle o;
	for (int k = -mk.K(); k <= mk.K(); ++k)
	{
		for (int j = -mk.K(); j <= mk.K(); ++j)
		{
			if (k == 0 || j == 0 || k == -j)
			{
				continue;
			}
			const long double wk = k * kPi / d;
			const long double wj = j * kPi / d;
			const long double L = wk + wj;
			const long double zk = th.z(static_cast<double>(wk));
			const long double zj = th.z(static_cast<double>(wj));
			const long double im_w = wk * wj * (zk + zj) / 4;
			const long double p = gaussian_power(A, tau, static_cast<double>(L));
			o.E_diss += -pref * L * im_w * p;
			o.P_trans += pref * th.z(static_cast<double>(L)) * im_w * p;
		}
	}
	return o;
}

Trajectory<double> pulse(double A, double tau, double dt)
{
	return gaussian_pulse<double>(A, tau, TimeGrid::centered(10 * tau, dt)).with_velocity();
}

} // namespace

TEST_CASE("zero trajectory")
{
	const auto mk = make(8, 0.0);
	Trajectory<double> zero;
	zero.t0 = -1;
	zero.dt = 0.01;
	zero.x.assign(201, 0.0);
	const auto r = balance_report(zero.with_velocity(), mk);
	CHECK(r.E_diss_time == 0.0);
	CHECK(r.E_diss_freq == 0.0);
	CHECK(r.E_trans == 0.0);
	CHECK(r.P_trans == 0.0);
	CHECK(r.balance_residual == 0.0);
	CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("slow displacement has no power at the sum frequencies")
{
	const auto mk = make(4, 0.0);
	const auto fast = balance_report(pulse(0.01, 0.2, 0.005), mk);
	const auto r = balance_report(pulse(0.01, 40.0, 0.05), mk);
	CHECK(std::abs(r.E_diss_freq) < 1e-15 * std::abs(fast.E_diss_freq));
	CHECK(std::abs(r.P_trans) < 1e-15 * fast.P_trans);
	CHECK_FALSE(r.warnings.empty());
	CHECK(fast.warnings.empty());
}

TEST_CASE("spectral sums against literal oracles")
{
	const double A = 0.01;
	const double tau = 0.2;
	for (double T : {0.0, kPi})
	{
		const auto mk = make(32, T);
		const auto s = spectrum_of(pulse(A, tau, 1.0 / (40 * 32)));
		const auto o = oracle(mk, A, tau);
		CHECK(dissipated_energy_freq(s, mk) == doctest::Approx(static_cast<double>(o.E_diss)).epsilon(1e-8));
		CHECK(transition_probability(s, mk) == doctest::Approx(static_cast<double>(o.P_trans)).epsilon(1e-8));
		CHECK(radiated_energy(s, mk) == -dissipated_energy_freq(s, mk));
	}
}

TEST_CASE("sign conventions and bookkeeping at zero temperature")
{
	const auto mk = make(16, 0.0);
	const auto r = balance_report(pulse(0.01, 0.2, 1.0 / 640), mk);
	CHECK(r.E_trans > 0);
	CHECK(r.P_trans > 0);
	CHECK(r.E_trans == -r.E_diss_freq);
	double total = 0;
	double diag = 0;
	for (const auto& m : r.mode_breakdown)
	{
		total += m.contribution;
		if (m.k == m.j)
		{
			diag += m.contribution;
		}
		if (m.k == -m.j)
		{
			CHECK(m.contribution == 0.0);
		}
	}
	CHECK(r.mode_breakdown.size() == static_cast<std::size_t>(32 * 32));
	CHECK(total == doctest::Approx(r.E_diss_freq).epsilon(1e-12));
	CHECK(diag == doctest::Approx(r.E_x_freq).epsilon(1e-12));
	CHECK(r.E_x_freq + r.E_xdot_freq == doctest::Approx(r.E_diss_freq).epsilon(1e-12));
}

TEST_CASE("time and frequency domains balance")
{
	for (double T : {0.0, 0.5 * kPi})
	{
		const auto mk = make(32, T);
		const auto r = balance_report(pulse(0.01, 0.2, 1.0 / (40 * 32)), mk);
		CHECK(r.balance_residual < 1e-6);
		CHECK(r.E_x == doctest::Approx(r.E_x_freq).epsilon(1e-6));
		CHECK(r.E_xdot == doctest::Approx(r.E_xdot_freq).epsilon(1e-6));
	}
}

TEST_CASE("balance holds for a cavity of length two")
{
	const auto mk = make(24, 0.0, 2.0);
	const auto r = balance_report(pulse(0.02, 0.3, 2.0 / (40 * 24)), mk);
	CHECK(r.balance_residual < 1e-6);
}

TEST_CASE("time reversal leaves the dissipated energy unchanged")
{
	const auto mk = make(16, 0.0);
	auto traj = gaussian_pulse<double>(0.01, 0.25, TimeGrid::centered(2.5, 1.0 / 640));
	for (std::size_t i = 0; i < traj.size(); ++i)
	{
		traj.x[i] *= 1.0 + 0.5 * std::sin(7.0 * traj.time(i));
	}
	auto reversed = traj;
	std::reverse(reversed.x.begin(), reversed.x.end());
	const auto a = dissipated_energy_time(traj.with_velocity(), mk);
	const auto b = dissipated_energy_time(reversed.with_velocity(), mk);
	CHECK(static_cast<double>(a.E_x + a.E_xdot) == doctest::Approx(static_cast<double>(b.E_x + b.E_xdot)).epsilon(1e-6));
}

TEST_CASE("non-decaying trajectories produce a warning")
{
	const auto mk = make(4, 0.0);
	auto traj = gaussian_pulse<double>(0.01, 0.2, TimeGrid::centered(1.2, 0.01));
	traj.x.back() = 0.005;
	const auto e = dissipated_energy_time(traj.with_velocity(), mk);
	CHECK_FALSE(e.warnings.empty());
}

TEST_CASE("transition probability grows with temperature")
{
	const auto s = spectrum_of(pulse(0.01, 0.2, 1.0 / 640));
	double prev = -1;
	for (double T : {0.0, kPi, 2 * kPi, 4 * kPi})
	{
		const double p = transition_probability(s, make(16, T));
		CHECK(p > prev);
		prev = p;
	}
}

TEST_CASE("large drive flags the perturbative limit")
{
	const auto r = balance_report(pulse(0.5, 0.1, 1.0 / 640), make(16, 0.0));
	CHECK(r.P_trans > 0.3);
	bool flagged = false;
	for (const auto& w : r.warnings)
	{
		flagged = flagged || w.find("0.3") != std::string::npos;
	}
	CHECK(flagged);
}

TEST_CASE("extended precision agrees with double on a fast pulse")
{
	const auto mk = make(16, 0.0);
	const auto grid = TimeGrid::centered(2.0, 1.0 / 640);
	const auto a = balance_report(gaussian_pulse<double>(0.01, 0.2, grid).with_velocity(), mk);
	const auto b = balance_report(gaussian_pulse<ExtendedReal>(ExtendedReal(0.01), ExtendedReal(0.2), grid).with_velocity(), mk);
	CHECK(a.E_trans == doctest::Approx(b.E_trans).epsilon(1e-12));
	CHECK(a.E_diss_time == doctest::Approx(b.E_diss_time).epsilon(1e-9));
	CHECK(b.balance_residual < 1e-6);
}

TEST_CASE("discrete sums approach the continuum as the cavity grows")
{
	const double tau = 0.3;
	const double w_pl = 16.5 * kPi;
	std::vector<double> gaps;
	for (double d : {1.0, 2.0, 4.0})
	{
		CavitySpec spec = CavitySpec::from_plasma(d, w_pl);
		const MirrorKernels mk(spec, ThermalSpectrum(0.0));
		const auto s = spectrum_of(pulse(0.01 * d, tau, 1.0 / 400));
		const double disc = dissipated_energy_freq(s, mk, SpectralMode::Discrete);
		const double cont = dissipated_energy_freq(s, mk, SpectralMode::Continuum);
		gaps.push_back(std::abs(disc - cont) / std::abs(cont));
	}
	CHECK(gaps[1] < gaps[0]);
	CHECK(gaps[2] < gaps[1]);
}
