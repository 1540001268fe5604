/// @file test_dynamics.cpp
/// @brief Optical forces and the mirror equation of motion

#include "ctpmirror/dynamics.hpp"
#include "ctpmirror/energetics.hpp"
#include "ctpmirror/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
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

MirrorSpec harmonic(double m, double Omega)
{
	MirrorSpec mirror;
	mirror.m = m;
	mirror.potential.kind = PotentialKind::Harmonic;
	mirror.potential.Omega = Omega;
	return mirror;
}

// integral over [a, b] of an oscillatory integrand, panel by panel
template <typename F>
double panel_quadrature(F f, double a, double b, double panel)
{
	const auto panels = static_cast<int>(std::ceil((b - a) / panel));
	const double h = (b - a) / panels;
	double total = 0;
	for (int i = 0; i < panels; ++i)
	{
		total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a + i * h, a + (i + 1) * h, 4, 1e-12);
	}
	return total;
}

double max_abs(const std::vector<double>& v)
{
	double m = 0;
	for (double x : v)
	{
		m = std::max(m, std::abs(x));
	}
	return m;
}

} // namespace

TEST_CASE("coupling parameter")
{
	CavitySpec cavity;
	cavity.d = 1.0;
	cavity.omega_pl = 100 * kPi;
	cavity.K_max = 100;
	CHECK(coupling_parameter(harmonic(1, 1), cavity) == doctest::Approx(100 * kPi / std::sqrt(2.0)));
	const double base = coupling_parameter(harmonic(3, 2), cavity);
	cavity.d = 2.0;
	CHECK(coupling_parameter(harmonic(3, 2), cavity) == doctest::Approx(base / 2));
	CHECK(coupling_parameter(harmonic(1e12, 2), cavity) < 1e-4);
	CHECK_THROWS_AS(coupling_parameter(harmonic(1, 0), cavity), DomainError);
	MirrorSpec free_mirror;
	free_mirror.potential.kind = PotentialKind::Free;
	CHECK_THROWS_AS(coupling_parameter(free_mirror, cavity), DomainError);
}

TEST_CASE("mirror and potential validation")
{
	CHECK_THROWS_AS(harmonic(0, 1).validate(), DomainError);
	CHECK_THROWS_AS(harmonic(1, -1).validate(), DomainError);
	MirrorSpec tab;
	tab.potential.kind = PotentialKind::Tabulated;
	tab.potential.x = {-1, 0, 1};
	tab.potential.dVdx = {-2, 0, 2};
	tab.validate();
	CHECK(tab.potential.gradient(1, 0.5) == doctest::Approx(1.0));
	CHECK(tab.potential.energy(1, 1.0) - tab.potential.energy(1, 0.0) == doctest::Approx(1.0));
	CHECK_THROWS_AS(tab.potential.gradient(1, 2.0), DomainError);
	tab.potential.x = {0, 0, 1};
	CHECK_THROWS_AS(tab.validate(), DomainError);
}

TEST_CASE("forces vanish for a resting mirror and at the first sample")
{
	const auto mk = make(8, 0.0);
	Trajectory<double> zero;
	zero.dt = 0.01;
	zero.x.assign(100, 0.0);
	CHECK(force_x(zero, mk, 50) == 0.0);
	CHECK(force_xdot(zero, mk, 50) == 0.0);
	const auto pulse = gaussian_pulse<double>(0.01, 0.1, TimeGrid::centered(1.0, 0.005));
	CHECK(force_x(pulse, mk, 0) == 0.0);
	CHECK(force_xdot(pulse, mk, 0) == 0.0);
	CHECK_THROWS_AS(force_x(pulse, mk, pulse.size()), DomainError);
}

TEST_CASE("position force against an oversampled quadrature")
{
	const auto mk = make(32, 0.0);
	const double A = 0.01;
	const double tau = 0.05;
	const auto grid = TimeGrid::centered(12 * tau, 1.0 / (40 * 32));
	const auto traj = gaussian_pulse<double>(A, tau, grid);
	const std::size_t idx = grid.n - 1;
	const double t = traj.time(idx);
	const double oracle = -4.0 * panel_quadrature(
									 [&](double s) { return mk.kernel_00(t - s).M_plus * A * std::exp(-s * s / (tau * tau)); },
									 traj.t0, t, 0.01);
	CHECK(force_x(traj, mk, idx) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("velocity force against an oversampled quadrature")
{
	const auto mk = make(32, 0.0);
	const double A = 0.01;
	const double Omega = 3 * kPi;
	const int cycles = 6;
	const double ramp_cycles = 2.0;
	const auto traj = windowed_sine(A, Omega, cycles, ramp_cycles, 2e-4, 0.3);
	const double support = cycles * 2 * kPi / Omega;
	const double ramp = ramp_cycles * 2 * kPi / Omega;
	auto velocity = [&](double s) {
		if (s <= 0 || s >= support)
		{
			return 0.0;
		}
		const double e = std::min(s, support - s);
		const double de = s < support - s ? 1.0 : -1.0;
		double w = 1.0;
		double dw = 0.0;
		if (e < ramp)
		{
			w = 0.5 * (1 - std::cos(kPi * e / ramp));
			dw = 0.5 * std::sin(kPi * e / ramp) * kPi / ramp * de;
		}
		return A * (dw * std::sin(Omega * s) + w * Omega * std::cos(Omega * s));
	};
	const std::size_t idx = traj.size() - 1;
	const double t = traj.time(idx);
	// panels break at the ramp ends, where the velocity has a kink
	auto integrand = [&](double s) { return mk.kernel_11_mdot(t - s) * velocity(s); };
	const double oracle = panel_quadrature(integrand, 0.0, ramp, 0.01) +
						  panel_quadrature(integrand, ramp, support - ramp, 0.01) +
						  panel_quadrature(integrand, support - ramp, support, 0.01);
	CHECK(force_xdot(traj, mk, idx) == doctest::Approx(oracle).epsilon(1e-6));

	// at T = 0 only the sum channel carries weight in the velocity kernel
	const auto hot = make(32, 2.0);
	CHECK(force_xdot(traj, hot, idx) != doctest::Approx(force_xdot(traj, mk, idx)).epsilon(1e-3));
}

TEST_CASE("sliding recursion matches the literal sums")
{
	const auto mk = make(16, 0.7);
	const auto traj = gaussian_pulse<double>(0.01, 0.2, TimeGrid::centered(1.2, 1.0 / 320)).with_velocity();
	const auto fast = optical_forces(traj, mk, true);
	const auto slow = optical_forces(traj, mk, false);
	const double sx = max_abs(slow.force_x);
	const double sv = max_abs(slow.force_xdot);
	for (std::size_t i = 0; i < traj.size(); ++i)
	{
		CHECK(std::abs(fast.force_x[i] - slow.force_x[i]) <= 1e-10 * sx);
		CHECK(std::abs(fast.force_xdot[i] - slow.force_xdot[i]) <= 1e-10 * sv);
	}
	CHECK(force_x(traj, mk, 500) == doctest::Approx(slow.force_x[500]).epsilon(1e-14));
	CHECK(force_xdot(traj, mk, 500) == doctest::Approx(slow.force_xdot[500]).epsilon(1e-14));
}

TEST_CASE("forces are causal and linear")
{
	const auto mk = make(12, 0.0);
	const auto grid = TimeGrid::centered(2.0, 1.0 / 480);
	auto a = gaussian_pulse<double>(0.01, 0.2, grid).with_velocity();
	auto b = a;
	for (std::size_t i = 0; i < b.size(); ++i)
	{
		b.x[i] = 0.003 * std::sin(5.0 * b.time(i)) * std::exp(-b.time(i) * b.time(i));
	}
	b = Trajectory<double>{b.t0, b.dt, b.x, {}}.with_velocity();

	const auto fa = optical_forces(a, mk);
	const std::size_t cut = a.size() / 2;
	auto late = a;
	for (std::size_t i = cut + 1; i < late.size(); ++i)
	{
		late.x[i] += 1.0;
		late.v[i] -= 3.0;
	}
	const auto fl = optical_forces(late, mk);
	for (std::size_t i = 0; i <= cut; ++i)
	{
		CHECK(fl.force_x[i] == fa.force_x[i]);
		CHECK(fl.force_xdot[i] == fa.force_xdot[i]);
	}

	const auto fb = optical_forces(b, mk);
	Trajectory<double> mix = a;
	for (std::size_t i = 0; i < mix.size(); ++i)
	{
		mix.x[i] = 2.0 * a.x[i] - 3.0 * b.x[i];
		mix.v[i] = 2.0 * a.v[i] - 3.0 * b.v[i];
	}
	const auto fm = optical_forces(mix, mk);
	const double sx = max_abs(fa.force_x) + max_abs(fb.force_x);
	const double sv = max_abs(fa.force_xdot) + max_abs(fb.force_xdot);
	for (std::size_t i = 0; i < mix.size(); ++i)
	{
		CHECK(std::abs(fm.force_x[i] - (2.0 * fa.force_x[i] - 3.0 * fb.force_x[i])) <= 1e-13 * sx);
		CHECK(std::abs(fm.force_xdot[i] - (2.0 * fa.force_xdot[i] - 3.0 * fb.force_xdot[i])) <= 1e-13 * sv);
	}
}

TEST_CASE("zero-kernel harmonic evolution is analytic")
{
	const auto mk = make(4, 0.0);
	const double Omega = 1.0;
	const double x0 = 0.01;
	const double v0 = -0.004;
	const double period = 2 * kPi / Omega;
	const double dt = 2e-5;
	const TimeGrid grid{0.0, dt, static_cast<std::size_t>(std::ceil(10 * period / dt)) + 1};
	EvolveOptions opt;
	opt.memory_forces = false;
	const auto r = evolve(harmonic(1.0, Omega), mk, x0, v0, grid, opt);
	double worst = 0;
	for (std::size_t i = 0; i < grid.n; ++i)
	{
		const double t = grid.time(i);
		worst = std::max(worst, std::abs(r.trajectory.x[i] - (x0 * std::cos(Omega * t) + v0 / Omega * std::sin(Omega * t))));
	}
	CHECK(worst < 1e-8 * std::hypot(x0, v0 / Omega));
	// relative energy drift over ten periods
	CHECK(r.diagnostics.max_energy_drift < 1e-8);
	CHECK(r.diagnostics.steps == grid.n - 1);
	CHECK(r.diagnostics.work_x == 0.0);
}

TEST_CASE("self-convergence with memory forces is second order")
{
	const auto mk = make(4, 0.0);
	const auto mirror = harmonic(2000.0, 2.0);
	auto final_x = [&](double dt) {
		const TimeGrid grid{0.0, dt, static_cast<std::size_t>(std::llround(4.0 / dt)) + 1};
		const auto r = evolve(mirror, mk, 0.0, 0.01, grid);
		return r.trajectory.x.back();
	};
	const double a = final_x(4e-3);
	const double b = final_x(2e-3);
	const double c = final_x(1e-3);
	const double order = std::log2(std::abs(a - b) / std::abs(b - c));
	CHECK(order >= 1.9);
}

TEST_CASE("memory forces dissipate at zero temperature")
{
	// driven at w_1 + w_2, above the pair-creation threshold 2 w_1
	const auto mk = make(8, 0.0);
	const double Omega = 3 * kPi;
	const auto mirror = harmonic(1e4, Omega);
	const double period = 2 * kPi / Omega;
	const double dt = 1e-3;
	const TimeGrid grid{0.0, dt, static_cast<std::size_t>(std::llround(12 * period / dt)) + 1};
	const auto r = evolve(mirror, mk, 0.0, 0.01, grid);
	CHECK(r.diagnostics.warnings.empty());
	CHECK(r.diagnostics.lambda < 0.1);
	const auto per = static_cast<std::size_t>(std::floor(period / dt));
	std::vector<double> amplitude;
	for (std::size_t start = 0; start + per < grid.n; start += per)
	{
		double m = 0;
		for (std::size_t i = start; i < start + per; ++i)
		{
			m = std::max(m, std::abs(r.trajectory.x[i]));
		}
		amplitude.push_back(m);
	}
	REQUIRE(amplitude.size() >= 10);
	for (std::size_t i = 1; i < amplitude.size(); ++i)
	{
		CHECK(amplitude[i] <= amplitude[i - 1]);
	}
	CHECK(amplitude.back() < amplitude.front());
	CHECK(r.diagnostics.work_x + r.diagnostics.work_xdot < 0);
}

TEST_CASE("online work equals the energetics trapezoid")
{
	const auto mk = make(8, 0.3);
	const TimeGrid grid{0.0, 1e-3, 3001};
	const auto r = evolve(harmonic(1000.0, 2.0), mk, 0.0, 0.01, grid);
	const auto e = dissipated_energy_time(r.trajectory, mk);
	CHECK(e.E_x == doctest::Approx(r.diagnostics.work_x).epsilon(1e-12));
	CHECK(e.E_xdot == doctest::Approx(r.diagnostics.work_xdot).epsilon(1e-12));
	const auto f = optical_forces(r.trajectory, mk);
	for (std::size_t i = 0; i < grid.n; i += 250)
	{
		CHECK(f.force_x[i] == doctest::Approx(r.force_x[i]).epsilon(1e-12));
		CHECK(f.force_xdot[i] == doctest::Approx(r.force_xdot[i]).epsilon(1e-12));
	}
}

TEST_CASE("accelerated and direct evolution agree")
{
	const auto mk = make(6, 0.0);
	const TimeGrid grid{0.0, 2e-3, 801};
	EvolveOptions direct;
	direct.accel = false;
	const auto a = evolve(harmonic(1000.0, 2.0), mk, 0.0, 0.01, grid);
	const auto b = evolve(harmonic(1000.0, 2.0), mk, 0.0, 0.01, grid, direct);
	for (std::size_t i = 0; i < grid.n; ++i)
	{
		CHECK(a.trajectory.x[i] == doctest::Approx(b.trajectory.x[i]).epsilon(1e-10).scale(0.01));
	}
}

TEST_CASE("solver errors and warnings")
{
	const auto mk = make(8, 0.0);
	const TimeGrid grid{0.0, 1e-3, 101};
	// lambda = x_zpf / d * omega_pl / Omega >> 1
	CHECK_THROWS_AS(evolve(harmonic(1.0, 1.0), mk, 0.0, 0.01, grid), DomainError);
	EvolveOptions off;
	off.memory_forces = false;
	CHECK_NOTHROW(evolve(harmonic(1.0, 1.0), mk, 0.0, 0.01, grid, off));

	const auto warn = evolve(harmonic(400.0, 2.0), mk, 0.1, 0.0, grid);
	CHECK(warn.diagnostics.lambda > 0.1);
	CHECK(warn.diagnostics.warnings.size() == 3);

	CHECK_THROWS_AS(evolve(harmonic(1.0, 1.0), mk, 0.0, std::numeric_limits<double>::quiet_NaN(), grid, off),
					NumericalError);

	// Heun is unstable for Omega dt well above 2; the energy monitor trips
	const TimeGrid coarse{0.0, 3.0, 400};
	CHECK_THROWS_AS(evolve(harmonic(1.0, 1.0), mk, 1.0, 0.0, coarse, off), NumericalError);
}

TEST_CASE("optional static Casimir force shifts the equilibrium")
{
	const auto mk = make(4, 0.0);
	EvolveOptions opt;
	opt.memory_forces = false;
	opt.include_casimir_force = true;
	opt.casimir_density = -kPi / 24;
	const TimeGrid grid{0.0, 1e-3, 20001};
	const auto r = evolve(harmonic(1.0, 3.0), mk, 0.0, 0.0, grid, opt);
	// F(x) = (eps / 2)(1 - 3x); equilibrium at 9x = eps (1 - 3x) / 2
	const double eps = -kPi / 24;
	const double x_eq = (eps / 2) / (9.0 + 1.5 * eps);
	double mean = 0;
	for (double x : r.trajectory.x)
	{
		mean += x;
	}
	mean /= static_cast<double>(r.trajectory.size());
	CHECK(mean == doctest::Approx(x_eq).epsilon(0.05));
}
