/// @file spectrum.cpp
/// @brief FFTW-backed spectra and discrete-time transforms

#include "ctpmirror/spectrum.hpp"

#include "ctpmirror/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <type_traits>

namespace ctpm {

namespace {

// FFTW planning is not thread safe
std::mutex& planner_mutex()
{
	static std::mutex m;
	return m;
}

struct FftwFree
{
	void operator()(void* p) const { fftw_free(p); }
};

using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

ComplexBuffer allocate(std::size_t n)
{
	auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
	if (p == nullptr)
	{
		throw NumericalError("FFT buffer allocation failed");
	}
	return ComplexBuffer(p);
}

// out[m] = sum_n in[n] exp(sign * 2 pi i m n / N)
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in, int sign)
{
	const std::size_t n = in.size();
	auto buf_in = allocate(n);
	auto buf_out = allocate(n);
	fftw_plan plan;
	{
		std::lock_guard lock(planner_mutex());
		plan = fftw_plan_dft_1d(static_cast<int>(n), buf_in.get(), buf_out.get(), sign, FFTW_ESTIMATE);
	}
	for (std::size_t i = 0; i < n; ++i)
	{
		buf_in[i][0] = in[i].real();
		buf_in[i][1] = in[i].imag();
	}
	fftw_execute(plan);
	std::vector<std::complex<double>> out(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		out[i] = {buf_out[i][0], buf_out[i][1]};
	}
	{
		std::lock_guard lock(planner_mutex());
		fftw_destroy_plan(plan);
	}
	return out;
}

// (dt/2pi) sum_n x_n e^{-i w t_n}, phases evaluated per sample
std::complex<double> direct_dtft(const std::vector<double>& x, double t0, double dt, double w)
{
	double re = 0.0;
	double im = 0.0;
	for (std::size_t i = 0; i < x.size(); ++i)
	{
		const double phase = w * (t0 + dt * static_cast<double>(i));
		re += x[i] * std::cos(phase);
		im -= x[i] * std::sin(phase);
	}
	const double scale = dt / (2.0 * pi<double>());
	return {scale * re, scale * im};
}

} // namespace

std::complex<double> Spectrum::at(double w) const
{
	return direct_dtft(samples, t0, dt, w);
}

Spectrum spectrum_of(const Trajectory<double>& traj, double decay_tol)
{
	traj.validate();
	double peak = 0.0;
	for (double xi : traj.x)
	{
		peak = std::max(peak, std::abs(xi));
	}
	const double edge = std::max(std::abs(traj.x.front()), std::abs(traj.x.back()));
	if (edge > decay_tol * peak)
	{
		throw DomainError("trajectory does not decay at the grid ends (|x_edge|/max|x| = " +
						  std::to_string(edge / peak) + "); window it or extend the grid");
	}

	const std::size_t n = traj.size();
	std::vector<std::complex<double>> in(traj.x.begin(), traj.x.end());
	const auto out = dft(in, FFTW_FORWARD);

	Spectrum s;
	s.t0 = traj.t0;
	s.dt = traj.dt;
	s.samples = traj.x;
	s.omega.resize(n);
	s.xt.resize(n);
	const double dw = 2.0 * pi<double>() / (static_cast<double>(n) * traj.dt);
	const long half = static_cast<long>(n / 2);
	for (std::size_t i = 0; i < n; ++i)
	{
		const long m = static_cast<long>(i) - half;
		const auto bin = static_cast<std::size_t>((m + static_cast<long>(n)) % static_cast<long>(n));
		const double w = dw * static_cast<double>(m);
		s.omega[i] = w;
		s.xt[i] = traj.dt / (2.0 * pi<double>()) * std::polar(1.0, -w * traj.t0) * out[bin];
	}
	return s;
}

std::vector<double> inverse(const Spectrum& spectrum)
{
	const std::size_t n = spectrum.omega.size();
	if (n < 2)
	{
		throw DomainError("spectrum has fewer than two bins");
	}
	const double dw = spectrum.omega[1] - spectrum.omega[0];
	const long half = static_cast<long>(n / 2);
	std::vector<std::complex<double>> in(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		const long m = static_cast<long>(i) - half;
		const auto bin = static_cast<std::size_t>((m + static_cast<long>(n)) % static_cast<long>(n));
		in[bin] = spectrum.xt[i] * std::polar(1.0, spectrum.omega[i] * spectrum.t0);
	}
	const auto out = dft(in, FFTW_BACKWARD);
	std::vector<double> x(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		x[i] = dw * out[i].real();
	}
	return x;
}

template <typename Real>
Complex<Real> dtft_at(const Trajectory<Real>& traj, const Real& w)
{
	using std::cos;
	using std::sin;
	traj.validate();
	if constexpr (std::is_same_v<Real, double>)
	{
		// the Goertzel recursion loses accuracy at small w dt in double precision
		const auto v = direct_dtft(traj.x, traj.t0, traj.dt, w);
		return {v.real(), v.imag()};
	}
	const Real theta = w * traj.dt;
	const Real c = cos(theta);
	const Real s = sin(theta);
	const Real two_c = 2 * c;
	Real s1(0), s2(0);
	if constexpr (std::is_same_v<Real, ExtendedReal>)
	{
		Real s0(0);
		auto* p0 = s0.backend().data();
		auto* p1 = s1.backend().data();
		auto* p2 = s2.backend().data();
		for (const auto& xn : traj.x)
		{
			// s0 = two_c * s1 - s2 + x_n
			mpfr_fms(p0, two_c.backend().data(), p1, p2, MPFR_RNDN);
			mpfr_add(p0, p0, xn.backend().data(), MPFR_RNDN);
			mpfr_swap(p2, p1);
			mpfr_swap(p1, p0);
		}
	}
	else
	{
		for (const auto& xn : traj.x)
		{
			Real s0 = xn + two_c * s1 - s2;
			s2 = std::move(s1);
			s1 = std::move(s0);
		}
	}
	// y = s1 - e^{-i theta} s2 = sum_n x_n e^{i theta (N-1-n)}
	const Real y_re = s1 - c * s2;
	const Real y_im = s * s2;
	// sum_n x_n e^{-i w t_n} = e^{-i w (t0 + (N-1) dt)} y
	const Real phase = -w * traj.time(traj.size() - 1);
	const Real pc = cos(phase);
	const Real ps = sin(phase);
	const Real scale = traj.dt / (2 * pi<Real>());
	return {scale * (pc * y_re - ps * y_im), scale * (pc * y_im + ps * y_re)};
}

template Complex<double> dtft_at(const Trajectory<double>&, const double&);
template Complex<ExtendedReal> dtft_at(const Trajectory<ExtendedReal>&, const ExtendedReal&);

std::vector<std::complex<double>> line_amplitudes(const std::vector<double>& samples, double dt,
												  const std::vector<double>& omegas)
{
	const std::size_t n = samples.size();
	if (n < 4 || !(dt > 0))
	{
		throw DomainError("line amplitudes need at least four samples and dt > 0");
	}
	std::vector<std::complex<double>> in(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		const double w = 0.5 * (1.0 - std::cos(2.0 * pi<double>() * static_cast<double>(i) / static_cast<double>(n)));
		in[i] = w * samples[i];
	}
	const auto out = dft(in, FFTW_FORWARD);
	const double bins_per_rad = static_cast<double>(n) * dt / (2.0 * pi<double>());
	std::vector<std::complex<double>> amps;
	amps.reserve(omegas.size());
	for (double w : omegas)
	{
		const double m = w * bins_per_rad;
		const double m_round = std::round(m);
		if (std::abs(m - m_round) > 1e-9 * std::max(1.0, std::abs(m)))
		{
			throw DomainError("frequency " + std::to_string(w) + " is not on a DFT bin of this record");
		}
		const long bin = (static_cast<long>(m_round) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
		// Hann coherent gain is 1/2
		amps.push_back(out[static_cast<std::size_t>(bin)] / (0.5 * static_cast<double>(n)));
	}
	return amps;
}

} // namespace ctpm
