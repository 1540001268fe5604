/// @file spectrum.hpp
/// @brief Fourier transform with the 1/(2 pi) forward convention
///
/// x~(w) = (1/2pi) int x(t) e^{-iwt} dt,   x(t) = int x~(w) e^{iwt} dw

#pragma once

#include "ctpmirror/precision.hpp"
#include "ctpmirror/trajectory.hpp"

#include <complex>
#include <vector>

namespace ctpm {

/// Spectrum on the natural DFT grid 2 pi m / (N dt), m = -N/2 .. N - 1 - N/2, ascending.
struct Spectrum
{
	std::vector<double> omega;
	std::vector<std::complex<double>> xt;

	// source samples, kept for off-grid evaluation
	double t0 = 0;
	double dt = 1;
	std::vector<double> samples;

	/// Band-limited interpolation of the spectrum at arbitrary omega. The periodic
	/// sinc interpolant of the DFT coincides with the discrete-time transform of the
	/// samples, which is what is evaluated.
	std::complex<double> at(double w) const;
};

/// Throws DomainError if either endpoint exceeds `decay_tol` * max|x|.
Spectrum spectrum_of(const Trajectory<double>& traj, double decay_tol = 1e-12);

/// Samples reconstructed from the spectrum via x(t_n) = sum_m x~_m e^{i w_m t_n} dw.
std::vector<double> inverse(const Spectrum& spectrum);

/// (dt / 2pi) sum_n x_n e^{-i w t_n}. Extended precision uses a Goertzel recursion;
/// double evaluates each phase directly.
template <typename Real>
Complex<Real> dtft_at(const Trajectory<Real>& traj, const Real& w);

/// Amplitudes c(w) of f(t) = sum c(w) e^{iwt} from samples covering a whole number
/// of periods, via a Hann-windowed DFT corrected for the window's coherent gain.
/// Each requested w must fall on a DFT bin that is at least two bins from any other
/// line present in the signal.
std::vector<std::complex<double>> line_amplitudes(const std::vector<double>& samples, double dt,
												  const std::vector<double>& omegas);

} // namespace ctpm
