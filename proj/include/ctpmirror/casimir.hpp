/// @file casimir.hpp
/// @brief Static field energy density: regularized, free-space and renormalized

#pragma once

#include <vector>

namespace ctpm {

struct EnergyDensityResult
{
	std::vector<double> sigma_values;
	std::vector<double> regularized;
	std::vector<double> freespace;
	double renormalized = 0;
	double model_error = 0;
};

struct CasimirOptions
{
	double sigma_max_over_d = 0.1;  ///< coarsest regulator, in units of d
	int points = 0;                 ///< grid size; 0 picks 3 at T = 0 and 6 otherwise
};

/// sum_{k>=1} z_k (w_k / 2d) exp(-sigma w_k), stopped once past the peak term and
/// the terms fall below 1e-16 of the running total.
double regularized_density(double d, double T, double sigma);

/// (1/pi) * integral_0^inf z(w) (w/2) exp(-sigma w) dw, the d -> infinity limit.
double freespace_density(double T, double sigma);

/// Extrapolates regularized - freespace to sigma -> 0 on a halving grid.
///
/// At T = 0 the difference is even in sigma and the fit is polynomial in sigma^2;
/// at T > 0 odd powers appear and the fit is polynomial in sigma.
EnergyDensityResult renormalized_density(double d, double T, const CasimirOptions& options = {});

/// Static force from the first-order action, (eps_ren / 2)(1 - 3x/d).
double static_casimir_force(double eps_ren, double d, double x);

} // namespace ctpm
