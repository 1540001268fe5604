/// @file casimir.cpp
/// @brief Regularized and renormalized static energy density

#include "ctpmirror/casimir.hpp"

#include "ctpmirror/errors.hpp"
#include "ctpmirror/parallel.hpp"
#include "ctpmirror/precision.hpp"
#include "ctpmirror/summation.hpp"
#include "ctpmirror/thermal.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace ctpm {

namespace {

constexpr long MaxTerms = 100'000'000;

// Neville's scheme evaluated at s = 0; returns the diagonal P_{0..i} for i = 0..n-1.
std::vector<double> neville_at_zero(const std::vector<double>& s, const std::vector<double>& y)
{
	const std::size_t n = s.size();
	std::vector<double> p = y;
	std::vector<double> diagonal{y.back()};
	// p[i] holds the interpolant through points i..i+level at s = 0
	for (std::size_t level = 1; level < n; ++level)
	{
		for (std::size_t i = 0; i + level < n; ++i)
		{
			p[i] = (s[i + level] * p[i] - s[i] * p[i + 1]) / (s[i + level] - s[i]);
		}
		diagonal.push_back(p[n - 1 - level]);
	}
	return diagonal;
}

} // namespace

double regularized_density(double d, double T, double sigma)
{
	if (!(d > 0) || !(sigma > 0))
	{
		throw DomainError("regularized density needs d > 0 and sigma > 0");
	}
	const ThermalSpectrum thermal(T);
	const double w1 = pi<double>() / d;
	const double peak = 1.0 / (sigma * w1);
	std::vector<double> terms;
	double running = 0.0;
	for (long k = 1; k <= MaxTerms; ++k)
	{
		const double w = static_cast<double>(k) * w1;
		const double term = thermal.z(w) * w / (2.0 * d) * std::exp(-sigma * w);
		terms.push_back(term);
		running += term;
		if (static_cast<double>(k) > peak && term < 1e-16 * running)
		{
			return pairwise_sum(terms);
		}
	}
	throw NumericalError("regularized density did not converge within " + std::to_string(MaxTerms) + " terms");
}

double freespace_density(double T, double sigma)
{
	if (!(sigma > 0))
	{
		throw DomainError("free-space density needs sigma > 0");
	}
	const ThermalSpectrum thermal(T);
	auto integrand = [&](double w) {
		if (w == 0)
		{
			// w z(w) -> 2T as w -> 0
			return T;
		}
		return thermal.z(w) * w / 2.0 * std::exp(-sigma * w);
	};
	boost::math::quadrature::exp_sinh<double> integrator;
	double error = 0.0;
	double l1 = 0.0;
	const double tol = 1e-14;
	const double value = integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), tol, &error, &l1);
	if (error > 1e-12 * l1)
	{
		throw NumericalError("free-space quadrature did not converge: error estimate " + std::to_string(error));
	}
	return value / pi<double>();
}

EnergyDensityResult renormalized_density(double d, double T, const CasimirOptions& options)
{
	if (!(d > 0))
	{
		throw DomainError("cavity length d must be positive");
	}
	const bool even = (T == 0);
	const int points = options.points > 0 ? options.points : (even ? 3 : 6);
	if (points < 2)
	{
		throw DomainError("extrapolation needs at least two regulator values");
	}

	EnergyDensityResult result;
	const auto n = static_cast<std::size_t>(points);
	result.sigma_values.resize(n);
	result.regularized.resize(n);
	result.freespace.resize(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		result.sigma_values[i] = options.sigma_max_over_d * d / std::ldexp(1.0, static_cast<int>(i));
	}
	parallel_for(n, [&](std::size_t i) {
		result.regularized[i] = regularized_density(d, T, result.sigma_values[i]);
		result.freespace[i] = freespace_density(T, result.sigma_values[i]);
	});

	std::vector<double> s(n), diff(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		s[i] = even ? result.sigma_values[i] * result.sigma_values[i] : result.sigma_values[i];
		diff[i] = result.regularized[i] - result.freespace[i];
	}
	const auto diagonal = neville_at_zero(s, diff);
	result.renormalized = diagonal.back();
	result.model_error = std::abs(diagonal.back() - diagonal[diagonal.size() - 2]);

	// successive corrections must shrink once they are above the rounding floor
	const double floor = 1e-11 * std::max(std::abs(result.renormalized), 1e-300) + 1e-13 * std::abs(result.regularized.back());
	for (std::size_t i = 2; i < diagonal.size(); ++i)
	{
		const double previous = std::abs(diagonal[i - 1] - diagonal[i - 2]);
		const double current = std::abs(diagonal[i] - diagonal[i - 1]);
		if (current > floor && current >= previous)
		{
			throw NumericalError("sigma extrapolation unstable: correction " + std::to_string(current) +
								 " after " + std::to_string(previous) + " at order " + std::to_string(i));
		}
	}
	return result;
}

double static_casimir_force(double eps_ren, double d, double x)
{
	return 0.5 * eps_ren * (1.0 - 3.0 * x / d);
}

} // namespace ctpm
