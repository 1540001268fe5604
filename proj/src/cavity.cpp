/// @file cavity.cpp
/// @brief Mode frequencies, coupling matrix and completeness check

#include "ctpmirror/cavity.hpp"

#include "ctpmirror/errors.hpp"
#include "ctpmirror/parallel.hpp"
#include "ctpmirror/precision.hpp"
#include "ctpmirror/summation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace ctpm {

int plasma_mode_limit(double d, double omega_pl)
{
	return static_cast<int>(std::floor(omega_pl * d / pi<double>()));
}

CavitySpec CavitySpec::from_plasma(double d, double omega_pl)
{
	CavitySpec spec{d, 1, omega_pl};
	if (d > 0 && omega_pl > 0)
	{
		spec.K_max = plasma_mode_limit(d, omega_pl);
	}
	spec.validate();
	return spec;
}

void CavitySpec::validate() const
{
	if (!(d > 0) || !std::isfinite(d))
	{
		throw DomainError("cavity length d must be positive, got " + std::to_string(d));
	}
	if (!(omega_pl > 0) || !std::isfinite(omega_pl))
	{
		throw DomainError("plasma frequency omega_pl must be positive, got " + std::to_string(omega_pl));
	}
	if (K_max < 1)
	{
		throw DomainError("K_max must be at least 1, got " + std::to_string(K_max));
	}
}

double mode_frequency(const CavitySpec& spec, int k)
{
	if (k < 1 || k > spec.K_max)
	{
		throw DomainError("mode index k=" + std::to_string(k) + " outside [1, K_max=" + std::to_string(spec.K_max) + "]");
	}
	return k * pi<double>() / spec.d;
}

double coupling_coefficient(int j, int k)
{
	if (j == k)
	{
		return 0.0;
	}
	const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
	const double jj = j;
	const double kk = k;
	return sign * 2.0 * kk * jj / (kk * kk - jj * jj);
}

CouplingMatrix::CouplingMatrix(int K) : K_(K), g_(static_cast<std::size_t>(K) * static_cast<std::size_t>(K), 0.0) {}

CouplingMatrix coupling_matrix(const CavitySpec& spec)
{
	spec.validate();
	CouplingMatrix g(spec.K_max);
	parallel_for(static_cast<std::size_t>(spec.K_max), [&](std::size_t row) {
		const int j = static_cast<int>(row) + 1;
		for (int k = 1; k <= spec.K_max; ++k)
		{
			g.at(j, k) = coupling_coefficient(j, k);
		}
	});
	return g;
}

namespace {

// d phi_k / dq at q for phi_k = sqrt(2/q) sin(k pi z / q)
double mode_derivative(int k, double z, double q)
{
	const double arg = k * pi<double>() * z / q;
	const double amp = std::sqrt(2.0 / q);
	return -amp / (2.0 * q) * std::sin(arg) - amp * std::cos(arg) * arg / q;
}

} // namespace

double mode_derivative_overlap(const CavitySpec& spec, int k, int j, double rel_tol)
{
	spec.validate();
	if (k < 1 || j < 1)
	{
		throw DomainError("mode indices must be positive");
	}
	const double q = spec.d;
	auto integrand = [&](double z) { return mode_derivative(k, z, q) * mode_derivative(j, z, q); };
	double error = 0.0;
	double l1 = 0.0;
	const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
		integrand, 0.0, q, 15, rel_tol, &error, &l1);
	if (error > rel_tol * l1)
	{
		throw NumericalError("quadrature for R_" + std::to_string(k) + std::to_string(j) +
							 " did not converge: error estimate " + std::to_string(error));
	}
	return q * q * value;
}

double completeness_residual(const CavitySpec& spec, int k, int j, int S_max)
{
	if (k < 1 || j < 1 || k > spec.K_max || j > spec.K_max)
	{
		throw DomainError("completeness indices must lie in [1, K_max]");
	}
	if (S_max < std::max(k, j))
	{
		throw DomainError("S_max must be at least max(k, j)");
	}
	std::vector<double> terms(static_cast<std::size_t>(S_max));
	for (int s = 1; s <= S_max; ++s)
	{
		terms[static_cast<std::size_t>(s - 1)] = coupling_coefficient(k, s) * coupling_coefficient(j, s);
	}
	return std::abs(pairwise_sum(terms) - mode_derivative_overlap(spec, k, j));
}

} // namespace ctpm
