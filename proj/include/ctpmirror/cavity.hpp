/// @file cavity.hpp
/// @brief Mode basis of a 1D cavity at its equilibrium length

#pragma once

#include <cstddef>
#include <vector>

namespace ctpm {

/// Cavity geometry and mode truncation.
struct CavitySpec
{
	double d = 1.0;                  ///< equilibrium length
	int K_max = 1;                   ///< number of retained modes
	double omega_pl = 0.0;           ///< plasma cutoff frequency

	/// K_max = floor(omega_pl * d / pi).
	static CavitySpec from_plasma(double d, double omega_pl);

	/// Throws DomainError naming the violated bound.
	void validate() const;
};

/// Largest mode index below the plasma cutoff.
int plasma_mode_limit(double d, double omega_pl);

/// Unperturbed frequency k*pi/d of mode k (1-based).
double mode_frequency(const CavitySpec& spec, int k);

/// Closed-form coupling coefficient (-1)^(k+j) 2kj/(k^2-j^2), zero for j == k.
double coupling_coefficient(int j, int k);

/// Dense K_max x K_max coupling matrix, addressed with 1-based mode labels.
class CouplingMatrix
{
public:
	explicit CouplingMatrix(int K);

	int size() const { return K_; }
	double operator()(int j, int k) const { return g_[index(j, k)]; }
	double& at(int j, int k) { return g_[index(j, k)]; }

private:
	std::size_t index(int j, int k) const
	{
		return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(K_) + static_cast<std::size_t>(k - 1);
	}

	int K_;
	std::vector<double> g_;
};

CouplingMatrix coupling_matrix(const CavitySpec& spec);

/// q^2 * integral over [0, q] of (d phi_k/dq)(d phi_j/dq) at q = d, by adaptive
/// Gauss-Kronrod quadrature. Throws NumericalError if the error estimate stays
/// above `rel_tol`.
double mode_derivative_overlap(const CavitySpec& spec, int k, int j, double rel_tol = 1e-10);

/// |sum_{s=1..S_max} g_ks g_js - R_kj|.
double completeness_residual(const CavitySpec& spec, int k, int j, int S_max);

} // namespace ctpm
