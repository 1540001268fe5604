/// @file memory.hpp
/// @brief Causal memory integrals with sinusoidal kernels
///
/// I_n = dt * sum_{m=0..n} w_m K(t_n - t_m) u_m with trapezoid weights w_0 = w_n = 1/2,
/// K(t) = sum_c a_c sin(L_c t) or sum_c a_c cos(L_c t).

#pragma once

#include "ctpmirror/kernels.hpp"

#include <vector>

namespace ctpm {

enum class KernelParity
{
	Sine,
	Cosine
};

/// Sliding evaluation of I_n: each channel keeps R_n = e^{i L dt} R_{n-1} + u_n, so a
/// step costs O(channels) and reproduces the trapezoid sum exactly.
template <typename Real>
class MemoryConvolution
{
public:
	MemoryConvolution(const LatticeSeries<Real>& kernel, KernelParity parity, const Real& dt);

	/// Value of I_n if the next sample were u; does not advance.
	Real peek(const Real& u);
	/// Appends u as the next sample and returns I_n.
	Real push(const Real& u);

	std::size_t steps() const { return steps_; }

private:
	void prepare();

	KernelParity parity_;
	Real dt_;
	std::vector<Real> coef_;
	std::vector<Real> rot_re_, rot_im_;
	std::vector<Real> state_re_, state_im_;
	std::vector<Real> next_re_, next_im_;   // e^{i L dt} R_{n-1}
	Real history_{0};                       // dt sum_c a_c Part(next_c)
	Real self_weight_{0};                   // coefficient of u_n in I_n (n >= 1)
	bool prepared_ = false;
	std::size_t steps_ = 0;
};

/// I_n for every n by the sliding recursion.
template <typename Real>
std::vector<Real> memory_integral(const LatticeSeries<Real>& kernel, KernelParity parity, const Real& dt,
								  const std::vector<Real>& u);

/// I_n at one index by the literal trapezoid sum; O(n) per call.
template <typename Real>
Real direct_memory_integral(const LatticeSeries<Real>& kernel, KernelParity parity, const Real& dt,
							const std::vector<Real>& u, std::size_t n);

} // namespace ctpm
