/// @file memory.cpp
/// @brief Sliding recursion for convolutions with sinusoidal kernels

#include "ctpmirror/memory.hpp"

#include "ctpmirror/precision.hpp"

#include <cmath>
#include <type_traits>

namespace ctpm {

template <typename Real>
MemoryConvolution<Real>::MemoryConvolution(const LatticeSeries<Real>& kernel, KernelParity parity, const Real& dt)
	: parity_(parity), dt_(dt), coef_(kernel.coef)
{
	using std::cos;
	using std::sin;
	const std::size_t c = kernel.size();
	rot_re_.reserve(c);
	rot_im_.reserve(c);
	Real sum_coef(0);
	for (std::size_t i = 0; i < c; ++i)
	{
		const Real phase = kernel.frequency(i) * dt;
		rot_re_.push_back(cos(phase));
		rot_im_.push_back(sin(phase));
		sum_coef += coef_[i];
	}
	state_re_.assign(c, Real(0));
	state_im_.assign(c, Real(0));
	next_re_.assign(c, Real(0));
	next_im_.assign(c, Real(0));
	// Part(u_n - u_n/2): zero for the sine kernel, u_n/2 for the cosine kernel
	self_weight_ = parity_ == KernelParity::Cosine ? dt_ * sum_coef / 2 : Real(0);
}

template <typename Real>
void MemoryConvolution<Real>::prepare()
{
	if (prepared_)
	{
		return;
	}
	Real acc(0);
	if constexpr (std::is_same_v<Real, ExtendedReal>)
	{
		// fused MPFR calls; the generic path allocates a temporary per operation
		auto* a = acc.backend().data();
		for (std::size_t i = 0; i < coef_.size(); ++i)
		{
			auto* nr = next_re_[i].backend().data();
			auto* ni = next_im_[i].backend().data();
			const auto* cr = rot_re_[i].backend().data();
			const auto* ci = rot_im_[i].backend().data();
			const auto* sr = state_re_[i].backend().data();
			const auto* si = state_im_[i].backend().data();
			mpfr_fmms(nr, cr, sr, ci, si, MPFR_RNDN);
			mpfr_fmma(ni, ci, sr, cr, si, MPFR_RNDN);
			mpfr_fma(a, coef_[i].backend().data(), parity_ == KernelParity::Sine ? ni : nr, a, MPFR_RNDN);
		}
		history_ = dt_ * acc;
		prepared_ = true;
		return;
	}
	Real tmp;
	for (std::size_t i = 0; i < coef_.size(); ++i)
	{
		next_re_[i] = rot_re_[i] * state_re_[i];
		tmp = rot_im_[i] * state_im_[i];
		next_re_[i] -= tmp;
		next_im_[i] = rot_im_[i] * state_re_[i];
		tmp = rot_re_[i] * state_im_[i];
		next_im_[i] += tmp;
		tmp = coef_[i] * (parity_ == KernelParity::Sine ? next_im_[i] : next_re_[i]);
		acc += tmp;
	}
	history_ = dt_ * acc;
	prepared_ = true;
}

template <typename Real>
Real MemoryConvolution<Real>::peek(const Real& u)
{
	if (steps_ == 0)
	{
		return Real(0);
	}
	prepare();
	return history_ + self_weight_ * u;
}

template <typename Real>
Real MemoryConvolution<Real>::push(const Real& u)
{
	if (steps_ == 0)
	{
		const Real half = u / 2;
		for (std::size_t i = 0; i < coef_.size(); ++i)
		{
			state_re_[i] = half;
		}
		++steps_;
		return Real(0);
	}
	const Real value = peek(u);
	for (std::size_t i = 0; i < coef_.size(); ++i)
	{
		std::swap(state_re_[i], next_re_[i]);
		std::swap(state_im_[i], next_im_[i]);
		state_re_[i] += u;
	}
	prepared_ = false;
	++steps_;
	return value;
}

template <typename Real>
std::vector<Real> memory_integral(const LatticeSeries<Real>& kernel, KernelParity parity, const Real& dt,
								  const std::vector<Real>& u)
{
	MemoryConvolution<Real> conv(kernel, parity, dt);
	std::vector<Real> out;
	out.reserve(u.size());
	for (const auto& ui : u)
	{
		out.push_back(conv.push(ui));
	}
	return out;
}

template <typename Real>
Real direct_memory_integral(const LatticeSeries<Real>& kernel, KernelParity parity, const Real& dt,
							const std::vector<Real>& u, std::size_t n)
{
	using std::cos;
	using std::sin;
	if (n == 0)
	{
		return Real(0);
	}
	Real total(0);
	for (std::size_t m = 0; m <= n; ++m)
	{
		const Real lag = dt * static_cast<long>(n - m);
		Real k(0);
		for (std::size_t c = 0; c < kernel.size(); ++c)
		{
			const Real phase = kernel.frequency(c) * lag;
			k += kernel.coef[c] * (parity == KernelParity::Sine ? sin(phase) : cos(phase));
		}
		const Real w = (m == 0 || m == n) ? Real(0.5) : Real(1);
		total += w * k * u[m];
	}
	return dt * total;
}

template class MemoryConvolution<double>;
template class MemoryConvolution<ExtendedReal>;
template std::vector<double> memory_integral(const LatticeSeries<double>&, KernelParity, const double&, const std::vector<double>&);
template std::vector<ExtendedReal> memory_integral(const LatticeSeries<ExtendedReal>&, KernelParity, const ExtendedReal&,
												   const std::vector<ExtendedReal>&);
template double direct_memory_integral(const LatticeSeries<double>&, KernelParity, const double&, const std::vector<double>&,
									   std::size_t);
template ExtendedReal direct_memory_integral(const LatticeSeries<ExtendedReal>&, KernelParity, const ExtendedReal&,
											 const std::vector<ExtendedReal>&, std::size_t);

} // namespace ctpm
