/// @file precision.hpp
/// @brief Scalar types used by the templated numerics

#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>

namespace ctpm {

/// 64 significant decimal digits.
///
/// The time-domain dissipated energy of a slow pulse is an exponentially small
/// remainder of large reactive terms; this type keeps that remainder resolvable.
using ExtendedReal = boost::multiprecision::number<
	boost::multiprecision::mpfr_float_backend<64>,
	boost::multiprecision::et_off>;

template <typename Real>
inline Real pi()
{
	return boost::math::constants::pi<Real>();
}

template <typename Real>
inline double to_double(const Real& x)
{
	return static_cast<double>(x);
}

/// Complex number over an arbitrary real type. std::complex is only specified for
/// the built-in floating types, so the extended path uses this pair.
template <typename Real>
struct Complex
{
	Real re{0};
	Real im{0};

	Complex() = default;
	Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

	Real norm() const { return re * re + im * im; }
	std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

} // namespace ctpm
