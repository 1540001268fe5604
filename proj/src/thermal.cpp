/// @file thermal.cpp
/// @brief Thermal factor z(omega) and occupation numbers

#include "ctpmirror/thermal.hpp"

#include <string>

namespace ctpm {

ThermalSpectrum::ThermalSpectrum(double T) : T_(T)
{
	if (!(T >= 0) || !std::isfinite(T))
	{
		throw DomainError("temperature must be finite and non-negative, got " + std::to_string(T));
	}
}

double ThermalSpectrum::occupation(double omega) const
{
	if (!(omega > 0))
	{
		throw DomainError("occupation number requires omega > 0");
	}
	if (T_ == 0)
	{
		return 0.0;
	}
	return 1.0 / std::expm1(omega / T_);
}

ThermalSpectrum::PairFactors ThermalSpectrum::pair_factors(double a, double b) const
{
	if (a == 0 || b == 0)
	{
		throw DomainError("z(omega) has a pole at omega = 0");
	}
	const double sa = a > 0 ? 1.0 : -1.0;
	const double sb = b > 0 ? 1.0 : -1.0;
	if (T_ == 0)
	{
		return {sa * sb + 1.0, sa + sb};
	}
	const double x = std::abs(a) / (2 * T_);
	const double y = std::abs(b) / (2 * T_);
	const double c = (a + b) / (2 * T_);
	// every exponent is non-positive, so nothing overflows
	const double scale = 2.0 * std::exp(std::abs(c) - x - y) / (sa * sb * -std::expm1(-2 * x) * -std::expm1(-2 * y));
	const double sum = c == 0 ? 0.0 : (c > 0 ? 1.0 : -1.0) * scale * -std::expm1(-2 * std::abs(c));
	return {scale * (1.0 + std::exp(-2 * std::abs(c))), sum};
}

double z_factor(const ThermalSpectrum& th, double omega)
{
	return th.z(omega);
}

} // namespace ctpm
