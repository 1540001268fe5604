/// @file thermal.hpp
/// @brief Thermal occupation factor z(omega) = coth(omega / 2T), odd in omega

#pragma once

#include "ctpmirror/errors.hpp"

#include <cmath>

namespace ctpm {

/// Field temperature (k_B = 1) and the occupation factor z = 2n + 1 extended to
/// signed frequencies by z(-w) = -z(w).
class ThermalSpectrum
{
public:
	explicit ThermalSpectrum(double T = 0.0);

	double temperature() const { return T_; }

	/// coth(omega / 2T), or sign(omega) at T = 0. Throws DomainError for omega = 0.
	template <typename Real>
	Real z(const Real& omega) const
	{
		using std::abs;
		using std::tanh;
		if (omega == 0)
		{
			throw DomainError("z(omega) has a pole at omega = 0");
		}
		if (T_ == 0)
		{
			return omega > 0 ? Real(1) : Real(-1);
		}
		const Real x = omega / (2 * Real(T_));
		// Laurent branch near the pole; coth(x) = 1/x + x/3 - x^3/45 + ...
		if (abs(omega) / Real(T_) < Real(1e-8))
		{
			return 1 / x + x / 3;
		}
		return 1 / tanh(x);
	}

	/// z(a) z(b) + 1 and z(a) + z(b), written as cosh(x + y) and sinh(x + y) over
	/// sinh(x) sinh(y) with x = a / 2T, y = b / 2T. Opposite-sign pairs keep full
	/// relative accuracy where the direct forms cancel.
	struct PairFactors
	{
		double product_plus_one = 0;
		double sum = 0;
	};
	PairFactors pair_factors(double a, double b) const;

	/// n(omega) = (z - 1) / 2 for omega > 0.
	double occupation(double omega) const;

private:
	double T_;
};

/// Free function form of ThermalSpectrum::z for double arguments.
double z_factor(const ThermalSpectrum& th, double omega);

} // namespace ctpm
