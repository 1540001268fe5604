/// @file kernels.cpp
/// @brief Second-order kernels as lattice sine/cosine series

#include "ctpmirror/kernels.hpp"

#include "ctpmirror/errors.hpp"
#include "ctpmirror/parallel.hpp"
#include "ctpmirror/precision.hpp"
#include "ctpmirror/summation.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace ctpm {

namespace {

template <typename Real>
struct TimeDomainSeries
{
	LatticeSeries<Real> n00;
	LatticeSeries<Real> m00;
	LatticeSeries<Real> n11;
	LatticeSeries<Real> m11;
	Real n00_minus{0};
};

template <typename Real>
LatticeSeries<Real> compact(const Real& spacing, const std::vector<Real>& dense)
{
	LatticeSeries<Real> series;
	series.spacing = spacing;
	for (std::size_t n = 0; n < dense.size(); ++n)
	{
		if (dense[n] != 0)
		{
			series.index.push_back(static_cast<int>(n));
			series.coef.push_back(dense[n]);
		}
	}
	return series;
}

// Collects the pair-kernel sums by lattice index n of their frequency n pi/d.
// Within the 11 sums the coupling weight g_kj^2 (w_k -+ w_j)^2 / (w_k w_j) is the
// rational 4kj/(k +- j)^2.
template <typename Real>
TimeDomainSeries<Real> build_series(const CavitySpec& cavity, const ThermalSpectrum& thermal)
{
	const int K = cavity.K_max;
	const Real spacing = pi<Real>() / Real(cavity.d);
	const auto L = static_cast<std::size_t>(2 * K + 1);

	std::vector<Real> z(static_cast<std::size_t>(K + 1), Real(0));
	for (int k = 1; k <= K; ++k)
	{
		z[static_cast<std::size_t>(k)] = thermal.z<Real>(spacing * k);
	}

	std::vector<Real> n00(L, Real(0)), m00(L, Real(0)), n11(L, Real(0)), m11(L, Real(0));
	TimeDomainSeries<Real> out;
	for (int k = 1; k <= K; ++k)
	{
		const Real& zk = z[static_cast<std::size_t>(k)];
		const Real w2 = (spacing * k) * (spacing * k);
		const auto n = static_cast<std::size_t>(2 * k);
		n00[n] += w2 * (zk * zk + 1) / 8;
		out.n00_minus += w2 * (zk * zk - 1) / 8;
		m00[n] += -w2 * zk / 4;
	}
	for (int k = 1; k <= K; ++k)
	{
		const Real& zk = z[static_cast<std::size_t>(k)];
		for (int j = 1; j <= K; ++j)
		{
			if (j == k)
			{
				continue;
			}
			const Real& zj = z[static_cast<std::size_t>(j)];
			const Real w_plus = Real(4 * k * j) / Real((k + j) * (k + j));
			const Real w_minus = Real(4 * k * j) / Real((k - j) * (k - j));
			const auto sum = static_cast<std::size_t>(k + j);
			n11[sum] += w_plus * (zk * zj + 1) / 8;
			m11[sum] += -w_plus * (zk + zj) / 8;
			// sin is odd: fold negative difference frequencies onto |k - j|
			const auto diff = static_cast<std::size_t>(std::abs(k - j));
			const int sign = k > j ? 1 : -1;
			n11[diff] += w_minus * (zk * zj - 1) / 8;
			m11[diff] += sign * w_minus * (zk - zj) / 8;
		}
	}
	out.n00 = compact(spacing, n00);
	out.m00 = compact(spacing, m00);
	out.n11 = compact(spacing, n11);
	out.m11 = compact(spacing, m11);
	return out;
}

double sum_series(const LatticeSeries<double>& s, double t, bool sine)
{
	std::vector<double> terms(s.size());
	for (std::size_t i = 0; i < s.size(); ++i)
	{
		const double phase = s.frequency(i) * t;
		terms[i] = s.coef[i] * (sine ? std::sin(phase) : std::cos(phase));
	}
	return pairwise_sum(terms);
}

} // namespace

MirrorKernels::MirrorKernels(const CavitySpec& cavity, const ThermalSpectrum& thermal)
	: cavity_(cavity), thermal_(thermal), g_(coupling_matrix(cavity))
{
	auto series = build_series<double>(cavity_, thermal_);
	n00_plus_ = std::move(series.n00);
	n00_minus_ = series.n00_minus;
	m00_ = std::move(series.m00);
	n11_ = std::move(series.n11);
	m11_ = std::move(series.m11);
}

void MirrorKernels::check_mode(int k) const
{
	if (k == 0 || std::abs(k) > cavity_.K_max)
	{
		throw DomainError("mode label " + std::to_string(k) + " outside 1 <= |k| <= K_max=" + std::to_string(cavity_.K_max));
	}
}

double MirrorKernels::omega(int k) const
{
	check_mode(k);
	return k * pi<double>() / cavity_.d;
}

double MirrorKernels::z(int k) const
{
	return thermal_.z(omega(k));
}

double MirrorKernels::micro_nu(int k, double t) const
{
	if (k < 1)
	{
		throw DomainError("micro kernels take positive mode labels");
	}
	const double w = omega(k);
	return z(k) / (2.0 * w) * std::cos(w * t);
}

double MirrorKernels::micro_mu(int k, double t) const
{
	if (k < 1)
	{
		throw DomainError("micro kernels take positive mode labels");
	}
	const double w = omega(k);
	return -std::sin(w * t) / (2.0 * w);
}

PairKernelValues MirrorKernels::pair_kernels(int k, int j, double t) const
{
	if (k < 1 || j < 1)
	{
		throw DomainError("pair kernels take positive mode labels");
	}
	const double wk = omega(k);
	const double wj = omega(j);
	const double zk = z(k);
	const double zj = z(j);
	PairKernelValues v;
	v.nu_plus = (zk * zj + 1.0) / 8.0 * std::cos((wk + wj) * t);
	v.nu_minus = (zk * zj - 1.0) / 8.0 * std::cos((wk - wj) * t);
	v.mu_plus = -(zk + zj) / 8.0 * std::sin((wk + wj) * t);
	v.mu_minus = (zk - zj) / 8.0 * std::sin((wk - wj) * t);
	return v;
}

Kernel00Values MirrorKernels::kernel_00(double t) const
{
	return {sum_series(n00_plus_, t, false), n00_minus_, sum_series(m00_, t, true)};
}

Kernel11Values MirrorKernels::kernel_11(double t) const
{
	return {sum_series(n11_, t, false), sum_series(m11_, t, true)};
}

double MirrorKernels::kernel_11_mdot(double t) const
{
	std::vector<double> terms(m11_.size());
	for (std::size_t i = 0; i < m11_.size(); ++i)
	{
		const double w = m11_.frequency(i);
		terms[i] = m11_.coef[i] * w * std::cos(w * t);
	}
	return pairwise_sum(terms);
}

SpectralCoefficient MirrorKernels::spectral_coefficient(int k, int j) const
{
	check_mode(k);
	check_mode(j);
	if (k == -j)
	{
		throw DomainError("singular channel k = -j (w_k + w_j = 0); use regularized_weight");
	}
	const double wk = omega(k);
	const double wj = omega(j);
	const double sum = wk + wj;
	const double pref = wk * wj / (4.0 * sum * sum);
	const auto f = thermal_.pair_factors(wk, wj);
	return {pref * f.product_plus_one, pref * f.sum};
}

RegularizedWeight MirrorKernels::regularized_weight(int k, int j) const
{
	const double wk = omega(k);
	const double wj = omega(j);
	const double pref = wk * wj / 4.0;
	const auto f = thermal_.pair_factors(wk, wj);
	return {pref * f.product_plus_one, pref * f.sum};
}

std::vector<SpectralEntry> MirrorKernels::spectral_table() const
{
	const int K = cavity_.K_max;
	const auto width = static_cast<std::size_t>(2 * K - 1);
	std::vector<SpectralEntry> table(static_cast<std::size_t>(2 * K) * width);
	// signed labels -K..-1, 1..K in ascending order
	auto label = [K](std::size_t i) { return i < static_cast<std::size_t>(K) ? static_cast<int>(i) - K : static_cast<int>(i) - K + 1; };
	parallel_for(static_cast<std::size_t>(2 * K), [&](std::size_t row) {
		const int k = label(row);
		std::size_t col = 0;
		for (std::size_t jj = 0; jj < static_cast<std::size_t>(2 * K); ++jj)
		{
			const int j = label(jj);
			if (j == -k)
			{
				continue;
			}
			const auto c = spectral_coefficient(k, j);
			table[row * width + col++] = {k, j, omega(k) + omega(j), c.nu, c.im_mu};
		}
	});
	return table;
}

std::vector<SpectralLine> MirrorKernels::spectral_lines_00() const
{
	const int K = cavity_.K_max;
	std::vector<SpectralLine> lines;
	for (int k = -K; k <= K; ++k)
	{
		if (k == 0)
		{
			continue;
		}
		const double w = omega(k);
		lines.push_back({2 * k, 2 * w, w * w * spectral_coefficient(k, k).im_mu});
	}
	return lines;
}

std::vector<SpectralLine> MirrorKernels::spectral_lines_11() const
{
	const int K = cavity_.K_max;
	std::vector<std::vector<double>> by_index(static_cast<std::size_t>(4 * K + 1));
	for (int k = -K; k <= K; ++k)
	{
		for (int j = -K; j <= K; ++j)
		{
			if (k == 0 || j == 0 || std::abs(k) == std::abs(j))
			{
				continue;
			}
			by_index[static_cast<std::size_t>(k + j + 2 * K)].push_back(spectral_coefficient(k, j).im_mu);
		}
	}
	std::vector<SpectralLine> lines;
	for (int n = -2 * K; n <= 2 * K; ++n)
	{
		const auto& terms = by_index[static_cast<std::size_t>(n + 2 * K)];
		if (!terms.empty())
		{
			lines.push_back({n, n * pi<double>() / cavity_.d, pairwise_sum(terms)});
		}
	}
	return lines;
}

double MirrorKernels::mass_shift(double sigma) const
{
	if (!(sigma > 0))
	{
		throw DomainError("mass shift regulator sigma must be positive");
	}
	const int K = cavity_.K_max;
	std::vector<double> terms;
	terms.reserve(static_cast<std::size_t>(K) * static_cast<std::size_t>(K));
	for (int k = 1; k <= K; ++k)
	{
		const double w = omega(k);
		const double nu0 = z(k) / (2.0 * w) * std::exp(-sigma * w);
		for (int j = 1; j <= K; ++j)
		{
			const double g = g_(k, j);
			terms.push_back(g * g * nu0);
		}
	}
	return pairwise_sum(terms);
}

template <typename Real>
ForceKernels<Real> MirrorKernels::force_kernels() const
{
	auto series = build_series<Real>(cavity_, thermal_);
	ForceKernels<Real> out;
	out.m00 = std::move(series.m00);
	out.m11_dot = std::move(series.m11);
	for (std::size_t i = 0; i < out.m11_dot.size(); ++i)
	{
		out.m11_dot.coef[i] *= out.m11_dot.frequency(i);
	}
	return out;
}

template ForceKernels<double> MirrorKernels::force_kernels<double>() const;
template ForceKernels<ExtendedReal> MirrorKernels::force_kernels<ExtendedReal>() const;

} // namespace ctpm
