/// @file summation.hpp
/// @brief Deterministic pairwise summation

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ctpm {

/// Sums by recursive halving; the association order depends only on the length,
/// so the result is reproducible regardless of threading.
template <typename Real>
Real pairwise_sum(std::span<const Real> values)
{
	constexpr std::size_t Leaf = 8;
	if (values.size() <= Leaf)
	{
		Real acc(0);
		for (const auto& v : values)
		{
			acc += v;
		}
		return acc;
	}
	const std::size_t half = values.size() / 2;
	return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <typename Real>
Real pairwise_sum(const std::vector<Real>& values)
{
	return pairwise_sum(std::span<const Real>(values));
}

} // namespace ctpm
