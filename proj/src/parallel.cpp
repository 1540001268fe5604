/// @file parallel.cpp
/// @brief Worker-count cap and parallel loop

#include "ctpmirror/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ctpm {

std::size_t thread_cap()
{
	if (const char* env = std::getenv("CTP_MIRROR_THREADS"))
	{
		try
		{
			const long requested = std::stol(env);
			if (requested > 0)
			{
				return static_cast<std::size_t>(requested);
			}
		}
		catch (const std::exception&)
		{
			// fall through to the hardware default
		}
	}
	return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
	const std::size_t workers = std::min(thread_cap(), count);
	if (workers <= 1)
	{
		for (std::size_t i = 0; i < count; ++i)
		{
			body(i);
		}
		return;
	}

	std::exception_ptr failure;
	std::mutex failure_mutex;
	std::vector<std::jthread> pool;
	pool.reserve(workers);
	for (std::size_t w = 0; w < workers; ++w)
	{
		pool.emplace_back([&, w] {
			try
			{
				for (std::size_t i = w; i < count; i += workers)
				{
					body(i);
				}
			}
			catch (...)
			{
				std::lock_guard lock(failure_mutex);
				if (!failure)
				{
					failure = std::current_exception();
				}
			}
		});
	}
	pool.clear();
	if (failure)
	{
		std::rethrow_exception(failure);
	}
}

} // namespace ctpm
