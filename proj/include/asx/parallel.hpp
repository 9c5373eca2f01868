#ifndef ASX_PARALLEL_HPP
#define ASX_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace asx {

namespace detail {
inline std::atomic<unsigned>& thread_limit_storage()
{
	static std::atomic<unsigned> limit{0};
	return limit;
}
} // namespace detail

/// Caps the number of worker threads used by library loops. 0 restores the
/// default (hardware concurrency).
inline void set_thread_limit(unsigned n) { detail::thread_limit_storage().store(n); }

inline unsigned thread_limit()
{
	const unsigned n = detail::thread_limit_storage().load();
	if (n > 0)
		return n;
	return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, n). Work is split into contiguous chunks; each
/// index is visited exactly once, so callers that write only to slot i get
/// schedule-independent results. The first exception thrown (lowest chunk)
/// is rethrown on the caller's thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body)
{
	const std::size_t workers = std::min<std::size_t>(thread_limit(), n);
	if (workers <= 1) {
		for (std::size_t i = 0; i < n; ++i)
			body(i);
		return;
	}

	std::vector<std::exception_ptr> errors(workers);
	std::vector<std::thread> pool;
	pool.reserve(workers);
	const std::size_t chunk = (n + workers - 1) / workers;
	for (std::size_t w = 0; w < workers; ++w) {
		pool.emplace_back([&, w] {
			const std::size_t lo = w * chunk;
			const std::size_t hi = std::min(n, lo + chunk);
			try {
				for (std::size_t i = lo; i < hi; ++i)
					body(i);
			} catch (...) {
				errors[w] = std::current_exception();
			}
		});
	}
	for (auto& t : pool)
		t.join();
	for (auto& e : errors)
		if (e)
			std::rethrow_exception(e);
}

} // namespace asx

#endif
