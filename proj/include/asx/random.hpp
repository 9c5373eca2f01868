#ifndef ASX_RANDOM_HPP
#define ASX_RANDOM_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

// Boost.Random distributions have fixed algorithms, unlike <random>'s, so a
// seed produces the same stream with any standard library.

namespace asx {

using Rng = boost::random::mt19937_64;

inline constexpr const char* rng_name = "boost::random::mt19937_64";

/// Fisher-Yates shuffle of 0..n-1.
inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng)
{
	std::vector<std::size_t> idx(n);
	std::iota(idx.begin(), idx.end(), std::size_t{0});
	for (std::size_t i = n; i > 1; --i) {
		boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
		std::swap(idx[i - 1], idx[pick(rng)]);
	}
	return idx;
}

} // namespace asx

#endif
