#ifndef QUADLIE_RNG_HPP
#define QUADLIE_RNG_HPP

#include <cstdint>
#include <random>

#include "quadlie/rat.hpp"

namespace quadlie {

/// Deterministic PRNG handed around explicitly; all randomized search and
/// test-data generation goes through this so runs are reproducible by seed.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : eng_(seed) {}

	long integer(long lo, long hi) {
		return std::uniform_int_distribution<long>(lo, hi)(eng_);
	}

	/// Rational with numerator in [-height, height] and denominator in [1, height].
	Rat rational(long height) {
		return rat(integer(-height, height), integer(1, height));
	}

	Vec vector(std::size_t n, long height) {
		Vec v(n);
		for (auto& x : v) x = rational(height);
		return v;
	}

	std::uint64_t raw() { return eng_(); }

private:
	std::mt19937_64 eng_;
};

}  // namespace quadlie

#endif
