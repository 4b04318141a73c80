#ifndef QUADLIE_RAT_HPP
#define QUADLIE_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace quadlie {

/// Exact rational scalar. mpq_class keeps values reduced with positive
/// denominator once canonicalized; every constructor path below canonicalizes.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
	if (den == 0) throw std::invalid_argument("rat: zero denominator");
	Rat r(num, den);
	r.canonicalize();
	return r;
}

/// Parses "p" or "p/q" with optional leading '-', base 10, q > 0.
inline Rat rat_from_string(const std::string& s) {
	auto fail = [&] { throw std::invalid_argument("rat_from_string: bad rational '" + s + "'"); };
	if (s.empty()) fail();
	std::size_t pos = 0;
	auto digits = [&](std::size_t from, std::size_t to) {
		if (from >= to) return false;
		for (std::size_t k = from; k < to; ++k)
			if (s[k] < '0' || s[k] > '9') return false;
		return true;
	};
	if (s[pos] == '-') ++pos;
	std::size_t slash = s.find('/');
	if (slash == std::string::npos) {
		if (!digits(pos, s.size())) fail();
	} else {
		if (!digits(pos, slash)) fail();
		if (!digits(slash + 1, s.size())) fail();
		bool all_zero = true;
		for (std::size_t k = slash + 1; k < s.size(); ++k)
			if (s[k] != '0') all_zero = false;
		if (all_zero) fail();
	}
	Rat r(s, 10);
	r.canonicalize();
	return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace quadlie

#endif
