#ifndef QUADLIE_COCHAIN_HPP
#define QUADLIE_COCHAIN_HPP

#include <map>

#include "quadlie/liealg.hpp"

namespace quadlie {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t p);

/// Antisymmetric p-linear map on a Lie algebra h with values in Q^target,
/// stored on strictly increasing basis index tuples.
class Cochain {
public:
	Cochain(std::size_t degree, std::size_t h_dim, std::size_t target_dim);

	std::size_t degree() const { return degree_; }
	std::size_t h_dim() const { return h_dim_; }
	std::size_t target_dim() const { return target_dim_; }

	const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
	const Vec& at_index(std::size_t idx) const { return values_[idx]; }
	Vec& at_index(std::size_t idx) { return values_[idx]; }

	/// Value on a strictly increasing tuple.
	const Vec& at(const std::vector<std::size_t>& sorted_tuple) const;
	void set(const std::vector<std::size_t>& sorted_tuple, Vec value);

	/// Antisymmetric evaluation on an arbitrary index tuple: zero on repeats,
	/// signed lookup otherwise.
	Vec eval(std::vector<std::size_t> args) const;

	Cochain operator+(const Cochain& o) const;
	Cochain operator-(const Cochain& o) const;
	Cochain scaled(const Rat& c) const;
	bool operator==(const Cochain& o) const;
	bool is_zero() const;

private:
	std::size_t degree_, h_dim_, target_dim_;
	std::vector<std::vector<std::size_t>> tuples_;
	std::map<std::vector<std::size_t>, std::size_t> index_;
	std::vector<Vec> values_;
};

/// Chevalley-Eilenberg differential for the module action rho (one matrix per
/// basis element of h). Pass an empty rho for the trivial action.
Cochain cochain_d(const LieAlgebra& h, const std::vector<Mat>& rho, const Cochain& c);

/// Trivial-coefficients differential.
Cochain d_a(const LieAlgebra& h, const Cochain& c);

/// Pairing term: (e_phi c)(x_1..x_{p+1}) = sum_j (-1)^{j-1} phi(x_j)(c(..without x_j..)).
Cochain e_phi(const std::vector<Mat>& phi, const Cochain& c);

}  // namespace quadlie

#endif
