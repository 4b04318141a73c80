#ifndef QUADLIE_CURRENT_HPP
#define QUADLIE_CURRENT_HPP

#include "quadlie/extension.hpp"

namespace quadlie {

/// Structure constant of a commutative product, stored on pairs with i <= j.
struct ProductTriple {
	std::size_t i, j, k;
	Rat c;
};

struct AssocViolation {
	std::string kind;  // "associativity" or "unit"
	std::array<std::size_t, 3> triple;
	Vec residual;
};

/// First failing basis identity of the defining laws, if any.
std::optional<AssocViolation> assoc_violation(std::size_t dim,
	const std::vector<ProductTriple>& triples, const Vec& unit);

/// Commutative associative unital algebra with a fixed basis.
class AssocAlgebra {
public:
	AssocAlgebra(std::size_t dim, std::vector<ProductTriple> triples, Vec unit,
		std::vector<std::string> basis_names = {});

	std::size_t dim() const { return dim_; }
	const std::vector<std::string>& basis_names() const { return names_; }
	const std::vector<ProductTriple>& triples() const { return triples_; }
	const Vec& unit() const { return unit_; }
	const Vec& product_basis(std::size_t i, std::size_t j) const;
	Vec product(const Vec& x, const Vec& y) const;

private:
	std::size_t dim_;
	std::vector<ProductTriple> triples_;
	Vec unit_;
	std::vector<std::string> names_;
	std::vector<Vec> table_;  // full symmetric table, row-major over (i, j)
};

/// Lie algebra on basis e_i (x) s_a with [x (x) s, y (x) t] = [x, y] (x) st;
/// pair (i, a) sits at index i * dim S + a.
LieAlgebra current_algebra(const LieAlgebra& g, const AssocAlgebra& s);

/// Gram of the product form (x (x) s, y (x) t) -> b(x, y) theta(s, t).
BilinearForm tensor_form(const BilinearForm& b, const BilinearForm& theta, std::size_t s_dim);

/// theta(ab, c) = theta(a, bc) on all basis triples.
bool is_associative_invariant(const AssocAlgebra& s, const BilinearForm& theta);
/// Associative-invariant and non-degenerate.
bool is_frobenius(const AssocAlgebra& s, const BilinearForm& theta);

/// The operators carried by an invariant metric on a current algebra,
/// together with their blocks in the canonical splitting of g into the
/// isotropic lift h and the ideal J.
struct CurrentAnalysis {
	std::size_t s_dim = 0;
	std::vector<Mat> gamma;     // (a, b) -> gamma.at(a * s_dim + b), n x n on g
	std::vector<Mat> epsilon;   // h-to-h blocks, r x r
	std::vector<Mat> theta;     // h-to-J blocks, (n - r) x r
	std::vector<Mat> vartheta;  // J-to-J blocks, (n - r) x (n - r)
	Extraction decomposition;   // fixes the splitting the blocks refer to

	const Mat& gamma_at(std::size_t a, std::size_t b) const { return gamma[a * s_dim + b]; }
	const Mat& epsilon_at(std::size_t a, std::size_t b) const { return epsilon[a * s_dim + b]; }
};

/// Solve b(gamma(s_a, s_b) x, y) = bbar(x (x) s_a, y (x) s_b) for all pairs and
/// split into blocks. Throws domain_error on degenerate b or when bbar is not
/// an invariant metric on gs; throws logic_error if an operator escapes the
/// centroid or moves J out of itself.
CurrentAnalysis gamma_operators(const LieAlgebra& g, const BilinearForm& b,
	const LieAlgebra& gs, const BilinearForm& bbar);

struct EpsilonConditionReport {
	bool factors_through_product = false;  // epsilon(s, t) = epsilon(st, 1)
	bool kernel_trivial = false;           // epsilon(s, .) = 0 forces s = 0
	bool epsilon_in_centroid = false;      // each block is a centroid element of h
	bool all() const { return factors_through_product && kernel_trivial && epsilon_in_centroid; }
};

/// Necessary conditions every invariant metric on a current algebra imposes
/// on its epsilon blocks.
EpsilonConditionReport check_epsilon_conditions(const CurrentAnalysis& analysis,
	const AssocAlgebra& s);

}  // namespace quadlie

#endif
