#ifndef QUADLIE_INVFORMS_HPP
#define QUADLIE_INVFORMS_HPP

#include "quadlie/liealg.hpp"
#include "quadlie/rng.hpp"

namespace quadlie {

/// Symmetric bilinear form given by its gram matrix in the algebra basis.
struct BilinearForm {
	Mat gram;

	BilinearForm() = default;
	explicit BilinearForm(Mat g);

	std::size_t dim() const { return gram.rows(); }
	Rat eval(const Vec& x, const Vec& y) const;
	Subspace radical() const;
	bool is_degenerate() const;
	bool operator==(const BilinearForm&) const = default;
};

/// Solution space of f([x,y],z) + f(y,[x,z]) = 0 over symmetric f.
struct InvariantFormSpace {
	std::size_t algebra_dim = 0;
	std::vector<BilinearForm> basis;

	std::size_t dim() const { return basis.size(); }
	BilinearForm combine(const Vec& coefficients) const;
	/// Coefficients of f in this basis, if f lies in the span.
	std::optional<Vec> coordinates(const BilinearForm& f) const;
	bool contains(const BilinearForm& f) const { return coordinates(f).has_value(); }
};

InvariantFormSpace invariant_forms(const LieAlgebra& g);
bool is_invariant(const LieAlgebra& g, const BilinearForm& f);
/// Invariant and non-degenerate.
bool is_metric(const LieAlgebra& g, const BilinearForm& f);

struct MetricSearchConfig {
	std::size_t sign_cap = 64;          // 0/±1 coefficient vectors tried in stage 1
	std::size_t random_attempts = 256;  // seeded random vectors in stage 2
	long height = 10;                   // numerator/denominator bound for stage 2
	unsigned long long grid_budget = 10000000ULL;  // max grid points in stage 3
	std::uint64_t seed = 1;
};

enum class MetricSearchOutcome {
	found,           // metric produced
	certified_none,  // det vanishes on the whole coefficient grid, hence identically
	inconclusive,    // grid larger than the configured budget
};

enum class MetricSearchStage { basis_form, sign_vector, random_vector, grid_point };

struct MetricSearchResult {
	MetricSearchOutcome outcome = MetricSearchOutcome::inconclusive;
	std::optional<BilinearForm> metric;
	std::optional<MetricSearchStage> stage;
	Vec coefficients;  // of the found metric in the invariant-form basis
	std::size_t form_space_dim = 0;
	unsigned long long grid_points_checked = 0;
	unsigned long long grid_points_needed = 0;
};

/// Staged search for an invariant metric inside invariant_forms(g).
/// The negative certificate relies on det being a polynomial of degree at
/// most dim(g) in each coefficient: vanishing on the grid {0..dim(g)}^k
/// forces it to vanish identically.
MetricSearchResult find_invariant_metric(const LieAlgebra& g, const MetricSearchConfig& cfg = {});

/// {x : f(x, u) = 0 for all u in sub}; rejects degenerate f.
Subspace orthogonal_complement(const BilinearForm& f, const Subspace& sub);

/// Adapted decomposition g = h + a + i with i = i(g), a a complement of i in
/// J(g) = i^perp, and h an isotropic complement orthogonal to a. Bases are
/// ordered matrices; the pairing phi(alpha)(x) = B(alpha, x) identifies i
/// with h* and is non-degenerate.
struct WittDecomposition {
	Mat h_basis;  // r x n, isotropic, orthogonal to a
	Mat a_basis;  // q x n, B restricted here is non-degenerate
	Mat i_basis;  // r x n, RREF basis of i(g)
	Mat phi;      // r x r, phi.at(j, m) = B(i_m, h_j)
	Mat a_gram;   // q x q, B restricted to a

	Subspace h_space() const;
	Subspace a_space() const;
	Subspace i_space() const;
};

WittDecomposition witt_decomposition(const LieAlgebra& g, const BilinearForm& b);

}  // namespace quadlie

#endif
