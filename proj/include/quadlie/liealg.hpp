#ifndef QUADLIE_LIEALG_HPP
#define QUADLIE_LIEALG_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadlie/subspace.hpp"

namespace quadlie {

/// Structure constant entry: [e_i, e_j] += c * e_k, stored with i < j only.
struct StructureTriple {
	std::size_t i, j, k;
	Rat c;
};

struct JacobiViolation {
	std::array<std::size_t, 3> triple;  // i < j < k
	Vec residual;                       // cyclic sum evaluated on that triple
};

class StructureError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A computation contradicted a property that is guaranteed to hold; either
/// the input is outside the guarantee's hypotheses or the data is corrupt.
class TheoremViolation : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lie algebra over Q given by sparse structure constants.
/// Antisymmetry is structural; the Jacobi identity is validated at
/// construction and a violation throws StructureError.
class LieAlgebra {
public:
	LieAlgebra(std::size_t dim, std::vector<StructureTriple> triples,
	           std::vector<std::string> basis_names = {});

	std::size_t dim() const { return dim_; }
	const std::vector<std::string>& basis_names() const { return names_; }
	const std::vector<StructureTriple>& triples() const { return triples_; }

	/// [e_i, e_j] for any pair, sign handled.
	const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
	Vec bracket(const Vec& x, const Vec& y) const;
	Mat ad_basis(std::size_t i) const;
	Mat ad(const Vec& x) const;

	bool is_abelian() const;

private:
	std::size_t dim_;
	std::vector<std::string> names_;
	std::vector<StructureTriple> triples_;
	std::vector<std::vector<Vec>> table_;  // full antisymmetric bracket table
};

/// Jacobi check on raw constants without constructing the algebra; also
/// validates index ranges and the i < j storage convention.
std::optional<JacobiViolation> jacobi_violation(std::size_t dim,
                                                const std::vector<StructureTriple>& triples);

/// Normalized structure-constant comparison (sorted triples, zeros dropped).
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

struct CentralSeriesReport {
	std::vector<Subspace> upper;  // Z_1, Z_2, ... up to stabilization
	std::vector<Subspace> lower;  // g^0, g^1, ... up to stabilization
	std::optional<std::size_t> nilpotency_class;
	std::size_t stabilization_index = 0;

	bool is_nilpotent() const { return nilpotency_class.has_value(); }
	/// Z_k with the tail clamped at the stabilized term (k >= 1).
	const Subspace& upper_at(std::size_t k) const;
	/// g^k with the tail clamped at the stabilized term (k >= 0).
	const Subspace& lower_at(std::size_t k) const;
};

CentralSeriesReport central_series(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

struct CanonicalIdeals {
	Subspace i;  // sum of Z_k intersected with g^k
	Subspace j;  // intersection of Z_k + g^k
};

/// Requires a nilpotent algebra. The containment i <= j, the abelianness of j
/// and [g, j] <= i are asserted on every construction.
CanonicalIdeals canonical_ideals(const LieAlgebra& g);

struct CanonicalIdealChecks {
	bool i_inside_j = false;
	bool sum_formula = false;      // j = Z(g) + sum_{k<m} Z_{k+1} ∩ g^k
	bool j_abelian = false;
	bool bracket_into_i = false;   // [g, j] <= i
	bool all() const { return i_inside_j && sum_formula && j_abelian && bracket_into_i; }
};

CanonicalIdealChecks verify_canonical_ideals(const LieAlgebra& g);

/// Span of all [a_r, b_s] over bases of the two subspaces.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// Operators T with T([x, y]) = [x, T(y)], as a subspace of row-major
/// flattened dim x dim matrices.
Subspace centroid(const LieAlgebra& g);
bool in_centroid(const LieAlgebra& g, const Mat& t);

Mat flatten(const Mat& m);        // 1 x (rows*cols) row-major
Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace quadlie

#endif
