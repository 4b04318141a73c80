#ifndef QUADLIE_SUBSPACE_HPP
#define QUADLIE_SUBSPACE_HPP

#include <optional>

#include "quadlie/mat.hpp"

namespace quadlie {

/// Linear subspace of Q^n, represented by the unique RREF basis of its span.
/// Equality of subspaces is therefore plain equality of representations.
class Subspace {
public:
	Subspace() = default;

	static Subspace zero(std::size_t ambient);
	static Subspace full(std::size_t ambient);
	static Subspace span(std::size_t ambient, const Mat& vectors);
	static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.rows(); }
	const Mat& basis() const { return basis_; }
	const std::vector<std::size_t>& pivots() const { return pivots_; }

	bool contains(const Vec& v) const;
	bool contains(const Subspace& other) const;
	/// Coordinates of v in the RREF basis, if v lies in the span.
	std::optional<Vec> coordinates(const Vec& v) const;

	bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
	std::size_t ambient_ = 0;
	Mat basis_;  // RREF, no zero rows
	std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Intersection computed from the kernel of the stacked coefficient system
/// [U^T | -V^T].
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Complement spanned by the standard basis vectors whose indices are not
/// pivot columns of the subspace, taken in index order.
Subspace subspace_complement(const Subspace& u);

/// Complement of inner within outer: scans outer's RREF basis rows in order
/// and keeps those that enlarge the span. Requires inner to lie in outer.
Mat complement_within(const Subspace& inner, const Subspace& outer);

/// Rows are a basis of the functionals vanishing on u; membership in u is
/// equivalent to being killed by this matrix.
Mat annihilator(const Subspace& u);

Subspace kernel(const Mat& m);

struct LinearSolution {
	Vec particular;       // free variables zero
	Subspace homogeneous; // solution space of the associated homogeneous system
};

std::optional<LinearSolution> solve(const Mat& m, const Vec& rhs);

}  // namespace quadlie

#endif
