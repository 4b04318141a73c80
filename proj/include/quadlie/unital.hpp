#ifndef QUADLIE_UNITAL_HPP
#define QUADLIE_UNITAL_HPP

#include "quadlie/invforms.hpp"

namespace quadlie {

/// Unital algebra on the line plus g with product
/// (xi, x)(eta, y) = (xi eta + f(x, y), xi y + eta x + [x, y]/2),
/// for an invariant symmetric non-zero form f; coordinate 0 is the unit line.
class UnitalAlgebra {
public:
	UnitalAlgebra(LieAlgebra g, BilinearForm f);

	std::size_t dim() const { return g_.dim() + 1; }
	const LieAlgebra& algebra() const { return g_; }
	const BilinearForm& form() const { return f_; }

	/// (xi, x) as a coordinate vector.
	Vec embed(const Rat& xi, const Vec& x) const;
	Vec unit() const;
	Vec product(const Vec& u, const Vec& v) const;
	/// uv - vu; lands in the embedded copy of g.
	Vec commutator(const Vec& u, const Vec& v) const;

private:
	LieAlgebra g_;
	BilinearForm f_;
};

/// Smallest subspace containing v and closed under multiplication by every
/// basis element on both sides. Grows spans until they stabilize; a span
/// element whose unit coordinate squared differs from f on its g-part forces
/// the whole algebra, which is detected exactly and short-circuits.
Subspace ideal_closure(const UnitalAlgebra& a, const Vec& v);

enum class Simplicity { simple, not_simple, probably_simple };

struct SimplicityVerdict {
	Simplicity verdict = Simplicity::probably_simple;
	std::optional<Subspace> witness;  // verified proper nonzero ideal
	std::size_t closures_computed = 0;
	std::string method;
};

struct SimplicityConfig {
	std::size_t sign_cap = 64;  // 0/±1 coefficient vectors tried after the basis
	long height = 10;           // rational height for random candidates
};

/// Staged decision: a radical witness, then ideal closures of basis, sign
/// and seeded random vectors (at most `budget` closures), then the exact
/// certificate for non-degenerate forms on nilpotent algebras of dim > 1.
SimplicityVerdict simplicity_check(const UnitalAlgebra& a, std::uint64_t seed,
	std::size_t budget, const SimplicityConfig& cfg = {});

struct QuotientReport {
	Mat projection;        // dim g x (dim g + 1), kills the unit line
	LieAlgebra quotient;   // bracket induced by the commutator on the quotient
	bool matches;          // quotient structure constants equal those of g
};

/// Quotient by the unit line with the commutator bracket; verified against g.
QuotientReport commutator_quotient_iso(const UnitalAlgebra& a);

/// A non-zero invariant symmetric form on a nilpotent algebra; throws
/// TheoremViolation if the invariant-form space is zero.
BilinearForm nonzero_invariant_form(const LieAlgebra& g);

}  // namespace quadlie

#endif
