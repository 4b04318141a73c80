#ifndef QUADLIE_MODELS_HPP
#define QUADLIE_MODELS_HPP

#include "quadlie/current.hpp"
#include "quadlie/unital.hpp"

namespace quadlie {

/// Abelian Lie algebra of the given dimension.
LieAlgebra abelian(std::size_t n);

/// Three-dimensional algebra with [x1, x2] = x3 central.
LieAlgebra heisenberg3();

/// One-dimensional algebra of scalars.
AssocAlgebra scalar_algebra();

/// Truncated polynomial algebra on 1, t, ..., t^(k-1) with t^k = 0.
AssocAlgebra truncated_poly(std::size_t k);

/// Dual numbers: truncated_poly(2).
AssocAlgebra dual_numbers();

/// The pairing theta(t^i, t^j) = 1 iff i + j = k - 1; Frobenius for
/// truncated_poly(k).
BilinearForm truncated_poly_pairing(std::size_t k);

/// Nine-dimensional worked example: the datum over heisenberg3 with the
/// shifted cocycle pair depending on the parameter xi.
ExtensionData example_extension(const Rat& xi);
/// Euclidean form on the abelian summand of the worked example.
BilinearForm example_b_a();
/// Total algebra of the worked example datum.
LieAlgebra example_algebra(const Rat& xi);
/// Completed invariant metric of the worked example (non-degenerate for
/// every xi).
BilinearForm example_metric(const Rat& xi);

/// End-to-end run of the worked example at one parameter value.
struct ExamplePipeline {
	ExtensionData data;
	BilinearForm b_a;
	LieAlgebra algebra;
	CentralSeriesReport series;
	CanonicalIdeals ideals;
	std::optional<AffineSolution> cyclic_set;  // flattened maps h -> a, entry (s, j) at s * dim h + j
	std::optional<ShiftMetricResult> shift;    // from the cyclic shift solver
};

ExamplePipeline run_example_pipeline(const Rat& xi);

}  // namespace quadlie

#endif
