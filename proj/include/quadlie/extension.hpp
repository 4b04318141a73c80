#ifndef QUADLIE_EXTENSION_HPP
#define QUADLIE_EXTENSION_HPP

#include <optional>
#include <string>

#include "quadlie/cochain.hpp"
#include "quadlie/invforms.hpp"

namespace quadlie {

/// Abelian two-step extension datum: a Lie algebra h acting on an abelian
/// ideal i through rho, pairing maps phi : h -> Hom(a, i), and a pair of
/// 2-cochains (lambda into a, mu into i) describing the bracket of lifts.
struct ExtensionData {
	LieAlgebra h;
	std::size_t dim_a = 0;
	std::size_t dim_i = 0;
	std::vector<Mat> rho;    // one dim_i x dim_i matrix per basis element of h
	std::vector<Mat> phi;    // one dim_i x dim_a matrix per basis element of h
	Cochain lambda;          // degree 2, values in a
	Cochain mu;              // degree 2, values in i

	ExtensionData(LieAlgebra h_, std::size_t dim_a_, std::size_t dim_i_,
		std::vector<Mat> rho_, std::vector<Mat> phi_, Cochain lambda_, Cochain mu_);
};

struct ExtensionChecks {
	bool rho_representation = false;
	bool phi_equivariant = false;
	bool pair_closed = false;    // d_R(lambda, mu) = 0
	std::string detail;
	bool all() const { return rho_representation && phi_equivariant && pair_closed; }
};

ExtensionChecks check_extension_data(const ExtensionData& data);

/// Pair differential d_R(L, M) = (d_a L, e_phi L + d_rho M) on cochain pairs.
struct CochainPair {
	Cochain into_a;
	Cochain into_i;
};

CochainPair pair_d(const ExtensionData& data, const CochainPair& c);

/// Total algebra on basis (h-lifts, a, i); throws StructureError when the
/// datum fails its closure conditions.
LieAlgebra build_extension(const ExtensionData& data);

/// Coadjoint action matrices: coad(g)[j] = -ad(e_j)^T.
std::vector<Mat> coad(const LieAlgebra& g);

/// Shift (lambda, mu) by the pair coboundary of (L, M); L maps h -> a as a
/// dim_a x dim_h matrix, M maps h -> i as a dim_i x dim_h matrix.
ExtensionData shift_data(const ExtensionData& data, const Mat& l_map, const Mat& m_map);

/// Cochain of degree 1 wrapping the columns of a matrix map h -> Q^target.
Cochain cochain_from_matrix(const Mat& m, std::size_t h_dim);

/// The a-valued cochain determined by phi and a nondegenerate form on a via
/// b_a(lambda_phi(x, y), u) = -phi(x)(u)(y). Requires dim_i == dim h so that
/// i-coordinates pair with h.
Cochain lambda_phi(const ExtensionData& data, const BilinearForm& b_a);

struct MetricConditionReport {
	bool dual_action = false;      // rho is the coadjoint action
	bool pairing_matches = false;  // phi(x)(u)(y) = -b_a(lambda(x,y), u)
	bool mu_cyclic = false;        // mu(x,y)(z) = mu(y,z)(x)
	bool all() const { return dual_action && pairing_matches && mu_cyclic; }
};

MetricConditionReport check_metric_conditions(const ExtensionData& data, const BilinearForm& b_a);

/// Neutral metric on the total algebra of a datum in coadjoint form:
/// h-lifts pair with i dually, a carries b_a, everything else is isotropic.
BilinearForm assemble_metric(const ExtensionData& data, const BilinearForm& b_a);

/// Solve e_phi(L) = 0 together with lambda_phi = lambda + d_a(L) for a map
/// L : h -> a; free variables are fixed to zero.
std::optional<Mat> solve_shift_fixing_mu(const ExtensionData& data, const BilinearForm& b_a);

/// Solve lambda_phi = lambda + d_a(L) together with the cyclicity
/// b_a(lambda_phi(y,z), L(x)) = b_a(lambda_phi(x,y), L(z)) for all triples.
std::optional<Mat> solve_shift_cyclic(const ExtensionData& data, const BilinearForm& b_a);

/// Full affine solution sets of the two shift systems, over maps L
/// flattened with entry (s, j) at index s * dim h + j.
std::optional<AffineSolution> shift_system_fixing_mu(const ExtensionData& data, const BilinearForm& b_a);
std::optional<AffineSolution> shift_system_cyclic(const ExtensionData& data, const BilinearForm& b_a);
/// Whether a map lies in an affine solution set of flattened maps.
bool shift_set_contains(const AffineSolution& set, const Mat& l_map);

/// Basis isomorphism x - L(x) - M(x) between the total algebras of a datum
/// and of its shift by (L, M); identity on a and i.
Mat shift_isomorphism(const ExtensionData& data, const Mat& l_map, const Mat& m_map);

/// Certificate that two data over the same base differ by the pair coboundary
/// of (L, M), together with the verified isomorphism of total algebras.
struct IsoReport {
	bool cocycles_shifted;  // (lambda', mu') = (lambda, mu) + d_R(L, M)
	bool homomorphism;      // psi intertwines the two brackets on all basis pairs
	Mat psi;                // from's total algebra -> to's total algebra
	CochainPair residual;   // (lambda', mu') - (lambda, mu) - d_R(L, M)

	bool all() const { return cocycles_shifted && homomorphism; }
};

/// Requires matching h, dimensions, rho and phi; the cocycle precondition is
/// reported through the residual rather than thrown.
IsoReport cohomologous_iso(const ExtensionData& from, const ExtensionData& to,
                           const Mat& l_map, const Mat& m_map);

struct ShiftMetricResult {
	Mat l_map;
	ExtensionData shifted;
	LieAlgebra shifted_algebra;
	BilinearForm metric_shifted;
	Mat psi;                       // iso original total algebra -> shifted one
	BilinearForm metric_original;  // pullback of metric_shifted through psi
};

/// Run a shift solver and transport the assembled metric back to the
/// original total algebra; empty when the solver finds no shift.
std::optional<ShiftMetricResult> metric_via_fixing_mu(const ExtensionData& data, const BilinearForm& b_a);
std::optional<ShiftMetricResult> metric_via_cyclic(const ExtensionData& data, const BilinearForm& b_a);

/// Read an extension datum off a metric Lie algebra with nonzero canonical
/// ideals, in coadjoint form with the dual pairing normalized.
struct Extraction {
	ExtensionData data;
	WittDecomposition witt;
	Mat basis_change;        // columns: adapted basis of g matching the rebuilt algebra
	BilinearForm b_a;
};

Extraction extract_extension_data(const LieAlgebra& g, const BilinearForm& b);

}  // namespace quadlie

#endif
