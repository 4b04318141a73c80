#ifndef QUADLIE_RANDOM_DATA_HPP
#define QUADLIE_RANDOM_DATA_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "quadlie/extension.hpp"
#include "quadlie/models.hpp"
#include "quadlie/rng.hpp"

namespace testsupport {

using namespace quadlie;

/// Four-dimensional filiform algebra: [e1,e2] = e3, [e1,e3] = e4.
inline LieAlgebra filiform4() {
	return LieAlgebra(4, {{0, 1, 2, Rat(1)}, {0, 2, 3, Rat(1)}});
}

/// Pool of small nilpotent base algebras.
inline LieAlgebra base_algebra(std::size_t pick) {
	switch (pick % 6) {
	case 0: return abelian(1);
	case 1: return abelian(2);
	case 2: return abelian(3);
	case 3: return heisenberg3();
	case 4: return filiform4();
	default: return abelian(4);
	}
}

inline std::vector<Mat> trivial_action(std::size_t r, std::size_t s) {
	return std::vector<Mat>(r, Mat(s, s));
}

/// Commuting strictly upper triangular action; a representation only when the
/// base is abelian, which callers must guarantee.
inline std::vector<Mat> shift_action(std::size_t r, std::size_t s, Rng& rng, long height) {
	Mat shift(s, s);
	for (std::size_t k = 0; k + 1 < s; ++k)
		shift.at(k, k + 1) = 1;
	std::vector<Mat> rho;
	for (std::size_t j = 0; j < r; ++j)
		rho.push_back(shift.scaled(rng.rational(height)));
	return rho;
}

/// Random element of the kernel of a homogeneous system.
inline Vec random_kernel_element(const Mat& sys, Rng& rng, long height) {
	Mat kernel = kernel_basis(sys);
	Vec out(sys.cols(), Rat(0));
	for (std::size_t p = 0; p < kernel.rows(); ++p) {
		Rat c = rng.rational(height);
		for (std::size_t k = 0; k < out.size(); ++k)
			out[k] += c * kernel.at(p, k);
	}
	return out;
}

/// Random solution of phi([x,y]) = rho(x) phi(y) - rho(y) phi(x), the map
/// phi(e_j) flattened with entry (m, t) at (j * dim_i + m) * dim_a + t.
/// With skew_pairing set, also phi(x)(u)(y) = -phi(y)(u)(x): the condition a
/// metric on a coadjoint-form datum forces on the diagonal and on swapped
/// pairs, where the i-row doubles as an h-index.
inline std::vector<Mat> random_equivariant_phi(const LieAlgebra& h, const std::vector<Mat>& rho,
	std::size_t dim_a, std::size_t dim_i, Rng& rng, long height, bool skew_pairing = false) {
	const std::size_t r = h.dim(), s = dim_i, q = dim_a;
	const std::size_t unknowns = r * s * q;
	auto slot = [&](std::size_t j, std::size_t m, std::size_t t) { return (j * s + m) * q + t; };
	std::vector<Vec> rows;
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = i + 1; j < r; ++j) {
			const Vec& c = h.bracket_basis(i, j);
			for (std::size_t m = 0; m < s; ++m)
				for (std::size_t t = 0; t < q; ++t) {
					Vec row(unknowns, Rat(0));
					for (std::size_t k = 0; k < r; ++k)
						if (!is_zero(c[k]))
							row[slot(k, m, t)] += c[k];
					for (std::size_t n = 0; n < s; ++n) {
						row[slot(j, n, t)] -= rho[i].at(m, n);
						row[slot(i, n, t)] += rho[j].at(m, n);
					}
					rows.push_back(std::move(row));
				}
		}
	if (skew_pairing && s == r)
		for (std::size_t x = 0; x < r; ++x)
			for (std::size_t y = x; y < r; ++y)
				for (std::size_t t = 0; t < q; ++t) {
					Vec row(unknowns, Rat(0));
					row[slot(x, y, t)] += 1;
					row[slot(y, x, t)] += 1;
					rows.push_back(std::move(row));
				}
	Mat sys = rows.empty() ? Mat(0, unknowns) : Mat::from_rows(rows);
	Vec flat = random_kernel_element(sys, rng, height);
	std::vector<Mat> phi(r, Mat(s, q));
	for (std::size_t j = 0; j < r; ++j)
		for (std::size_t m = 0; m < s; ++m)
			for (std::size_t t = 0; t < q; ++t)
				phi[j].at(m, t) = flat[slot(j, m, t)];
	return phi;
}

inline Vec cochain_entries(const Cochain& c) {
	Vec out;
	for (std::size_t idx = 0; idx < c.tuples().size(); ++idx) {
		const Vec& v = c.at_index(idx);
		out.insert(out.end(), v.begin(), v.end());
	}
	return out;
}

inline Vec pair_entries(const CochainPair& p) {
	Vec out = cochain_entries(p.into_a);
	Vec tail = cochain_entries(p.into_i);
	out.insert(out.end(), tail.begin(), tail.end());
	return out;
}

inline Cochain random_cochain(std::size_t degree, std::size_t h_dim, std::size_t target,
	Rng& rng, long height) {
	Cochain c(degree, h_dim, target);
	for (std::size_t idx = 0; idx < c.tuples().size(); ++idx)
		c.at_index(idx) = rng.vector(target, height);
	return c;
}

/// Random cocycle pair: an element of ker d_R in degree 2 over a datum whose
/// lambda and mu are ignored. Columns of the system come from applying the
/// pair differential to unit pairs, so this stays in lockstep with pair_d.
inline CochainPair random_closed_pair(const ExtensionData& scaffold, Rng& rng, long height) {
	const std::size_t r = scaffold.h.dim(), q = scaffold.dim_a, s = scaffold.dim_i;
	const std::size_t t2 = Cochain(2, r, 1).tuples().size();
	const std::size_t unknowns = t2 * (q + s);
	std::vector<Vec> cols;
	std::size_t eq_count = 0;
	for (std::size_t u = 0; u < unknowns; ++u) {
		Cochain la(2, r, q), mu(2, r, s);
		if (u < t2 * q)
			la.at_index(u / q)[u % q] = 1;
		else {
			std::size_t v = u - t2 * q;
			mu.at_index(v / s)[v % s] = 1;
		}
		cols.push_back(pair_entries(pair_d(scaffold, {la, mu})));
		eq_count = cols.back().size();
	}
	Mat sys(eq_count, unknowns);
	for (std::size_t u = 0; u < unknowns; ++u)
		for (std::size_t e = 0; e < eq_count; ++e)
			sys.at(e, u) = cols[u][e];
	Vec flat = random_kernel_element(sys, rng, height);
	Cochain la(2, r, q), mu(2, r, s);
	for (std::size_t idx = 0; idx < t2; ++idx) {
		for (std::size_t t = 0; t < q; ++t)
			la.at_index(idx)[t] = flat[idx * q + t];
		for (std::size_t m = 0; m < s; ++m)
			mu.at_index(idx)[m] = flat[t2 * q + idx * s + m];
	}
	return {std::move(la), std::move(mu)};
}

enum class ActionKind { trivial, coadjoint, shift };

/// Random datum passing every closure check: representation by construction,
/// phi from the equivariance kernel, (lambda, mu) from ker d_R.
inline ExtensionData random_valid_datum(const LieAlgebra& h, std::size_t q, std::size_t s,
	ActionKind kind, Rng& rng, long height = 3) {
	const std::size_t r = h.dim();
	if (kind == ActionKind::coadjoint && s != r)
		throw std::logic_error("random_valid_datum: coadjoint data need dim_i == dim h");
	if (kind == ActionKind::shift && !h.is_abelian())
		throw std::logic_error("random_valid_datum: the shift action needs an abelian base");
	std::vector<Mat> rho;
	switch (kind) {
	case ActionKind::coadjoint: rho = coad(h); break;
	case ActionKind::shift: rho = shift_action(r, s, rng, height); break;
	default: rho = trivial_action(r, s); break;
	}
	std::vector<Mat> phi = random_equivariant_phi(h, rho, q, s, rng, height);
	ExtensionData scaffold(h, q, s, rho, phi, Cochain(2, r, q), Cochain(2, r, s));
	CochainPair pair = random_closed_pair(scaffold, rng, height);
	ExtensionData data(h, q, s, std::move(rho), std::move(phi),
		std::move(pair.into_a), std::move(pair.into_i));
	if (!check_extension_data(data).all())
		throw std::logic_error("random_valid_datum: generated datum fails its closure checks");
	return data;
}

struct DatumRecipe {
	std::size_t base, q, s;
	ActionKind kind;
};

/// Fixed portfolio covering total dimensions 3 through 8 and all action kinds.
inline const std::vector<DatumRecipe>& datum_portfolio() {
	static const std::vector<DatumRecipe> table = {
		{0, 1, 1, ActionKind::trivial},    // dim 3
		{1, 1, 1, ActionKind::trivial},    // dim 4
		{1, 1, 2, ActionKind::shift},      // dim 5
		{1, 2, 2, ActionKind::coadjoint},  // dim 6
		{2, 1, 1, ActionKind::trivial},    // dim 5
		{2, 2, 3, ActionKind::coadjoint},  // dim 8
		{3, 1, 1, ActionKind::trivial},    // dim 5
		{3, 2, 3, ActionKind::coadjoint},  // dim 8
		{3, 1, 3, ActionKind::coadjoint},  // dim 7
		{4, 1, 1, ActionKind::trivial},    // dim 6
		{4, 2, 2, ActionKind::trivial},    // dim 8
		{5, 1, 1, ActionKind::trivial},    // dim 6
		{1, 3, 3, ActionKind::shift},      // dim 8
		{2, 2, 2, ActionKind::trivial},    // dim 7
	};
	return table;
}

inline ExtensionData portfolio_datum(std::size_t index, Rng& rng) {
	const DatumRecipe& rec = datum_portfolio()[index % datum_portfolio().size()];
	return random_valid_datum(base_algebra(rec.base), rec.q, rec.s, rec.kind, rng);
}

inline BilinearForm random_nondegenerate_form(std::size_t q, Rng& rng, long height) {
	for (int tries = 0; tries < 16; ++tries) {
		Mat m(q, q);
		for (std::size_t i = 0; i < q; ++i)
			for (std::size_t j = i; j < q; ++j) {
				Rat c = rng.rational(height);
				m.at(i, j) = c;
				m.at(j, i) = c;
			}
		if (det(m) != 0)
			return BilinearForm(m);
	}
	return BilinearForm(Mat::identity(q));
}

/// Rows of e_phi(L) = 0 over maps L : h -> a flattened with entry (t, j) at
/// t * dim h + j; the side condition of the mu-fixing shift system.
inline Mat pairing_kernel_rows(const ExtensionData& data) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	std::vector<Vec> rows;
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = i + 1; j < r; ++j)
			for (std::size_t m = 0; m < data.dim_i; ++m) {
				Vec row(q * r, Rat(0));
				for (std::size_t t = 0; t < q; ++t) {
					row[t * r + j] += data.phi[i].at(m, t);
					row[t * r + i] -= data.phi[j].at(m, t);
				}
				rows.push_back(std::move(row));
			}
	return rows.empty() ? Mat(0, q * r) : Mat::from_rows(rows);
}

/// Rows of b_a(lambda_phi(y,z), L(x)) = b_a(lambda_phi(x,y), L(z)), the side
/// condition of the cyclic shift system, over the same flattening.
inline Mat cyclic_kernel_rows(const ExtensionData& data, const BilinearForm& b_a) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	Cochain lphi = lambda_phi(data, b_a);
	std::vector<Vec> rows;
	for (std::size_t x = 0; x < r; ++x)
		for (std::size_t y = 0; y < r; ++y)
			for (std::size_t z = 0; z < r; ++z) {
				Vec vyz = b_a.gram.apply(lphi.eval({y, z}));
				Vec vxy = b_a.gram.apply(lphi.eval({x, y}));
				Vec row(q * r, Rat(0));
				for (std::size_t t = 0; t < q; ++t) {
					row[t * r + x] += vyz[t];
					row[t * r + z] -= vxy[t];
				}
				if (!vec_is_zero(row))
					rows.push_back(std::move(row));
			}
	return rows.empty() ? Mat(0, q * r) : Mat::from_rows(rows);
}

struct SolverInstance {
	ExtensionData data;
	BilinearForm b_a;
	bool cyclic_route;  // which shift solver is guaranteed a solution
};

/// Datum in coadjoint form carrying a metric after a shift, perturbed by a
/// coboundary the designated solver can undo. Built as lambda = lambda_phi
/// with mu solved from closure plus cyclicity, then shifted by a random L
/// from the kernel of the designated side condition.
inline SolverInstance metric_admitting_instance(std::size_t index, Rng& rng, long height = 3) {
	LieAlgebra h = base_algebra(index % 5);
	const std::size_t r = h.dim();
	const std::size_t q = (index / 5) % 3 + 1;
	const bool cyclic_route = index % 2 == 0;
	std::vector<Mat> rho = coad(h);
	BilinearForm b_a = random_nondegenerate_form(q, rng, height);

	const std::size_t t2 = Cochain(2, r, 1).tuples().size();
	auto admissible = [&](const std::vector<Mat>& phi) -> std::optional<ExtensionData> {
		ExtensionData probe(h, q, r, rho, phi, Cochain(2, r, q), Cochain(2, r, r));
		Cochain lphi = lambda_phi(probe, b_a);
		if (!d_a(h, lphi).is_zero())
			return std::nullopt;
		// mu from d_rho(mu) = -e_phi(lambda_phi) together with cyclicity
		const std::size_t unknowns = t2 * r;
		if (unknowns == 0)
			return ExtensionData(h, q, r, rho, phi, std::move(lphi), Cochain(2, r, r));
		Vec rhs = cochain_entries(e_phi(phi, lphi).scaled(Rat(-1)));
		std::vector<Vec> cols;
		std::size_t closure_rows = rhs.size(), cyc_rows = r * r * r;
		for (std::size_t u = 0; u < unknowns; ++u) {
			Cochain mu(2, r, r);
			mu.at_index(u / r)[u % r] = 1;
			Vec col = cochain_entries(cochain_d(h, rho, mu));
			for (std::size_t x = 0; x < r; ++x)
				for (std::size_t y = 0; y < r; ++y)
					for (std::size_t z = 0; z < r; ++z)
						col.push_back(mpq_class(mu.eval({x, y})[z] - mu.eval({y, z})[x]));
			cols.push_back(std::move(col));
		}
		Mat sys(closure_rows + cyc_rows, unknowns);
		for (std::size_t u = 0; u < unknowns; ++u)
			for (std::size_t e = 0; e < closure_rows + cyc_rows; ++e)
				sys.at(e, u) = cols[u][e];
		rhs.resize(closure_rows + cyc_rows, Rat(0));
		auto sol = solve_linear(sys, rhs);
		if (!sol)
			return std::nullopt;
		Vec muflat = sol->particular;
		for (std::size_t p = 0; p < sol->homogeneous.rows(); ++p) {
			Rat c = rng.rational(height);
			for (std::size_t k = 0; k < muflat.size(); ++k)
				muflat[k] += c * sol->homogeneous.at(p, k);
		}
		Cochain mu(2, r, r);
		for (std::size_t idx = 0; idx < t2; ++idx)
			for (std::size_t m = 0; m < r; ++m)
				mu.at_index(idx)[m] = muflat[idx * r + m];
		return ExtensionData(h, q, r, rho, phi, std::move(lphi), std::move(mu));
	};

	std::optional<ExtensionData> datum0;
	for (int tries = 0; !datum0; ++tries) {
		std::vector<Mat> phi = tries < 8
			? random_equivariant_phi(h, rho, q, r, rng, height, true)
			: std::vector<Mat>(r, Mat(r, q));
		datum0 = admissible(phi);
		if (tries >= 8 && !datum0)
			throw std::logic_error("metric_admitting_instance: zero phi must be admissible");
	}
	if (!check_extension_data(*datum0).all() || !check_metric_conditions(*datum0, b_a).all())
		throw std::logic_error("metric_admitting_instance: base datum is not admissible");

	Mat side = cyclic_route ? cyclic_kernel_rows(*datum0, b_a) : pairing_kernel_rows(*datum0);
	Vec lflat = random_kernel_element(side, rng, height);
	Mat l0(q, r);
	for (std::size_t t = 0; t < q; ++t)
		for (std::size_t j = 0; j < r; ++j)
			l0.at(t, j) = lflat[t * r + j];
	ExtensionData perturbed = shift_data(*datum0, l0, Mat(r, r));
	return {std::move(perturbed), std::move(b_a), cyclic_route};
}

/// Nonzero invariant symmetric form with random coefficients.
inline BilinearForm random_invariant_nonzero_form(const LieAlgebra& g, Rng& rng, long height) {
	InvariantFormSpace space = invariant_forms(g);
	if (space.dim() == 0)
		throw TheoremViolation("no nonzero invariant form on a nilpotent algebra");
	for (int tries = 0; tries < 8; ++tries) {
		BilinearForm f = space.combine(rng.vector(space.dim(), height));
		if (!f.gram.is_zero())
			return f;
	}
	return space.basis[0];
}

}  // namespace testsupport

#endif
