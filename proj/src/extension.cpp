#include "quadlie/extension.hpp"

#include <stdexcept>

namespace quadlie {

ExtensionData::ExtensionData(LieAlgebra h_, std::size_t dim_a_, std::size_t dim_i_,
	std::vector<Mat> rho_, std::vector<Mat> phi_, Cochain lambda_, Cochain mu_)
	: h(std::move(h_)), dim_a(dim_a_), dim_i(dim_i_),
	  rho(std::move(rho_)), phi(std::move(phi_)),
	  lambda(std::move(lambda_)), mu(std::move(mu_)) {
	const std::size_t r = h.dim();
	if (rho.size() != r || phi.size() != r)
		throw std::invalid_argument("extension datum: need one rho and one phi matrix per basis element");
	for (const Mat& m : rho)
		if (m.rows() != dim_i || m.cols() != dim_i)
			throw std::invalid_argument("extension datum: rho matrix has wrong shape");
	for (const Mat& m : phi)
		if (m.rows() != dim_i || m.cols() != dim_a)
			throw std::invalid_argument("extension datum: phi matrix has wrong shape");
	if (lambda.degree() != 2 || lambda.h_dim() != r || lambda.target_dim() != dim_a)
		throw std::invalid_argument("extension datum: lambda must be a 2-cochain into a");
	if (mu.degree() != 2 || mu.h_dim() != r || mu.target_dim() != dim_i)
		throw std::invalid_argument("extension datum: mu must be a 2-cochain into i");
}

ExtensionChecks check_extension_data(const ExtensionData& data) {
	ExtensionChecks out;
	const std::size_t r = data.h.dim();
	out.rho_representation = true;
	out.phi_equivariant = true;
	for (std::size_t i = 0; i < r && (out.rho_representation || out.phi_equivariant); ++i) {
		for (std::size_t j = i + 1; j < r; ++j) {
			const Vec& c = data.h.bracket_basis(i, j);
			Mat rho_br(data.dim_i, data.dim_i);
			Mat phi_br(data.dim_i, data.dim_a);
			for (std::size_t k = 0; k < r; ++k) {
				if (is_zero(c[k]))
					continue;
				rho_br = rho_br + data.rho[k].scaled(c[k]);
				phi_br = phi_br + data.phi[k].scaled(c[k]);
			}
			if (!(data.rho[i] * data.rho[j] - data.rho[j] * data.rho[i] == rho_br)) {
				out.rho_representation = false;
				out.detail = "rho is not a representation";
			}
			if (!(data.rho[i] * data.phi[j] - data.rho[j] * data.phi[i] == phi_br)) {
				out.phi_equivariant = false;
				if (out.detail.empty())
					out.detail = "phi fails the equivariance condition";
			}
		}
	}
	CochainPair d = pair_d(data, {data.lambda, data.mu});
	out.pair_closed = d.into_a.is_zero() && d.into_i.is_zero();
	if (!out.pair_closed && out.detail.empty())
		out.detail = "(lambda, mu) is not closed under the pair differential";
	return out;
}

CochainPair pair_d(const ExtensionData& data, const CochainPair& c) {
	if (c.into_a.target_dim() != data.dim_a || c.into_i.target_dim() != data.dim_i)
		throw std::invalid_argument("pair_d: component targets do not match the datum");
	Cochain da = d_a(data.h, c.into_a);
	Cochain di = cochain_d(data.h, data.rho, c.into_i);
	if (data.h.dim() > 0)
		di = di + e_phi(data.phi, c.into_a);
	return {da, di};
}

LieAlgebra build_extension(const ExtensionData& data) {
	ExtensionChecks checks = check_extension_data(data);
	if (!checks.all())
		throw StructureError("extension datum is not closed: " + checks.detail);
	const std::size_t r = data.h.dim(), q = data.dim_a, s = data.dim_i;
	const std::size_t n = r + q + s;
	std::vector<StructureTriple> triples;
	auto push = [&](std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
		if (!is_zero(v))
			triples.push_back({i, j, k, v});
	};
	for (std::size_t i = 0; i < r; ++i) {
		for (std::size_t j = i + 1; j < r; ++j) {
			const Vec& hb = data.h.bracket_basis(i, j);
			const Vec& lv = data.lambda.at({i, j});
			const Vec& mv = data.mu.at({i, j});
			for (std::size_t k = 0; k < r; ++k)
				push(i, j, k, hb[k]);
			for (std::size_t k = 0; k < q; ++k)
				push(i, j, r + k, lv[k]);
			for (std::size_t k = 0; k < s; ++k)
				push(i, j, r + q + k, mv[k]);
		}
		for (std::size_t t = 0; t < q; ++t)
			for (std::size_t m = 0; m < s; ++m)
				push(i, r + t, r + q + m, data.phi[i].at(m, t));
		for (std::size_t m = 0; m < s; ++m)
			for (std::size_t m2 = 0; m2 < s; ++m2)
				push(i, r + q + m, r + q + m2, data.rho[i].at(m2, m));
	}
	std::vector<std::string> names;
	for (std::size_t k = 0; k < r; ++k)
		names.push_back("x" + std::to_string(k + 1));
	for (std::size_t k = 0; k < q; ++k)
		names.push_back("u" + std::to_string(k + 1));
	for (std::size_t k = 0; k < s; ++k)
		names.push_back("al" + std::to_string(k + 1));
	return LieAlgebra(n, triples, names);
}

std::vector<Mat> coad(const LieAlgebra& g) {
	std::vector<Mat> out;
	out.reserve(g.dim());
	for (std::size_t j = 0; j < g.dim(); ++j)
		out.push_back(g.ad_basis(j).transpose().scaled(Rat(-1)));
	return out;
}

Cochain cochain_from_matrix(const Mat& m, std::size_t h_dim) {
	if (m.cols() != h_dim)
		throw std::invalid_argument("cochain_from_matrix: column count must match the algebra dimension");
	Cochain out(1, h_dim, m.rows());
	for (std::size_t j = 0; j < h_dim; ++j)
		out.set({j}, m.col(j));
	return out;
}

ExtensionData shift_data(const ExtensionData& data, const Mat& l_map, const Mat& m_map) {
	const std::size_t r = data.h.dim();
	if (l_map.rows() != data.dim_a || l_map.cols() != r)
		throw std::invalid_argument("shift_data: L must map h into a");
	if (m_map.rows() != data.dim_i || m_map.cols() != r)
		throw std::invalid_argument("shift_data: M must map h into i");
	CochainPair diff = pair_d(data, {cochain_from_matrix(l_map, r), cochain_from_matrix(m_map, r)});
	return ExtensionData(data.h, data.dim_a, data.dim_i, data.rho, data.phi,
		data.lambda + diff.into_a, data.mu + diff.into_i);
}

Cochain lambda_phi(const ExtensionData& data, const BilinearForm& b_a) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	if (data.dim_i != r)
		throw std::domain_error("lambda_phi: i-coordinates must pair with h (dim_i == dim h)");
	if (b_a.dim() != q)
		throw std::invalid_argument("lambda_phi: form dimension must match a");
	if (b_a.is_degenerate())
		throw std::domain_error("lambda_phi: the form on a must be non-degenerate");
	std::optional<Mat> ainv = inverse(b_a.gram);
	Cochain out(2, r, q);
	for (const auto& tup : out.tuples()) {
		Vec rhs(q, Rat(0));
		for (std::size_t t = 0; t < q; ++t)
			rhs[t] = -data.phi[tup[0]].at(tup[1], t);
		out.set(tup, ainv->apply(rhs));
	}
	return out;
}

MetricConditionReport check_metric_conditions(const ExtensionData& data, const BilinearForm& b_a) {
	MetricConditionReport out;
	const std::size_t r = data.h.dim(), q = data.dim_a;
	if (data.dim_i != r || b_a.dim() != q)
		return out;
	std::vector<Mat> dual = coad(data.h);
	out.dual_action = data.rho == dual;
	out.pairing_matches = true;
	for (std::size_t x = 0; x < r && out.pairing_matches; ++x) {
		for (std::size_t y = 0; y < r && out.pairing_matches; ++y) {
			Vec lam = data.lambda.eval({x, y});
			for (std::size_t t = 0; t < q; ++t) {
				Rat lhs = data.phi[x].at(y, t);
				Rat rhs = 0;
				for (std::size_t s = 0; s < q; ++s)
					rhs += lam[s] * b_a.gram.at(s, t);
				if (mpq_class(lhs + rhs) != 0) {
					out.pairing_matches = false;
					break;
				}
			}
		}
	}
	out.mu_cyclic = true;
	for (std::size_t x = 0; x < r && out.mu_cyclic; ++x)
		for (std::size_t y = 0; y < r && out.mu_cyclic; ++y)
			for (std::size_t z = 0; z < r; ++z) {
				Vec m1 = data.mu.eval({x, y});
				Vec m2 = data.mu.eval({y, z});
				if (m1[z] != m2[x]) {
					out.mu_cyclic = false;
					break;
				}
			}
	return out;
}

BilinearForm assemble_metric(const ExtensionData& data, const BilinearForm& b_a) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	if (data.dim_i != r)
		throw std::domain_error("assemble_metric: needs a datum in coadjoint form (dim_i == dim h)");
	if (b_a.dim() != q)
		throw std::invalid_argument("assemble_metric: form dimension must match a");
	Mat gram(r + q + r, r + q + r);
	for (std::size_t j = 0; j < r; ++j) {
		gram.at(j, r + q + j) = 1;
		gram.at(r + q + j, j) = 1;
	}
	for (std::size_t s = 0; s < q; ++s)
		for (std::size_t t = 0; t < q; ++t)
			gram.at(r + s, r + t) = b_a.gram.at(s, t);
	return BilinearForm(gram);
}

namespace {

// Rows expressing lambda_phi = lambda + d_a(L) over the entries of L,
// flattened as L(s, j) -> s * r + j.
void append_shift_rows(const ExtensionData& data, const Cochain& lphi,
	std::vector<Vec>& rows, Vec& rhs) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	for (const auto& tup : data.lambda.tuples()) {
		// d_a(L)(x_i, x_j) = -L([x_i, x_j])
		const Vec& c = data.h.bracket_basis(tup[0], tup[1]);
		Vec target = vec_sub(lphi.at(tup), data.lambda.at(tup));
		for (std::size_t s = 0; s < q; ++s) {
			Vec row(q * r, Rat(0));
			for (std::size_t k = 0; k < r; ++k)
				if (!is_zero(c[k]))
					row[s * r + k] = -c[k];
			rows.push_back(std::move(row));
			rhs.push_back(target[s]);
		}
	}
}

std::optional<AffineSolution> solve_l_system(const std::vector<Vec>& rows, const Vec& rhs,
	std::size_t q, std::size_t r) {
	Mat system = rows.empty() ? Mat(0, q * r) : Mat::from_rows(rows);
	return solve_linear(system, rhs);
}

std::optional<Mat> unflatten_l(const std::optional<AffineSolution>& sol,
	std::size_t q, std::size_t r) {
	if (!sol)
		return std::nullopt;
	Mat l_map(q, r);
	for (std::size_t s = 0; s < q; ++s)
		for (std::size_t j = 0; j < r; ++j)
			l_map.at(s, j) = sol->particular[s * r + j];
	return l_map;
}

}  // namespace

std::optional<AffineSolution> shift_system_fixing_mu(const ExtensionData& data, const BilinearForm& b_a) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	Cochain lphi = lambda_phi(data, b_a);
	std::vector<Vec> rows;
	Vec rhs;
	append_shift_rows(data, lphi, rows, rhs);
	// e_phi(L)(x_i, x_j) = phi(x_i) L(x_j) - phi(x_j) L(x_i) = 0
	for (const auto& tup : data.lambda.tuples()) {
		for (std::size_t m = 0; m < data.dim_i; ++m) {
			Vec row(q * r, Rat(0));
			for (std::size_t s = 0; s < q; ++s) {
				row[s * r + tup[1]] += data.phi[tup[0]].at(m, s);
				row[s * r + tup[0]] -= data.phi[tup[1]].at(m, s);
			}
			rows.push_back(std::move(row));
			rhs.push_back(Rat(0));
		}
	}
	return solve_l_system(rows, rhs, q, r);
}

std::optional<AffineSolution> shift_system_cyclic(const ExtensionData& data, const BilinearForm& b_a) {
	const std::size_t r = data.h.dim(), q = data.dim_a;
	Cochain lphi = lambda_phi(data, b_a);
	for (std::size_t x = 0; x < r; ++x)
		for (std::size_t y = 0; y < r; ++y)
			for (std::size_t z = 0; z < r; ++z)
				if (data.mu.eval({x, y})[z] != data.mu.eval({y, z})[x])
					throw std::domain_error("shift_system_cyclic: mu is not cyclic");
	std::vector<Vec> rows;
	Vec rhs;
	append_shift_rows(data, lphi, rows, rhs);
	// b_a(lambda_phi(y,z), L(x)) = b_a(lambda_phi(x,y), L(z)) for all triples
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
				if (vec_is_zero(row))
					continue;
				rows.push_back(std::move(row));
				rhs.push_back(Rat(0));
			}
	return solve_l_system(rows, rhs, q, r);
}

std::optional<Mat> solve_shift_fixing_mu(const ExtensionData& data, const BilinearForm& b_a) {
	return unflatten_l(shift_system_fixing_mu(data, b_a), data.dim_a, data.h.dim());
}

std::optional<Mat> solve_shift_cyclic(const ExtensionData& data, const BilinearForm& b_a) {
	return unflatten_l(shift_system_cyclic(data, b_a), data.dim_a, data.h.dim());
}

bool shift_set_contains(const AffineSolution& set, const Mat& l_map) {
	Vec flat(l_map.rows() * l_map.cols(), Rat(0));
	for (std::size_t s = 0; s < l_map.rows(); ++s)
		for (std::size_t j = 0; j < l_map.cols(); ++j)
			flat[s * l_map.cols() + j] = l_map.at(s, j);
	if (flat.size() != set.particular.size())
		return false;
	Vec diff = vec_sub(flat, set.particular);
	if (set.homogeneous.rows() == 0)
		return vec_is_zero(diff);
	return Subspace::span(flat.size(), set.homogeneous).contains(diff);
}

Mat shift_isomorphism(const ExtensionData& data, const Mat& l_map, const Mat& m_map) {
	const std::size_t r = data.h.dim(), q = data.dim_a, s = data.dim_i;
	Mat psi = Mat::identity(r + q + s);
	for (std::size_t j = 0; j < r; ++j) {
		for (std::size_t t = 0; t < q; ++t)
			psi.at(r + t, j) = -l_map.at(t, j);
		for (std::size_t m = 0; m < s; ++m)
			psi.at(r + q + m, j) = -m_map.at(m, j);
	}
	return psi;
}

IsoReport cohomologous_iso(const ExtensionData& from, const ExtensionData& to,
                           const Mat& l_map, const Mat& m_map) {
	if (!same_structure(from.h, to.h) || from.dim_a != to.dim_a ||
	    from.dim_i != to.dim_i || from.rho != to.rho || from.phi != to.phi)
		throw std::invalid_argument("cohomologous_iso: data are not over the same base datum");
	const std::size_t r = from.h.dim();
	CochainPair shift{cochain_from_matrix(l_map, r), cochain_from_matrix(m_map, r)};
	CochainPair boundary = pair_d(from, shift);
	CochainPair residual{to.lambda - (from.lambda + boundary.into_a),
	                     to.mu - (from.mu + boundary.into_i)};
	bool shifted = residual.into_a.is_zero() && residual.into_i.is_zero();
	Mat psi = shift_isomorphism(from, l_map, m_map);
	LieAlgebra g_from = build_extension(from);
	LieAlgebra g_to = build_extension(to);
	bool hom = true;
	for (std::size_t i = 0; i < g_from.dim() && hom; ++i)
		for (std::size_t j = i + 1; j < g_from.dim() && hom; ++j)
			if (psi.apply(g_from.bracket_basis(i, j)) != g_to.bracket(psi.col(i), psi.col(j)))
				hom = false;
	return IsoReport{shifted, hom, std::move(psi), std::move(residual)};
}

namespace {

std::optional<ShiftMetricResult> finish_shift(const ExtensionData& data,
	const BilinearForm& b_a, std::optional<Mat> l_map) {
	if (!l_map)
		return std::nullopt;
	Mat m_zero(data.dim_i, data.h.dim());
	ExtensionData shifted = shift_data(data, *l_map, m_zero);
	LieAlgebra total = build_extension(shifted);
	BilinearForm metric = assemble_metric(shifted, b_a);
	if (!is_metric(total, metric))
		throw std::logic_error("shift solver produced a non-invariant or degenerate metric");
	Mat psi = shift_isomorphism(data, *l_map, m_zero);
	BilinearForm back(psi.transpose() * metric.gram * psi);
	return ShiftMetricResult{*l_map, std::move(shifted), std::move(total),
		std::move(metric), std::move(psi), std::move(back)};
}

}  // namespace

std::optional<ShiftMetricResult> metric_via_fixing_mu(const ExtensionData& data, const BilinearForm& b_a) {
	return finish_shift(data, b_a, solve_shift_fixing_mu(data, b_a));
}

std::optional<ShiftMetricResult> metric_via_cyclic(const ExtensionData& data, const BilinearForm& b_a) {
	return finish_shift(data, b_a, solve_shift_cyclic(data, b_a));
}

Extraction extract_extension_data(const LieAlgebra& g, const BilinearForm& b) {
	WittDecomposition w = witt_decomposition(g, b);
	const std::size_t r = w.h_basis.rows(), q = w.a_basis.rows(), n = g.dim();
	std::optional<Mat> pinv = inverse(w.phi);
	if (!pinv)
		throw std::logic_error("extraction: dual pairing between i and h is degenerate");
	// adapted basis: h lifts, a, then the i-basis normalized against the pairing
	Mat cols(n, n);
	for (std::size_t j = 0; j < r; ++j)
		for (std::size_t k = 0; k < n; ++k)
			cols.at(k, j) = w.h_basis.at(j, k);
	for (std::size_t s = 0; s < q; ++s)
		for (std::size_t k = 0; k < n; ++k)
			cols.at(k, r + s) = w.a_basis.at(s, k);
	for (std::size_t m = 0; m < r; ++m)
		for (std::size_t k = 0; k < n; ++k) {
			Rat acc = 0;
			for (std::size_t t = 0; t < r; ++t)
				acc += pinv->at(t, m) * w.i_basis.at(t, k);
			cols.at(k, r + q + m) = acc;
		}
	std::optional<Mat> cols_inv = inverse(cols);
	if (!cols_inv)
		throw std::logic_error("extraction: adapted basis is singular");
	auto coords_of = [&](const Vec& v) { return cols_inv->apply(v); };
	auto basis_vec = [&](std::size_t j) { return cols.col(j); };

	// brackets of h-lifts split into quotient bracket, lambda and mu parts
	std::vector<StructureTriple> h_triples;
	Cochain lambda(2, r, q), mu(2, r, r);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = i + 1; j < r; ++j) {
			Vec c = coords_of(g.bracket(basis_vec(i), basis_vec(j)));
			for (std::size_t k = 0; k < r; ++k)
				if (!is_zero(c[k]))
					h_triples.push_back({i, j, k, c[k]});
			lambda.set({i, j}, Vec(c.begin() + r, c.begin() + r + q));
			mu.set({i, j}, Vec(c.begin() + r + q, c.end()));
		}
	LieAlgebra h_alg(r, h_triples);

	std::vector<Mat> phi(r, Mat(r, q)), rho(r, Mat(r, r));
	for (std::size_t j = 0; j < r; ++j) {
		for (std::size_t s = 0; s < q; ++s) {
			Vec c = coords_of(g.bracket(basis_vec(j), basis_vec(r + s)));
			for (std::size_t k = 0; k < r + q; ++k)
				if (!is_zero(c[k]))
					throw std::logic_error("extraction: bracket of h and a leaves i");
			for (std::size_t m = 0; m < r; ++m)
				phi[j].at(m, s) = c[r + q + m];
		}
		for (std::size_t m = 0; m < r; ++m) {
			Vec c = coords_of(g.bracket(basis_vec(j), basis_vec(r + q + m)));
			for (std::size_t k = 0; k < r + q; ++k)
				if (!is_zero(c[k]))
					throw std::logic_error("extraction: bracket of h and i leaves i");
			for (std::size_t m2 = 0; m2 < r; ++m2)
				rho[j].at(m2, m) = c[r + q + m2];
		}
	}
	// in the normalized basis the action must be coadjoint
	std::vector<Mat> dual = coad(h_alg);
	if (!(rho == dual))
		throw std::logic_error("extraction: induced action on i is not the coadjoint action");

	ExtensionData data(h_alg, q, r, std::move(dual), std::move(phi), std::move(lambda), std::move(mu));
	ExtensionChecks checks = check_extension_data(data);
	if (!checks.all())
		throw std::logic_error("extraction: datum fails closure: " + checks.detail);

	// gram of b in the adapted basis must match the assembled neutral metric
	BilinearForm b_a(w.a_gram);
	Mat pulled = cols.transpose() * b.gram * cols;
	if (!(pulled == assemble_metric(data, b_a).gram))
		throw std::logic_error("extraction: metric does not take the neutral block shape");

	// rebuilt algebra must reproduce g in the adapted basis
	LieAlgebra rebuilt = build_extension(data);
	for (std::size_t p1 = 0; p1 < n; ++p1)
		for (std::size_t p2 = p1 + 1; p2 < n; ++p2) {
			Vec expect = coords_of(g.bracket(basis_vec(p1), basis_vec(p2)));
			if (!(expect == rebuilt.bracket_basis(p1, p2)))
				throw std::logic_error("extraction: rebuilt algebra disagrees with the original");
		}
	return Extraction{std::move(data), std::move(w), std::move(cols), std::move(b_a)};
}

}  // namespace quadlie
