#include "quadlie/current.hpp"

#include <stdexcept>

namespace quadlie {

namespace {

std::vector<Vec> build_product_table(std::size_t dim,
	const std::vector<ProductTriple>& triples) {
	std::vector<Vec> table(dim * dim, Vec(dim, Rat(0)));
	for (const ProductTriple& t : triples) {
		if (t.i >= dim || t.j >= dim || t.k >= dim)
			throw StructureError("product triple index out of range");
		if (t.i > t.j)
			throw StructureError("product triples must have i <= j");
		table[t.i * dim + t.j][t.k] += t.c;
		if (t.i != t.j)
			table[t.j * dim + t.i][t.k] += t.c;
	}
	return table;
}

Vec table_product(const std::vector<Vec>& table, std::size_t dim,
	const Vec& x, const Vec& y) {
	Vec out(dim, Rat(0));
	for (std::size_t i = 0; i < dim; ++i) {
		if (is_zero(x[i]))
			continue;
		for (std::size_t j = 0; j < dim; ++j) {
			if (is_zero(y[j]))
				continue;
			Rat c = x[i] * y[j];
			out = vec_add(out, vec_scaled(table[i * dim + j], c));
		}
	}
	return out;
}

}  // namespace

std::optional<AssocViolation> assoc_violation(std::size_t dim,
	const std::vector<ProductTriple>& triples, const Vec& unit) {
	if (unit.size() != dim)
		throw std::invalid_argument("unit vector has the wrong dimension");
	std::vector<Vec> table = build_product_table(dim, triples);
	for (std::size_t k = 0; k < dim; ++k) {
		Vec e(dim, Rat(0));
		e[k] = 1;
		Vec res = vec_sub(table_product(table, dim, unit, e), e);
		if (!vec_is_zero(res))
			return AssocViolation{"unit", {k, k, k}, res};
	}
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = 0; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k) {
				Vec ek(dim, Rat(0));
				ek[k] = 1;
				Vec ei(dim, Rat(0));
				ei[i] = 1;
				Vec left = table_product(table, dim, table[i * dim + j], ek);
				Vec right = table_product(table, dim, ei, table[j * dim + k]);
				Vec res = vec_sub(left, right);
				if (!vec_is_zero(res))
					return AssocViolation{"associativity", {i, j, k}, res};
			}
	return std::nullopt;
}

AssocAlgebra::AssocAlgebra(std::size_t dim, std::vector<ProductTriple> triples, Vec unit,
	std::vector<std::string> basis_names)
	: dim_(dim), triples_(std::move(triples)), unit_(std::move(unit)),
	  names_(std::move(basis_names)) {
	if (names_.empty())
		for (std::size_t k = 0; k < dim_; ++k)
			names_.push_back("s" + std::to_string(k + 1));
	if (names_.size() != dim_)
		throw std::invalid_argument("basis name count must match the dimension");
	// gmp comparisons assume canonical form; incoming constants may not be
	for (auto& t : triples_) t.c.canonicalize();
	for (auto& c : unit_) c.canonicalize();
	if (auto bad = assoc_violation(dim_, triples_, unit_)) {
		std::string msg = bad->kind + " fails at basis triple ("
			+ std::to_string(bad->triple[0]) + ", " + std::to_string(bad->triple[1])
			+ ", " + std::to_string(bad->triple[2]) + ")";
		throw StructureError(msg);
	}
	table_ = build_product_table(dim_, triples_);
}

const Vec& AssocAlgebra::product_basis(std::size_t i, std::size_t j) const {
	return table_[i * dim_ + j];
}

Vec AssocAlgebra::product(const Vec& x, const Vec& y) const {
	if (x.size() != dim_ || y.size() != dim_)
		throw std::invalid_argument("product arguments have the wrong dimension");
	return table_product(table_, dim_, x, y);
}

LieAlgebra current_algebra(const LieAlgebra& g, const AssocAlgebra& s) {
	const std::size_t n = g.dim(), m = s.dim();
	std::vector<StructureTriple> triples;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			const Vec& br = g.bracket_basis(i, j);
			if (vec_is_zero(br))
				continue;
			for (std::size_t a = 0; a < m; ++a)
				for (std::size_t b = 0; b < m; ++b) {
					const Vec& prod = s.product_basis(a, b);
					for (std::size_t k = 0; k < n; ++k) {
						if (is_zero(br[k]))
							continue;
						for (std::size_t c = 0; c < m; ++c) {
							Rat v = br[k] * prod[c];
							if (!is_zero(v))
								triples.push_back({i * m + a, j * m + b, k * m + c, v});
						}
					}
				}
		}
	std::vector<std::string> names;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			names.push_back(g.basis_names()[i] + "(x)" + s.basis_names()[a]);
	return LieAlgebra(n * m, triples, names);
}

BilinearForm tensor_form(const BilinearForm& b, const BilinearForm& theta, std::size_t s_dim) {
	if (theta.dim() != s_dim)
		throw std::invalid_argument("tensor_form: factor dimension mismatch");
	const std::size_t n = b.dim(), m = s_dim;
	Mat gram(n * m, n * m);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t a = 0; a < m; ++a)
				for (std::size_t bb = 0; bb < m; ++bb)
					gram.at(i * m + a, j * m + bb) = b.gram.at(i, j) * theta.gram.at(a, bb);
	return BilinearForm(gram);
}

bool is_associative_invariant(const AssocAlgebra& s, const BilinearForm& theta) {
	if (theta.dim() != s.dim())
		return false;
	const std::size_t m = s.dim();
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t c = 0; c < m; ++c) {
				Vec ec(m, Rat(0));
				ec[c] = 1;
				Vec ea(m, Rat(0));
				ea[a] = 1;
				Rat lhs = theta.eval(s.product_basis(a, b), ec);
				Rat rhs = theta.eval(ea, s.product_basis(b, c));
				if (lhs != rhs)
					return false;
			}
	return true;
}

bool is_frobenius(const AssocAlgebra& s, const BilinearForm& theta) {
	return is_associative_invariant(s, theta) && !theta.is_degenerate();
}

CurrentAnalysis gamma_operators(const LieAlgebra& g, const BilinearForm& b,
	const LieAlgebra& gs, const BilinearForm& bbar) {
	const std::size_t n = g.dim();
	if (b.dim() != n)
		throw std::invalid_argument("gamma_operators: form dimension must match g");
	if (n == 0 || gs.dim() % n != 0)
		throw std::invalid_argument("gamma_operators: dimensions are not compatible with a current algebra");
	const std::size_t m = gs.dim() / n;
	if (bbar.dim() != gs.dim())
		throw std::invalid_argument("gamma_operators: metric dimension must match the current algebra");
	if (b.is_degenerate())
		throw std::domain_error("gamma_operators: the form on g must be non-degenerate");
	if (!is_metric(gs, bbar))
		throw std::domain_error("gamma_operators: the form on the current algebra must be an invariant metric");

	Extraction ex = extract_extension_data(g, b);
	const std::size_t r = ex.data.h.dim();
	std::optional<Mat> ginv = inverse(b.gram);
	std::optional<Mat> qinv = inverse(ex.basis_change);

	std::vector<Mat> gammas, epsilons, thetas, varthetas;
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t bb = 0; bb < m; ++bb) {
			Mat slice(n, n);
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					slice.at(i, j) = bbar.gram.at(i * m + a, j * m + bb);
			Mat gamma = *ginv * slice.transpose();
			if (!in_centroid(g, gamma))
				throw std::logic_error("gamma_operators: operator escapes the centroid");
			Mat blocks = *qinv * gamma * ex.basis_change;
			for (std::size_t i = 0; i < r; ++i)
				for (std::size_t j = r; j < n; ++j)
					if (!is_zero(blocks.at(i, j)))
						throw std::logic_error("gamma_operators: operator moves the canonical ideal out of itself");
			Mat eps(r, r), th(n - r, r), vth(n - r, n - r);
			for (std::size_t i = 0; i < r; ++i)
				for (std::size_t j = 0; j < r; ++j)
					eps.at(i, j) = blocks.at(i, j);
			for (std::size_t i = r; i < n; ++i) {
				for (std::size_t j = 0; j < r; ++j)
					th.at(i - r, j) = blocks.at(i, j);
				for (std::size_t j = r; j < n; ++j)
					vth.at(i - r, j - r) = blocks.at(i, j);
			}
			gammas.push_back(std::move(gamma));
			epsilons.push_back(std::move(eps));
			thetas.push_back(std::move(th));
			varthetas.push_back(std::move(vth));
		}
	return CurrentAnalysis{m, std::move(gammas), std::move(epsilons),
		std::move(thetas), std::move(varthetas), std::move(ex)};
}

EpsilonConditionReport check_epsilon_conditions(const CurrentAnalysis& analysis,
	const AssocAlgebra& s) {
	EpsilonConditionReport out;
	const std::size_t m = analysis.s_dim;
	if (s.dim() != m)
		throw std::invalid_argument("check_epsilon_conditions: algebra dimension mismatch");
	if (analysis.epsilon.empty())
		return out;
	const std::size_t r = analysis.epsilon[0].rows();
	const Vec& unit = s.unit();

	// bilinear extension evaluated at (product of two basis elements, unit)
	out.factors_through_product = true;
	for (std::size_t a = 0; a < m && out.factors_through_product; ++a)
		for (std::size_t b = 0; b < m; ++b) {
			const Vec& prod = s.product_basis(a, b);
			Mat expect(r, r);
			for (std::size_t c = 0; c < m; ++c)
				for (std::size_t e = 0; e < m; ++e) {
					Rat coeff = prod[c] * unit[e];
					if (!is_zero(coeff))
						expect = expect + analysis.epsilon_at(c, e).scaled(coeff);
				}
			if (!(expect == analysis.epsilon_at(a, b))) {
				out.factors_through_product = false;
				break;
			}
		}

	// stack epsilon(s_a, s_b) entries as rows of a map with domain S
	std::vector<Vec> rows;
	for (std::size_t b = 0; b < m; ++b)
		for (std::size_t i = 0; i < r; ++i)
			for (std::size_t j = 0; j < r; ++j) {
				Vec row(m, Rat(0));
				for (std::size_t a = 0; a < m; ++a)
					row[a] = analysis.epsilon_at(a, b).at(i, j);
				rows.push_back(std::move(row));
			}
	Mat stacked = rows.empty() ? Mat(0, m) : Mat::from_rows(rows);
	out.kernel_trivial = rref(stacked).rank == m;

	out.epsilon_in_centroid = true;
	const LieAlgebra& h = analysis.decomposition.data.h;
	for (const Mat& eps : analysis.epsilon)
		if (!in_centroid(h, eps)) {
			out.epsilon_in_centroid = false;
			break;
		}
	return out;
}

}  // namespace quadlie
