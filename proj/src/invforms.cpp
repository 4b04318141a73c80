#include "quadlie/invforms.hpp"

#include <limits>
#include <stdexcept>

namespace quadlie {

BilinearForm::BilinearForm(Mat g) : gram(std::move(g)) {
	if (gram.rows() != gram.cols()) throw std::invalid_argument("BilinearForm: gram not square");
	// gmp comparisons assume canonical form; incoming entries may not be
	for (std::size_t i = 0; i < gram.rows(); ++i)
		for (std::size_t j = 0; j < gram.cols(); ++j)
			gram.at(i, j).canonicalize();
	if (gram != gram.transpose()) throw std::invalid_argument("BilinearForm: gram not symmetric");
}

Rat BilinearForm::eval(const Vec& x, const Vec& y) const { return vec_dot(x, gram.apply(y)); }

Subspace BilinearForm::radical() const { return kernel(gram); }

bool BilinearForm::is_degenerate() const { return is_zero(det(gram)); }

BilinearForm InvariantFormSpace::combine(const Vec& coefficients) const {
	if (coefficients.size() != basis.size())
		throw std::invalid_argument("InvariantFormSpace::combine: size mismatch");
	Mat g(algebra_dim, algebra_dim);
	for (std::size_t i = 0; i < basis.size(); ++i)
		if (!is_zero(coefficients[i])) g = g + basis[i].gram.scaled(coefficients[i]);
	return BilinearForm(g);
}

std::optional<Vec> InvariantFormSpace::coordinates(const BilinearForm& f) const {
	std::size_t n = algebra_dim;
	if (f.dim() != n) throw std::invalid_argument("InvariantFormSpace: dimension mismatch");
	Mat sys(n * n, basis.size());
	for (std::size_t b = 0; b < basis.size(); ++b)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) sys.at(i * n + j, b) = basis[b].gram.at(i, j);
	Vec rhs(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = f.gram.at(i, j);
	auto sol = solve_linear(sys, rhs);
	if (!sol) return std::nullopt;
	return sol->particular;
}

InvariantFormSpace invariant_forms(const LieAlgebra& g) {
	std::size_t n = g.dim();
	// Unknowns: gram entries for index pairs a <= b.
	auto idx = [n](std::size_t a, std::size_t b) {
		if (a > b) std::swap(a, b);
		return a * n - a * (a + 1) / 2 + b;
	};
	std::size_t unknowns = n * (n + 1) / 2;
	std::vector<Vec> rows;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Vec row(unknowns);
				const Vec& bij = g.bracket_basis(i, j);
				for (std::size_t m = 0; m < n; ++m)
					if (!is_zero(bij[m])) row[idx(m, k)] += bij[m];
				const Vec& bik = g.bracket_basis(i, k);
				for (std::size_t m = 0; m < n; ++m)
					if (!is_zero(bik[m])) row[idx(j, m)] += bik[m];
				if (!vec_is_zero(row)) rows.push_back(std::move(row));
			}

	Subspace sol = rows.empty() ? Subspace::full(unknowns) : kernel(Mat::from_rows(rows));

	InvariantFormSpace space;
	space.algebra_dim = n;
	for (std::size_t r = 0; r < sol.dim(); ++r) {
		Vec flat = sol.basis().row(r);
		Mat gram(n, n);
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = a; b < n; ++b) {
				gram.at(a, b) = flat[idx(a, b)];
				gram.at(b, a) = flat[idx(a, b)];
			}
		space.basis.push_back(BilinearForm(std::move(gram)));
	}
	return space;
}

bool is_invariant(const LieAlgebra& g, const BilinearForm& f) {
	std::size_t n = g.dim();
	if (f.dim() != n) throw std::invalid_argument("is_invariant: dimension mismatch");
	Vec ej(n), ek(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				std::fill(ej.begin(), ej.end(), Rat(0));
				std::fill(ek.begin(), ek.end(), Rat(0));
				ej[j] = 1;
				ek[k] = 1;
				Rat s = f.eval(g.bracket_basis(i, j), ek) + f.eval(ej, g.bracket_basis(i, k));
				if (!is_zero(s)) return false;
			}
	return true;
}

bool is_metric(const LieAlgebra& g, const BilinearForm& f) {
	return is_invariant(g, f) && !f.is_degenerate();
}

MetricSearchResult find_invariant_metric(const LieAlgebra& g, const MetricSearchConfig& cfg) {
	InvariantFormSpace space = invariant_forms(g);
	std::size_t k = space.dim();
	std::size_t n = g.dim();

	MetricSearchResult res;
	res.form_space_dim = k;

	auto try_coeffs = [&](const Vec& c, MetricSearchStage stage) {
		BilinearForm f = space.combine(c);
		if (is_zero(det(f.gram))) return false;
		res.outcome = MetricSearchOutcome::found;
		res.metric = std::move(f);
		res.stage = stage;
		res.coefficients = c;
		return true;
	};

	if (k == 0) {
		// Only the zero form is invariant; no metric can exist unless n = 0.
		res.outcome = MetricSearchOutcome::certified_none;
		res.grid_points_needed = 0;
		return res;
	}

	// Stage 1: basis forms, then deterministic 0/±1 coefficient vectors.
	for (std::size_t i = 0; i < k; ++i) {
		Vec c(k);
		c[i] = 1;
		if (try_coeffs(c, MetricSearchStage::basis_form)) return res;
	}
	std::size_t tried = 0;
	unsigned long long enumerated = 0;
	bool exhausted_signs = false;
	for (unsigned long long code = 1; tried < cfg.sign_cap; ++code) {
		// Base-3 digits of code, digit 0 -> 0, 1 -> +1, 2 -> -1.
		Vec c(k);
		unsigned long long rest = code;
		bool overflow = false;
		for (std::size_t d = 0; d < k; ++d) {
			unsigned digit = rest % 3;
			rest /= 3;
			c[d] = digit == 0 ? Rat(0) : (digit == 1 ? Rat(1) : Rat(-1));
		}
		if (rest > 0) overflow = true;
		if (overflow) {
			exhausted_signs = true;
			break;
		}
		++tried;
		++enumerated;
		if (try_coeffs(c, MetricSearchStage::sign_vector)) return res;
	}
	(void)exhausted_signs;
	(void)enumerated;

	// Stage 2: seeded random rational coefficients of bounded height.
	Rng rng(cfg.seed);
	for (std::size_t a = 0; a < cfg.random_attempts; ++a) {
		if (try_coeffs(rng.vector(k, cfg.height), MetricSearchStage::random_vector)) return res;
	}

	// Stage 3: exhaustive grid {0..n}^k. det is a polynomial of degree <= n in
	// each coefficient, so vanishing at n+1 values per variable on the grid
	// certifies that it vanishes identically.
	unsigned long long total = 1;
	bool over = false;  // true once (n+1)^k no longer fits; needed reported as 0 then
	for (std::size_t d = 0; d < k; ++d) {
		if (total > std::numeric_limits<unsigned long long>::max() / (n + 1)) {
			over = true;
			break;
		}
		total *= (unsigned long long)(n + 1);
	}
	res.grid_points_needed = over ? 0 : total;
	if (over || total > cfg.grid_budget) {
		res.outcome = MetricSearchOutcome::inconclusive;
		return res;
	}
	std::vector<std::size_t> odo(k, 0);
	for (unsigned long long p = 0; p < total; ++p) {
		Vec c(k);
		for (std::size_t d = 0; d < k; ++d) c[d] = Rat((long)odo[d]);
		++res.grid_points_checked;
		if (try_coeffs(c, MetricSearchStage::grid_point)) return res;
		for (std::size_t d = 0; d < k; ++d) {
			if (++odo[d] <= n) break;
			odo[d] = 0;
		}
	}
	res.outcome = MetricSearchOutcome::certified_none;
	return res;
}

Subspace orthogonal_complement(const BilinearForm& f, const Subspace& sub) {
	if (f.is_degenerate()) throw std::domain_error("orthogonal_complement: degenerate form");
	if (f.dim() != sub.ambient_dim())
		throw std::invalid_argument("orthogonal_complement: dimension mismatch");
	if (sub.dim() == 0) return Subspace::full(f.dim());
	return kernel(sub.basis() * f.gram);
}

Subspace WittDecomposition::h_space() const { return Subspace::span(h_basis.cols(), h_basis); }
Subspace WittDecomposition::a_space() const {
	return a_basis.rows() == 0 ? Subspace::zero(h_basis.cols())
	                           : Subspace::span(a_basis.cols(), a_basis);
}
Subspace WittDecomposition::i_space() const { return Subspace::span(i_basis.cols(), i_basis); }

WittDecomposition witt_decomposition(const LieAlgebra& g, const BilinearForm& b) {
	std::size_t n = g.dim();
	if (g.is_abelian()) throw std::domain_error("witt_decomposition: algebra is abelian");
	if (!is_metric(g, b)) throw std::domain_error("witt_decomposition: form is not an invariant metric");

	CanonicalIdeals ideals = canonical_ideals(g);
	const Subspace& ideal_i = ideals.i;
	const Subspace& ideal_j = ideals.j;
	if (!(orthogonal_complement(b, ideal_i) == ideal_j))
		throw std::logic_error("witt_decomposition: i(g) orthogonal is not J(g)");

	WittDecomposition w;
	w.i_basis = ideal_i.basis();
	w.a_basis = complement_within(ideal_i, ideal_j);
	std::size_t q = w.a_basis.rows();
	std::size_t r = ideal_i.dim();

	w.a_gram = Mat(q, q);
	for (std::size_t s = 0; s < q; ++s)
		for (std::size_t t = 0; t < q; ++t) w.a_gram.at(s, t) = b.eval(w.a_basis.row(s), w.a_basis.row(t));
	std::optional<Mat> a_gram_inv;
	if (q > 0) {
		a_gram_inv = inverse(w.a_gram);
		if (!a_gram_inv) throw std::logic_error("witt_decomposition: B restricted to a is degenerate");
	}

	// Raw complement of J, then two corrections that stay within v + J(g):
	// subtract the a-component to get h orthogonal to a, then subtract
	// (1/2) of the B-self-pairings through i to make h isotropic.
	Mat h0 = subspace_complement(ideal_j).basis();
	if (h0.rows() != r) throw std::logic_error("witt_decomposition: dim h != dim i");

	Mat h1 = h0;
	if (q > 0) {
		for (std::size_t jrow = 0; jrow < r; ++jrow) {
			Vec pair(q);
			for (std::size_t t = 0; t < q; ++t) pair[t] = b.eval(h0.row(jrow), w.a_basis.row(t));
			Vec coeff = a_gram_inv->apply(pair);
			Vec corrected = h0.row(jrow);
			for (std::size_t s = 0; s < q; ++s)
				corrected = vec_sub(corrected, vec_scaled(w.a_basis.row(s), coeff[s]));
			h1.set_row(jrow, corrected);
		}
	}

	Mat pairing(r, r);
	for (std::size_t jrow = 0; jrow < r; ++jrow)
		for (std::size_t m = 0; m < r; ++m) pairing.at(jrow, m) = b.eval(h1.row(jrow), w.i_basis.row(m));
	auto pairing_inv_t = inverse(pairing.transpose());
	if (!pairing_inv_t) throw std::logic_error("witt_decomposition: h/i pairing degenerate");

	Mat self(r, r);
	for (std::size_t jrow = 0; jrow < r; ++jrow)
		for (std::size_t krow = 0; krow < r; ++krow) self.at(jrow, krow) = b.eval(h1.row(jrow), h1.row(krow));
	Mat d = self.scaled(rat(1, 2)) * *pairing_inv_t;

	w.h_basis = h1;
	for (std::size_t jrow = 0; jrow < r; ++jrow) {
		Vec corrected = h1.row(jrow);
		for (std::size_t m = 0; m < r; ++m)
			corrected = vec_sub(corrected, vec_scaled(w.i_basis.row(m), d.at(jrow, m)));
		w.h_basis.set_row(jrow, corrected);
	}

	w.phi = Mat(r, r);
	for (std::size_t jrow = 0; jrow < r; ++jrow)
		for (std::size_t m = 0; m < r; ++m) w.phi.at(jrow, m) = b.eval(w.i_basis.row(m), w.h_basis.row(jrow));

	// Decomposition invariants.
	for (std::size_t jrow = 0; jrow < r; ++jrow) {
		for (std::size_t krow = 0; krow < r; ++krow)
			if (!is_zero(b.eval(w.h_basis.row(jrow), w.h_basis.row(krow))))
				throw std::logic_error("witt_decomposition: h not isotropic");
		for (std::size_t s = 0; s < q; ++s)
			if (!is_zero(b.eval(w.h_basis.row(jrow), w.a_basis.row(s))))
				throw std::logic_error("witt_decomposition: h not orthogonal to a");
	}
	Mat all = vstack(vstack(w.h_basis, w.a_basis), w.i_basis);
	if (rref(all).rank != n) throw std::logic_error("witt_decomposition: bases do not span");
	if (is_zero(det(w.phi))) throw std::logic_error("witt_decomposition: phi degenerate");
	return w;
}

}  // namespace quadlie
