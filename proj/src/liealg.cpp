#include "quadlie/liealg.hpp"

#include <algorithm>
#include <map>

namespace quadlie {

namespace {

std::vector<std::vector<Vec>> build_table(std::size_t dim, const std::vector<StructureTriple>& triples) {
	std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim)));
	for (const auto& t : triples) {
		if (t.i >= dim || t.j >= dim || t.k >= dim)
			throw StructureError("structure triple index out of range");
		if (t.i >= t.j) throw StructureError("structure triples must satisfy i < j");
		table[t.i][t.j][t.k] += t.c;
	}
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i + 1; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k) table[j][i][k] = -table[i][j][k];
	return table;
}

Vec bracket_with_table(const std::vector<std::vector<Vec>>& table, const Vec& x, const Vec& y) {
	std::size_t n = table.size();
	Vec out(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (is_zero(x[i])) continue;
		for (std::size_t j = 0; j < n; ++j) {
			if (i == j || is_zero(y[j])) continue;
			Rat c = x[i] * y[j];
			const Vec& b = table[i][j];
			for (std::size_t k = 0; k < n; ++k)
				if (!is_zero(b[k])) out[k] += c * b[k];
		}
	}
	return out;
}

std::optional<JacobiViolation> jacobi_violation_on_table(const std::vector<std::vector<Vec>>& table) {
	std::size_t n = table.size();
	Vec ei(n), ej(n), ek(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k) {
				std::fill(ei.begin(), ei.end(), Rat(0));
				std::fill(ej.begin(), ej.end(), Rat(0));
				std::fill(ek.begin(), ek.end(), Rat(0));
				ei[i] = 1;
				ej[j] = 1;
				ek[k] = 1;
				Vec s = bracket_with_table(table, ei, table[j][k]);
				s = vec_add(s, bracket_with_table(table, ej, table[k][i]));
				s = vec_add(s, bracket_with_table(table, ek, table[i][j]));
				if (!vec_is_zero(s)) return JacobiViolation{{i, j, k}, s};
			}
	return std::nullopt;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<StructureTriple> triples,
                       std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), triples_(std::move(triples)) {
	if (names_.empty()) {
		for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
	}
	if (names_.size() != dim_) throw StructureError("basis_names size mismatch");
	// gmp comparisons assume canonical form; incoming constants may not be
	for (auto& t : triples_) t.c.canonicalize();
	table_ = build_table(dim_, triples_);
	if (auto v = jacobi_violation_on_table(table_)) {
		throw StructureError("Jacobi identity fails on basis triple (" + std::to_string(v->triple[0]) +
		                     "," + std::to_string(v->triple[1]) + "," + std::to_string(v->triple[2]) + ")");
	}
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
	if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: size mismatch");
	return bracket_with_table(table_, x, y);
}

Mat LieAlgebra::ad_basis(std::size_t i) const {
	Mat m(dim_, dim_);
	for (std::size_t j = 0; j < dim_; ++j) {
		const Vec& b = table_[i][j];
		for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = b[k];
	}
	return m;
}

Mat LieAlgebra::ad(const Vec& x) const {
	Mat m(dim_, dim_);
	for (std::size_t i = 0; i < dim_; ++i) {
		if (is_zero(x[i])) continue;
		for (std::size_t j = 0; j < dim_; ++j)
			for (std::size_t k = 0; k < dim_; ++k)
				if (!is_zero(table_[i][j][k])) m.at(k, j) += x[i] * table_[i][j][k];
	}
	return m;
}

bool LieAlgebra::is_abelian() const {
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t j = i + 1; j < dim_; ++j)
			if (!vec_is_zero(table_[i][j])) return false;
	return true;
}

std::optional<JacobiViolation> jacobi_violation(std::size_t dim,
                                                const std::vector<StructureTriple>& triples) {
	return jacobi_violation_on_table(build_table(dim, triples));
}

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
	if (a.dim() != b.dim()) return false;
	auto normalize = [](const LieAlgebra& g) {
		std::map<std::array<std::size_t, 3>, Rat> m;
		for (const auto& t : g.triples()) {
			Rat& c = m[{t.i, t.j, t.k}];
			c += t.c;
		}
		std::erase_if(m, [](const auto& kv) { return is_zero(kv.second); });
		return m;
	};
	return normalize(a) == normalize(b);
}

const Subspace& CentralSeriesReport::upper_at(std::size_t k) const {
	if (k == 0 || upper.empty()) throw std::out_of_range("upper_at: k must be >= 1");
	return upper[std::min(k, upper.size()) - 1];
}

const Subspace& CentralSeriesReport::lower_at(std::size_t k) const {
	return lower[std::min(k, lower.size() - 1)];
}

CentralSeriesReport central_series(const LieAlgebra& g) {
	std::size_t n = g.dim();
	CentralSeriesReport rep;

	// Upper series: Z_{l} is the preimage of the center of g / Z_{l-1},
	// i.e. the kernel of v -> (Q ad(e_i) v)_i with Q an annihilator of Z_{l-1}.
	Subspace z = Subspace::zero(n);
	while (true) {
		Mat q = annihilator(z);
		Mat stacked(0, n);
		for (std::size_t i = 0; i < n; ++i) stacked = vstack(stacked, q * g.ad_basis(i));
		Subspace znext = stacked.rows() == 0 ? Subspace::full(n) : kernel(stacked);
		if (!rep.upper.empty() && znext == z) break;
		rep.upper.push_back(znext);
		if (znext.dim() == n) break;
		z = znext;
	}

	Subspace full = Subspace::full(n);
	rep.lower.push_back(full);
	Subspace gk = full;
	while (true) {
		Subspace next = bracket_span(g, full, gk);
		if (next == gk) break;
		rep.lower.push_back(next);
		if (next.dim() == 0) break;
		gk = next;
	}

	if (rep.lower.back().dim() == 0) rep.nilpotency_class = rep.lower.size() - 1;
	rep.stabilization_index = std::max<std::size_t>(
	    1, std::max(rep.upper.size(), rep.lower.size() - 1));
	return rep;
}

bool is_nilpotent(const LieAlgebra& g) { return central_series(g).is_nilpotent(); }

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
	std::vector<Vec> vecs;
	for (std::size_t r = 0; r < a.dim(); ++r)
		for (std::size_t s = 0; s < b.dim(); ++s)
			vecs.push_back(g.bracket(a.basis().row(r), b.basis().row(s)));
	return Subspace::span(g.dim(), vecs);
}

CanonicalIdeals canonical_ideals(const LieAlgebra& g) {
	CentralSeriesReport series = central_series(g);
	if (!series.is_nilpotent())
		throw std::domain_error("canonical_ideals: algebra is not nilpotent");
	std::size_t n = g.dim();
	std::size_t c = std::max<std::size_t>(1, *series.nilpotency_class);

	CanonicalIdeals out{Subspace::zero(n), Subspace::full(n)};
	for (std::size_t k = 1; k <= c; ++k) {
		out.i = subspace_sum(out.i, subspace_intersect(series.upper_at(k), series.lower_at(k)));
		out.j = subspace_intersect(out.j, subspace_sum(series.upper_at(k), series.lower_at(k)));
	}

	if (!out.j.contains(out.i)) throw std::logic_error("canonical_ideals: i not inside j");
	if (bracket_span(g, out.j, out.j).dim() != 0)
		throw std::logic_error("canonical_ideals: j is not abelian");
	if (!out.i.contains(bracket_span(g, Subspace::full(n), out.j)))
		throw std::logic_error("canonical_ideals: [g, j] not inside i");
	return out;
}

CanonicalIdealChecks verify_canonical_ideals(const LieAlgebra& g) {
	CentralSeriesReport series = central_series(g);
	CanonicalIdeals ideals = canonical_ideals(g);
	std::size_t n = g.dim();

	CanonicalIdealChecks checks;
	checks.i_inside_j = ideals.j.contains(ideals.i);
	checks.j_abelian = bracket_span(g, ideals.j, ideals.j).dim() == 0;
	checks.bracket_into_i = ideals.i.contains(bracket_span(g, Subspace::full(n), ideals.j));

	std::size_t m = series.stabilization_index;
	Subspace sum = series.upper_at(1);  // Z(g)
	for (std::size_t k = 1; k + 1 <= m; ++k)
		sum = subspace_sum(sum, subspace_intersect(series.upper_at(k + 1), series.lower_at(k)));
	checks.sum_formula = (sum == ideals.j);
	return checks;
}

Subspace centroid(const LieAlgebra& g) {
	std::size_t n = g.dim();
	// Unknowns t_{a,b} flattened row-major; one row per (i, j, k):
	// sum_m c^m_{ij} t_{k,m} - sum_a c^k_{ia} t_{a,j} = 0.
	std::vector<Vec> rows;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const Vec& bij = g.bracket_basis(i, j);
			for (std::size_t k = 0; k < n; ++k) {
				Vec row(n * n);
				for (std::size_t m = 0; m < n; ++m)
					if (!is_zero(bij[m])) row[k * n + m] += bij[m];
				for (std::size_t a = 0; a < n; ++a) {
					const Rat& c = g.bracket_basis(i, a)[k];
					if (!is_zero(c)) row[a * n + j] -= c;
				}
				if (!vec_is_zero(row)) rows.push_back(std::move(row));
			}
		}
	if (rows.empty()) return Subspace::full(n * n);
	return kernel(Mat::from_rows(rows));
}

bool in_centroid(const LieAlgebra& g, const Mat& t) {
	std::size_t n = g.dim();
	if (t.rows() != n || t.cols() != n) throw std::invalid_argument("in_centroid: shape mismatch");
	for (std::size_t i = 0; i < n; ++i) {
		Vec ei(n);
		ei[i] = 1;
		for (std::size_t j = 0; j < n; ++j) {
			Vec lhs = t.apply(g.bracket_basis(i, j));
			Vec rhs = g.bracket(ei, t.col(j));
			if (lhs != rhs) return false;
		}
	}
	return true;
}

Mat flatten(const Mat& m) {
	Mat out(1, m.rows() * m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j) out.at(0, i * m.cols() + j) = m.at(i, j);
	return out;
}

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
	if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
	Mat m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
	return m;
}

}  // namespace quadlie
