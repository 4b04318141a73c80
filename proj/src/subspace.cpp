#include "quadlie/subspace.hpp"

#include <stdexcept>

namespace quadlie {

Subspace Subspace::zero(std::size_t ambient) {
	Subspace s;
	s.ambient_ = ambient;
	s.basis_ = Mat(0, ambient);
	return s;
}

Subspace Subspace::full(std::size_t ambient) { return span(ambient, Mat::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const Mat& vectors) {
	if (vectors.rows() > 0 && vectors.cols() != ambient)
		throw std::invalid_argument("Subspace::span: ambient mismatch");
	RrefResult r = rref(vectors);
	Subspace s;
	s.ambient_ = ambient;
	s.pivots_ = r.pivots;
	s.basis_ = Mat(r.rank, ambient);
	for (std::size_t i = 0; i < r.rank; ++i)
		for (std::size_t j = 0; j < ambient; ++j) s.basis_.at(i, j) = r.reduced.at(i, j);
	return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
	if (vectors.empty()) return zero(ambient);
	return span(ambient, Mat::from_rows(vectors));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
	if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
	// Reduce v against the RREF rows; the pivot coefficients are the coordinates.
	Vec rem = v;
	Vec coords(dim());
	for (std::size_t i = 0; i < dim(); ++i) {
		coords[i] = rem[pivots_[i]];
		if (is_zero(coords[i])) continue;
		for (std::size_t j = 0; j < ambient_; ++j) rem[j] -= coords[i] * basis_.at(i, j);
	}
	if (!vec_is_zero(rem)) return std::nullopt;
	return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
	for (std::size_t i = 0; i < other.dim(); ++i)
		if (!contains(other.basis_.row(i))) return false;
	return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
	return Subspace::span(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim())
		throw std::invalid_argument("subspace_intersect: ambient mismatch");
	std::size_t n = a.ambient_dim(), p = a.dim(), q = b.dim();
	if (p == 0 || q == 0) return Subspace::zero(n);
	// Coefficient pairs (c, d) with sum_i c_i a_i = sum_j d_j b_j.
	Mat sys(n, p + q);
	for (std::size_t col = 0; col < p; ++col)
		for (std::size_t i = 0; i < n; ++i) sys.at(i, col) = a.basis().at(col, i);
	for (std::size_t col = 0; col < q; ++col)
		for (std::size_t i = 0; i < n; ++i) sys.at(i, p + col) = -b.basis().at(col, i);
	Mat ker = kernel_basis(sys);
	std::vector<Vec> vecs;
	for (std::size_t r = 0; r < ker.rows(); ++r) {
		Vec v(n);
		for (std::size_t i = 0; i < p; ++i) {
			if (is_zero(ker.at(r, i))) continue;
			for (std::size_t j = 0; j < n; ++j) v[j] += ker.at(r, i) * a.basis().at(i, j);
		}
		vecs.push_back(std::move(v));
	}
	return Subspace::span(n, vecs);
}

Subspace subspace_complement(const Subspace& u) {
	std::size_t n = u.ambient_dim();
	std::vector<bool> is_pivot(n, false);
	for (std::size_t c : u.pivots()) is_pivot[c] = true;
	std::vector<Vec> vecs;
	for (std::size_t j = 0; j < n; ++j) {
		if (is_pivot[j]) continue;
		Vec e(n);
		e[j] = 1;
		vecs.push_back(std::move(e));
	}
	return Subspace::span(n, vecs);
}

Mat complement_within(const Subspace& inner, const Subspace& outer) {
	if (!outer.contains(inner)) throw std::invalid_argument("complement_within: inner not inside outer");
	std::vector<Vec> picked;
	Mat acc = inner.basis();
	std::size_t rank = inner.dim();
	for (std::size_t i = 0; i < outer.dim(); ++i) {
		Vec cand = outer.basis().row(i);
		Mat trial = vstack(acc, Mat::row_vector(cand));
		if (rref(trial).rank > rank) {
			picked.push_back(cand);
			acc = trial;
			++rank;
		}
	}
	if (picked.empty()) return Mat(0, inner.ambient_dim());
	return Mat::from_rows(picked);
}

Mat annihilator(const Subspace& u) {
	if (u.dim() == 0) return Mat::identity(u.ambient_dim());
	return kernel_basis(u.basis());
}

Subspace kernel(const Mat& m) { return Subspace::span(m.cols(), kernel_basis(m)); }

std::optional<LinearSolution> solve(const Mat& m, const Vec& rhs) {
	auto raw = solve_linear(m, rhs);
	if (!raw) return std::nullopt;
	LinearSolution s;
	s.particular = std::move(raw->particular);
	s.homogeneous = Subspace::span(m.cols(), raw->homogeneous);
	return s;
}

}  // namespace quadlie
