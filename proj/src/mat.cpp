#include "quadlie/mat.hpp"

#include <stdexcept>

namespace quadlie {

Mat Mat::identity(std::size_t n) {
	Mat m(n, n);
	for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
	return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
	if (rows.empty()) return Mat();
	Mat m(rows.size(), rows[0].size());
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != m.cols_) throw std::invalid_argument("Mat::from_rows: ragged rows");
		for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
	}
	return m;
}

Mat Mat::row_vector(const Vec& v) { return from_rows({v}); }

Vec Mat::row(std::size_t i) const {
	Vec v(cols_);
	for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
	return v;
}

Vec Mat::col(std::size_t j) const {
	Vec v(rows_);
	for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
	return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
	if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: size mismatch");
	for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
	Mat t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
	return t;
}

Mat Mat::operator+(const Mat& o) const {
	if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
	Mat m(rows_, cols_);
	for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
	return m;
}

Mat Mat::operator-(const Mat& o) const {
	if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
	Mat m(rows_, cols_);
	for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
	return m;
}

Mat Mat::operator*(const Mat& o) const {
	if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
	Mat m(rows_, o.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const Rat& a = at(i, k);
			if (quadlie::is_zero(a)) continue;
			for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
		}
	return m;
}

Mat Mat::scaled(const Rat& c) const {
	Mat m(rows_, cols_);
	for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
	return m;
}

Vec Mat::apply(const Vec& v) const {
	if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
	Vec out(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			if (!quadlie::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
	return out;
}

bool Mat::is_zero() const {
	for (const Rat& r : data_)
		if (!quadlie::is_zero(r)) return false;
	return true;
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Vec vec_add(const Vec& a, const Vec& b) {
	Vec v(a);
	for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
	return v;
}

Vec vec_sub(const Vec& a, const Vec& b) {
	Vec v(a);
	for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
	return v;
}

Vec vec_scaled(const Vec& a, const Rat& c) {
	Vec v(a);
	for (Rat& x : v) x *= c;
	return v;
}

Rat vec_dot(const Vec& a, const Vec& b) {
	Rat s = 0;
	for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
	return s;
}

bool vec_is_zero(const Vec& a) {
	for (const Rat& x : a)
		if (!is_zero(x)) return false;
	return true;
}

RrefResult rref(const Mat& m) {
	RrefResult res;
	res.reduced = m;
	Mat& a = res.reduced;
	std::size_t r = 0;
	for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
		std::size_t p = r;
		while (p < a.rows() && is_zero(a.at(p, col))) ++p;
		if (p == a.rows()) continue;
		if (p != r)
			for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(p, j));
		Rat inv = 1 / a.at(r, col);
		for (std::size_t j = col; j < a.cols(); ++j) a.at(r, j) *= inv;
		for (std::size_t q = 0; q < a.rows(); ++q) {
			if (q == r || is_zero(a.at(q, col))) continue;
			Rat f = a.at(q, col);
			for (std::size_t j = col; j < a.cols(); ++j) a.at(q, j) -= f * a.at(r, j);
		}
		res.pivots.push_back(col);
		++r;
	}
	res.rank = r;
	return res;
}

Mat kernel_basis(const Mat& m) {
	RrefResult r = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (std::size_t c : r.pivots) is_pivot[c] = true;
	std::vector<Vec> rows;
	for (std::size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f]) continue;
		Vec v(m.cols());
		v[f] = 1;
		for (std::size_t p = 0; p < r.pivots.size(); ++p) v[r.pivots[p]] = -r.reduced.at(p, f);
		rows.push_back(std::move(v));
	}
	if (rows.empty()) return Mat(0, m.cols());
	return Mat::from_rows(rows);
}

std::optional<AffineSolution> solve_linear(const Mat& m, const Vec& rhs) {
	if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
	Mat aug(m.rows(), m.cols() + 1);
	for (std::size_t i = 0; i < m.rows(); ++i) {
		for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
		aug.at(i, m.cols()) = rhs[i];
	}
	RrefResult r = rref(aug);
	for (std::size_t c : r.pivots)
		if (c == m.cols()) return std::nullopt;
	AffineSolution sol;
	sol.particular = Vec(m.cols());
	for (std::size_t p = 0; p < r.pivots.size(); ++p) sol.particular[r.pivots[p]] = r.reduced.at(p, m.cols());
	sol.homogeneous = kernel_basis(m);
	return sol;
}

Rat det(const Mat& m) {
	if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
	Mat a = m;
	std::size_t n = a.rows();
	Rat d = 1;
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t p = col;
		while (p < n && is_zero(a.at(p, col))) ++p;
		if (p == n) return Rat(0);
		if (p != col) {
			for (std::size_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(p, j));
			d = -d;
		}
		d *= a.at(col, col);
		Rat inv = 1 / a.at(col, col);
		for (std::size_t q = col + 1; q < n; ++q) {
			if (is_zero(a.at(q, col))) continue;
			Rat f = a.at(q, col) * inv;
			for (std::size_t j = col; j < n; ++j) a.at(q, j) -= f * a.at(col, j);
		}
	}
	return d;
}

std::optional<Mat> inverse(const Mat& m) {
	if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
	std::size_t n = m.rows();
	Mat aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
		aug.at(i, n + i) = 1;
	}
	RrefResult r = rref(aug);
	if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
	Mat inv(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
	return inv;
}

Mat vstack(const Mat& top, const Mat& bottom) {
	if (top.rows() == 0) return bottom;
	if (bottom.rows() == 0) return top;
	if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: width mismatch");
	Mat m(top.rows() + bottom.rows(), top.cols());
	for (std::size_t i = 0; i < top.rows(); ++i)
		for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
	for (std::size_t i = 0; i < bottom.rows(); ++i)
		for (std::size_t j = 0; j < top.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
	return m;
}

}  // namespace quadlie
