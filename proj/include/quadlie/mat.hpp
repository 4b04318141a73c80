#ifndef QUADLIE_MAT_HPP
#define QUADLIE_MAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "quadlie/rat.hpp"

namespace quadlie {

/// Dense row-major matrix over the rationals.
class Mat {
public:
	Mat() = default;
	Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	static Mat identity(std::size_t n);
	static Mat from_rows(const std::vector<Vec>& rows);
	static Mat row_vector(const Vec& v);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	Vec row(std::size_t i) const;
	Vec col(std::size_t j) const;
	void set_row(std::size_t i, const Vec& v);

	Mat transpose() const;
	Mat operator+(const Mat& o) const;
	Mat operator-(const Mat& o) const;
	Mat operator*(const Mat& o) const;
	Mat scaled(const Rat& c) const;
	Vec apply(const Vec& v) const;  // matrix * column vector

	bool operator==(const Mat& o) const = default;
	bool is_zero() const;

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Rat> data_;
};

// Vector helpers shared across the toolkit.
Vec vec_zero(std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rat& c);
Rat vec_dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);

struct RrefResult {
	Mat reduced;
	std::vector<std::size_t> pivots;  // pivot column per pivot row
	std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are chosen as the first row with a
/// nonzero entry while scanning columns left to right, so the output is the
/// unique canonical form of the row space.
RrefResult rref(const Mat& m);

/// Rows span the right kernel {x : m x = 0}; one row per free column, in
/// free-column order, with a 1 in the free coordinate.
Mat kernel_basis(const Mat& m);

struct AffineSolution {
	Vec particular;   // free variables set to zero
	Mat homogeneous;  // rows span the kernel
};

std::optional<AffineSolution> solve_linear(const Mat& m, const Vec& rhs);

Rat det(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

Mat vstack(const Mat& top, const Mat& bottom);

}  // namespace quadlie

#endif
