#include "doctest.h"

#include "quadlie/current.hpp"
#include "quadlie/models.hpp"

using namespace quadlie;

namespace {

Vec unit_vec(std::size_t n, std::size_t k) {
	Vec v(n, Rat(0));
	v[k] = 1;
	return v;
}

}  // namespace

TEST_CASE("commutative associative algebras") {
	AssocAlgebra s = truncated_poly(3);
	CHECK(s.dim() == 3);
	CHECK(s.unit() == unit_vec(3, 0));
	CHECK(s.product_basis(1, 1) == unit_vec(3, 2));
	CHECK(vec_is_zero(s.product_basis(1, 2)));
	CHECK(vec_is_zero(s.product_basis(2, 2)));
	CHECK(s.product(unit_vec(3, 0), unit_vec(3, 1)) == unit_vec(3, 1));
	CHECK(s.basis_names()[2] == "t^2");

	CHECK(scalar_algebra().dim() == 1);
	CHECK(dual_numbers().dim() == 2);

	// t * t = 1 + t defines a perfectly associative product on two elements
	std::vector<ProductTriple> golden = {
		{0, 0, 0, Rat(1)}, {0, 1, 1, Rat(1)},
		{1, 1, 0, Rat(1)}, {1, 1, 1, Rat(1)},
	};
	CHECK(!assoc_violation(2, golden, unit_vec(2, 0)).has_value());

	// truncated cube with t * t^2 = 1 instead of 0 is not associative
	std::vector<ProductTriple> tampered = {
		{0, 0, 0, Rat(1)}, {0, 1, 1, Rat(1)}, {0, 2, 2, Rat(1)},
		{1, 1, 2, Rat(1)}, {1, 2, 0, Rat(1)},
	};
	auto violation = assoc_violation(3, tampered, unit_vec(3, 0));
	REQUIRE(violation.has_value());
	CHECK(violation->kind == "associativity");
	CHECK(!vec_is_zero(violation->residual));
	CHECK_THROWS_AS(AssocAlgebra(3, tampered, unit_vec(3, 0)), StructureError);

	// wrong unit is its own violation kind
	auto bad_unit = assoc_violation(2, {{0, 0, 0, Rat(1)}}, unit_vec(2, 1));
	REQUIRE(bad_unit.has_value());
	CHECK(bad_unit->kind == "unit");
}

TEST_CASE("frobenius pairings on truncated polynomials") {
	for (std::size_t k : {1, 2, 3}) {
		AssocAlgebra s = truncated_poly(k);
		BilinearForm theta = truncated_poly_pairing(k);
		CHECK(is_associative_invariant(s, theta));
		CHECK(is_frobenius(s, theta));
	}
	// the identity gram is not invariant on dual numbers: (t*t, 1) != (t, t)
	CHECK(!is_associative_invariant(dual_numbers(), BilinearForm(Mat::identity(2))));
}

TEST_CASE("current algebra construction") {
	LieAlgebra g = heisenberg3();
	AssocAlgebra s = dual_numbers();
	LieAlgebra gs = current_algebra(g, s);
	CHECK(gs.dim() == 6);
	CHECK(gs.basis_names()[0] == "x1(x)1");
	CHECK(gs.basis_names()[3] == "x2(x)t");

	// [x1 (x) t, x2 (x) 1] = x3 (x) t at index 2 * 2 + 1 = 5
	Vec lhs = gs.bracket(unit_vec(6, 1), unit_vec(6, 2));
	CHECK(lhs == unit_vec(6, 5));
	// t * t = 0 kills the bracket of two t-components
	CHECK(vec_is_zero(gs.bracket(unit_vec(6, 1), unit_vec(6, 3))));

	// tensoring with scalars changes nothing
	CHECK(same_structure(current_algebra(g, scalar_algebra()), g));

	// nilpotency persists and the class never grows
	LieAlgebra ex = example_algebra(Rat(1));
	LieAlgebra exs = current_algebra(ex, dual_numbers());
	CHECK(exs.dim() == 18);
	auto series = central_series(exs);
	REQUIRE(series.nilpotency_class.has_value());
	CHECK(*series.nilpotency_class == 5);
}

TEST_CASE("tensor form") {
	LieAlgebra g = example_algebra(Rat(1));
	BilinearForm b = example_metric(Rat(1));
	AssocAlgebra s = dual_numbers();
	BilinearForm theta = truncated_poly_pairing(2);
	LieAlgebra gs = current_algebra(g, s);
	BilinearForm bbar = tensor_form(b, theta, 2);
	CHECK(bbar.dim() == 18);
	CHECK(is_metric(gs, bbar));

	// entry check: (x (x) s_a, y (x) s_b) = b(x, y) theta(s_a, s_b)
	for (std::size_t i = 0; i < 9; ++i)
		for (std::size_t j = 0; j < 9; ++j)
			for (std::size_t a = 0; a < 2; ++a)
				for (std::size_t c = 0; c < 2; ++c)
					CHECK(bbar.gram.at(i * 2 + a, j * 2 + c)
						== b.gram.at(i, j) * theta.gram.at(a, c));
}

TEST_CASE("operators carried by a tensor metric") {
	LieAlgebra g = example_algebra(Rat(1));
	BilinearForm b = example_metric(Rat(1));

	// scalars: the only operator is the identity
	{
		AssocAlgebra s = scalar_algebra();
		LieAlgebra gs = current_algebra(g, s);
		BilinearForm bbar = tensor_form(b, truncated_poly_pairing(1), 1);
		CurrentAnalysis an = gamma_operators(g, b, gs, bbar);
		CHECK(an.s_dim == 1);
		CHECK(an.gamma_at(0, 0) == Mat::identity(9));
		CHECK(an.epsilon_at(0, 0) == Mat::identity(3));
		EpsilonConditionReport rep = check_epsilon_conditions(an, s);
		CHECK(rep.factors_through_product);
		CHECK(rep.kernel_trivial);
		CHECK(rep.epsilon_in_centroid);
		CHECK(rep.all());
	}

	// dual numbers with the antidiagonal pairing: gamma(s_a, s_b) is
	// theta(s_a, s_b) times the identity
	{
		AssocAlgebra s = dual_numbers();
		BilinearForm theta = truncated_poly_pairing(2);
		LieAlgebra gs = current_algebra(g, s);
		BilinearForm bbar = tensor_form(b, theta, 2);
		CurrentAnalysis an = gamma_operators(g, b, gs, bbar);
		CHECK(an.s_dim == 2);
		for (std::size_t a = 0; a < 2; ++a)
			for (std::size_t c = 0; c < 2; ++c)
				CHECK(an.gamma_at(a, c) == Mat::identity(9).scaled(theta.gram.at(a, c)));
		CHECK(check_epsilon_conditions(an, s).all());
	}

	// degenerate base form is rejected
	Mat deg(9, 9);
	CHECK_THROWS_AS(
		gamma_operators(g, BilinearForm(deg), current_algebra(g, scalar_algebra()),
			tensor_form(b, truncated_poly_pairing(1), 1)),
		std::domain_error);
	// a non-invariant candidate on the current algebra is rejected
	CHECK_THROWS_AS(
		gamma_operators(g, b, current_algebra(g, dual_numbers()),
			BilinearForm(Mat::identity(18))),
		std::domain_error);
}

TEST_CASE("operator restriction to the bracket image") {
	// on [g, g], gamma(s, t) restricts to multiplication structure: the
	// centroid membership forces gamma(s,t)[x,y] = [gamma(s,t)x, y]
	LieAlgebra g = example_algebra(Rat(2));
	BilinearForm b = example_metric(Rat(2));
	AssocAlgebra s = truncated_poly(3);
	BilinearForm theta = truncated_poly_pairing(3);
	LieAlgebra gs = current_algebra(g, s);
	BilinearForm bbar = tensor_form(b, theta, 3);
	CurrentAnalysis an = gamma_operators(g, b, gs, bbar);
	CHECK(check_epsilon_conditions(an, s).all());
	for (std::size_t a = 0; a < 3; ++a)
		for (std::size_t c = 0; c < 3; ++c) {
			const Mat& gm = an.gamma_at(a, c);
			CHECK(in_centroid(g, gm));
			for (std::size_t i = 0; i < 9; ++i)
				for (std::size_t j = i + 1; j < 9; ++j)
					CHECK(gm.apply(g.bracket_basis(i, j))
						== g.bracket(gm.apply(unit_vec(9, i)), unit_vec(9, j)));
		}
}
