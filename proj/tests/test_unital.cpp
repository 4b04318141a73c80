#include "doctest.h"

#include "quadlie/models.hpp"
#include "quadlie/unital.hpp"

using namespace quadlie;

namespace {

Vec unit_vec(std::size_t n, std::size_t k) {
	Vec v(n, Rat(0));
	v[k] = 1;
	return v;
}

BilinearForm h3_degenerate_form() {
	Mat m(3, 3);
	m.at(0, 0) = 1;
	m.at(1, 1) = 1;
	return BilinearForm(m);
}

UnitalAlgebra h3_unital() {
	return UnitalAlgebra(heisenberg3(), h3_degenerate_form());
}

}  // namespace

TEST_CASE("unital product laws") {
	UnitalAlgebra a = h3_unital();
	CHECK(a.dim() == 4);
	CHECK(a.unit() == unit_vec(4, 0));

	Vec x1 = a.embed(Rat(0), unit_vec(3, 0));
	Vec x2 = a.embed(Rat(0), unit_vec(3, 1));
	Vec x3 = a.embed(Rat(0), unit_vec(3, 2));
	CHECK(a.product(a.unit(), x1) == x1);
	CHECK(a.product(x1, a.unit()) == x1);

	// (0,x)(0,y) = (f(x,y), [x,y]/2)
	Vec p = a.product(x1, x2);
	CHECK(p[0] == 0);  // f(x1, x2) = 0
	CHECK(p == a.embed(Rat(0), vec_scaled(unit_vec(3, 2), Rat(1, 2))));
	Vec q = a.product(x1, x1);
	CHECK(q == a.embed(Rat(1), Vec(3, Rat(0))));  // f(x1, x1) = 1

	// commutator recovers the bracket
	CHECK(a.commutator(x1, x2) == a.embed(Rat(0), unit_vec(3, 2)));
	CHECK(a.commutator(x2, x1) == a.embed(Rat(0), vec_scaled(unit_vec(3, 2), Rat(-1))));
	CHECK(vec_is_zero(a.commutator(x1, x3)));

	// scalars multiply through
	Vec mixed = a.product(a.embed(Rat(2), unit_vec(3, 0)), a.embed(Rat(3), unit_vec(3, 1)));
	// (2,x1)(3,x2) = (6 + 0, 2 x2 + 3 x1 + x3/2)
	Vec expect(4, Rat(0));
	expect[0] = 6;
	expect[1] = 3;
	expect[2] = 2;
	expect[3] = Rat(1, 2);
	CHECK(mixed == expect);
}

TEST_CASE("constructor validation") {
	CHECK_THROWS_AS(UnitalAlgebra(heisenberg3(), BilinearForm(Mat(3, 3))),
		std::invalid_argument);
	CHECK_THROWS_AS(UnitalAlgebra(heisenberg3(), BilinearForm(Mat::identity(3))),
		std::invalid_argument);  // not invariant
	CHECK_THROWS_AS(UnitalAlgebra(heisenberg3(), BilinearForm(Mat::identity(2))),
		std::invalid_argument);  // dimension mismatch
}

TEST_CASE("ideal closures") {
	UnitalAlgebra a = h3_unital();

	// the radical direction generates a line ideal
	Vec rad = a.embed(Rat(0), unit_vec(3, 2));
	Subspace line = ideal_closure(a, rad);
	CHECK(line.dim() == 1);
	CHECK(line.contains(rad));

	// a vector with unit component and radical g-part forces everything
	Vec mixed = a.embed(Rat(1), unit_vec(3, 2));
	CHECK(ideal_closure(a, mixed) == Subspace::full(4));

	// so does a non-isotropic g-part with mismatched unit coordinate
	CHECK(ideal_closure(a, a.embed(Rat(0), unit_vec(3, 0))) == Subspace::full(4));

	CHECK(ideal_closure(a, Vec(4, Rat(0))).dim() == 0);
	CHECK(ideal_closure(a, a.unit()) == Subspace::full(4));
}

TEST_CASE("simplicity verdicts") {
	// degenerate form: the radical gives an immediate witness
	SimplicityVerdict deg = simplicity_check(h3_unital(), 1, 100);
	CHECK(deg.verdict == Simplicity::not_simple);
	REQUIRE(deg.witness.has_value());
	CHECK(deg.witness->dim() == 1);
	CHECK(deg.witness->contains(unit_vec(4, 3)));
	CHECK(deg.method == "radical witness");
	CHECK(deg.closures_computed == 0);

	// non-degenerate invariant form on a nilpotent algebra: certified simple
	LieAlgebra g = example_algebra(Rat(1));
	UnitalAlgebra good(g, example_metric(Rat(1)));
	SimplicityVerdict res = simplicity_check(good, 1, 50);
	CHECK(res.verdict == Simplicity::simple);
	CHECK(!res.witness.has_value());
	CHECK(res.method == "non-degenerate form on a nilpotent algebra");

	// abelian plane with the euclidean form is also covered by the certificate
	UnitalAlgebra plane(abelian(2), BilinearForm(Mat::identity(2)));
	CHECK(simplicity_check(plane, 1, 10).verdict == Simplicity::simple);

	// dimension one is outside the scope
	CHECK_THROWS_AS(
		simplicity_check(UnitalAlgebra(abelian(1), BilinearForm(Mat::identity(1))), 1, 1),
		std::domain_error);
}

TEST_CASE("commutator quotient") {
	for (const LieAlgebra& g : {heisenberg3(), abelian(3), example_algebra(Rat(1))}) {
		BilinearForm f = nonzero_invariant_form(g);
		UnitalAlgebra a(g, f);
		QuotientReport rep = commutator_quotient_iso(a);
		CHECK(rep.matches);
		CHECK(rep.projection.rows() == g.dim());
		CHECK(rep.projection.cols() == g.dim() + 1);
		CHECK(same_structure(rep.quotient, g));
	}
}

TEST_CASE("invariant form supply") {
	BilinearForm f = nonzero_invariant_form(heisenberg3());
	CHECK(is_invariant(heisenberg3(), f));
	CHECK(!f.gram.is_zero());
	// solvable non-nilpotent input is out of scope
	CHECK_THROWS_AS(nonzero_invariant_form(LieAlgebra(2, {{0, 1, 1, Rat(1)}})),
		std::domain_error);
}
