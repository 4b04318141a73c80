#include "doctest.h"

#include "quadlie/extension.hpp"
#include "quadlie/models.hpp"
#include "quadlie/rng.hpp"

using namespace quadlie;

namespace {

LieAlgebra nine_dim_literal(const Rat& xi) {
	Rat two_xi = Rat(2) * xi;
	std::vector<StructureTriple> t = {
		{0, 1, 2, Rat(1)}, {0, 1, 5, Rat(1) + xi}, {0, 1, 8, -two_xi},
		{1, 2, 3, Rat(1)}, {1, 2, 6, -two_xi},
		{0, 2, 4, Rat(-1)}, {0, 2, 7, two_xi},
		{0, 4, 8, Rat(1)}, {1, 3, 8, Rat(-1)},
		{1, 5, 6, Rat(1)}, {2, 4, 6, Rat(-1)},
		{2, 3, 7, Rat(1)}, {0, 5, 7, Rat(-1)},
		{0, 8, 7, Rat(-1)}, {1, 8, 6, Rat(1)},
	};
	return LieAlgebra(9, t);
}

Mat l_times_identity(const Rat& c) {
	return Mat::identity(3).scaled(c);
}

}  // namespace

TEST_CASE("datum validation") {
	for (long x : {0L, 1L, 2L}) {
		ExtensionData data = example_extension(Rat(x));
		ExtensionChecks checks = check_extension_data(data);
		CHECK(checks.rho_representation);
		CHECK(checks.phi_equivariant);
		CHECK(checks.pair_closed);
		CHECK(checks.all());
	}

	// rho(e_j) = identity cannot be a representation of a non-abelian h
	ExtensionData bad = example_extension(Rat(1));
	bad.rho = {Mat::identity(3), Mat::identity(3), Mat::identity(3)};
	ExtensionChecks checks = check_extension_data(bad);
	CHECK(!checks.rho_representation);
	CHECK(!checks.detail.empty());

	// perturbing lambda breaks closure of the pair
	ExtensionData leaky = example_extension(Rat(1));
	Vec v = leaky.lambda.at({0, 1});
	v[0] += 1;
	leaky.lambda.set({0, 1}, v);
	CHECK(!check_extension_data(leaky).pair_closed);
	CHECK_THROWS_AS(build_extension(leaky), StructureError);
}

TEST_CASE("total algebra of the worked example") {
	for (long x : {0L, 1L, 2L}) {
		Rat xi(x);
		LieAlgebra g = build_extension(example_extension(xi));
		CHECK(same_structure(g, nine_dim_literal(xi)));
	}
	LieAlgebra g = example_algebra(Rat(1));
	CHECK(g.basis_names()[0] == "x1");
	CHECK(g.basis_names()[3] == "u1");
	CHECK(g.basis_names()[6] == "al1");
}

TEST_CASE("coadjoint action matrices") {
	LieAlgebra h = heisenberg3();
	std::vector<Mat> rho = coad(h);
	REQUIRE(rho.size() == 3);
	for (std::size_t j = 0; j < 3; ++j)
		CHECK(rho[j] == h.ad_basis(j).transpose().scaled(Rat(-1)));
	// coadjoint action always satisfies the representation law
	ExtensionData data = example_extension(Rat(0));
	CHECK(check_extension_data(data).rho_representation);
}

TEST_CASE("pairing cochain from the form") {
	ExtensionData data = example_extension(Rat(1));
	Cochain lphi = lambda_phi(data, example_b_a());
	CHECK(lphi.at({0, 1}) == Vec{Rat(0), Rat(0), Rat(1)});   // u3
	CHECK(lphi.at({1, 2}) == Vec{Rat(1), Rat(0), Rat(0)});   // u1
	CHECK(lphi.at({0, 2}) == Vec{Rat(0), Rat(-1), Rat(0)});  // -u2

	// same for every parameter: phi does not depend on it
	Cochain lphi0 = lambda_phi(example_extension(Rat(0)), example_b_a());
	CHECK(lphi == lphi0);

	ExtensionData square = example_extension(Rat(1));
	square.dim_i = 2;  // break the pairing hypothesis
	CHECK_THROWS_AS(lambda_phi(square, example_b_a()), std::domain_error);
	Mat degenerate(3, 3);
	CHECK_THROWS_AS(lambda_phi(data, BilinearForm(degenerate)), std::domain_error);
}

TEST_CASE("metric conditions on the worked example") {
	for (long x : {0L, 1L, 2L}) {
		ExtensionData data = example_extension(Rat(x));
		MetricConditionReport rep = check_metric_conditions(data, example_b_a());
		CHECK(rep.dual_action);
		CHECK(rep.pairing_matches == (x == 0));  // lambda = lambda_phi only at zero
		CHECK(rep.mu_cyclic);
	}
}

TEST_CASE("shift of a datum and the induced isomorphism") {
	ExtensionData data = example_extension(Rat(1));
	Rng rng(61);
	Mat l_map(3, 3), m_map(3, 3);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j) {
			l_map.at(i, j) = rng.rational(4);
			m_map.at(i, j) = rng.rational(4);
		}
	ExtensionData shifted = shift_data(data, l_map, m_map);
	CHECK(check_extension_data(shifted).all());

	// shifting back recovers the pair
	ExtensionData back = shift_data(shifted, l_map.scaled(Rat(-1)), m_map.scaled(Rat(-1)));
	CHECK(back.lambda == data.lambda);
	CHECK(back.mu == data.mu);

	IsoReport rep = cohomologous_iso(data, shifted, l_map, m_map);
	CHECK(rep.cocycles_shifted);
	CHECK(rep.homomorphism);
	CHECK(rep.all());
	CHECK(det(rep.psi) != 0);

	// identity shift
	IsoReport id = cohomologous_iso(data, data, Mat(3, 3), Mat(3, 3));
	CHECK(id.all());
	CHECK(id.psi == Mat::identity(9));

	// wrong target is reported through the residual, not an exception
	ExtensionData off = shift_data(data, l_map, m_map);
	Vec v = off.lambda.at({0, 1});
	v[2] += 1;
	off.lambda.set({0, 1}, v);
	IsoReport bad = cohomologous_iso(data, off, l_map, m_map);
	CHECK(!bad.cocycles_shifted);
	CHECK(!bad.residual.into_a.is_zero());

	// parameter change alters only the cocycle pair, so the call runs and fails
	IsoReport other = cohomologous_iso(data, example_extension(Rat(2)), l_map, m_map);
	CHECK(!other.all());

	// a different base datum is a structural error
	ExtensionData alien = example_extension(Rat(1));
	alien.phi[0].at(0, 0) += 1;
	CHECK_THROWS_AS(cohomologous_iso(data, alien, l_map, m_map), std::invalid_argument);
}

TEST_CASE("shift solver that keeps mu fixed") {
	// at parameter zero lambda already equals lambda_phi, so L = 0 works
	ExtensionData at0 = example_extension(Rat(0));
	auto l0 = solve_shift_fixing_mu(at0, example_b_a());
	REQUIRE(l0.has_value());
	ExtensionData shifted0 = shift_data(at0, *l0, Mat(3, 3));
	CHECK(shifted0.lambda == lambda_phi(at0, example_b_a()));
	CHECK(shifted0.mu == at0.mu);

	// at nonzero parameter the joint system is infeasible: any L with
	// lambda_phi = lambda + d_a(L) has e_phi(L) != 0
	CHECK(!solve_shift_fixing_mu(example_extension(Rat(1)), example_b_a()).has_value());
	CHECK(!solve_shift_fixing_mu(example_extension(Rat(2)), example_b_a()).has_value());
}

TEST_CASE("shift solver with the cyclic compatibility") {
	for (long x : {0L, 1L, 2L}) {
		Rat xi(x);
		ExtensionData data = example_extension(xi);
		auto sys = shift_system_cyclic(data, example_b_a());
		REQUIRE(sys.has_value());
		// the scaled identity is always in the solution set
		CHECK(shift_set_contains(*sys, l_times_identity(xi)));

		auto l = solve_shift_cyclic(data, example_b_a());
		REQUIRE(l.has_value());
		ExtensionData shifted = shift_data(data, *l, Mat(3, 3));
		CHECK(shifted.lambda == lambda_phi(data, example_b_a()));
		CHECK(check_metric_conditions(shifted, example_b_a()).all());
	}

	// cyclicity certificate of the known representative
	ExtensionData data = example_extension(Rat(1));
	Cochain lphi = lambda_phi(data, example_b_a());
	Mat l_map = l_times_identity(Rat(1));
	BilinearForm b = example_b_a();
	CHECK(b.eval(lphi.eval({0, 1}), l_map.col(2)) == Rat(1));
	for (std::size_t x = 0; x < 3; ++x)
		for (std::size_t y = 0; y < 3; ++y)
			for (std::size_t z = 0; z < 3; ++z)
				CHECK(b.eval(lphi.eval({y, z}), l_map.col(x))
					== b.eval(lphi.eval({x, y}), l_map.col(z)));

	// a non-cyclic mu is rejected up front
	ExtensionData twisted = example_extension(Rat(1));
	Vec v = twisted.mu.at({0, 1});
	v[0] += 1;
	twisted.mu.set({0, 1}, v);
	CHECK_THROWS_AS(shift_system_cyclic(twisted, example_b_a()), std::domain_error);
}

TEST_CASE("assembled metric and transport back") {
	for (long x : {0L, 1L, 2L}) {
		Rat xi(x);
		ExtensionData data = example_extension(xi);
		auto res = metric_via_cyclic(data, example_b_a());
		REQUIRE(res.has_value());
		LieAlgebra original = build_extension(data);
		CHECK(is_metric(res->shifted_algebra, res->metric_shifted));
		CHECK(is_metric(original, res->metric_original));
		CHECK(det(res->psi) != 0);

		// the pullback along psi is exactly the transported gram
		Mat expect = res->psi.transpose() * res->metric_shifted.gram * res->psi;
		CHECK(res->metric_original.gram == expect);
	}

	// fixing-mu route only exists at parameter zero
	CHECK(metric_via_fixing_mu(example_extension(Rat(0)), example_b_a()).has_value());
	CHECK(!metric_via_fixing_mu(example_extension(Rat(1)), example_b_a()).has_value());
}

TEST_CASE("reading a datum off a metric algebra") {
	for (long x : {0L, 1L, 2L}) {
		Rat xi(x);
		LieAlgebra g = example_algebra(xi);
		BilinearForm b = example_metric(xi);
		Extraction ex = extract_extension_data(g, b);
		CHECK(check_extension_data(ex.data).all());
		CHECK(check_metric_conditions(ex.data, ex.b_a).all());
		CHECK(ex.data.h.dim() == 3);
		CHECK(ex.data.dim_a == 3);
		CHECK(ex.data.dim_i == 3);
		CHECK(det(ex.basis_change) != 0);

		// rebuilt total algebra carries the transported metric
		LieAlgebra rebuilt = build_extension(ex.data);
		BilinearForm assembled = assemble_metric(ex.data, ex.b_a);
		CHECK(is_metric(rebuilt, assembled));
	}

	CHECK_THROWS_AS(extract_extension_data(abelian(2), BilinearForm(Mat::identity(2))),
		std::domain_error);
	Mat deg(3, 3);
	deg.at(0, 0) = 1;
	deg.at(1, 1) = 1;
	CHECK_THROWS_AS(extract_extension_data(heisenberg3(), BilinearForm(deg)),
		std::domain_error);
}

TEST_CASE("pipeline bundle") {
	ExamplePipeline p = run_example_pipeline(Rat(1));
	CHECK(p.algebra.dim() == 9);
	CHECK(p.series.nilpotency_class == 5);
	CHECK(p.ideals.i.dim() == 3);
	CHECK(p.ideals.j.dim() == 6);
	REQUIRE(p.cyclic_set.has_value());
	CHECK(shift_set_contains(*p.cyclic_set, l_times_identity(Rat(1))));
	REQUIRE(p.shift.has_value());
	CHECK(is_metric(p.algebra, p.shift->metric_original));
}
