#include "quadlie/models.hpp"

namespace quadlie {

LieAlgebra abelian(std::size_t n) {
	return LieAlgebra(n, {});
}

LieAlgebra heisenberg3() {
	return LieAlgebra(3, {{0, 1, 2, Rat(1)}}, {"x1", "x2", "x3"});
}

AssocAlgebra scalar_algebra() {
	return truncated_poly(1);
}

AssocAlgebra truncated_poly(std::size_t k) {
	if (k == 0)
		throw std::invalid_argument("truncated_poly: need k >= 1");
	std::vector<ProductTriple> triples;
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i; j < k; ++j)
			if (i + j < k)
				triples.push_back({i, j, i + j, Rat(1)});
	Vec unit(k, Rat(0));
	unit[0] = 1;
	std::vector<std::string> names{"1"};
	for (std::size_t p = 1; p < k; ++p)
		names.push_back(p == 1 ? "t" : "t^" + std::to_string(p));
	return AssocAlgebra(k, triples, unit, names);
}

AssocAlgebra dual_numbers() {
	return truncated_poly(2);
}

BilinearForm truncated_poly_pairing(std::size_t k) {
	Mat gram(k, k);
	for (std::size_t i = 0; i < k; ++i)
		gram.at(i, k - 1 - i) = 1;
	return BilinearForm(gram);
}

ExtensionData example_extension(const Rat& xi) {
	LieAlgebra h = heisenberg3();
	std::vector<Mat> rho = coad(h);
	std::vector<Mat> phi(3, Mat(3, 3));
	phi[0].at(2, 1) = 1;   // second a-vector pairs into the third dual direction
	phi[0].at(1, 2) = -1;
	phi[1].at(2, 0) = -1;
	phi[1].at(0, 2) = 1;
	phi[2].at(1, 0) = 1;
	phi[2].at(0, 1) = -1;
	Cochain lambda(2, 3, 3), mu(2, 3, 3);
	lambda.set({0, 1}, {Rat(0), Rat(0), Rat(1) + xi});
	lambda.set({1, 2}, {Rat(1), Rat(0), Rat(0)});
	lambda.set({0, 2}, {Rat(0), Rat(-1), Rat(0)});
	Rat m2 = Rat(-2) * xi;
	mu.set({0, 1}, {Rat(0), Rat(0), m2});
	mu.set({1, 2}, {m2, Rat(0), Rat(0)});
	mu.set({0, 2}, {Rat(0), -m2, Rat(0)});
	return ExtensionData(std::move(h), 3, 3, std::move(rho), std::move(phi),
		std::move(lambda), std::move(mu));
}

BilinearForm example_b_a() {
	return BilinearForm(Mat::identity(3));
}

LieAlgebra example_algebra(const Rat& xi) {
	return build_extension(example_extension(xi));
}

BilinearForm example_metric(const Rat& xi) {
	Mat gram(9, 9);
	for (std::size_t j = 0; j < 3; ++j) {
		gram.at(j, j) = xi * xi;
		gram.at(j, j + 3) = -xi;
		gram.at(j + 3, j) = -xi;
		gram.at(j, j + 6) = 1;
		gram.at(j + 6, j) = 1;
		gram.at(j + 3, j + 3) = 1;
	}
	return BilinearForm(gram);
}

ExamplePipeline run_example_pipeline(const Rat& xi) {
	ExtensionData data = example_extension(xi);
	BilinearForm b_a = example_b_a();
	LieAlgebra algebra = build_extension(data);
	CentralSeriesReport series = central_series(algebra);
	CanonicalIdeals ideals = canonical_ideals(algebra);
	std::optional<AffineSolution> cyclic_set = shift_system_cyclic(data, b_a);
	std::optional<ShiftMetricResult> shift = metric_via_cyclic(data, b_a);
	return ExamplePipeline{std::move(data), std::move(b_a), std::move(algebra),
		std::move(series), std::move(ideals), std::move(cyclic_set), std::move(shift)};
}

}  // namespace quadlie
