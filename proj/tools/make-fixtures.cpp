// Regenerates the canonical fixture files under data/.
#include <fstream>
#include <iostream>
#include <string>

#include "quadlie/jsonio.hpp"
#include "quadlie/models.hpp"

using namespace quadlie;

namespace {

void dump(const std::string& dir, const std::string& name, const std::string& text) {
	std::string path = dir + "/" + name;
	std::ofstream out(path, std::ios::binary);
	if (!out) {
		std::cerr << "cannot write " << path << "\n";
		std::exit(1);
	}
	out << text;
	std::cout << "wrote " << path << "\n";
}

std::vector<std::vector<std::string>> identity_strings(std::size_t n) {
	return gram_strings(Mat::identity(n));
}

}  // namespace

int main(int argc, char** argv) {
	std::string dir = argc > 1 ? argv[1] : "data";

	// three-dimensional algebra with one bracket and a degenerate form
	{
		AlgebraFile f = algebra_file_of(heisenberg3());
		Mat deg(3, 3);
		deg.at(0, 0) = 1;
		deg.at(1, 1) = 1;
		f.forms["degenerate"] = gram_strings(deg);
		dump(dir, "h3.json", serialize(f));
	}

	// the worked-example extension datum with its parameter left symbolic
	{
		ExtensionFile f;
		f.h = algebra_file_of(heisenberg3());
		f.dim_a = 3;
		f.dim_i = 3;
		for (const Mat& m : coad(heisenberg3()))
			f.rho.push_back(gram_strings(m));
		ExtensionData numeric = example_extension(Rat(0));
		for (const Mat& m : numeric.phi)
			f.phi.push_back(gram_strings(m));
		f.lambda = {
			{0, 1, {"0", "0", "1+xi"}},
			{0, 2, {"0", "-1", "0"}},
			{1, 2, {"1", "0", "0"}},
		};
		f.mu = {
			{0, 1, {"0", "0", "-2*xi"}},
			{0, 2, {"0", "2*xi", "0"}},
			{1, 2, {"-2*xi", "0", "0"}},
		};
		f.b_a = identity_strings(3);
		f.parameters = {"xi"};
		dump(dir, "example21.ext.json", serialize(f));
	}

	// worked-example total algebra at xi = 1 with a transported invariant metric
	{
		ExamplePipeline p = run_example_pipeline(Rat(1));
		AlgebraFile f = algebra_file_of(p.algebra);
		f.forms["metric"] = gram_strings(p.shift->metric_original.gram);
		dump(dir, "example21.lie.json", serialize(f));
	}

	// dual numbers with the exchange pairing
	{
		AlgebraFile f = algebra_file_of(dual_numbers());
		f.forms["theta"] = gram_strings(truncated_poly_pairing(2).gram);
		dump(dir, "dualnumbers.assoc.json", serialize(f));
	}

	return 0;
}
