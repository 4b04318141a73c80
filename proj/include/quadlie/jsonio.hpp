#ifndef QUADLIE_JSONIO_HPP
#define QUADLIE_JSONIO_HPP

#include <map>

#include "quadlie/current.hpp"
#include "quadlie/extension.hpp"

namespace quadlie {

class ParseError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Affine expression in named parameters: sums of terms, each a product of
/// rational literals and at most one parameter ("1+xi", "-2*xi", "3/4").
/// Rejects repeated parameters in a term and undeclared names.
Rat eval_affine(const std::string& expr, const std::map<std::string, Rat>& params);

/// On-disk algebra: raw strings are kept so that serialization reproduces a
/// canonical file byte for byte.
struct AlgebraFile {
	struct Constant {
		std::size_t i = 0, j = 0, k = 0;
		std::string c;
	};

	std::string format_version = "1";
	std::string kind;  // "lie" or "assoc"
	std::size_t dim = 0;
	std::vector<std::string> basis_names;
	std::vector<Constant> constants;
	std::optional<std::vector<std::string>> unit;             // assoc only
	std::map<std::string, std::vector<std::vector<std::string>>> forms;
};

/// On-disk extension datum; entries may reference declared parameters.
struct ExtensionFile {
	struct PairEntry {
		std::size_t i = 0, j = 0;
		std::vector<std::string> v;
	};

	std::string format_version = "1";
	AlgebraFile h;
	std::size_t dim_a = 0, dim_i = 0;
	std::vector<std::vector<std::vector<std::string>>> rho;  // per h-basis index
	std::vector<std::vector<std::vector<std::string>>> phi;
	std::vector<PairEntry> lambda;
	std::vector<PairEntry> mu;
	std::optional<std::vector<std::vector<std::string>>> b_a;
	std::vector<std::string> parameters;
};

AlgebraFile parse_algebra_file(const std::string& text);
ExtensionFile parse_extension_file(const std::string& text);
std::string serialize(const AlgebraFile& file);
std::string serialize(const ExtensionFile& file);

LieAlgebra to_lie_algebra(const AlgebraFile& file);
AssocAlgebra to_assoc_algebra(const AlgebraFile& file);
std::map<std::string, BilinearForm> forms_of(const AlgebraFile& file);
ExtensionData to_extension_data(const ExtensionFile& file,
	const std::map<std::string, Rat>& params);
std::optional<BilinearForm> b_a_of(const ExtensionFile& file,
	const std::map<std::string, Rat>& params);

AlgebraFile algebra_file_of(const LieAlgebra& g);
AlgebraFile algebra_file_of(const AssocAlgebra& s);
std::vector<std::vector<std::string>> gram_strings(const Mat& gram);

}  // namespace quadlie

#endif
