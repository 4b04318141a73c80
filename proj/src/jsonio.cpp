#include "quadlie/jsonio.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "json.hpp"

namespace quadlie {

using nlohmann::json;

namespace {

bool is_identifier(const std::string& s) {
	if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	for (char c : s)
		if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
			return false;
	return true;
}

}  // namespace

Rat eval_affine(const std::string& expr, const std::map<std::string, Rat>& params) {
	std::string s;
	for (char c : expr)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	if (s.empty())
		throw ParseError("empty rational expression");
	Rat acc = 0;
	std::size_t i = 0;
	while (i < s.size()) {
		int sgn = 1;
		while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
			if (s[i] == '-')
				sgn = -sgn;
			++i;
		}
		std::size_t start = i;
		while (i < s.size() && s[i] != '+' && s[i] != '-')
			++i;
		std::string term = s.substr(start, i - start);
		if (term.empty())
			throw ParseError("malformed expression '" + expr + "'");
		Rat coeff(sgn);
		std::string param;
		std::size_t fpos = 0;
		while (fpos <= term.size()) {
			std::size_t stop = term.find('*', fpos);
			if (stop == std::string::npos)
				stop = term.size();
			std::string factor = term.substr(fpos, stop - fpos);
			if (factor.empty())
				throw ParseError("malformed expression '" + expr + "'");
			if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
				try {
					coeff *= rat_from_string(factor);
				} catch (const std::exception&) {
					throw ParseError("bad rational literal '" + factor + "'");
				}
			} else if (is_identifier(factor)) {
				if (!param.empty())
					throw ParseError("parameter expression '" + expr + "' is not affine");
				param = factor;
			} else {
				throw ParseError("bad factor '" + factor + "' in '" + expr + "'");
			}
			if (stop == term.size())
				break;
			fpos = stop + 1;
		}
		if (param.empty()) {
			acc += coeff;
		} else {
			auto it = params.find(param);
			if (it == params.end())
				throw ParseError("undeclared parameter '" + param + "'");
			acc += coeff * it->second;
		}
	}
	return Rat(acc);
}

namespace {

Rat plain_rational(const std::string& s, const std::string& field) {
	try {
		return rat_from_string(s);
	} catch (const std::exception&) {
		throw ParseError("field '" + field + "': bad rational string '" + s + "'");
	}
}

std::size_t get_index(const json& j, const std::string& field) {
	if (!j.is_number_unsigned())
		throw ParseError("field '" + field + "' must be a non-negative integer");
	return j.get<std::size_t>();
}

std::string get_string(const json& j, const std::string& field) {
	if (!j.is_string())
		throw ParseError("field '" + field + "' must be a string");
	return j.get<std::string>();
}

const json& need(const json& j, const std::string& key, const std::string& where) {
	auto it = j.find(key);
	if (it == j.end())
		throw ParseError(where + ": missing field '" + key + "'");
	return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
	if (!j.is_array())
		throw ParseError("field '" + field + "' must be an array");
	std::vector<std::string> out;
	for (const json& e : j)
		out.push_back(get_string(e, field));
	return out;
}

std::vector<std::vector<std::string>> string_matrix(const json& j, const std::string& field) {
	if (!j.is_array())
		throw ParseError("field '" + field + "' must be an array of rows");
	std::vector<std::vector<std::string>> out;
	for (const json& row : j)
		out.push_back(string_list(row, field));
	return out;
}

AlgebraFile algebra_from_json(const json& j, const std::string& where) {
	if (!j.is_object())
		throw ParseError(where + ": expected an object");
	AlgebraFile out;
	out.format_version = get_string(need(j, "format_version", where), "format_version");
	if (out.format_version != "1")
		throw ParseError(where + ": unsupported format_version '" + out.format_version + "'");
	out.kind = get_string(need(j, "kind", where), "kind");
	if (out.kind != "lie" && out.kind != "assoc")
		throw ParseError(where + ": kind must be 'lie' or 'assoc'");
	out.dim = get_index(need(j, "dim", where), "dim");
	out.basis_names = string_list(need(j, "basis_names", where), "basis_names");
	if (out.basis_names.size() != out.dim)
		throw ParseError(where + ": basis_names must have exactly dim entries");
	const json& consts = need(j, "constants", where);
	if (!consts.is_array())
		throw ParseError(where + ": constants must be an array");
	for (const json& e : consts) {
		AlgebraFile::Constant c;
		c.i = get_index(need(e, "i", where + ".constants"), "i");
		c.j = get_index(need(e, "j", where + ".constants"), "j");
		c.k = get_index(need(e, "k", where + ".constants"), "k");
		c.c = get_string(need(e, "c", where + ".constants"), "c");
		if (c.i >= out.dim || c.j >= out.dim || c.k >= out.dim)
			throw ParseError(where + ": constant index out of range");
		if (out.kind == "lie" && c.i >= c.j)
			throw ParseError(where + ": lie constants need i < j");
		if (out.kind == "assoc" && c.i > c.j)
			throw ParseError(where + ": assoc constants need i <= j");
		plain_rational(c.c, where + ".constants.c");
		out.constants.push_back(std::move(c));
	}
	if (j.contains("unit")) {
		if (out.kind != "assoc")
			throw ParseError(where + ": unit only belongs to assoc files");
		out.unit = string_list(j.at("unit"), "unit");
		if (out.unit->size() != out.dim)
			throw ParseError(where + ": unit must have dim entries");
		for (const std::string& s : *out.unit)
			plain_rational(s, where + ".unit");
	} else if (out.kind == "assoc") {
		throw ParseError(where + ": assoc files need a unit vector");
	}
	if (j.contains("forms")) {
		const json& forms = j.at("forms");
		if (!forms.is_object())
			throw ParseError(where + ": forms must map names to gram matrices");
		for (auto it = forms.begin(); it != forms.end(); ++it) {
			auto gram = string_matrix(it.value(), where + ".forms." + it.key());
			if (gram.size() != out.dim)
				throw ParseError(where + ": form '" + it.key() + "' must be a dim x dim gram");
			for (const auto& row : gram) {
				if (row.size() != out.dim)
					throw ParseError(where + ": form '" + it.key() + "' must be a dim x dim gram");
				for (const std::string& s : row)
					plain_rational(s, where + ".forms." + it.key());
			}
			out.forms[it.key()] = std::move(gram);
		}
	}
	return out;
}

json algebra_to_json(const AlgebraFile& file) {
	json j;
	j["format_version"] = file.format_version;
	j["kind"] = file.kind;
	j["dim"] = file.dim;
	j["basis_names"] = file.basis_names;
	json consts = json::array();
	for (const auto& c : file.constants)
		consts.push_back(json{{"c", c.c}, {"i", c.i}, {"j", c.j}, {"k", c.k}});
	j["constants"] = std::move(consts);
	if (file.unit)
		j["unit"] = *file.unit;
	if (!file.forms.empty()) {
		json forms = json::object();
		for (const auto& [name, gram] : file.forms)
			forms[name] = gram;
		j["forms"] = std::move(forms);
	}
	return j;
}

json parse_text(const std::string& text) {
	try {
		return json::parse(text);
	} catch (const json::parse_error& e) {
		throw ParseError(std::string("invalid JSON: ") + e.what());
	}
}

void validate_expressions(const ExtensionFile& file) {
	std::map<std::string, Rat> dummy;
	for (const std::string& p : file.parameters) {
		if (!is_identifier(p))
			throw ParseError("bad parameter name '" + p + "'");
		dummy[p] = 0;
	}
	auto check = [&](const std::string& s) { eval_affine(s, dummy); };
	for (const auto& mat : file.rho)
		for (const auto& row : mat)
			for (const auto& s : row)
				check(s);
	for (const auto& mat : file.phi)
		for (const auto& row : mat)
			for (const auto& s : row)
				check(s);
	for (const auto& e : file.lambda)
		for (const auto& s : e.v)
			check(s);
	for (const auto& e : file.mu)
		for (const auto& s : e.v)
			check(s);
	if (file.b_a)
		for (const auto& row : *file.b_a)
			for (const auto& s : row)
				check(s);
}

std::vector<ExtensionFile::PairEntry> pair_entries(const json& j, const std::string& field,
	std::size_t h_dim, std::size_t value_dim) {
	if (!j.is_array())
		throw ParseError("field '" + field + "' must be an array");
	std::vector<ExtensionFile::PairEntry> out;
	for (const json& e : j) {
		ExtensionFile::PairEntry p;
		p.i = get_index(need(e, "i", field), "i");
		p.j = get_index(need(e, "j", field), "j");
		p.v = string_list(need(e, "v", field), "v");
		if (p.i >= p.j || p.j >= h_dim)
			throw ParseError("field '" + field + "': entries need i < j < dim h");
		if (p.v.size() != value_dim)
			throw ParseError("field '" + field + "': value vector has the wrong dimension");
		out.push_back(std::move(p));
	}
	return out;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
	return algebra_from_json(parse_text(text), "algebra file");
}

ExtensionFile parse_extension_file(const std::string& text) {
	json j = parse_text(text);
	if (!j.is_object())
		throw ParseError("extension file: expected an object");
	ExtensionFile out;
	out.format_version = get_string(need(j, "format_version", "extension file"), "format_version");
	if (out.format_version != "1")
		throw ParseError("extension file: unsupported format_version '" + out.format_version + "'");
	out.h = algebra_from_json(need(j, "h", "extension file"), "extension file.h");
	if (out.h.kind != "lie")
		throw ParseError("extension file: h must be a lie algebra file");
	out.dim_a = get_index(need(j, "dim_a", "extension file"), "dim_a");
	out.dim_i = get_index(need(j, "dim_i", "extension file"), "dim_i");
	const std::size_t r = out.h.dim;
	auto matrices = [&](const char* key, std::size_t rows, std::size_t cols) {
		const json& arr = need(j, key, "extension file");
		if (!arr.is_array() || arr.size() != r)
			throw ParseError(std::string("extension file: '") + key
				+ "' needs one matrix per h-basis element");
		std::vector<std::vector<std::vector<std::string>>> out_mats;
		for (const json& m : arr) {
			auto mat = string_matrix(m, key);
			if (mat.size() != rows)
				throw ParseError(std::string("extension file: '") + key + "' matrix has wrong row count");
			for (const auto& row : mat)
				if (row.size() != cols)
					throw ParseError(std::string("extension file: '") + key + "' matrix has wrong column count");
			out_mats.push_back(std::move(mat));
		}
		return out_mats;
	};
	out.rho = matrices("rho", out.dim_i, out.dim_i);
	out.phi = matrices("phi", out.dim_i, out.dim_a);
	out.lambda = pair_entries(need(j, "lambda", "extension file"), "lambda", r, out.dim_a);
	out.mu = pair_entries(need(j, "mu", "extension file"), "mu", r, out.dim_i);
	if (j.contains("b_a")) {
		auto gram = string_matrix(j.at("b_a"), "b_a");
		if (gram.size() != out.dim_a)
			throw ParseError("extension file: b_a must be a dim_a x dim_a gram");
		for (const auto& row : gram)
			if (row.size() != out.dim_a)
				throw ParseError("extension file: b_a must be a dim_a x dim_a gram");
		out.b_a = std::move(gram);
	}
	if (j.contains("parameters"))
		out.parameters = string_list(j.at("parameters"), "parameters");
	validate_expressions(out);
	return out;
}

std::string serialize(const AlgebraFile& file) {
	return algebra_to_json(file).dump(2) + "\n";
}

std::string serialize(const ExtensionFile& file) {
	json j;
	j["format_version"] = file.format_version;
	j["h"] = algebra_to_json(file.h);
	j["dim_a"] = file.dim_a;
	j["dim_i"] = file.dim_i;
	j["rho"] = file.rho;
	j["phi"] = file.phi;
	auto pairs = [](const std::vector<ExtensionFile::PairEntry>& entries) {
		json arr = json::array();
		for (const auto& e : entries)
			arr.push_back(json{{"i", e.i}, {"j", e.j}, {"v", e.v}});
		return arr;
	};
	j["lambda"] = pairs(file.lambda);
	j["mu"] = pairs(file.mu);
	if (file.b_a)
		j["b_a"] = *file.b_a;
	if (!file.parameters.empty())
		j["parameters"] = file.parameters;
	return j.dump(2) + "\n";
}

LieAlgebra to_lie_algebra(const AlgebraFile& file) {
	if (file.kind != "lie")
		throw ParseError("expected a lie algebra file");
	std::vector<StructureTriple> triples;
	for (const auto& c : file.constants)
		triples.push_back({c.i, c.j, c.k, plain_rational(c.c, "constants.c")});
	return LieAlgebra(file.dim, triples, file.basis_names);
}

AssocAlgebra to_assoc_algebra(const AlgebraFile& file) {
	if (file.kind != "assoc")
		throw ParseError("expected an assoc algebra file");
	std::vector<ProductTriple> triples;
	for (const auto& c : file.constants)
		triples.push_back({c.i, c.j, c.k, plain_rational(c.c, "constants.c")});
	Vec unit;
	for (const std::string& s : *file.unit)
		unit.push_back(plain_rational(s, "unit"));
	return AssocAlgebra(file.dim, triples, unit, file.basis_names);
}

std::map<std::string, BilinearForm> forms_of(const AlgebraFile& file) {
	std::map<std::string, BilinearForm> out;
	for (const auto& [name, gram] : file.forms) {
		Mat m(file.dim, file.dim);
		for (std::size_t i = 0; i < file.dim; ++i)
			for (std::size_t j = 0; j < file.dim; ++j)
				m.at(i, j) = plain_rational(gram[i][j], "forms." + name);
		try {
			out.emplace(name, BilinearForm(std::move(m)));
		} catch (const std::invalid_argument& e) {
			throw ParseError("form '" + name + "': " + e.what());
		}
	}
	return out;
}

ExtensionData to_extension_data(const ExtensionFile& file,
	const std::map<std::string, Rat>& params) {
	std::map<std::string, Rat> values;
	for (const std::string& p : file.parameters) {
		auto it = params.find(p);
		if (it == params.end())
			throw ParseError("parameter '" + p + "' needs a value");
		values[p] = it->second;
	}
	LieAlgebra h = to_lie_algebra(file.h);
	auto to_mats = [&](const std::vector<std::vector<std::vector<std::string>>>& raw,
		std::size_t rows, std::size_t cols) {
		std::vector<Mat> mats;
		for (const auto& m : raw) {
			Mat mat(rows, cols);
			for (std::size_t i = 0; i < rows; ++i)
				for (std::size_t j = 0; j < cols; ++j)
					mat.at(i, j) = eval_affine(m[i][j], values);
			mats.push_back(std::move(mat));
		}
		return mats;
	};
	std::vector<Mat> rho = to_mats(file.rho, file.dim_i, file.dim_i);
	std::vector<Mat> phi = to_mats(file.phi, file.dim_i, file.dim_a);
	Cochain lambda(2, h.dim(), file.dim_a), mu(2, h.dim(), file.dim_i);
	for (const auto& e : file.lambda) {
		Vec v;
		for (const std::string& s : e.v)
			v.push_back(eval_affine(s, values));
		lambda.set({e.i, e.j}, std::move(v));
	}
	for (const auto& e : file.mu) {
		Vec v;
		for (const std::string& s : e.v)
			v.push_back(eval_affine(s, values));
		mu.set({e.i, e.j}, std::move(v));
	}
	return ExtensionData(std::move(h), file.dim_a, file.dim_i,
		std::move(rho), std::move(phi), std::move(lambda), std::move(mu));
}

std::optional<BilinearForm> b_a_of(const ExtensionFile& file,
	const std::map<std::string, Rat>& params) {
	if (!file.b_a)
		return std::nullopt;
	Mat gram(file.dim_a, file.dim_a);
	for (std::size_t i = 0; i < file.dim_a; ++i)
		for (std::size_t j = 0; j < file.dim_a; ++j)
			gram.at(i, j) = eval_affine((*file.b_a)[i][j], params);
	return BilinearForm(std::move(gram));
}

AlgebraFile algebra_file_of(const LieAlgebra& g) {
	AlgebraFile out;
	out.kind = "lie";
	out.dim = g.dim();
	out.basis_names = g.basis_names();
	std::vector<StructureTriple> sorted = g.triples();
	std::sort(sorted.begin(), sorted.end(), [](const StructureTriple& a, const StructureTriple& b) {
		return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
	});
	for (const auto& t : sorted)
		out.constants.push_back({t.i, t.j, t.k, rat_to_string(t.c)});
	return out;
}

AlgebraFile algebra_file_of(const AssocAlgebra& s) {
	AlgebraFile out;
	out.kind = "assoc";
	out.dim = s.dim();
	out.basis_names = s.basis_names();
	std::vector<ProductTriple> sorted = s.triples();
	std::sort(sorted.begin(), sorted.end(), [](const ProductTriple& a, const ProductTriple& b) {
		return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
	});
	for (const auto& t : sorted)
		out.constants.push_back({t.i, t.j, t.k, rat_to_string(t.c)});
	std::vector<std::string> unit;
	for (const Rat& c : s.unit())
		unit.push_back(rat_to_string(c));
	out.unit = std::move(unit);
	return out;
}

std::vector<std::vector<std::string>> gram_strings(const Mat& gram) {
	std::vector<std::vector<std::string>> out;
	for (std::size_t i = 0; i < gram.rows(); ++i) {
		std::vector<std::string> row;
		for (std::size_t j = 0; j < gram.cols(); ++j)
			row.push_back(rat_to_string(gram.at(i, j)));
		out.push_back(std::move(row));
	}
	return out;
}

}  // namespace quadlie
