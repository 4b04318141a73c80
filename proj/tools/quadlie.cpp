#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadlie/jsonio.hpp"
#include "quadlie/models.hpp"

using namespace quadlie;
using nlohmann::json;

namespace {

struct Options {
	std::string input;
	std::string assoc;
	std::string form_name;
	std::string assoc_form_name;
	std::string xi;
	std::string output;
	std::uint64_t seed = 1;
	unsigned long long budget = 10000ULL;
	bool json_mode = false;
};

std::string slurp(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

std::map<std::string, Rat> param_map(const Options& opt) {
	std::map<std::string, Rat> params;
	if (!opt.xi.empty())
		params["xi"] = rat_from_string(opt.xi);
	return params;
}

json vec_json(const Vec& v) {
	json arr = json::array();
	for (const Rat& c : v)
		arr.push_back(rat_to_string(c));
	return arr;
}

json mat_json(const Mat& m) {
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
		rows.push_back(vec_json(m.row(i)));
	return rows;
}

json subspace_json(const Subspace& s) {
	return json{{"dim", s.dim()}, {"basis", mat_json(s.basis())}};
}

std::string format_combo(const std::vector<std::string>& names, const Vec& v) {
	std::string out;
	for (std::size_t k = 0; k < v.size(); ++k) {
		if (v[k] == 0)
			continue;
		std::string coeff = rat_to_string(v[k]);
		if (out.empty()) {
			if (coeff == "1")
				coeff.clear();
			else if (coeff == "-1")
				coeff = "-";
		} else if (sgn(v[k]) > 0) {
			out += " + ";
			if (coeff == "1")
				coeff.clear();
		} else {
			out += " - ";
			coeff = coeff.substr(1);
			if (coeff == "1")
				coeff.clear();
		}
		if (!coeff.empty())
			coeff += " ";
		out += coeff + names[k];
	}
	return out.empty() ? "0" : out;
}

void print_matrix(std::ostream& os, const Mat& m, const std::string& indent) {
	for (std::size_t i = 0; i < m.rows(); ++i) {
		os << indent;
		for (std::size_t j = 0; j < m.cols(); ++j)
			os << (j ? " " : "") << rat_to_string(m.at(i, j));
		os << "\n";
	}
}

void print_bracket_table(std::ostream& os, const LieAlgebra& g) {
	const auto& names = g.basis_names();
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t j = i + 1; j < g.dim(); ++j) {
			const Vec& b = g.bracket_basis(i, j);
			if (!vec_is_zero(b))
				os << "  [" << names[i] << "," << names[j] << "] = "
				   << format_combo(names, b) << "\n";
		}
}

void emit(const Options& opt, const json& report, const std::string& text) {
	std::string payload = opt.json_mode ? report.dump(2) + "\n" : text;
	if (opt.output.empty()) {
		std::cout << payload;
		return;
	}
	std::ofstream out(opt.output, std::ios::binary);
	if (!out)
		throw ParseError("cannot write '" + opt.output + "'");
	out << payload;
}

/// Algebra files carry "kind"; extension files carry "h".
bool looks_like_extension(const std::string& text) {
	json j = json::parse(text, nullptr, false);
	return j.is_object() && j.contains("h");
}

LieAlgebra load_lie(const Options& opt) {
	if (opt.input.empty())
		throw ParseError("this command needs --input");
	std::string text = slurp(opt.input);
	if (looks_like_extension(text))
		return build_extension(to_extension_data(parse_extension_file(text), param_map(opt)));
	return to_lie_algebra(parse_algebra_file(text));
}

BilinearForm pick_form(const Options& opt, const AlgebraFile& file, const LieAlgebra& g,
	bool fall_back_to_invariant) {
	auto forms = forms_of(file);
	if (!opt.form_name.empty()) {
		auto it = forms.find(opt.form_name);
		if (it == forms.end())
			throw ParseError("no form named '" + opt.form_name + "' in '" + opt.input + "'");
		return it->second;
	}
	if (forms.size() == 1)
		return forms.begin()->second;
	if (forms.empty() && fall_back_to_invariant)
		return nonzero_invariant_form(g);
	if (forms.empty())
		throw ParseError("'" + opt.input + "' carries no forms; pass a file with one or use --form");
	throw ParseError("'" + opt.input + "' has several forms; pick one with --form");
}

int cmd_validate(const Options& opt) {
	std::string text = slurp(opt.input);
	json report;
	std::string what;
	if (looks_like_extension(text)) {
		ExtensionFile file = parse_extension_file(text);
		ExtensionData data = to_extension_data(file, param_map(opt));
		ExtensionChecks checks = check_extension_data(data);
		report = json{{"input", opt.input}, {"kind", "extension"},
			{"rho_representation", checks.rho_representation},
			{"phi_equivariant", checks.phi_equivariant},
			{"pair_closed", checks.pair_closed}, {"valid", checks.all()}};
		if (!checks.all()) {
			report["detail"] = checks.detail;
			emit(opt, report, "invalid extension datum: " + checks.detail + "\n");
			return 1;
		}
		what = "extension datum with dim h = " + std::to_string(data.h.dim());
	} else {
		AlgebraFile file = parse_algebra_file(text);
		if (file.kind == "lie") {
			LieAlgebra g = to_lie_algebra(file);  // throws on a Jacobi violation
			what = "lie algebra of dim " + std::to_string(g.dim());
		} else {
			AssocAlgebra s = to_assoc_algebra(file);
			what = "assoc algebra of dim " + std::to_string(s.dim());
		}
		forms_of(file);  // validates symmetry of every attached gram
		report = json{{"input", opt.input}, {"kind", file.kind}, {"valid", true}};
	}
	emit(opt, report, "valid " + what + "\n");
	return 0;
}

int cmd_series(const Options& opt) {
	LieAlgebra g = load_lie(opt);
	CentralSeriesReport s = central_series(g);
	json upper = json::array(), lower = json::array();
	std::ostringstream text;
	text << "ascending central series:\n";
	for (std::size_t k = 0; k < s.upper.size(); ++k) {
		upper.push_back(subspace_json(s.upper[k]));
		text << "  Z_" << (k + 1) << ": dim " << s.upper[k].dim() << "\n";
	}
	text << "descending central series:\n";
	for (std::size_t k = 0; k < s.lower.size(); ++k) {
		lower.push_back(subspace_json(s.lower[k]));
		text << "  g^" << k << ": dim " << s.lower[k].dim() << "\n";
	}
	json report{{"upper", upper}, {"lower", lower},
		{"stabilization_index", s.stabilization_index}};
	if (s.nilpotency_class) {
		report["nilpotency_class"] = *s.nilpotency_class;
		text << "nilpotent of class " << *s.nilpotency_class << "\n";
	} else {
		report["nilpotency_class"] = nullptr;
		text << "not nilpotent\n";
	}
	emit(opt, report, text.str());
	return 0;
}

int cmd_ideals(const Options& opt) {
	LieAlgebra g = load_lie(opt);
	CanonicalIdeals ci = canonical_ideals(g);
	CanonicalIdealChecks checks = verify_canonical_ideals(g);
	if (!checks.all())
		throw TheoremViolation("canonical ideal properties failed on this input");
	json report{{"i", subspace_json(ci.i)}, {"j", subspace_json(ci.j)},
		{"properties_verified", true}};
	std::ostringstream text;
	text << "i(g): dim " << ci.i.dim() << "\n";
	print_matrix(text, ci.i.basis(), "  ");
	text << "J(g): dim " << ci.j.dim() << "\n";
	print_matrix(text, ci.j.basis(), "  ");
	text << "verified: i inside J, sum formula, J abelian, [g, J] inside i\n";
	emit(opt, report, text.str());
	return 0;
}

int cmd_invforms(const Options& opt) {
	LieAlgebra g = load_lie(opt);
	InvariantFormSpace space = invariant_forms(g);
	json basis = json::array();
	std::ostringstream text;
	text << "invariant symmetric forms: dim " << space.dim() << "\n";
	for (std::size_t k = 0; k < space.dim(); ++k) {
		basis.push_back(mat_json(space.basis[k].gram));
		text << "basis form " << (k + 1) << ":\n";
		print_matrix(text, space.basis[k].gram, "  ");
	}
	emit(opt, json{{"dim", space.dim()}, {"basis", basis}}, text.str());
	return 0;
}

int cmd_metric(const Options& opt) {
	LieAlgebra g = load_lie(opt);
	MetricSearchConfig cfg;
	cfg.seed = opt.seed;
	cfg.grid_budget = opt.budget;
	MetricSearchResult r = find_invariant_metric(g, cfg);
	json report{{"form_space_dim", r.form_space_dim},
		{"grid_points_checked", r.grid_points_checked},
		{"grid_points_needed", r.grid_points_needed}};
	std::ostringstream text;
	switch (r.outcome) {
	case MetricSearchOutcome::found:
		report["outcome"] = "found";
		report["metric"] = mat_json(r.metric->gram);
		report["coefficients"] = vec_json(r.coefficients);
		text << "invariant metric found:\n";
		print_matrix(text, r.metric->gram, "  ");
		break;
	case MetricSearchOutcome::certified_none:
		report["outcome"] = "certified_none";
		text << "no invariant metric (det==0 certificate over " << r.grid_points_checked
		     << " grid points)\n";
		break;
	case MetricSearchOutcome::inconclusive:
		report["outcome"] = "inconclusive";
		text << "inconclusive: grid needs " << r.grid_points_needed
		     << " points, budget is " << opt.budget << "\n";
		break;
	}
	emit(opt, report, text.str());
	return 0;
}

int cmd_extend(const Options& opt) {
	if (opt.input.empty())
		throw ParseError("extend needs --input");
	ExtensionFile file = parse_extension_file(slurp(opt.input));
	ExtensionData data = to_extension_data(file, param_map(opt));
	ExtensionChecks checks = check_extension_data(data);
	if (!checks.all())
		throw StructureError("extension datum is not closed: " + checks.detail);
	LieAlgebra g = build_extension(data);
	AlgebraFile out_file = algebra_file_of(g);
	if (!opt.output.empty()) {
		std::ofstream out(opt.output, std::ios::binary);
		if (!out)
			throw ParseError("cannot write '" + opt.output + "'");
		out << serialize(out_file);
	}
	std::ostringstream text;
	text << "total algebra of dim " << g.dim() << "\n";
	print_bracket_table(text, g);
	json report{{"dim", g.dim()}, {"algebra", json::parse(serialize(out_file))}};
	if (opt.output.empty())
		emit(opt, report, text.str());
	else
		std::cout << "wrote " << opt.output << "\n";
	return 0;
}

int cmd_decompose(const Options& opt) {
	if (opt.input.empty())
		throw ParseError("decompose needs --input");
	AlgebraFile file = parse_algebra_file(slurp(opt.input));
	LieAlgebra g = to_lie_algebra(file);
	BilinearForm b = pick_form(opt, file, g, false);
	Extraction ex = extract_extension_data(g, b);
	json report{
		{"dim_h", ex.data.h.dim()}, {"dim_a", ex.data.dim_a}, {"dim_i", ex.data.dim_i},
		{"basis_change", mat_json(ex.basis_change)},
		{"b_a", mat_json(ex.b_a.gram)}};
	std::ostringstream text;
	text << "adapted decomposition: dim h = " << ex.data.h.dim()
	     << ", dim a = " << ex.data.dim_a << ", dim i = " << ex.data.dim_i << "\n";
	text << "columns of the basis change (h-lifts, a, i):\n";
	print_matrix(text, ex.basis_change, "  ");
	text << "form on a:\n";
	print_matrix(text, ex.b_a.gram, "  ");
	emit(opt, report, text.str());
	return 0;
}

int cmd_criteria(const Options& opt) {
	if (opt.input.empty())
		throw ParseError("criteria needs --input");
	ExtensionFile file = parse_extension_file(slurp(opt.input));
	auto params = param_map(opt);
	ExtensionData data = to_extension_data(file, params);
	auto b_a = b_a_of(file, params);
	if (!b_a)
		throw ParseError("criteria needs a b_a gram in the extension file");
	json report;
	std::ostringstream text;
	auto run = [&](const char* name, std::optional<Mat> (*solver)(const ExtensionData&, const BilinearForm&)) {
		std::optional<Mat> l = solver(data, *b_a);
		if (l) {
			report[name] = mat_json(*l);
			text << name << ": solution L found\n";
			print_matrix(text, *l, "  ");
			auto res = name == std::string("fixing_mu")
				? metric_via_fixing_mu(data, *b_a) : metric_via_cyclic(data, *b_a);
			report[std::string(name) + "_metric"] = mat_json(res->metric_original.gram);
			text << "transported invariant metric:\n";
			print_matrix(text, res->metric_original.gram, "  ");
		} else {
			report[name] = nullptr;
			text << name << ": no solution\n";
		}
	};
	run("fixing_mu", solve_shift_fixing_mu);
	run("cyclic", solve_shift_cyclic);
	emit(opt, report, text.str());
	return 0;
}

int cmd_current(const Options& opt) {
	if (opt.input.empty() || opt.assoc.empty())
		throw ParseError("current needs --input (lie) and --assoc (coefficients)");
	AlgebraFile gf = parse_algebra_file(slurp(opt.input));
	LieAlgebra g = to_lie_algebra(gf);
	BilinearForm b = pick_form(opt, gf, g, false);
	AlgebraFile sf = parse_algebra_file(slurp(opt.assoc));
	AssocAlgebra s = to_assoc_algebra(sf);
	auto sforms = forms_of(sf);
	BilinearForm theta = [&] {
		if (!opt.assoc_form_name.empty()) {
			auto it = sforms.find(opt.assoc_form_name);
			if (it == sforms.end())
				throw ParseError("no form named '" + opt.assoc_form_name + "' in '" + opt.assoc + "'");
			return it->second;
		}
		if (sforms.size() == 1)
			return sforms.begin()->second;
		throw ParseError("pick the coefficient pairing with --assoc-form");
	}();
	if (!is_frobenius(s, theta))
		throw ParseError("the chosen pairing is not frobenius on the coefficient algebra");
	LieAlgebra gs = current_algebra(g, s);
	BilinearForm bbar = tensor_form(b, theta, s.dim());
	CurrentAnalysis an = gamma_operators(g, b, gs, bbar);
	EpsilonConditionReport rep = check_epsilon_conditions(an, s);
	if (!rep.all())
		throw TheoremViolation("necessary epsilon conditions failed for an invariant metric");
	json gammas = json::array();
	for (std::size_t a = 0; a < an.s_dim; ++a)
		for (std::size_t c = 0; c < an.s_dim; ++c)
			gammas.push_back(json{{"a", a}, {"b", c}, {"gamma", mat_json(an.gamma_at(a, c))},
				{"epsilon", mat_json(an.epsilon_at(a, c))}});
	json report{{"dim_current", gs.dim()}, {"s_dim", an.s_dim},
		{"factors_through_product", rep.factors_through_product},
		{"kernel_trivial", rep.kernel_trivial},
		{"epsilon_in_centroid", rep.epsilon_in_centroid},
		{"operators", gammas}};
	std::ostringstream text;
	text << "current algebra of dim " << gs.dim() << " with coefficient dim "
	     << an.s_dim << "\n";
	text << "epsilon conditions: factors through the product, trivial kernel, "
	        "centroid membership all hold\n";
	for (std::size_t a = 0; a < an.s_dim; ++a)
		for (std::size_t c = 0; c < an.s_dim; ++c) {
			text << "gamma(s_" << a << ", s_" << c << "):\n";
			print_matrix(text, an.gamma_at(a, c), "  ");
		}
	emit(opt, report, text.str());
	return 0;
}

int cmd_af(const Options& opt) {
	if (opt.input.empty())
		throw ParseError("af needs --input");
	AlgebraFile file = parse_algebra_file(slurp(opt.input));
	LieAlgebra g = to_lie_algebra(file);
	BilinearForm f = pick_form(opt, file, g, true);
	UnitalAlgebra a(g, f);
	SimplicityVerdict verdict = simplicity_check(a, opt.seed, (std::size_t)opt.budget);
	QuotientReport quotient = commutator_quotient_iso(a);
	if (!quotient.matches)
		throw TheoremViolation("commutator quotient does not reproduce the algebra");
	json report{{"dim", a.dim()}, {"closures_computed", verdict.closures_computed},
		{"method", verdict.method}, {"quotient_matches", true}};
	std::ostringstream text;
	text << "unital algebra of dim " << a.dim() << "\n";
	switch (verdict.verdict) {
	case Simplicity::simple:
		report["verdict"] = "simple";
		text << "simple (" << verdict.method << ")\n";
		break;
	case Simplicity::not_simple:
		report["verdict"] = "not_simple";
		report["witness"] = subspace_json(*verdict.witness);
		text << "not simple (" << verdict.method << "); witness ideal of dim "
		     << verdict.witness->dim() << ":\n";
		print_matrix(text, verdict.witness->basis(), "  ");
		break;
	case Simplicity::probably_simple:
		report["verdict"] = "probably_simple";
		text << "probably simple (" << verdict.method << ", "
		     << verdict.closures_computed << " closures)\n";
		break;
	}
	text << "commutator quotient reproduces the input algebra\n";
	emit(opt, report, text.str());
	return 0;
}

int cmd_reproduce_example(const Options& opt) {
	Rat xi = opt.xi.empty() ? Rat(1) : rat_from_string(opt.xi);
	ExamplePipeline p = run_example_pipeline(xi);
	std::ostringstream text;
	text << "worked example at xi = " << rat_to_string(xi) << "\n\n";
	text << "bracket table of the total algebra (dim 9):\n";
	print_bracket_table(text, p.algebra);
	text << "\nascending series dims:";
	json upper = json::array(), lower = json::array();
	for (const Subspace& z : p.series.upper) {
		text << " " << z.dim();
		upper.push_back(subspace_json(z));
	}
	text << "\ndescending series dims:";
	for (const Subspace& l : p.series.lower) {
		text << " " << l.dim();
		lower.push_back(subspace_json(l));
	}
	text << "\nnilpotency class: " << *p.series.nilpotency_class << "\n\n";
	text << "i(g): dim " << p.ideals.i.dim() << "\n";
	print_matrix(text, p.ideals.i.basis(), "  ");
	text << "J(g): dim " << p.ideals.j.dim() << "\n";
	print_matrix(text, p.ideals.j.basis(), "  ");
	json report{{"xi", rat_to_string(xi)},
		{"algebra", json::parse(serialize(algebra_file_of(p.algebra)))},
		{"upper", upper}, {"lower", lower},
		{"nilpotency_class", *p.series.nilpotency_class},
		{"i", subspace_json(p.ideals.i)}, {"j", subspace_json(p.ideals.j)}};
	if (p.shift) {
		text << "\nshift map L (columns are the images of the x_j):\n";
		print_matrix(text, p.shift->l_map, "  ");
		text << "\ninvariant metric gram on the original basis:\n";
		print_matrix(text, p.shift->metric_original.gram, "  ");
		report["l_map"] = mat_json(p.shift->l_map);
		report["metric"] = mat_json(p.shift->metric_original.gram);
	}
	emit(opt, report, text.str());
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact invariant-metric toolkit for nilpotent lie algebras"};
	app.require_subcommand(1);
	Options opt;

	auto add_common = [&](CLI::App* sub) {
		sub->add_option("--input", opt.input, "input file");
		sub->add_option("--xi", opt.xi, "value substituted for the parameter xi");
		sub->add_option("--seed", opt.seed, "seed for randomized stages");
		sub->add_option("--budget", opt.budget, "work cap for search stages");
		sub->add_option("--output", opt.output, "write the report (or built file) here");
		sub->add_option("--form", opt.form_name, "which named form of the input to use");
		sub->add_option("--assoc", opt.assoc, "coefficient algebra file");
		sub->add_option("--assoc-form", opt.assoc_form_name, "named pairing of the coefficient algebra");
		sub->add_flag("--json", opt.json_mode, "machine-readable output");
		bool text_mode = false;
		sub->add_flag("--text", text_mode, "plain text output (default)");
	};

	std::map<std::string, int (*)(const Options&)> handlers = {
		{"validate", cmd_validate}, {"series", cmd_series}, {"ideals", cmd_ideals},
		{"invforms", cmd_invforms}, {"metric", cmd_metric}, {"extend", cmd_extend},
		{"decompose", cmd_decompose}, {"criteria", cmd_criteria}, {"current", cmd_current},
		{"af", cmd_af}, {"reproduce-example", cmd_reproduce_example},
	};
	std::map<std::string, std::string> blurbs = {
		{"validate", "check a file's defining identities"},
		{"series", "central series and nilpotency class"},
		{"ideals", "canonical ideals i(g) and J(g)"},
		{"invforms", "basis of the invariant symmetric forms"},
		{"metric", "search for an invariant metric"},
		{"extend", "build the total algebra of an extension datum"},
		{"decompose", "read an extension datum off a metric algebra"},
		{"criteria", "run both shift solvers on an extension datum"},
		{"current", "metric conditions on a current algebra"},
		{"af", "simplicity of the unital algebra attached to an invariant form"},
		{"reproduce-example", "end-to-end run of the worked example"},
	};
	for (auto& [name, fn] : handlers)
		add_common(app.add_subcommand(name, blurbs[name]));

	CLI11_PARSE(app, argc, argv);

	CLI::App* sub = app.get_subcommands().front();
	try {
		return handlers[sub->get_name()](opt);
	} catch (const TheoremViolation& e) {
		std::cerr << "theorem violation: " << e.what() << "\n";
		return 2;
	} catch (const ParseError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const StructureError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const std::domain_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
