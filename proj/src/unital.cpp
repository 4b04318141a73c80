#include "quadlie/unital.hpp"

#include <stdexcept>

#include "quadlie/rng.hpp"

namespace quadlie {

UnitalAlgebra::UnitalAlgebra(LieAlgebra g, BilinearForm f)
	: g_(std::move(g)), f_(std::move(f)) {
	if (f_.dim() != g_.dim())
		throw std::invalid_argument("unital algebra: form dimension must match the algebra");
	if (f_.gram.is_zero())
		throw std::invalid_argument("unital algebra: the form must be non-zero");
	if (!is_invariant(g_, f_))
		throw std::invalid_argument("unital algebra: the form must be invariant");
}

Vec UnitalAlgebra::embed(const Rat& xi, const Vec& x) const {
	if (x.size() != g_.dim())
		throw std::invalid_argument("embed: vector dimension mismatch");
	Vec out(dim(), Rat(0));
	out[0] = xi;
	for (std::size_t k = 0; k < x.size(); ++k)
		out[k + 1] = x[k];
	return out;
}

Vec UnitalAlgebra::unit() const {
	Vec out(dim(), Rat(0));
	out[0] = 1;
	return out;
}

Vec UnitalAlgebra::product(const Vec& u, const Vec& v) const {
	if (u.size() != dim() || v.size() != dim())
		throw std::invalid_argument("product: vector dimension mismatch");
	Vec x(u.begin() + 1, u.end()), y(v.begin() + 1, v.end());
	const Rat& xi = u[0];
	const Rat& eta = v[0];
	Vec out(dim(), Rat(0));
	out[0] = xi * eta + f_.eval(x, y);
	Vec part = vec_add(vec_scaled(y, xi), vec_scaled(x, eta));
	part = vec_add(part, vec_scaled(g_.bracket(x, y), Rat(1, 2)));
	for (std::size_t k = 0; k < part.size(); ++k)
		out[k + 1] = part[k];
	return out;
}

Vec UnitalAlgebra::commutator(const Vec& u, const Vec& v) const {
	return vec_sub(product(u, v), product(v, u));
}

Subspace ideal_closure(const UnitalAlgebra& a, const Vec& v) {
	const std::size_t n = a.dim();
	if (v.size() != n)
		throw std::invalid_argument("ideal_closure: vector dimension mismatch");
	Subspace span = Subspace::span(n, std::vector<Vec>{v});
	if (span.dim() == 0)
		return span;
	const BilinearForm& f = a.form();
	while (true) {
		// a span vector whose unit coordinate fails xi^2 = f(x, x) multiplies
		// with its reflection to a non-zero multiple of the unit; since that
		// quadratic vanishes on the span iff its polarization does, pairs of
		// basis vectors decide it
		const Mat& basis = span.basis();
		for (std::size_t p = 0; p < basis.rows(); ++p)
			for (std::size_t q = p; q < basis.rows(); ++q) {
				Vec rp = basis.row(p), rq = basis.row(q);
				Vec x(rp.begin() + 1, rp.end());
				Vec y(rq.begin() + 1, rq.end());
				if (mpq_class(rp[0] * rq[0] - f.eval(x, y)) != 0)
					return Subspace::full(n);
			}
		std::vector<Vec> grown;
		for (std::size_t p = 0; p < basis.rows(); ++p)
			grown.push_back(basis.row(p));
		for (std::size_t p = 0; p < basis.rows(); ++p)
			for (std::size_t k = 0; k < n; ++k) {
				Vec ek(n, Rat(0));
				ek[k] = 1;
				grown.push_back(a.product(basis.row(p), ek));
				grown.push_back(a.product(ek, basis.row(p)));
			}
		Subspace next = Subspace::span(n, grown);
		if (next.dim() == span.dim())
			return span;
		span = next;
	}
}

namespace {

bool is_proper_ideal(const UnitalAlgebra& a, const Subspace& candidate) {
	const std::size_t n = a.dim();
	if (candidate.dim() == 0 || candidate.dim() == n)
		return false;
	const Mat& basis = candidate.basis();
	for (std::size_t p = 0; p < basis.rows(); ++p)
		for (std::size_t k = 0; k < n; ++k) {
			Vec ek(n, Rat(0));
			ek[k] = 1;
			if (!candidate.contains(a.product(basis.row(p), ek)))
				return false;
			if (!candidate.contains(a.product(ek, basis.row(p))))
				return false;
		}
	return true;
}

}  // namespace

SimplicityVerdict simplicity_check(const UnitalAlgebra& a, std::uint64_t seed,
	std::size_t budget, const SimplicityConfig& cfg) {
	const LieAlgebra& g = a.algebra();
	if (g.dim() <= 1)
		throw std::domain_error("simplicity_check: needs dim g > 1");
	const std::size_t n = a.dim();
	SimplicityVerdict out;

	// a radical vector of f spans the start of a proper ideal
	Subspace rad = a.form().radical();
	if (rad.dim() > 0) {
		std::vector<Vec> lifted;
		for (std::size_t p = 0; p < rad.basis().rows(); ++p)
			lifted.push_back(a.embed(Rat(0), rad.basis().row(p)));
		Subspace witness = Subspace::span(n, lifted);
		if (is_proper_ideal(a, witness)) {
			out.verdict = Simplicity::not_simple;
			out.witness = std::move(witness);
			out.method = "radical witness";
			return out;
		}
	}

	// closure search: basis vectors, then 0/±1 vectors, then random ones
	std::vector<Vec> candidates;
	for (std::size_t k = 0; k < n; ++k) {
		Vec ek(n, Rat(0));
		ek[k] = 1;
		candidates.push_back(ek);
	}
	std::size_t enumerated = 0;
	for (unsigned long long code = 1; enumerated < cfg.sign_cap; ++code) {
		Vec v(n, Rat(0));
		unsigned long long c = code;
		bool overflow = false;
		for (std::size_t k = 0; k < n; ++k) {
			switch (c % 3) {
			case 1: v[k] = 1; break;
			case 2: v[k] = -1; break;
			default: break;
			}
			c /= 3;
		}
		if (c != 0)
			overflow = true;
		if (overflow)
			break;
		candidates.push_back(std::move(v));
		++enumerated;
	}
	auto try_seed = [&](const Vec& v) {
		Subspace closure = ideal_closure(a, v);
		++out.closures_computed;
		if (closure.dim() > 0 && closure.dim() < n) {
			out.verdict = Simplicity::not_simple;
			out.witness = std::move(closure);
			out.method = "closure search";
			return true;
		}
		return false;
	};
	for (const Vec& v : candidates)
		if (try_seed(v))
			return out;
	// random seeds are streamed, not materialized: the budget may be large
	Rng rng(seed);
	for (std::size_t t = 0; t < budget; ++t)
		if (try_seed(rng.vector(n, cfg.height)))
			return out;

	// exact certificate: non-degenerate form on a nilpotent algebra
	if (!a.form().is_degenerate() && is_nilpotent(g)) {
		out.verdict = Simplicity::simple;
		out.method = "non-degenerate form on a nilpotent algebra";
		return out;
	}
	out.verdict = Simplicity::probably_simple;
	out.method = "closure search exhausted without a witness";
	return out;
}

QuotientReport commutator_quotient_iso(const UnitalAlgebra& a) {
	const LieAlgebra& g = a.algebra();
	const std::size_t n = g.dim();
	Mat projection(n, n + 1);
	for (std::size_t k = 0; k < n; ++k)
		projection.at(k, k + 1) = 1;
	std::vector<StructureTriple> triples;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			Vec ei(n, Rat(0)), ej(n, Rat(0));
			ei[i] = 1;
			ej[j] = 1;
			Vec comm = projection.apply(a.commutator(a.embed(Rat(0), ei), a.embed(Rat(0), ej)));
			for (std::size_t k = 0; k < n; ++k)
				if (!is_zero(comm[k]))
					triples.push_back({i, j, k, comm[k]});
		}
	LieAlgebra quotient(n, triples, g.basis_names());
	bool matches = same_structure(quotient, g);
	return QuotientReport{std::move(projection), std::move(quotient), matches};
}

BilinearForm nonzero_invariant_form(const LieAlgebra& g) {
	if (!is_nilpotent(g))
		throw std::domain_error("nonzero_invariant_form: the algebra must be nilpotent");
	InvariantFormSpace space = invariant_forms(g);
	if (space.dim() == 0)
		throw TheoremViolation("a nilpotent algebra admits a non-zero invariant form, but the computed space is zero");
	return space.basis[0];
}

}  // namespace quadlie
