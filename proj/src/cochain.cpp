#include "quadlie/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadlie {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t p) {
	std::vector<std::vector<std::size_t>> out;
	if (p > n)
		return out;
	std::vector<std::size_t> cur(p);
	for (std::size_t i = 0; i < p; ++i)
		cur[i] = i;
	while (true) {
		out.push_back(cur);
		// advance to the next strictly increasing tuple
		std::size_t i = p;
		while (i > 0) {
			--i;
			if (cur[i] + (p - i) < n) {
				++cur[i];
				for (std::size_t j = i + 1; j < p; ++j)
					cur[j] = cur[j - 1] + 1;
				i = p + 1;
				break;
			}
		}
		if (i != p + 1)
			break;
		if (p == 0)
			break;
	}
	return out;
}

Cochain::Cochain(std::size_t degree, std::size_t h_dim, std::size_t target_dim)
	: degree_(degree), h_dim_(h_dim), target_dim_(target_dim) {
	tuples_ = combinations(h_dim, degree);
	values_.assign(tuples_.size(), Vec(target_dim, Rat(0)));
	for (std::size_t t = 0; t < tuples_.size(); ++t)
		index_[tuples_[t]] = t;
}

const Vec& Cochain::at(const std::vector<std::size_t>& sorted_tuple) const {
	auto it = index_.find(sorted_tuple);
	if (it == index_.end())
		throw std::out_of_range("cochain: no such index tuple");
	return values_[it->second];
}

void Cochain::set(const std::vector<std::size_t>& sorted_tuple, Vec value) {
	auto it = index_.find(sorted_tuple);
	if (it == index_.end())
		throw std::out_of_range("cochain: no such index tuple");
	if (value.size() != target_dim_)
		throw std::invalid_argument("cochain: value dimension mismatch");
	// gmp comparisons assume canonical form; incoming values may not be
	for (Rat& c : value) c.canonicalize();
	values_[it->second] = std::move(value);
}

Vec Cochain::eval(std::vector<std::size_t> args) const {
	if (args.size() != degree_)
		throw std::invalid_argument("cochain: arity mismatch");
	// insertion sort, tracking the permutation sign
	int sign = 1;
	for (std::size_t i = 1; i < args.size(); ++i) {
		std::size_t j = i;
		while (j > 0 && args[j] < args[j - 1]) {
			std::swap(args[j], args[j - 1]);
			sign = -sign;
			--j;
		}
	}
	for (std::size_t i = 1; i < args.size(); ++i)
		if (args[i] == args[i - 1])
			return Vec(target_dim_, Rat(0));
	const Vec& v = at(args);
	if (sign == 1)
		return v;
	return vec_scaled(v, Rat(-1));
}

Cochain Cochain::operator+(const Cochain& o) const {
	if (degree_ != o.degree_ || h_dim_ != o.h_dim_ || target_dim_ != o.target_dim_)
		throw std::invalid_argument("cochain: shape mismatch");
	Cochain out(degree_, h_dim_, target_dim_);
	for (std::size_t t = 0; t < values_.size(); ++t)
		out.values_[t] = vec_add(values_[t], o.values_[t]);
	return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
	return *this + o.scaled(Rat(-1));
}

Cochain Cochain::scaled(const Rat& c) const {
	Cochain out(degree_, h_dim_, target_dim_);
	for (std::size_t t = 0; t < values_.size(); ++t)
		out.values_[t] = vec_scaled(values_[t], c);
	return out;
}

bool Cochain::operator==(const Cochain& o) const {
	return degree_ == o.degree_ && h_dim_ == o.h_dim_ && target_dim_ == o.target_dim_
		&& values_ == o.values_;
}

bool Cochain::is_zero() const {
	for (const Vec& v : values_)
		if (!vec_is_zero(v))
			return false;
	return true;
}

Cochain cochain_d(const LieAlgebra& h, const std::vector<Mat>& rho, const Cochain& c) {
	const std::size_t r = c.h_dim();
	if (h.dim() != r)
		throw std::invalid_argument("cochain_d: algebra dimension mismatch");
	if (!rho.empty() && rho.size() != r)
		throw std::invalid_argument("cochain_d: need one action matrix per basis element");
	const std::size_t p = c.degree();
	Cochain out(p + 1, r, c.target_dim());
	for (const auto& tup : out.tuples()) {
		Vec acc(c.target_dim(), Rat(0));
		// module action terms
		if (!rho.empty()) {
			for (std::size_t j = 0; j <= p; ++j) {
				std::vector<std::size_t> rest;
				rest.reserve(p);
				for (std::size_t t = 0; t <= p; ++t)
					if (t != j)
						rest.push_back(tup[t]);
				Vec term = rho[tup[j]].apply(c.at(rest));
				if (j % 2 == 1)
					term = vec_scaled(term, Rat(-1));
				acc = vec_add(acc, term);
			}
		}
		// bracket contraction terms
		for (std::size_t i = 0; i + 1 <= p; ++i) {
			for (std::size_t j = i + 1; j <= p; ++j) {
				const Vec& br = h.bracket_basis(tup[i], tup[j]);
				std::vector<std::size_t> rest;
				rest.reserve(p);
				for (std::size_t t = 0; t <= p; ++t)
					if (t != i && t != j)
						rest.push_back(tup[t]);
				Vec contrib(c.target_dim(), Rat(0));
				for (std::size_t b = 0; b < r; ++b) {
					if (is_zero(br[b]))
						continue;
					std::vector<std::size_t> args;
					args.reserve(p);
					args.push_back(b);
					for (std::size_t x : rest)
						args.push_back(x);
					contrib = vec_add(contrib, vec_scaled(c.eval(args), br[b]));
				}
				if ((i + j) % 2 == 1)
					contrib = vec_scaled(contrib, Rat(-1));
				acc = vec_add(acc, contrib);
			}
		}
		out.set(tup, acc);
	}
	return out;
}

Cochain d_a(const LieAlgebra& h, const Cochain& c) {
	return cochain_d(h, {}, c);
}

Cochain e_phi(const std::vector<Mat>& phi, const Cochain& c) {
	if (phi.empty())
		throw std::invalid_argument("e_phi: empty pairing family");
	const std::size_t r = c.h_dim();
	if (phi.size() != r)
		throw std::invalid_argument("e_phi: need one matrix per basis element");
	const std::size_t p = c.degree();
	const std::size_t target = phi[0].rows();
	Cochain out(p + 1, r, target);
	for (const auto& tup : out.tuples()) {
		Vec acc(target, Rat(0));
		for (std::size_t j = 0; j <= p; ++j) {
			std::vector<std::size_t> rest;
			rest.reserve(p);
			for (std::size_t t = 0; t <= p; ++t)
				if (t != j)
					rest.push_back(tup[t]);
			Vec term = phi[tup[j]].apply(c.at(rest));
			if (j % 2 == 1)
				term = vec_scaled(term, Rat(-1));
			acc = vec_add(acc, term);
		}
		out.set(tup, acc);
	}
	return out;
}

}  // namespace quadlie
