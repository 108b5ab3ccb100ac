#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "local_order.hpp"
#include "monomial.hpp"

namespace formalglue {

template <class K>
struct Term {
	Monomial mono;
	K coeff;
};

// Sparse polynomial over an exact field. Terms are kept sorted largest-first
// under the identity-permutation local order, so for that order the leading
// term is terms().front() and 1 (if present) always sorts first.
template <class K>
class Poly {
public:
	Poly() : nvars_(0) {}
	explicit Poly(int nvars) : nvars_(nvars) {}

	static Poly zero(int nvars) { return Poly(nvars); }

	static Poly constant(int nvars, const K& c)
	{
		Poly p(nvars);
		if (!c.is_zero())
			p.terms_.push_back({Monomial::one(nvars), c});
		return p;
	}

	static Poly term(int nvars, Monomial m, K c)
	{
		Poly p(nvars);
		if (!c.is_zero())
			p.terms_.push_back({std::move(m), std::move(c)});
		return p;
	}

	static Poly variable(int nvars, int i, const K& one)
	{
		return term(nvars, Monomial::variable(nvars, i), one);
	}

	static Poly from_terms(int nvars, std::vector<Term<K>> ts)
	{
		Poly p(nvars);
		p.terms_ = std::move(ts);
		p.normalize();
		return p;
	}

	int nvars() const { return nvars_; }
	bool is_zero() const { return terms_.empty(); }
	int term_count() const { return static_cast<int>(terms_.size()); }
	const std::vector<Term<K>>& terms() const { return terms_; }

	// leading term under the canonical order
	const Term<K>& lead() const
	{
		assert(!terms_.empty());
		return terms_.front();
	}

	// maximal total degree over all terms; -1 for the zero polynomial
	int max_degree() const
	{
		int d = -1;
		for (const auto& t : terms_)
			d = std::max(d, t.mono.degree());
		return d;
	}

	K coeff_of(const Monomial& m) const
	{
		for (const auto& t : terms_)
			if (t.mono == m)
				return t.coeff;
		return K();
	}

	// sum of the terms of total degree exactly d
	Poly homogeneous_part(int d) const
	{
		Poly p(nvars_);
		for (const auto& t : terms_)
			if (t.mono.degree() == d)
				p.terms_.push_back(t);
		return p;
	}

	bool has_constant_term() const { return !terms_.empty() && terms_.front().mono.is_one(); }

	K constant_term() const
	{
		if (has_constant_term())
			return terms_.front().coeff;
		return K();
	}

	friend Poly operator+(const Poly& a, const Poly& b)
	{
		assert(a.nvars_ == b.nvars_);
		Poly r(a.nvars_);
		r.terms_.reserve(a.terms_.size() + b.terms_.size());
		auto ia = a.terms_.begin(), ib = b.terms_.begin();
		while (ia != a.terms_.end() && ib != b.terms_.end()) {
			if (ia->mono == ib->mono) {
				K c = ia->coeff + ib->coeff;
				if (!c.is_zero())
					r.terms_.push_back({ia->mono, std::move(c)});
				++ia;
				++ib;
			} else if (canonical_greater(ia->mono, ib->mono)) {
				r.terms_.push_back(*ia++);
			} else {
				r.terms_.push_back(*ib++);
			}
		}
		r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
		r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
		return r;
	}

	friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

	Poly operator-() const
	{
		Poly r = *this;
		for (auto& t : r.terms_)
			t.coeff = -t.coeff;
		return r;
	}

	Poly scaled(const K& c) const
	{
		if (c.is_zero())
			return Poly(nvars_);
		Poly r = *this;
		for (auto& t : r.terms_)
			t.coeff *= c;
		return r;
	}

	Poly times_term(const Monomial& m, const K& c) const
	{
		if (c.is_zero())
			return Poly(nvars_);
		Poly r(nvars_);
		r.terms_.reserve(terms_.size());
		for (const auto& t : terms_)
			r.terms_.push_back({t.mono.times(m), t.coeff * c});
		return r; // multiplying by a fixed monomial preserves the term order
	}

	friend Poly operator*(const Poly& a, const Poly& b)
	{
		assert(a.nvars_ == b.nvars_);
		Poly r(a.nvars_);
		for (const auto& t : a.terms_)
			r = r + b.times_term(t.mono, t.coeff);
		return r;
	}

	// divide through by the canonical leading coefficient
	Poly monic() const
	{
		if (is_zero() || terms_.front().coeff.is_one())
			return *this;
		return scaled(terms_.front().coeff.inv());
	}

	Poly drop_lead() const
	{
		assert(!terms_.empty());
		Poly r(nvars_);
		r.terms_.assign(terms_.begin() + 1, terms_.end());
		return r;
	}

	// keep the terms of total degree < bound
	Poly truncated(int bound) const
	{
		Poly r(nvars_);
		for (const auto& t : terms_)
			if (t.mono.degree() < bound)
				r.terms_.push_back(t);
		return r;
	}

	friend bool operator==(const Poly& a, const Poly& b)
	{
		if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
			return false;
		for (size_t i = 0; i < a.terms_.size(); ++i)
			if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
				return false;
		return true;
	}
	friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
	void normalize()
	{
		std::sort(terms_.begin(), terms_.end(),
		          [](const Term<K>& s, const Term<K>& t) { return canonical_greater(s.mono, t.mono); });
		std::vector<Term<K>> merged;
		merged.reserve(terms_.size());
		for (auto& t : terms_) {
			if (!merged.empty() && merged.back().mono == t.mono)
				merged.back().coeff += t.coeff;
			else
				merged.push_back(std::move(t));
		}
		terms_.clear();
		for (auto& t : merged)
			if (!t.coeff.is_zero())
				terms_.push_back(std::move(t));
	}

	int nvars_;
	std::vector<Term<K>> terms_;
};

// leading term with respect to an arbitrary local order
template <class K>
const Term<K>& lead_term(const Poly<K>& f, const LocalOrder& ord)
{
	assert(!f.is_zero());
	if (ord.is_default())
		return f.lead();
	const Term<K>* best = &f.terms()[0];
	for (const auto& t : f.terms())
		if (ord.greater(t.mono, best->mono))
			best = &t;
	return *best;
}

// gap between the total degree and the leading-term degree
template <class K>
int ecart(const Poly<K>& f, const LocalOrder& ord)
{
	assert(!f.is_zero());
	return f.max_degree() - lead_term(f, ord).mono.degree();
}

} // namespace formalglue
