#pragma once

#include <cassert>
#include <vector>

#include "polynomial.hpp"

namespace formalglue {

// module term: a monomial sitting in one component of a free module
template <class K>
struct ModTerm {
	Monomial mono;
	int comp;
	K coeff;
};

// Element of a free module over the polynomial ring, one Poly per component.
template <class K>
class VecPoly {
public:
	VecPoly() = default;

	VecPoly(int rank, int nvars) : c_(rank, Poly<K>(nvars)) {}

	explicit VecPoly(std::vector<Poly<K>> comps) : c_(std::move(comps)) {}

	// f placed in one component of a rank-r module
	static VecPoly unit(int rank, int comp, Poly<K> f)
	{
		VecPoly v(rank, f.nvars());
		v.c_[comp] = std::move(f);
		return v;
	}

	int rank() const { return static_cast<int>(c_.size()); }
	int nvars() const { return c_.empty() ? 0 : c_[0].nvars(); }
	const Poly<K>& operator[](int i) const { return c_[i]; }
	Poly<K>& operator[](int i) { return c_[i]; }
	const std::vector<Poly<K>>& comps() const { return c_; }

	bool is_zero() const
	{
		for (const auto& p : c_)
			if (!p.is_zero())
				return false;
		return true;
	}

	int max_degree() const
	{
		int d = -1;
		for (const auto& p : c_)
			d = std::max(d, p.max_degree());
		return d;
	}

	friend VecPoly operator+(const VecPoly& a, const VecPoly& b)
	{
		assert(a.rank() == b.rank());
		VecPoly r = a;
		for (int i = 0; i < r.rank(); ++i)
			r.c_[i] = r.c_[i] + b.c_[i];
		return r;
	}

	friend VecPoly operator-(const VecPoly& a, const VecPoly& b)
	{
		assert(a.rank() == b.rank());
		VecPoly r = a;
		for (int i = 0; i < r.rank(); ++i)
			r.c_[i] = r.c_[i] - b.c_[i];
		return r;
	}

	VecPoly operator-() const
	{
		VecPoly r = *this;
		for (auto& p : r.c_)
			p = -p;
		return r;
	}

	VecPoly times_term(const Monomial& m, const K& k) const
	{
		VecPoly r = *this;
		for (auto& p : r.c_)
			p = p.times_term(m, k);
		return r;
	}

	VecPoly scaled(const K& k) const
	{
		VecPoly r = *this;
		for (auto& p : r.c_)
			p = p.scaled(k);
		return r;
	}

	VecPoly times_poly(const Poly<K>& f) const
	{
		VecPoly r = *this;
		for (auto& p : r.c_)
			p = p * f;
		return r;
	}

	VecPoly drop_component(int i) const
	{
		VecPoly r = *this;
		r.c_.erase(r.c_.begin() + i);
		return r;
	}

	VecPoly head(int n) const
	{
		return VecPoly(std::vector<Poly<K>>(c_.begin(), c_.begin() + n));
	}

	friend bool operator==(const VecPoly& a, const VecPoly& b) { return a.c_ == b.c_; }
	friend bool operator!=(const VecPoly& a, const VecPoly& b) { return !(a == b); }

private:
	std::vector<Poly<K>> c_;
};

// leading module term under ord
template <class K, class Ord>
ModTerm<K> lead_mod_term(const VecPoly<K>& v, const Ord& ord)
{
	assert(!v.is_zero());
	int best = -1;
	const Term<K>* best_term = nullptr;
	for (int i = 0; i < v.rank(); ++i) {
		if (v[i].is_zero())
			continue;
		const Term<K>* t = &v[i].lead();
		if (!ord.scalar_is_default()) {
			for (const auto& u : v[i].terms())
				if (ord.greater(u.mono, t->mono))
					t = &u;
		}
		if (best < 0 || ord.mod_greater(t->mono, i, best_term->mono, best)) {
			best = i;
			best_term = t;
		}
	}
	return {best_term->mono, best, best_term->coeff};
}

template <class K, class Ord>
int mod_ecart(const VecPoly<K>& v, const Ord& ord)
{
	return v.max_degree() - lead_mod_term(v, ord).mono.degree();
}

} // namespace formalglue
