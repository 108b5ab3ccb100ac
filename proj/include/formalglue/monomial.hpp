#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace formalglue {

// Power product, stored as an exponent vector over a fixed ambient.
class Monomial {
public:
	Monomial() = default;
	explicit Monomial(int nvars) : e_(nvars, 0) {}
	Monomial(std::initializer_list<int> e) : e_(e) {}
	explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

	static Monomial one(int nvars) { return Monomial(nvars); }

	static Monomial variable(int nvars, int i)
	{
		Monomial m(nvars);
		m.e_[i] = 1;
		return m;
	}

	int nvars() const { return static_cast<int>(e_.size()); }
	int operator[](int i) const { return e_[i]; }
	int& operator[](int i) { return e_[i]; }
	const std::vector<int>& exponents() const { return e_; }

	int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
	bool is_one() const { return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; }); }

	Monomial times(const Monomial& o) const
	{
		assert(nvars() == o.nvars());
		Monomial r = *this;
		for (int i = 0; i < nvars(); ++i)
			r.e_[i] += o.e_[i];
		return r;
	}

	bool divides(const Monomial& o) const
	{
		assert(nvars() == o.nvars());
		for (int i = 0; i < nvars(); ++i)
			if (e_[i] > o.e_[i])
				return false;
		return true;
	}

	// quotient o / *this is not meant here; this is *this / o, requires o | *this
	Monomial div(const Monomial& o) const
	{
		assert(o.divides(*this));
		Monomial r = *this;
		for (int i = 0; i < nvars(); ++i)
			r.e_[i] -= o.e_[i];
		return r;
	}

	static Monomial lcm(const Monomial& a, const Monomial& b)
	{
		assert(a.nvars() == b.nvars());
		Monomial r = a;
		for (int i = 0; i < a.nvars(); ++i)
			r.e_[i] = std::max(a.e_[i], b.e_[i]);
		return r;
	}

	static bool coprime(const Monomial& a, const Monomial& b)
	{
		assert(a.nvars() == b.nvars());
		for (int i = 0; i < a.nvars(); ++i)
			if (a.e_[i] > 0 && b.e_[i] > 0)
				return false;
		return true;
	}

	// variable indices with positive exponent
	std::vector<int> support() const
	{
		std::vector<int> s;
		for (int i = 0; i < nvars(); ++i)
			if (e_[i] > 0)
				s.push_back(i);
		return s;
	}

	friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
	friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
	std::vector<int> e_;
};

// the monomials of total degree exactly d, deterministic order
inline void monomials_of_degree(int nvars, int d, std::vector<Monomial>& out)
{
	if (nvars == 0) {
		if (d == 0)
			out.push_back(Monomial(0));
		return;
	}
	std::vector<int> e(nvars, 0);
	// lexicographic enumeration over exponent vectors summing to d
	auto rec = [&](auto&& self, int pos, int left) -> void {
		if (pos == nvars - 1) {
			e[pos] = left;
			out.push_back(Monomial(e));
			return;
		}
		for (int v = left; v >= 0; --v) {
			e[pos] = v;
			self(self, pos + 1, left - v);
		}
		e[pos] = 0;
	};
	rec(rec, 0, d);
}

// all monomials of total degree < bound
inline std::vector<Monomial> monomials_below(int nvars, int bound)
{
	std::vector<Monomial> out;
	for (int d = 0; d < bound; ++d)
		monomials_of_degree(nvars, d, out);
	return out;
}

} // namespace formalglue
