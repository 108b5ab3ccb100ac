#pragma once

#include <cassert>
#include <numeric>
#include <vector>

#include "monomial.hpp"

namespace formalglue {

// Local monomial order: lower total degree wins, ties broken reverse
// lexicographically, so 1 is the largest monomial and every variable is
// smaller than 1. An optional permutation reorders variable significance.
class LocalOrder {
public:
	LocalOrder() = default;

	// perm lists variable indices from most to least significant
	explicit LocalOrder(std::vector<int> perm) : perm_(std::move(perm))
	{
		std::vector<int> seen(perm_.size(), 0);
		for (int v : perm_) {
			assert(v >= 0 && v < static_cast<int>(perm_.size()) && !seen[v]);
			seen[v] = 1;
		}
	}

	bool is_default() const { return perm_.empty(); }
	bool scalar_is_default() const { return perm_.empty(); }
	const std::vector<int>& permutation() const { return perm_; }

	// strict comparison: true when a is larger than b
	bool greater(const Monomial& a, const Monomial& b) const
	{
		assert(a.nvars() == b.nvars());
		int da = a.degree(), db = b.degree();
		if (da != db)
			return da < db;
		int n = a.nvars();
		if (perm_.empty()) {
			for (int i = n - 1; i >= 0; --i) {
				int d = a[i] - b[i];
				if (d != 0)
					return d < 0;
			}
			return false;
		}
		assert(static_cast<int>(perm_.size()) == n);
		for (int i = n - 1; i >= 0; --i) {
			int d = a[perm_[i]] - b[perm_[i]];
			if (d != 0)
				return d < 0;
		}
		return false;
	}

	// module terms: monomial order first, then lower component wins
	bool mod_greater(const Monomial& a, int comp_a, const Monomial& b, int comp_b) const
	{
		if (greater(a, b))
			return true;
		if (greater(b, a))
			return false;
		return comp_a < comp_b;
	}

	friend bool operator==(const LocalOrder& a, const LocalOrder& b) { return a.perm_ == b.perm_; }

private:
	std::vector<int> perm_;
};

// Module order whose leading components (those before the boundary) dominate
// all others; used to read off syzygies from graph-style computations.
class BlockLocalOrder {
public:
	BlockLocalOrder(LocalOrder base, int boundary) : base_(std::move(base)), boundary_(boundary) {}

	bool greater(const Monomial& a, const Monomial& b) const { return base_.greater(a, b); }
	bool scalar_is_default() const { return base_.scalar_is_default(); }

	bool mod_greater(const Monomial& a, int comp_a, const Monomial& b, int comp_b) const
	{
		bool high_a = comp_a < boundary_;
		bool high_b = comp_b < boundary_;
		if (high_a != high_b)
			return high_a;
		return base_.mod_greater(a, comp_a, b, comp_b);
	}

private:
	LocalOrder base_;
	int boundary_;
};

// canonical storage comparison (identity-permutation local order)
inline bool canonical_greater(const Monomial& a, const Monomial& b)
{
	static const LocalOrder def;
	return def.greater(a, b);
}

} // namespace formalglue
