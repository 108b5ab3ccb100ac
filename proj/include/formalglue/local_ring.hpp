#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly_io.hpp"
#include "standard_basis.hpp"

namespace formalglue {

// Complete local ring presented as k[[vars]] / (gens). The generators must
// have zero constant term so the quotient is local with maximal ideal (vars).
template <class K>
class LocalRingPresentation {
public:
	LocalRingPresentation() = default;

	LocalRingPresentation(std::vector<std::string> vars, std::vector<Poly<K>> gens, K one,
	                      LocalOrder order = LocalOrder())
		: vars_(std::move(vars)), gens_(std::move(gens)), one_(std::move(one)), order_(std::move(order))
	{
		std::set<std::string> seen;
		for (const auto& v : vars_)
			if (!seen.insert(v).second)
				fail(ErrorCode::DuplicateVariable, "variable \"" + v + "\" repeats in the ambient");
		std::vector<Poly<K>> kept;
		for (const auto& g : gens_) {
			if (g.is_zero())
				continue;
			if (g.nvars() != nvars())
				fail(ErrorCode::AmbientMismatch, "generator written in a different ambient");
			if (g.has_constant_term())
				fail(ErrorCode::ConstantTermPresent,
				     "generator " + to_string(g, vars_) + " has a nonzero constant term");
			kept.push_back(g);
		}
		gens_ = std::move(kept);
	}

	int nvars() const { return static_cast<int>(vars_.size()); }
	const std::vector<std::string>& vars() const { return vars_; }
	const std::vector<Poly<K>>& gens() const { return gens_; }
	const K& one() const { return one_; }
	const LocalOrder& order() const { return order_; }

	const std::vector<Poly<K>>& basis() const
	{
		if (!basis_) {
			basis_ = std::make_shared<std::vector<Poly<K>>>(std_basis(gens_, order_));
		}
		return *basis_;
	}

	// canonical representative mod the ideal
	Poly<K> reduce(const Poly<K>& f) const { return normal_form(f, basis(), order_); }

	bool contains(const Poly<K>& f) const { return reduce(f).is_zero(); }

	bool is_unit(const Poly<K>& f) const { return !reduce(f).constant_term().is_zero(); }

	// the zero ring has every variable in the ideal; the residue field has none
	bool is_residue_field() const
	{
		for (int i = 0; i < nvars(); ++i)
			if (!contains(Poly<K>::variable(nvars(), i, one_)))
				return false;
		return true;
	}

	Poly<K> var_poly(int i) const { return Poly<K>::variable(nvars(), i, one_); }

	Poly<K> parse(const std::string& text) const { return parse_poly(text, vars_, one_); }

private:
	std::vector<std::string> vars_;
	std::vector<Poly<K>> gens_;
	K one_;
	LocalOrder order_;
	mutable std::shared_ptr<std::vector<Poly<K>>> basis_;
};

template <class K>
LocalRingPresentation<K> present(std::vector<std::string> vars, std::vector<Poly<K>> gens, K one,
                                 LocalOrder order = LocalOrder())
{
	return LocalRingPresentation<K>(std::move(vars), std::move(gens), std::move(one), std::move(order));
}

/// embedding dimension: dim_k m/(m^2 + I) = nvars - rank of the linear parts
template <class K>
int edim(const LocalRingPresentation<K>& R)
{
	const int n = R.nvars();
	Matrix<K> m(n, static_cast<int>(R.gens().size()), R.one());
	for (int j = 0; j < static_cast<int>(R.gens().size()); ++j) {
		Poly<K> lin = R.gens()[j].homogeneous_part(1);
		for (const auto& t : lin.terms())
			for (int i = 0; i < n; ++i)
				if (t.mono[i] == 1)
					m.at(i, j) = t.coeff;
	}
	return n - m.rank();
}

// Krull dimension, computed on the leading ideal of a standard basis: the
// largest subset of variables touching no leading monomial's support.
template <class K>
int krull_dim(const LocalRingPresentation<K>& R)
{
	const int n = R.nvars();
	std::vector<std::vector<int>> supports;
	for (const auto& g : R.basis())
		supports.push_back(lead_term(g, R.order()).mono.support());

	int best = 0;
	for (unsigned mask = 0; mask < (1u << n); ++mask) {
		int size = __builtin_popcount(mask);
		if (size <= best)
			continue;
		bool ok = true;
		for (const auto& s : supports) {
			bool inside = true;
			for (int v : s)
				if (!(mask & (1u << v))) {
					inside = false;
					break;
				}
			if (inside) {
				ok = false;
				break;
			}
		}
		if (ok)
			best = size;
	}
	return best;
}

struct InvariantsReport {
	int edim = 0;
	int dim = 0;
	int depth = 0;
	bool regular = false;
};

} // namespace formalglue
