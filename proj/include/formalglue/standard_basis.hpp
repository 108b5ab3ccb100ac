#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mora.hpp"

namespace formalglue {

namespace detail {

// content-based total order used only to break ties deterministically
template <class K>
bool vec_less_structural(const VecPoly<K>& a, const VecPoly<K>& b)
{
	if (a.rank() != b.rank())
		return a.rank() < b.rank();
	for (int i = 0; i < a.rank(); ++i) {
		const auto& ta = a[i].terms();
		const auto& tb = b[i].terms();
		size_t m = std::min(ta.size(), tb.size());
		for (size_t k = 0; k < m; ++k) {
			if (ta[k].mono != tb[k].mono)
				return canonical_greater(ta[k].mono, tb[k].mono);
			if (!(ta[k].coeff == tb[k].coeff))
				return ta[k].coeff.to_string() < tb[k].coeff.to_string();
		}
		if (ta.size() != tb.size())
			return ta.size() < tb.size();
	}
	return false;
}

// S-vector of a and b (same leading component), cross-scaled to cancel leads
template <class K, class Ord>
VecPoly<K> spair(const VecPoly<K>& a, const VecPoly<K>& b, const Ord& ord)
{
	ModTerm<K> la = lead_mod_term(a, ord);
	ModTerm<K> lb = lead_mod_term(b, ord);
	assert(la.comp == lb.comp);
	Monomial l = Monomial::lcm(la.mono, lb.mono);
	return a.times_term(l.div(la.mono), lb.coeff) - b.times_term(l.div(lb.mono), la.coeff);
}

} // namespace detail

// Buchberger loop adapted to local orders: S-vectors are weakly reduced with
// the Mora division, nonzero remainders join the basis. For ideals (rank 1)
// pairs with coprime leading monomials are skipped.
template <class K, class Ord>
std::vector<VecPoly<K>> std_basis_raw(const std::vector<VecPoly<K>>& gens, const Ord& ord)
{
	std::vector<VecPoly<K>> basis;
	for (const auto& g : gens)
		if (!g.is_zero())
			basis.push_back(g);

	bool scalar = !basis.empty() && basis[0].rank() == 1;
	std::vector<std::pair<int, int>> pairs;
	auto add_pairs = [&](int j) {
		ModTerm<K> lj = lead_mod_term(basis[j], ord);
		for (int i = 0; i < j; ++i) {
			ModTerm<K> li = lead_mod_term(basis[i], ord);
			if (li.comp != lj.comp)
				continue;
			if (scalar && Monomial::coprime(li.mono, lj.mono))
				continue;
			pairs.emplace_back(i, j);
		}
	};
	for (int j = 0; j < static_cast<int>(basis.size()); ++j)
		add_pairs(j);

	size_t next = 0;
	while (next < pairs.size()) {
		auto [i, j] = pairs[next++];
		VecPoly<K> s = detail::spair(basis[i], basis[j], ord);
		if (s.is_zero())
			continue;
		VecPoly<K> rem = weak_normal_form(s, basis, ord).remainder;
		if (rem.is_zero())
			continue;
		ModTerm<K> lt = lead_mod_term(rem, ord);
		basis.push_back(rem.scaled(lt.coeff.inv()));
		add_pairs(static_cast<int>(basis.size()) - 1);
	}
	return basis;
}

// Minimal, tail-interreduced, monic, deterministically sorted form. For a
// fixed order the result is independent of the generator arrangement.
template <class K, class Ord>
std::vector<VecPoly<K>> canonicalize_basis(std::vector<VecPoly<K>> basis, const Ord& ord)
{
	basis.erase(std::remove_if(basis.begin(), basis.end(),
	                           [](const VecPoly<K>& v) { return v.is_zero(); }),
	            basis.end());
	if (basis.empty())
		return basis;

	// largest leading term first; divisors are never smaller in a local order
	auto by_lead = [&](const VecPoly<K>& a, const VecPoly<K>& b) {
		ModTerm<K> la = lead_mod_term(a, ord);
		ModTerm<K> lb = lead_mod_term(b, ord);
		if (ord.mod_greater(la.mono, la.comp, lb.mono, lb.comp))
			return true;
		if (ord.mod_greater(lb.mono, lb.comp, la.mono, la.comp))
			return false;
		return detail::vec_less_structural(a, b);
	};
	std::sort(basis.begin(), basis.end(), by_lead);
	std::vector<VecPoly<K>> minimal;
	for (const auto& g : basis) {
		ModTerm<K> lg = lead_mod_term(g, ord);
		bool redundant = false;
		for (const auto& kept : minimal) {
			ModTerm<K> lk = lead_mod_term(kept, ord);
			if (lk.comp == lg.comp && lk.mono.divides(lg.mono)) {
				redundant = true;
				break;
			}
		}
		if (!redundant)
			minimal.push_back(g);
	}

	// tail reduction against the other elements, iterated to a fixpoint
	for (int pass = 0; pass < 32; ++pass) {
		bool changed = false;
		for (size_t i = 0; i < minimal.size(); ++i) {
			std::vector<VecPoly<K>> others;
			others.reserve(minimal.size() - 1);
			for (size_t j = 0; j < minimal.size(); ++j)
				if (j != i)
					others.push_back(minimal[j]);
			VecPoly<K> reduced = normal_form(minimal[i], others, ord);
			ModTerm<K> lt = lead_mod_term(reduced, ord);
			reduced = reduced.scaled(lt.coeff.inv());
			if (reduced != minimal[i]) {
				minimal[i] = std::move(reduced);
				changed = true;
			}
		}
		if (!changed)
			break;
	}

	std::sort(minimal.begin(), minimal.end(), by_lead);
	return minimal;
}

template <class K, class Ord>
std::vector<VecPoly<K>> std_basis_vec(const std::vector<VecPoly<K>>& gens, const Ord& ord)
{
	return canonicalize_basis(std_basis_raw(gens, ord), ord);
}

// ideal (rank-1) standard basis; generators must have zero constant term
template <class K>
std::vector<Poly<K>> std_basis(const std::vector<Poly<K>>& gens, const LocalOrder& ord)
{
	for (const auto& g : gens)
		if (g.has_constant_term())
			fail(ErrorCode::ConstantTermPresent, "ideal generator has a nonzero constant term");
	std::vector<VecPoly<K>> result = std_basis_vec(wrap_scalars(gens), ord);
	std::vector<Poly<K>> out;
	out.reserve(result.size());
	for (auto& v : result)
		out.push_back(v[0]);
	return out;
}

// every S-vector weakly reduces to zero
template <class K, class Ord>
bool is_standard_basis(const std::vector<VecPoly<K>>& basis, const Ord& ord)
{
	for (size_t j = 0; j < basis.size(); ++j)
		for (size_t i = 0; i < j; ++i) {
			if (basis[i].is_zero() || basis[j].is_zero())
				continue;
			ModTerm<K> li = lead_mod_term(basis[i], ord);
			ModTerm<K> lj = lead_mod_term(basis[j], ord);
			if (li.comp != lj.comp)
				continue;
			VecPoly<K> s = detail::spair(basis[i], basis[j], ord);
			if (s.is_zero())
				continue;
			if (!weak_normal_form(s, basis, ord).remainder.is_zero())
				return false;
		}
	return true;
}

template <class K>
bool is_standard_basis(const std::vector<Poly<K>>& basis, const LocalOrder& ord)
{
	return is_standard_basis(wrap_scalars(basis), ord);
}

// Syzygies of a standard basis, one generator per overlapping pair: dividing
// the S-vector through the basis and keeping the quotients yields an exact
// relation  unit*(cross terms) - sum coeffs = 0.
template <class K, class Ord>
std::vector<VecPoly<K>> syzygies_vec(const std::vector<VecPoly<K>>& basis, const Ord& ord)
{
	const int n = static_cast<int>(basis.size());
	const int nv = n > 0 ? basis[0].nvars() : 0;
	std::vector<VecPoly<K>> out;
	for (int j = 0; j < n; ++j)
		for (int i = 0; i < j; ++i) {
			if (basis[i].is_zero() || basis[j].is_zero())
				continue;
			ModTerm<K> li = lead_mod_term(basis[i], ord);
			ModTerm<K> lj = lead_mod_term(basis[j], ord);
			if (li.comp != lj.comp)
				continue;
			Monomial l = Monomial::lcm(li.mono, lj.mono);
			VecPoly<K> s = basis[i].times_term(l.div(li.mono), lj.coeff) -
			               basis[j].times_term(l.div(lj.mono), li.coeff);
			ReductionResult<K> red = weak_normal_form(s, basis, ord, true);
			if (!red.remainder.is_zero())
				fail(ErrorCode::NotStandardBasis, "an S-vector does not reduce to zero");
			VecPoly<K> z(n, nv);
			if (s.is_zero()) {
				z[i] = Poly<K>::term(nv, l.div(li.mono), lj.coeff);
				z[j] = -Poly<K>::term(nv, l.div(lj.mono), li.coeff);
			} else {
				z[i] = red.unit.times_term(l.div(li.mono), lj.coeff);
				z[j] = -red.unit.times_term(l.div(lj.mono), li.coeff);
				for (int t = 0; t < n; ++t)
					z[t] = z[t] - red.coeffs[t];
			}
			if (!z.is_zero())
				out.push_back(std::move(z));
		}
	return out;
}

template <class K>
std::vector<VecPoly<K>> syzygies(const std::vector<Poly<K>>& basis, const LocalOrder& ord)
{
	return syzygies_vec(wrap_scalars(basis), ord);
}

/// Syzygies of an arbitrary generating list: append a tag component per
// generator, compute a standard basis under an order where the original
// components dominate, and read the relations off the elements supported
// entirely on the tags.
template <class K>
std::vector<VecPoly<K>> syzygies_of_generators(const std::vector<VecPoly<K>>& cols,
                                               const LocalOrder& ord)
{
	const int s = static_cast<int>(cols.size());
	if (s == 0)
		return {};
	const int r = cols[0].rank();
	const int nv = cols[0].nvars();
	K one;
	bool found = false;
	for (const auto& c : cols)
		for (const auto& p : c.comps())
			if (!p.is_zero()) {
				one = p.lead().coeff.one_like();
				found = true;
			}
	if (!found) {
		// all columns are zero: the syzygy module is free on the tags
		std::vector<VecPoly<K>> out;
		return out;
	}

	std::vector<VecPoly<K>> graph;
	graph.reserve(s);
	for (int l = 0; l < s; ++l) {
		VecPoly<K> g(r + s, nv);
		for (int i = 0; i < r; ++i)
			g[i] = cols[l][i];
		g[r + l] = Poly<K>::constant(nv, one);
		graph.push_back(std::move(g));
	}

	BlockLocalOrder block(ord, r);
	std::vector<VecPoly<K>> basis = std_basis_vec(graph, block);
	std::vector<VecPoly<K>> out;
	for (const auto& b : basis) {
		bool pure = true;
		for (int i = 0; i < r; ++i)
			if (!b[i].is_zero()) {
				pure = false;
				break;
			}
		if (!pure)
			continue;
		VecPoly<K> z(s, nv);
		for (int l = 0; l < s; ++l)
			z[l] = b[r + l];
		if (!z.is_zero())
			out.push_back(std::move(z));
	}
	return out;
}

} // namespace formalglue
