#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "local_order.hpp"
#include "vecpoly.hpp"

namespace formalglue {

// Outcome of a weak reduction: unit * f = sum coeffs[i] * g_i + remainder,
// where unit has constant term 1. Certificates are filled only on request.
template <class K>
struct ReductionResult {
	VecPoly<K> remainder;
	Poly<K> unit;
	std::vector<Poly<K>> coeffs;
};

namespace detail {

// step guard; desk-scale inputs stay far below this
constexpr long kMaxReductionSteps = 2000000;

template <class K>
struct Reducer {
	VecPoly<K> value;
	Monomial lead_mono;
	int lead_comp;
	K lead_coeff;
	int ecart;
	// relation ledger: unit * f = sum coeffs[i] * g_i + value
	Poly<K> unit;
	std::vector<Poly<K>> coeffs;
};

} // namespace detail

// Weak normal form with respect to a local order: only leading terms are
// reduced, and intermediate results with smaller ecart join the reducer pool
// so that the division terminates even though the order is not a well-order.
// Reducer choice: smallest ecart, ties by pool index.
template <class K, class Ord>
ReductionResult<K> weak_normal_form(const VecPoly<K>& f, const std::vector<VecPoly<K>>& gens,
                                    const Ord& ord, bool want_cert = false)
{
	const int nv = f.nvars();
	const int n = static_cast<int>(gens.size());
	std::vector<detail::Reducer<K>> pool;
	pool.reserve(n);
	for (int i = 0; i < n; ++i) {
		if (gens[i].is_zero())
			continue;
		detail::Reducer<K> r;
		r.value = gens[i];
		ModTerm<K> lt = lead_mod_term(gens[i], ord);
		r.lead_mono = lt.mono;
		r.lead_comp = lt.comp;
		r.lead_coeff = lt.coeff;
		r.ecart = gens[i].max_degree() - lt.mono.degree();
		if (want_cert) {
			r.unit = Poly<K>(nv);
			r.coeffs.assign(n, Poly<K>(nv));
			r.coeffs[i] = -Poly<K>::constant(nv, lt.coeff.one_like());
		}
		pool.push_back(std::move(r));
	}

	VecPoly<K> h = f;
	Poly<K> unit(nv);
	std::vector<Poly<K>> coeffs;
	if (want_cert) {
		K one = [&] {
			for (const auto& v : f.comps())
				for (const auto& t : v.terms())
					return t.coeff.one_like();
			for (const auto& g : gens)
				for (const auto& v : g.comps())
					for (const auto& t : v.terms())
						return t.coeff.one_like();
			return K();
		}();
		unit = Poly<K>::constant(nv, one);
		coeffs.assign(n, Poly<K>(nv));
	}

	long steps = 0;
	while (!h.is_zero()) {
		ModTerm<K> lt = lead_mod_term(h, ord);
		int chosen = -1;
		for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
			const auto& r = pool[i];
			if (r.lead_comp != lt.comp || !r.lead_mono.divides(lt.mono))
				continue;
			if (chosen < 0 || r.ecart < pool[chosen].ecart)
				chosen = i;
		}
		if (chosen < 0)
			break;

		int h_ecart = h.max_degree() - lt.mono.degree();
		if (pool[chosen].ecart > h_ecart) {
			detail::Reducer<K> snap;
			snap.value = h;
			snap.lead_mono = lt.mono;
			snap.lead_comp = lt.comp;
			snap.lead_coeff = lt.coeff;
			snap.ecart = h_ecart;
			if (want_cert) {
				snap.unit = unit;
				snap.coeffs = coeffs;
			}
			pool.push_back(std::move(snap));
		}

		const auto& r = pool[chosen];
		K c = lt.coeff * r.lead_coeff.inv();
		Monomial m = lt.mono.div(r.lead_mono);
		h = h - r.value.times_term(m, c);
		if (want_cert) {
			unit = unit - r.unit.times_term(m, c);
			for (int i = 0; i < n; ++i)
				if (!r.coeffs[i].is_zero())
					coeffs[i] = coeffs[i] - r.coeffs[i].times_term(m, c);
		}

		if (++steps > detail::kMaxReductionSteps)
			throw std::runtime_error("reduction step guard exceeded");
	}

	ReductionResult<K> out;
	out.remainder = std::move(h);
	if (want_cert) {
		out.unit = std::move(unit);
		out.coeffs = std::move(coeffs);
	}
	return out;
}

// Full normal form: top-reduce, then split off the irreducible leading term
// and continue on the tail with a fresh reducer pool. Every term of the
// result is irreducible against the leading terms of gens, and the result is
// zero exactly when f lies in the submodule, provided gens is a standard
// basis.
template <class K, class Ord>
VecPoly<K> normal_form(const VecPoly<K>& f, const std::vector<VecPoly<K>>& gens, const Ord& ord)
{
	VecPoly<K> result(f.rank(), f.nvars());
	VecPoly<K> h = f;
	long rounds = 0;
	while (!h.is_zero()) {
		VecPoly<K> rem = weak_normal_form(h, gens, ord).remainder;
		if (rem.is_zero())
			break;
		ModTerm<K> lt = lead_mod_term(rem, ord);
		VecPoly<K> head = VecPoly<K>::unit(rem.rank(), lt.comp, Poly<K>::term(rem.nvars(), lt.mono, lt.coeff));
		result = result + head;
		h = rem - head;
		if (++rounds > detail::kMaxReductionSteps)
			throw std::runtime_error("reduction round guard exceeded");
	}
	return result;
}

// scalar wrappers

template <class K>
VecPoly<K> wrap_scalar(const Poly<K>& f)
{
	return VecPoly<K>::unit(1, 0, f);
}

template <class K>
std::vector<VecPoly<K>> wrap_scalars(const std::vector<Poly<K>>& fs)
{
	std::vector<VecPoly<K>> out;
	out.reserve(fs.size());
	for (const auto& f : fs)
		out.push_back(wrap_scalar(f));
	return out;
}

template <class K>
ReductionResult<K> weak_normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gens,
                                    const LocalOrder& ord, bool want_cert = false)
{
	return weak_normal_form(wrap_scalar(f), wrap_scalars(gens), ord, want_cert);
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gens, const LocalOrder& ord)
{
	return normal_form(wrap_scalar(f), wrap_scalars(gens), ord)[0];
}

} // namespace formalglue
