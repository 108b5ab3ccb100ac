#pragma once

#include <map>
#include <vector>

#include <formalglue/linalg.hpp>
#include <formalglue/polynomial.hpp>
#include <formalglue/resolution.hpp>

// Cross-checks done with plain truncated linear algebra, no reduction
// machinery involved. A failed membership at level D certifies the answer;
// a pass certifies it modulo the D+1 power of the maximal ideal.
namespace oracle {

using formalglue::Matrix;
using formalglue::Monomial;
using formalglue::Poly;

struct MonoIndex {
	std::vector<Monomial> list;
	std::map<std::vector<int>, int> pos;

	MonoIndex(int nvars, int maxdeg)
	{
		list = formalglue::monomials_below(nvars, maxdeg + 1);
		for (int i = 0; i < static_cast<int>(list.size()); ++i)
			pos[list[i].exponents()] = i;
	}

	int size() const { return static_cast<int>(list.size()); }
};

template <class K>
std::vector<K> truncated_coords(const Poly<K>& f, const MonoIndex& ix, int maxdeg)
{
	std::vector<K> v(ix.size());
	for (const auto& t : f.terms())
		if (t.mono.degree() <= maxdeg)
			v[ix.pos.at(t.mono.exponents())] = t.coeff;
	return v;
}

// f lies in the ideal modulo degree D+1
template <class K>
bool in_ideal_mod_power(const Poly<K>& f, const std::vector<Poly<K>>& gens, int D, const K& one)
{
	int n = f.nvars();
	MonoIndex ix(n, D);
	std::vector<std::vector<K>> cols;
	for (const auto& g : gens)
		for (const auto& m : ix.list) {
			Poly<K> p = g.times_term(m, one);
			cols.push_back(truncated_coords(p, ix, D));
		}
	Matrix<K> span = Matrix<K>::from_columns(ix.size(), cols);
	return span.span_contains(truncated_coords(f, ix, D));
}

template <class K>
bool ideal_contained_mod_power(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                               int D, const K& one)
{
	for (const auto& f : a)
		if (!in_ideal_mod_power(f, b, D, one))
			return false;
	return true;
}

template <class K>
bool ideals_agree_mod_power(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, int D,
                            const K& one)
{
	return ideal_contained_mod_power(a, b, D, one) && ideal_contained_mod_power(b, a, D, one);
}

// Exact degree-B slice of the syzygy module of scalar generators: kernel
// vectors of the evaluation map on coefficient tuples of degree at most B.
// No truncation happens inside the map, so every kernel vector is a genuine
// syzygy with small coefficients.
template <class K>
std::vector<std::vector<K>> syzygy_slice(const std::vector<Poly<K>>& gens, int B, const K& one)
{
	int n = gens.empty() ? 0 : gens.front().nvars();
	int gmax = 0;
	for (const auto& g : gens)
		gmax = std::max(gmax, g.max_degree());
	MonoIndex domain(n, B);
	MonoIndex image(n, B + gmax);
	std::vector<std::vector<K>> cols;
	for (const auto& g : gens)
		for (const auto& m : domain.list)
			cols.push_back(truncated_coords(g.times_term(m, one), image, B + gmax));
	Matrix<K> mat = Matrix<K>::from_columns(image.size(), cols);
	return mat.kernel_basis();
}

// Betti numbers read off a deliberately unminimized resolution: tensor each
// map down to the residue field and count ranks. Independent of the
// minimization path it cross-checks.
template <class K>
std::vector<int> tor_ranks(const formalglue::ModulePresentation<K>& M,
                           const formalglue::LocalRingPresentation<K>& R, int steps, const K& one)
{
	using formalglue::VecPoly;
	std::vector<std::vector<VecPoly<K>>> maps;
	std::vector<VecPoly<K>> cur;
	for (const auto& c : M.rels) {
		auto v = formalglue::reduce_vec(c, R);
		if (!v.is_zero())
			cur.push_back(v);
	}
	std::vector<int> sizes = {M.gens};
	for (int i = 1; i <= steps + 1; ++i) {
		maps.push_back(cur);
		sizes.push_back(static_cast<int>(cur.size()));
		if (cur.empty())
			break;
		std::vector<VecPoly<K>> nxt;
		for (const auto& z : formalglue::syzygies_over_quotient(cur, R))
			nxt.push_back(formalglue::reduce_vec(z, R));
		cur = std::move(nxt);
	}
	auto const_rank = [&](const std::vector<VecPoly<K>>& cols, int rows) {
		std::vector<std::vector<K>> vecs;
		for (const auto& c : cols) {
			std::vector<K> v(rows);
			for (int i = 0; i < c.rank(); ++i)
				v[i] = c[i].constant_term();
			vecs.push_back(v);
		}
		return formalglue::rank_of_vectors(vecs, rows);
	};
	std::vector<int> out;
	for (int i = 0; i <= steps; ++i) {
		int si = (i < static_cast<int>(sizes.size())) ? sizes[i] : 0;
		int rin = 0, rout = 0;
		if (i >= 1 && i - 1 < static_cast<int>(maps.size()))
			rin = const_rank(maps[i - 1], sizes[i - 1]);
		if (i < static_cast<int>(maps.size()) && si > 0)
			rout = const_rank(maps[i], si);
		(void)one;
		out.push_back(si - rin - rout);
	}
	return out;
}

// every slice syzygy is a combination of the claimed generators, read off
// componentwise modulo degree B+1
template <class K>
bool syzygies_cover_slice(const std::vector<Poly<K>>& gens,
                          const std::vector<std::vector<Poly<K>>>& zs, int B, const K& one)
{
	int n = gens.empty() ? 0 : gens.front().nvars();
	int s = static_cast<int>(gens.size());
	MonoIndex ix(n, B);
	std::vector<std::vector<K>> cols;
	for (const auto& z : zs)
		for (const auto& m : ix.list) {
			std::vector<K> stacked;
			for (int i = 0; i < s; ++i) {
				auto part = truncated_coords(z[i].times_term(m, one), ix, B);
				stacked.insert(stacked.end(), part.begin(), part.end());
			}
			cols.push_back(stacked);
		}
	Matrix<K> span = Matrix<K>::from_columns(s * ix.size(), cols);
	for (const auto& kv : syzygy_slice(gens, B, one)) {
		// kernel vector is indexed generator-major over domain monomials;
		// rebuild the coefficient polynomials, then stack their coordinates
		std::vector<K> stacked;
		for (int i = 0; i < s; ++i) {
			Poly<K> ci(n);
			for (int j = 0; j < ix.size(); ++j) {
				const K& c = kv[i * ix.size() + j];
				if (!c.is_zero())
					ci = ci + Poly<K>::term(n, ix.list[j], c);
			}
			auto part = truncated_coords(ci, ix, B);
			stacked.insert(stacked.end(), part.begin(), part.end());
		}
		if (!span.span_contains(stacked))
			return false;
	}
	return true;
}

} // namespace oracle
