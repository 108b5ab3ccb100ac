#pragma once

#include <map>
#include <vector>

#include "local_ring.hpp"

namespace formalglue {

// Finite-dimensional quotient R/(I + m^level) with an explicit monomial
// basis and structure constants. Elements are coordinate vectors.
template <class K>
class ArtinianTruncation {
public:
	ArtinianTruncation() = default;

	ArtinianTruncation(const LocalRingPresentation<K>& R, int level) : level_(level), one_(R.one())
	{
		if (level < 1)
			fail(ErrorCode::TruncationMismatch, "truncation level must be at least 1");
		std::vector<Poly<K>> gens = R.gens();
		std::vector<Monomial> cap;
		monomials_of_degree(R.nvars(), level, cap);
		for (const auto& m : cap)
			gens.push_back(Poly<K>::term(R.nvars(), m, R.one()));
		ring_ = present(R.vars(), gens, R.one(), R.order());
		const auto& sb = ring_.basis();

		for (const auto& m : monomials_below(R.nvars(), level)) {
			bool standard = true;
			for (const auto& g : sb)
				if (lead_term(g, ring_.order()).mono.divides(m)) {
					standard = false;
					break;
				}
			if (standard)
				basis_.push_back(m);
		}
		std::sort(basis_.begin(), basis_.end(),
		          [](const Monomial& a, const Monomial& b) { return canonical_greater(a, b); });
		for (int i = 0; i < dim(); ++i)
			index_[basis_[i].exponents()] = i;

		products_.assign(dim(), std::vector<std::vector<std::pair<int, K>>>(dim()));
		for (int i = 0; i < dim(); ++i)
			for (int j = i; j < dim(); ++j) {
				Poly<K> p = ring_.reduce(
					Poly<K>::term(R.nvars(), basis_[i].times(basis_[j]), R.one()));
				std::vector<std::pair<int, K>> row;
				for (const auto& t : p.terms())
					row.emplace_back(index_.at(t.mono.exponents()), t.coeff);
				products_[i][j] = row;
				products_[j][i] = std::move(row);
			}
	}

	int level() const { return level_; }
	const K& one() const { return one_; }
	int dim() const { return static_cast<int>(basis_.size()); }
	const std::vector<Monomial>& basis() const { return basis_; }
	const LocalRingPresentation<K>& ring() const { return ring_; }

	// coordinates of a polynomial's class
	std::vector<K> coords(const Poly<K>& f) const
	{
		Poly<K> r = ring_.reduce(f);
		std::vector<K> v(dim());
		for (const auto& t : r.terms())
			v[index_.at(t.mono.exponents())] = t.coeff;
		return v;
	}

	std::vector<K> unit_element() const { return coords(Poly<K>::constant(ring_.nvars(), one_)); }

	std::vector<K> multiply(const std::vector<K>& a, const std::vector<K>& b) const
	{
		std::vector<K> out(dim());
		for (int i = 0; i < dim(); ++i) {
			if (a[i].is_zero())
				continue;
			for (int j = 0; j < dim(); ++j) {
				if (b[j].is_zero())
					continue;
				K c = a[i] * b[j];
				for (const auto& [k, s] : products_[i][j])
					out[k] += c * s;
			}
		}
		return out;
	}

	// indices of basis monomials of total degree >= d; they span the image of m^d
	std::vector<int> power_indices(int d) const
	{
		std::vector<int> out;
		for (int i = 0; i < dim(); ++i)
			if (basis_[i].degree() >= d)
				out.push_back(i);
		return out;
	}

private:
	int level_ = 0;
	K one_;
	LocalRingPresentation<K> ring_; // ideal + the degree-level monomials
	std::vector<Monomial> basis_;
	std::map<std::vector<int>, int> index_;
	std::vector<std::vector<std::vector<std::pair<int, K>>>> products_;
};

template <class K>
ArtinianTruncation<K> truncate(const LocalRingPresentation<K>& R, int level)
{
	return ArtinianTruncation<K>(R, level);
}

// Matrix of the surjection from the level of `fine` down to the level of
// `coarse` (same ring, coarse.level <= fine.level): columns are images of the
// fine basis monomials.
template <class K>
Matrix<K> tower_map(const ArtinianTruncation<K>& fine, const ArtinianTruncation<K>& coarse)
{
	if (coarse.level() > fine.level())
		fail(ErrorCode::TruncationMismatch, "tower map goes from a finer to a coarser level");
	Matrix<K> m(coarse.dim(), fine.dim(), coarse.one());
	for (int j = 0; j < fine.dim(); ++j) {
		std::vector<K> img = coarse.coords(
			Poly<K>::term(coarse.ring().nvars(), fine.basis()[j], coarse.one()));
		for (int i = 0; i < coarse.dim(); ++i)
			m.at(i, j) = img[i];
	}
	return m;
}

} // namespace formalglue
