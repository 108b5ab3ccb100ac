#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "resolution.hpp"
#include "truncation.hpp"

namespace formalglue {

// Local map between presented rings, one image polynomial per source variable.
template <class K>
struct RingSurjection {
	LocalRingPresentation<K> source;
	LocalRingPresentation<K> target;
	std::vector<Poly<K>> images;
};

// plain substitution, no reduction
template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images, int target_nvars,
                   const K& one)
{
	std::vector<std::vector<Poly<K>>> pw(images.size());
	Poly<K> out(target_nvars);
	for (const auto& t : f.terms()) {
		Poly<K> prod = Poly<K>::constant(target_nvars, t.coeff);
		for (int i = 0; i < static_cast<int>(images.size()); ++i) {
			int e = t.mono[i];
			if (e == 0)
				continue;
			auto& cache = pw[i];
			if (cache.empty())
				cache.push_back(Poly<K>::constant(target_nvars, one));
			while (static_cast<int>(cache.size()) <= e)
				cache.push_back(cache.back() * images[i]);
			prod = prod * cache[e];
		}
		out = out + prod;
	}
	return out;
}

template <class K>
Poly<K> apply_map(const RingSurjection<K>& m, const Poly<K>& f)
{
	if (f.nvars() != m.source.nvars())
		fail(ErrorCode::AmbientMismatch, "polynomial is not written in the map's source ambient");
	return m.target.reduce(substitute(f, m.images, m.target.nvars(), m.target.one()));
}

// A well-defined local map needs images inside the maximal ideal that send
// every source relation into the target ideal.
template <class K>
RingSurjection<K> make_map(LocalRingPresentation<K> source, LocalRingPresentation<K> target,
                           std::vector<Poly<K>> images)
{
	if (static_cast<int>(images.size()) != source.nvars())
		fail(ErrorCode::IllDefinedMap, "need exactly one image per source variable");
	for (const auto& f : images) {
		if (f.nvars() != target.nvars())
			fail(ErrorCode::AmbientMismatch, "image not written in the target ambient");
		if (f.has_constant_term())
			fail(ErrorCode::IllDefinedMap,
			     "image " + to_string(f, target.vars()) + " has a constant term, so the map is not local");
	}
	RingSurjection<K> m{std::move(source), std::move(target), std::move(images)};
	for (const auto& g : m.source.gens())
		if (!apply_map(m, g).is_zero())
			fail(ErrorCode::IllDefinedMap, "relation " + to_string(g, m.source.vars()) +
			                                   " does not land in the target ideal");
	return m;
}

template <class K>
RingSurjection<K> identity_map(const LocalRingPresentation<K>& source,
                               const LocalRingPresentation<K>& target)
{
	std::vector<Poly<K>> imgs;
	for (int i = 0; i < source.nvars(); ++i)
		imgs.push_back(Poly<K>::variable(target.nvars(), i, target.one()));
	return make_map(source, target, std::move(imgs));
}

// Surjectivity of a local map of complete local rings comes down to the
// induced map on cotangent spaces being onto: the linear parts of the images
// together with the linear parts of the target relations must span.
template <class K>
bool is_surjective(const RingSurjection<K>& m)
{
	const int n = m.target.nvars();
	std::vector<std::vector<K>> cols;
	auto add_linear = [&](const Poly<K>& f) {
		Poly<K> lin = f.homogeneous_part(1);
		std::vector<K> v(n);
		for (const auto& t : lin.terms())
			for (int i = 0; i < n; ++i)
				if (t.mono[i] == 1)
					v[i] = t.coeff;
		cols.push_back(std::move(v));
	};
	for (const auto& f : m.images)
		add_linear(f);
	for (const auto& g : m.target.gens())
		add_linear(g);
	return rank_of_vectors(cols, n) == n;
}

// A surjection is an isomorphism iff its kernel vanishes. A nonzero kernel
// element survives in some finite truncation, so unequal truncation
// dimensions certify a kernel; we probe levels up to the given bound.
template <class K>
bool is_isomorphism_up_to(const RingSurjection<K>& m, int level)
{
	if (!is_surjective(m))
		return false;
	if (edim(m.source) != edim(m.target) || krull_dim(m.source) != krull_dim(m.target))
		return false;
	for (int n = 1; n <= level; ++n)
		if (truncate(m.source, n).dim() != truncate(m.target, n).dim())
			return false;
	return true;
}

template <class K>
bool same_presentation(const LocalRingPresentation<K>& a, const LocalRingPresentation<K>& b)
{
	return a.vars() == b.vars() && a.gens() == b.gens();
}

enum class FiberKind { OverResidueField, SharedAmbient };

// Closed-form fiber product R x_T S along two surjections, carried as a
// presentation together with the two projections and their kernels.
template <class K>
struct FiberProduct {
	FiberKind kind = FiberKind::OverResidueField;
	LocalRingPresentation<K> ring;
	LocalRingPresentation<K> base; // T
	RingSurjection<K> to_first;    // onto R
	RingSurjection<K> to_second;   // onto S
	std::vector<Poly<K>> ker_first;  // kernel of ring -> R, in fiber coordinates
	std::vector<Poly<K>> ker_second; // kernel of ring -> S
	std::vector<Poly<K>> ker_first_to_base;  // kernel of R -> T, in R coordinates
	std::vector<Poly<K>> ker_second_to_base; // kernel of S -> T, in S coordinates
	RingSurjection<K> first_to_base;  // R -> T
	RingSurjection<K> second_to_base; // S -> T
	int second_offset = 0; // where the second factor's ambient sits inside ours
};

namespace detail {

inline std::string fresh_var(const std::string& base, std::set<std::string>& used)
{
	std::string cand = base;
	for (int i = 2; used.count(cand); ++i)
		cand = base + (i == 2 ? "_r" : "_r" + std::to_string(i));
	used.insert(cand);
	return cand;
}

} // namespace detail

// re-express f in a wider ambient, its variables starting at `offset`
template <class K>
Poly<K> embed_poly(const Poly<K>& f, int total, int offset)
{
	std::vector<Term<K>> ts;
	ts.reserve(f.terms().size());
	for (const auto& t : f.terms()) {
		Monomial m(total);
		for (int i = 0; i < t.mono.nvars(); ++i)
			m[offset + i] = t.mono[i];
		ts.push_back({std::move(m), t.coeff});
	}
	return Poly<K>::from_terms(total, std::move(ts));
}

// R x_k S glued over the residue field: juxtapose the two ambients, keep both
// ideals, and kill every cross product of variables from opposite sides.
template <class K>
FiberProduct<K> fiber_over_k(const LocalRingPresentation<K>& R, const LocalRingPresentation<K>& S)
{
	if (R.is_residue_field() || S.is_residue_field())
		fail(ErrorCode::TrivialFactor,
		     "a factor is the residue field, so the fiber product is the other factor");
	const int n = R.nvars(), m = S.nvars(), total = n + m;
	const K one = R.one();

	std::set<std::string> used(R.vars().begin(), R.vars().end());
	std::vector<std::string> vars = R.vars();
	for (const auto& v : S.vars())
		vars.push_back(detail::fresh_var(v, used));

	std::vector<Poly<K>> gens;
	for (const auto& g : R.gens())
		gens.push_back(embed_poly(g, total, 0));
	for (const auto& g : S.gens())
		gens.push_back(embed_poly(g, total, n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < m; ++j)
			gens.push_back(Poly<K>::term(
				total, Monomial::variable(total, i).times(Monomial::variable(total, n + j)), one));

	FiberProduct<K> F;
	F.kind = FiberKind::OverResidueField;
	F.ring = present(vars, gens, one); // fresh default order, the ambient widened
	F.base = present(std::vector<std::string>{}, std::vector<Poly<K>>{}, one);
	F.second_offset = n;

	std::vector<Poly<K>> imgR, imgS;
	for (int i = 0; i < total; ++i)
		imgR.push_back(i < n ? R.var_poly(i) : Poly<K>::zero(n));
	for (int i = 0; i < total; ++i)
		imgS.push_back(i >= n ? S.var_poly(i - n) : Poly<K>::zero(m));
	F.to_first = make_map(F.ring, R, std::move(imgR));
	F.to_second = make_map(F.ring, S, std::move(imgS));

	for (int j = 0; j < m; ++j)
		F.ker_first.push_back(Poly<K>::variable(total, n + j, one));
	for (int i = 0; i < n; ++i)
		F.ker_second.push_back(Poly<K>::variable(total, i, one));
	for (int i = 0; i < n; ++i)
		F.ker_first_to_base.push_back(R.var_poly(i));
	for (int j = 0; j < m; ++j)
		F.ker_second_to_base.push_back(S.var_poly(j));
	F.first_to_base = make_map(R, F.base, std::vector<Poly<K>>(n, Poly<K>::zero(0)));
	F.second_to_base = make_map(S, F.base, std::vector<Poly<K>>(m, Poly<K>::zero(0)));
	return F;
}

// Intersection of two ideals in a power series ring, through syzygies of the
// family {(1,1)} u {(f,0) : f in I} u {(0,g) : g in J}: a relation forces its
// first coefficient into both ideals, and every intersection element shows up
// as such a coefficient.
template <class K>
std::vector<Poly<K>> intersect_ideals(const std::vector<Poly<K>>& I, const std::vector<Poly<K>>& J,
                                      int nvars, const K& one, const LocalOrder& ord)
{
	std::vector<VecPoly<K>> cols;
	VecPoly<K> diag(2, nvars);
	diag[0] = Poly<K>::constant(nvars, one);
	diag[1] = diag[0];
	cols.push_back(std::move(diag));
	for (const auto& f : I) {
		if (f.is_zero())
			continue;
		VecPoly<K> v(2, nvars);
		v[0] = f;
		cols.push_back(std::move(v));
	}
	for (const auto& g : J) {
		if (g.is_zero())
			continue;
		VecPoly<K> v(2, nvars);
		v[1] = g;
		cols.push_back(std::move(v));
	}
	std::vector<Poly<K>> out;
	for (const auto& z : syzygies_of_generators(cols, ord))
		if (!z[0].is_zero())
			out.push_back(z[0].monic());
	return out;
}

// Two quotients of one ambient glued over their common quotient: the fiber
// product of A/I and A/J over A/(I+J) is A/(I n J).
template <class K>
FiberProduct<K> fiber_same_ambient(const LocalRingPresentation<K>& A, std::vector<Poly<K>> I,
                                   std::vector<Poly<K>> J)
{
	auto prepare = [&](std::vector<Poly<K>>& gens, const char* which) {
		bool nonzero = false;
		for (const auto& f : gens) {
			if (f.nvars() != A.nvars())
				fail(ErrorCode::AmbientMismatch,
				     std::string(which) + " ideal generator written in a different ambient");
			if (!A.reduce(f).is_zero())
				nonzero = true;
		}
		if (!nonzero)
			fail(ErrorCode::ZeroIdeal,
			     std::string(which) + " ideal is zero; both sides must cut something out");
	};
	prepare(I, "first");
	prepare(J, "second");

	std::vector<Poly<K>> Ifull = A.gens(), Jfull = A.gens(), both = A.gens();
	Ifull.insert(Ifull.end(), I.begin(), I.end());
	Jfull.insert(Jfull.end(), J.begin(), J.end());
	both.insert(both.end(), I.begin(), I.end());
	both.insert(both.end(), J.begin(), J.end());

	LocalRingPresentation<K> R = present(A.vars(), Ifull, A.one(), A.order());
	LocalRingPresentation<K> S = present(A.vars(), Jfull, A.one(), A.order());

	FiberProduct<K> F;
	F.kind = FiberKind::SharedAmbient;
	F.ring = present(A.vars(), intersect_ideals(Ifull, Jfull, A.nvars(), A.one(), A.order()),
	                 A.one(), A.order());
	F.base = present(A.vars(), both, A.one(), A.order());
	F.second_offset = 0;
	F.to_first = identity_map(F.ring, R);
	F.to_second = identity_map(F.ring, S);
	F.ker_first = I;
	F.ker_second = J;
	F.ker_first_to_base = J;
	F.ker_second_to_base = I;
	F.first_to_base = identity_map(R, F.base);
	F.second_to_base = identity_map(S, F.base);
	return F;
}

struct FiberInvariants {
	int dim = 0;         // always max of the factor dimensions
	int depth = 0;       // lower bound, exact over the residue field
	bool depth_exact = false;
};

// dim(R x_T S) = max(dim R, dim S); depth(R x_T S) >= min(depth R, depth S,
// depth T + 1), with equality against min(depth R, depth S, 1) when T = k.
template <class K>
FiberInvariants fiber_invariants(const RingSurjection<K>& a, const RingSurjection<K>& b)
{
	if (!same_presentation(a.target, b.target))
		fail(ErrorCode::AmbientMismatch, "the two maps land in different rings");
	if (!is_surjective(a) || !is_surjective(b))
		fail(ErrorCode::NonSurjectiveMap, "fiber products are taken along surjections only");
	FiberInvariants out;
	out.dim = std::max(krull_dim(a.source), krull_dim(b.source));
	int dR = depth(a.source), dS = depth(b.source);
	if (a.target.is_residue_field()) {
		out.depth = std::min({dR, dS, 1});
		out.depth_exact = true;
	} else {
		out.depth = std::min({dR, dS, depth(a.target) + 1});
		out.depth_exact = false;
	}
	return out;
}

// Level-n model of R x_T S when no closed-form presentation applies: the
// subalgebra of A_R + A_S of pairs with equal image in A_T.
template <class K>
struct TruncatedFiber {
	int level = 0;
	ArtinianTruncation<K> first, second, base;
	std::vector<std::vector<K>> basis; // coordinates in A_R + A_S
	int dim() const { return static_cast<int>(basis.size()); }
};

// matrix of the induced map on level-n truncations, column per basis monomial
template <class K>
Matrix<K> truncated_map_matrix(const RingSurjection<K>& m, const ArtinianTruncation<K>& src,
                               const ArtinianTruncation<K>& tgt)
{
	std::vector<std::vector<K>> cols;
	for (const auto& mono : src.basis()) {
		Poly<K> f = Poly<K>::term(m.source.nvars(), mono, src.one());
		cols.push_back(tgt.coords(substitute(f, m.images, m.target.nvars(), tgt.one())));
	}
	return Matrix<K>::from_columns(tgt.dim(), cols);
}

template <class K>
TruncatedFiber<K> truncated_fiber(const RingSurjection<K>& a, const RingSurjection<K>& b,
                                  int level)
{
	if (!same_presentation(a.target, b.target))
		fail(ErrorCode::AmbientMismatch, "the two maps land in different rings");
	if (!is_surjective(a) || !is_surjective(b))
		fail(ErrorCode::NonSurjectiveMap, "fiber products are taken along surjections only");
	TruncatedFiber<K> F;
	F.level = level;
	F.first = truncate(a.source, level);
	F.second = truncate(b.source, level);
	F.base = truncate(a.target, level);
	Matrix<K> ma = truncated_map_matrix(a, F.first, F.base);
	Matrix<K> mb = truncated_map_matrix(b, F.second, F.base);
	Matrix<K> stacked(F.base.dim(), F.first.dim() + F.second.dim(), F.base.one());
	for (int i = 0; i < F.base.dim(); ++i) {
		for (int j = 0; j < F.first.dim(); ++j)
			stacked.at(i, j) = ma.at(i, j);
		for (int j = 0; j < F.second.dim(); ++j)
			stacked.at(i, F.first.dim() + j) = -mb.at(i, j);
	}
	F.basis = stacked.kernel_basis();
	return F;
}

template <class K>
std::vector<K> pair_multiply(const TruncatedFiber<K>& F, const std::vector<K>& u,
                             const std::vector<K>& v)
{
	const int d1 = F.first.dim();
	std::vector<K> uR(u.begin(), u.begin() + d1), uS(u.begin() + d1, u.end());
	std::vector<K> vR(v.begin(), v.begin() + d1), vS(v.begin() + d1, v.end());
	std::vector<K> pR = F.first.multiply(uR, vR), pS = F.second.multiply(uS, vS);
	pR.insert(pR.end(), pS.begin(), pS.end());
	return pR;
}

// Both maps being onto makes 0 -> fiber -> A_R + A_S -> A_T -> 0 exact at
// every truncation level, so the dimensions subtract.
template <class K>
bool check_truncated_dimension(const TruncatedFiber<K>& F)
{
	return F.dim() == F.first.dim() + F.second.dim() - F.base.dim();
}

// The level-n truncation of a closed-form fiber presentation must match the
// fiber of the level-n truncations: equal dimension, and the pairing through
// the projections is an injective multiplicative map into the pair
// subalgebra. Equal dimensions then make it an isomorphism onto it.
template <class K>
bool fiber_commutes_with_truncation(const FiberProduct<K>& F, int level)
{
	ArtinianTruncation<K> AF = truncate(F.ring, level);
	TruncatedFiber<K> D = truncated_fiber(F.first_to_base, F.second_to_base, level);
	if (AF.dim() != D.dim())
		return false;

	const int rows = D.first.dim() + D.second.dim();
	std::vector<std::vector<K>> cols;
	for (const auto& mono : AF.basis()) {
		Poly<K> f = Poly<K>::term(F.ring.nvars(), mono, F.ring.one());
		std::vector<K> w = D.first.coords(
			substitute(f, F.to_first.images, F.to_first.target.nvars(), F.ring.one()));
		std::vector<K> v = D.second.coords(
			substitute(f, F.to_second.images, F.to_second.target.nvars(), F.ring.one()));
		w.insert(w.end(), v.begin(), v.end());
		cols.push_back(std::move(w));
	}

	Matrix<K> pairing = Matrix<K>::from_columns(rows, cols);
	if (pairing.rank() != AF.dim())
		return false;
	Matrix<K> sub = Matrix<K>::from_columns(rows, D.basis);
	for (const auto& c : cols)
		if (!sub.span_contains(c))
			return false;

	// structure constants transport: pairing(e_i e_j) = pairing(e_i) pairing(e_j)
	for (int i = 0; i < AF.dim(); ++i)
		for (int j = i; j < AF.dim(); ++j) {
			std::vector<K> ei(AF.dim()), ej(AF.dim());
			ei[i] = AF.one();
			ej[j] = AF.one();
			std::vector<K> prod = AF.multiply(ei, ej);
			std::vector<K> lhs(rows);
			for (int k = 0; k < AF.dim(); ++k) {
				if (prod[k].is_zero())
					continue;
				for (int r = 0; r < rows; ++r)
					lhs[r] += prod[k] * cols[k][r];
			}
			if (lhs != pair_multiply(D, cols[i], cols[j]))
				return false;
		}
	return true;
}

// The two ways around the square fiber -> R -> T and fiber -> S -> T agree;
// checked as matrices between truncations at the given level.
template <class K>
bool check_pushout_square(const FiberProduct<K>& F, int level)
{
	ArtinianTruncation<K> AF = truncate(F.ring, level);
	ArtinianTruncation<K> AR = truncate(F.to_first.target, level);
	ArtinianTruncation<K> AS = truncate(F.to_second.target, level);
	ArtinianTruncation<K> AT = truncate(F.base, level);
	Matrix<K> left =
		truncated_map_matrix(F.first_to_base, AR, AT) * truncated_map_matrix(F.to_first, AF, AR);
	Matrix<K> right =
		truncated_map_matrix(F.second_to_base, AS, AT) * truncated_map_matrix(F.to_second, AF, AS);
	return left == right;
}

// basis of the pairs ideal, the elements of the subalgebra with both
// augmentations zero; the constant coordinate sits at index 0 of each half
template <class K>
std::vector<std::vector<K>> pair_ideal_basis(const TruncatedFiber<K>& F)
{
	Matrix<K> conditions(2, F.dim(), F.base.one());
	for (int j = 0; j < F.dim(); ++j) {
		conditions.at(0, j) = F.basis[j][0];
		conditions.at(1, j) = F.basis[j][F.first.dim()];
	}
	std::vector<std::vector<K>> out;
	for (const auto& c : conditions.kernel_basis()) {
		std::vector<K> v(F.first.dim() + F.second.dim());
		for (int j = 0; j < F.dim(); ++j) {
			if (c[j].is_zero())
				continue;
			for (size_t r = 0; r < v.size(); ++r)
				v[r] += c[j] * F.basis[j][r];
		}
		out.push_back(std::move(v));
	}
	return out;
}

// The 2n-th power of the pairs ideal lands coordinatewise inside the n-th
// powers of the factor ideals. Checked inside the level-(2n+1) model, where
// the 2n-fold products are still visible.
template <class K>
bool check_pair_power_containment(const RingSurjection<K>& a, const RingSurjection<K>& b, int n)
{
	TruncatedFiber<K> F = truncated_fiber(a, b, 2 * n + 1);
	std::vector<std::vector<K>> ideal = pair_ideal_basis(F);
	std::vector<std::vector<K>> power = ideal;
	for (int step = 1; step < 2 * n; ++step) {
		std::vector<std::vector<K>> next;
		for (const auto& u : power)
			for (const auto& v : ideal)
				next.push_back(pair_multiply(F, u, v));
		// prune to an independent spanning subset to keep the product count down
		Matrix<K> m = Matrix<K>::from_columns(F.first.dim() + F.second.dim(), next);
		std::vector<int> piv = m.rref();
		std::vector<std::vector<K>> kept;
		for (int p : piv)
			kept.push_back(next[p]);
		power = std::move(kept);
	}
	std::vector<bool> okR(F.first.dim(), false), okS(F.second.dim(), false);
	for (int i : F.first.power_indices(n))
		okR[i] = true;
	for (int i : F.second.power_indices(n))
		okS[i] = true;
	for (const auto& w : power) {
		for (int i = 0; i < F.first.dim(); ++i)
			if (!w[i].is_zero() && !okR[i])
				return false;
		for (int i = 0; i < F.second.dim(); ++i)
			if (!w[F.first.dim() + i].is_zero() && !okS[i])
				return false;
	}
	return true;
}

// A module over a factor becomes a module over the fiber through the
// projection: re-embed the relations and let the projection kernel act on
// every generator.
template <class K>
ModulePresentation<K> module_over_fiber(const ModulePresentation<K>& M, const FiberProduct<K>& F,
                                        bool first_factor)
{
	const auto& ker = first_factor ? F.ker_first : F.ker_second;
	const int offset = first_factor ? 0 : F.second_offset;
	const int total = F.ring.nvars();
	ModulePresentation<K> out;
	out.gens = M.gens;
	for (const auto& rel : M.rels) {
		std::vector<Poly<K>> comps;
		for (int i = 0; i < rel.rank(); ++i)
			comps.push_back(embed_poly(rel[i], total, offset));
		VecPoly<K> v = reduce_vec(VecPoly<K>(std::move(comps)), F.ring);
		if (!v.is_zero())
			out.rels.push_back(std::move(v));
	}
	for (const auto& g : ker) {
		Poly<K> r = F.ring.reduce(g);
		if (r.is_zero())
			continue;
		for (int j = 0; j < M.gens; ++j)
			out.rels.push_back(VecPoly<K>::unit(M.gens, j, r));
	}
	return out;
}

struct BettiBoundReport {
	long lhs_b1 = 0, rhs_b1 = 0;     // b1 over the fiber vs b0*b1(T over S) + b1 over R
	long lhs_edim = 0, rhs_edim = 0; // edim of the fiber vs b1(T over S) + edim R
	bool b1_ok = false, edim_ok = false;
};

// First Betti numbers over a fiber product are bounded below: for a module M
// over the first factor R,
//     b1_fiber(M) >= b0_R(M) * b1_S(T) + b1_R(M)
// and specializing M = k,
//     edim(fiber) >= b1_S(T) + edim(R).
template <class K>
BettiBoundReport check_betti_inequality(const ModulePresentation<K>& M, const FiberProduct<K>& F)
{
	const LocalRingPresentation<K>& R = F.to_first.target;
	const LocalRingPresentation<K>& S = F.to_second.target;

	std::vector<int> bR = betti_numbers(M, R, 1);
	std::vector<int> bT = betti_numbers(cyclic_module(S, F.ker_second_to_base), S, 1);
	std::vector<int> bF = betti_numbers(module_over_fiber(M, F, true), F.ring, 1);

	BettiBoundReport rep;
	rep.lhs_b1 = bF[1];
	rep.rhs_b1 = static_cast<long>(bR[0]) * bT[1] + bR[1];
	rep.b1_ok = rep.lhs_b1 >= rep.rhs_b1;
	rep.lhs_edim = edim(F.ring);
	rep.rhs_edim = static_cast<long>(bT[1]) + edim(R);
	rep.edim_ok = rep.lhs_edim >= rep.rhs_edim;
	return rep;
}

} // namespace formalglue
