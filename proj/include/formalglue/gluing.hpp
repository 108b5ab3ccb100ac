#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fiber_product.hpp"

namespace formalglue {

template <class K>
struct Chart {
	std::string name;
	LocalRingPresentation<K> ring;
};

template <class K>
struct Atlas {
	std::string name;
	std::vector<Chart<K>> charts;

	int find(const std::string& chart) const
	{
		for (int i = 0; i < static_cast<int>(charts.size()); ++i)
			if (charts[i].name == chart)
				return i;
		fail(ErrorCode::UndefinedName, "no chart named \"" + chart + "\" in atlas " + name);
	}
};

template <class K>
Atlas<K> make_atlas(std::string name, std::vector<Chart<K>> charts)
{
	std::set<std::string> seen;
	for (const auto& c : charts)
		if (!seen.insert(c.name).second)
			fail(ErrorCode::DuplicateVariable, "chart name \"" + c.name + "\" repeats");
	return Atlas<K>{std::move(name), std::move(charts)};
}

// One chart's worth of a closed immersion Z -> X: the comorphism from the
// receiving carrier chart onto the Z-chart.
template <class K>
struct ImmersionLeg {
	int carrier = 0; // chart index in the carrier atlas
	int z_chart = 0;
	RingSurjection<K> comorphism; // source is the carrier ring, target the Z-chart ring
};

template <class K>
struct ClosedImmersion {
	std::string name;
	std::vector<ImmersionLeg<K>> legs; // exactly one per Z-chart, in Z order
};

// Structural validation only; the comorphisms must be onto for the immersion
// to be closed, and that is checked where the gluing happens.
template <class K>
ClosedImmersion<K> make_immersion(std::string name, const Atlas<K>& X, const Atlas<K>& Z,
                                  std::vector<ImmersionLeg<K>> legs)
{
	std::vector<ImmersionLeg<K>> ordered(Z.charts.size());
	std::vector<bool> covered(Z.charts.size(), false);
	for (auto& leg : legs) {
		if (leg.z_chart < 0 || leg.z_chart >= static_cast<int>(Z.charts.size()) ||
		    leg.carrier < 0 || leg.carrier >= static_cast<int>(X.charts.size()))
			fail(ErrorCode::UndefinedName, "immersion " + name + " references a missing chart");
		if (covered[leg.z_chart])
			fail(ErrorCode::IllDefinedMap,
			     "immersion " + name + " hits chart " + Z.charts[leg.z_chart].name + " twice");
		if (!same_presentation(leg.comorphism.source, X.charts[leg.carrier].ring) ||
		    !same_presentation(leg.comorphism.target, Z.charts[leg.z_chart].ring))
			fail(ErrorCode::AmbientMismatch,
			     "immersion " + name + " pairs charts with a mismatched comorphism");
		covered[leg.z_chart] = true;
		ordered[leg.z_chart] = std::move(leg);
	}
	for (size_t i = 0; i < covered.size(); ++i)
		if (!covered[i])
			fail(ErrorCode::IllDefinedMap,
			     "immersion " + name + " misses chart " + Z.charts[i].name);
	return ClosedImmersion<K>{std::move(name), std::move(ordered)};
}

// A glued chart is the fiber product of the two receiving charts over the
// shared closed piece: in closed form where one applies, as a truncated pair
// model otherwise.
template <class K>
struct GluedChart {
	std::string name; // the Z-chart it sits over
	std::string x_chart, y_chart;
	std::optional<FiberProduct<K>> closed;
	std::optional<TruncatedFiber<K>> model;
	int dim = 0;          // max of the two chart dimensions, always exact
	int depth_bound = 0;
	bool depth_exact = false;
};

template <class K>
struct GluedScheme {
	std::string name;
	std::vector<GluedChart<K>> charts;
};

namespace detail {

// same ideal, verified exactly through mutual standard-basis membership
template <class K>
bool same_ideal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                const LocalOrder& ord)
{
	std::vector<Poly<K>> sa = std_basis(a, ord), sb = std_basis(b, ord);
	for (const auto& f : a)
		if (!normal_form(f, sb, ord).is_zero())
			return false;
	for (const auto& g : b)
		if (!normal_form(g, sa, ord).is_zero())
			return false;
	return true;
}

template <class K>
bool is_identity_images(const RingSurjection<K>& m)
{
	if (m.source.nvars() != m.target.nvars())
		return false;
	for (int i = 0; i < m.source.nvars(); ++i)
		if (m.images[i] != Poly<K>::variable(m.target.nvars(), i, m.target.one()))
			return false;
	return true;
}

// the closed form for two quotients of one ambient applies when both maps
// are the canonical projections and the base presents the ideal sum
template <class K>
bool shared_ambient_applies(const LocalRingPresentation<K>& R, const LocalRingPresentation<K>& S,
                            const LocalRingPresentation<K>& T, const RingSurjection<K>& a,
                            const RingSurjection<K>& b)
{
	if (R.vars() != S.vars() || R.vars() != T.vars())
		return false;
	if (!is_identity_images(a) || !is_identity_images(b))
		return false;
	std::vector<Poly<K>> both = R.gens();
	both.insert(both.end(), S.gens().begin(), S.gens().end());
	return same_ideal(both, T.gens(), T.order());
}

} // namespace detail

template <class K>
GluedScheme<K> glue(std::string name, const Atlas<K>& X, const Atlas<K>& Y, const Atlas<K>& Z,
                    const ClosedImmersion<K>& alpha, const ClosedImmersion<K>& beta,
                    int level = 4)
{
	if (alpha.legs.size() != Z.charts.size() || beta.legs.size() != Z.charts.size())
		fail(ErrorCode::AmbientMismatch, "the immersions do not cover the same atlas");

	GluedScheme<K> out;
	out.name = std::move(name);
	for (size_t zi = 0; zi < Z.charts.size(); ++zi) {
		const auto& la = alpha.legs[zi];
		const auto& lb = beta.legs[zi];
		const auto& zname = Z.charts[zi].name;
		for (const auto* leg : {&la, &lb})
			if (!is_surjective(leg->comorphism))
				fail(ErrorCode::NonSurjectiveMap,
				     "the comorphism onto chart " + zname +
				         " is not onto, so the shared piece is not closed in its carrier; "
				         "gluing along it can produce a subring of the shape "
				         "k[[x, x*y, x*y^2, ...]], which is not Noetherian; refusing");
		const int probe = std::max(level, 4);
		if (is_isomorphism_up_to(la.comorphism, probe) ||
		    is_isomorphism_up_to(lb.comorphism, probe))
			fail(ErrorCode::TrivialGluing,
			     "chart " + zname + " is glued along an isomorphism, which changes nothing");

		const auto& R = X.charts[la.carrier].ring;
		const auto& S = Y.charts[lb.carrier].ring;
		const auto& T = Z.charts[zi].ring;

		GluedChart<K> gc;
		gc.name = zname;
		gc.x_chart = X.charts[la.carrier].name;
		gc.y_chart = Y.charts[lb.carrier].name;
		gc.dim = std::max(krull_dim(R), krull_dim(S));

		bool shared_ambient =
			detail::shared_ambient_applies(R, S, T, la.comorphism, lb.comorphism);

		if (T.is_residue_field()) {
			gc.closed = fiber_over_k(R, S);
			gc.depth_bound = std::min({depth(R), depth(S), 1});
			gc.depth_exact = true;
		} else if (shared_ambient) {
			LocalRingPresentation<K> ambient(R.vars(), {}, R.one(), R.order());
			gc.closed = fiber_same_ambient(ambient, R.gens(), S.gens());
			gc.depth_bound = std::min({depth(R), depth(S), depth(T) + 1});
			gc.depth_exact = false;
		} else {
			gc.model = truncated_fiber(la.comorphism, lb.comorphism, level);
			gc.depth_bound = std::min({depth(R), depth(S), depth(T) + 1});
			gc.depth_exact = false;
		}
		out.charts.push_back(std::move(gc));
	}
	return out;
}

struct ChartSingularity {
	std::string chart;
	bool has_presentation = false;
	int edim = -1;
	int dim = -1;
	bool singular = false;
	std::string note;
};

struct SingularityReport {
	std::vector<ChartSingularity> charts;
	bool some_singular = false;
};

// Every chart glued along a proper closed piece gains embedding dimension
// past its Krull dimension. The numeric check recomputes both when a
// presentation exists; pair models are singular for the same reason but only
// say so structurally.
template <class K>
SingularityReport singularity_report(const GluedScheme<K>& G)
{
	SingularityReport rep;
	for (const auto& c : G.charts) {
		ChartSingularity cs;
		cs.chart = c.name;
		cs.dim = c.dim;
		if (c.closed) {
			cs.has_presentation = true;
			cs.edim = edim(c.closed->ring);
			cs.singular = cs.edim > cs.dim;
			cs.note = cs.singular ? "embedding dimension exceeds dimension" : "regular point";
		} else {
			cs.singular = true;
			cs.note = "no closed-form presentation at this base; singular because gluing "
			          "raises the embedding dimension, numeric check unavailable";
		}
		rep.some_singular = rep.some_singular || cs.singular;
		rep.charts.push_back(std::move(cs));
	}
	return rep;
}

struct NoetherianReport {
	bool all_surjective = false;
	std::vector<std::string> failing; // chart names with a non-surjective comorphism
	std::string verdict;              // "Noetherian" or "Unknown"
	std::string warning;
};

// Gluing along surjections keeps the chart rings Noetherian; a non-surjective
// comorphism voids that argument.
template <class K>
NoetherianReport noetherian_report(const Atlas<K>& Z, const ClosedImmersion<K>& alpha,
                                   const ClosedImmersion<K>& beta)
{
	NoetherianReport rep;
	rep.all_surjective = true;
	for (size_t zi = 0; zi < Z.charts.size(); ++zi) {
		bool ok = is_surjective(alpha.legs[zi].comorphism) &&
		          is_surjective(beta.legs[zi].comorphism);
		if (!ok) {
			rep.all_surjective = false;
			rep.failing.push_back(Z.charts[zi].name);
		}
	}
	if (rep.all_surjective) {
		rep.verdict = "Noetherian";
	} else {
		rep.verdict = "Unknown";
		rep.warning = "a comorphism is not onto; the glued ring can degenerate to a "
		              "subring of the shape k[[x, x*y, x*y^2, ...]], which is not "
		              "Noetherian";
	}
	return rep;
}

// truncation-level consistency of one glued chart: the dimension count and,
// in closed form, agreement with the pair model plus a commuting square
template <class K>
bool verify_glued_chart(const GluedChart<K>& c, int level_max)
{
	if (c.closed) {
		for (int n = 1; n <= level_max; ++n)
			if (!fiber_commutes_with_truncation(*c.closed, n) ||
			    !check_pushout_square(*c.closed, n))
				return false;
		return true;
	}
	return check_truncated_dimension(*c.model);
}

} // namespace formalglue
