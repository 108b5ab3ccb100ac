#include <catch2/catch_amalgamated.hpp>

#include <formalglue/fiber_product.hpp>
#include <formalglue/local_ring.hpp>

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace formalglue;

namespace {

using QRing = LocalRingPresentation<Rational>;

Poly<Rational> random_poly(std::mt19937& rng, int nvars, int maxdeg, int terms)
{
	auto monos = monomials_below(nvars, maxdeg + 1);
	Poly<Rational> f(nvars);
	for (int t = 0; t < terms; ++t) {
		const Monomial& m = monos[rng() % monos.size()];
		long c = static_cast<long>(rng() % 7) - 3;
		if (c == 0)
			c = 1;
		f = f + Poly<Rational>::term(nvars, m, Rational(c));
	}
	return f;
}

} // namespace

// The reducer and the truncated linear-algebra oracle answer the same
// membership questions. The oracle is authoritative when it refuses, the
// reducer always; agreement is checked in both authoritative directions.
TEST_CASE("randomized membership agrees with the degree-8 oracle")
{
	const int D = 8;
	std::vector<QRing> rings;
	rings.push_back(ringQ({"x", "y"}, {"x*y"}));
	rings.push_back(ringQ({"x", "y"}, {"x^2 - y^3"}));
	rings.push_back(ringQ({"x", "y", "z"}, {"x*z", "y*z"}));
	rings.push_back(ringQ({"x"}, {"x^3"}));
	rings.push_back(ringQ({"x", "y"}, {"x^2 + y^3", "x*y^2"}));

	std::mt19937 rng(20240823u);
	int ran = 0;
	for (int t = 0; t < 200; ++t) {
		const QRing& R = rings[t % rings.size()];
		Poly<Rational> f(R.nvars());
		bool planted = (t % 2 == 0);
		if (planted) {
			// a combination of the generators, so membership is forced
			for (const auto& g : R.gens())
				f = f + g * random_poly(rng, R.nvars(), 2, 2);
		} else {
			f = random_poly(rng, R.nvars(), 4, 3);
		}
		bool by_reduction = R.contains(f);
		bool by_oracle = oracle::in_ideal_mod_power(f, R.gens(), D, Rational(1));
		if (planted)
			REQUIRE(by_reduction);
		if (by_reduction)
			REQUIRE(by_oracle);
		if (!by_oracle)
			REQUIRE_FALSE(by_reduction);
		++ran;
	}
	CHECK(ran == 200);
}

TEST_CASE("pair ideal powers stay inside coordinate powers across levels")
{
	auto L1 = ringQ({"x"}, {});
	auto L2 = ringQ({"y"}, {});
	auto pt = ringQ({"t"}, {"t"});
	auto fat = ringQ({"t"}, {"t^2"});
	auto to_pt_a = make_map(L1, pt, {pp(pt, "t")});
	auto to_pt_b = make_map(L2, pt, {pp(pt, "t")});
	auto to_fat_a = make_map(L1, fat, {pp(fat, "t")});
	auto to_fat_b = make_map(L2, fat, {pp(fat, "t")});
	for (int n = 1; n <= 4; ++n) {
		CHECK(check_pair_power_containment(to_pt_a, to_pt_b, n));
		CHECK(check_pair_power_containment(to_fat_a, to_fat_b, n));
	}
}

TEST_CASE("pushout squares commute at every level we can afford")
{
	auto node = fiber_over_k(ringQ({"x"}, {}), ringQ({"y"}, {}));
	auto axes = fiber_over_k(ringQ({"x", "y"}, {"x*y"}), ringQ({"z"}, {}));
	for (int n = 1; n <= 5; ++n) {
		CHECK(check_pushout_square(node, n));
		CHECK(check_pushout_square(axes, n));
	}
	for (int n = 1; n <= 4; ++n) {
		CHECK(fiber_commutes_with_truncation(node, n));
		CHECK(fiber_commutes_with_truncation(axes, n));
	}
}

TEST_CASE("random pairs over the residue field satisfy the closed formulas")
{
	std::mt19937 rng(7250101u);
	auto pick = [&](const std::string& a, const std::string& b) {
		switch (rng() % 5) {
		case 0: return ringQ({a, b}, {a + "*" + b});
		case 1: return ringQ({a, b}, {a + "^2 - " + b + "^3"});
		case 2: return ringQ({a, b}, {a + "^2"});
		case 3: return ringQ({a, b}, {a + "^2", a + "*" + b});
		default: return ringQ({a, b}, {});
		}
	};
	for (int t = 0; t < 8; ++t) {
		QRing R = pick("x", "y");
		QRing S = pick("u", "v");
		auto F = fiber_over_k(R, S);
		CHECK(krull_dim(F.ring) == std::max(krull_dim(R), krull_dim(S)));
		CHECK(edim(F.ring) == edim(R) + edim(S));
		CHECK(depth(F.ring) == std::min({depth(R), depth(S), 1}));
	}
}
