#include <catch2/catch_amalgamated.hpp>

#include <formalglue/resolution.hpp>

#include "helpers.hpp"

using formalglue::depth;
using formalglue::edim;
using formalglue::invariants;
using formalglue::krull_dim;

TEST_CASE("ambient series rings are regular")
{
	auto R = ringQ({"x", "y"}, {});
	auto inv = invariants(R);
	CHECK(inv.edim == 2);
	CHECK(inv.dim == 2);
	CHECK(inv.depth == 2);
	CHECK(inv.regular);
}

TEST_CASE("coordinate cross in the plane")
{
	auto R = ringQ({"x", "y"}, {"x*y"});
	auto inv = invariants(R);
	CHECK(inv.edim == 2);
	CHECK(inv.dim == 1);
	CHECK(inv.depth == 1);
	CHECK(!inv.regular);
}

TEST_CASE("cuspidal curve")
{
	auto R = ringQ({"x", "y"}, {"y^2 - x^3"});
	auto inv = invariants(R);
	CHECK(inv.edim == 2);
	CHECK(inv.dim == 1);
	CHECK(inv.depth == 1);
	CHECK(!inv.regular);
}

TEST_CASE("three axes are a depth one curve germ")
{
	auto R = ringQ({"x", "y", "z"}, {"x*y", "x*z", "y*z"});
	auto inv = invariants(R);
	CHECK(inv.edim == 3);
	CHECK(inv.dim == 1);
	CHECK(inv.depth == 1);
	CHECK(!inv.regular);
}

TEST_CASE("embedded point kills depth")
{
	auto R = ringQ({"x", "y"}, {"x^2", "x*y"});
	auto inv = invariants(R);
	CHECK(inv.edim == 2);
	CHECK(inv.dim == 1);
	CHECK(inv.depth == 0);
}

TEST_CASE("fat point on a line")
{
	auto R = ringQ({"x"}, {"x^2"});
	auto inv = invariants(R);
	CHECK(inv.edim == 1);
	CHECK(inv.dim == 0);
	CHECK(inv.depth == 0);
	CHECK(!inv.regular);
}

TEST_CASE("a hyperplane slice stays regular")
{
	auto R = ringQ({"x", "y"}, {"y"});
	auto inv = invariants(R);
	CHECK(inv.edim == 1);
	CHECK(inv.dim == 1);
	CHECK(inv.depth == 1);
	CHECK(inv.regular);
}

TEST_CASE("the base field itself")
{
	auto R = ringQ({}, {});
	auto inv = invariants(R);
	CHECK(inv.edim == 0);
	CHECK(inv.dim == 0);
	CHECK(inv.depth == 0);
	CHECK(inv.regular);
}

TEST_CASE("residue field presentation is detected")
{
	auto R = ringQ({"x", "y"}, {"x", "y"});
	CHECK(R.is_residue_field());
	CHECK(!ringQ({"x", "y"}, {"x*y"}).is_residue_field());
	auto inv = invariants(R);
	CHECK(inv.edim == 0);
	CHECK(inv.dim == 0);
	CHECK(inv.depth == 0);
	CHECK(inv.regular);
}

TEST_CASE("depth of the node over F5 agrees")
{
	auto R = ringP(5, {"x", "y"}, {"x*y"});
	CHECK(depth(R) == 1);
	CHECK(krull_dim(R) == 1);
	CHECK(edim(R) == 2);
}

TEST_CASE("depth never exceeds dimension, dimension never exceeds edim")
{
	std::vector<LocalRingPresentation<Rational>> rings = {
		ringQ({"x", "y"}, {"x*y"}),
		ringQ({"x", "y"}, {"x^2", "x*y"}),
		ringQ({"x", "y"}, {"y^2 - x^3"}),
		ringQ({"x", "y", "z"}, {"x*y", "x*z", "y*z"}),
		ringQ({"x", "y", "z"}, {"x*y - z^2"}),
		ringQ({"x"}, {"x^3"}),
	};
	for (const auto& R : rings) {
		auto inv = invariants(R);
		CHECK(inv.depth <= inv.dim);
		CHECK(inv.dim <= inv.edim);
		CHECK(inv.depth >= 0);
	}
}
