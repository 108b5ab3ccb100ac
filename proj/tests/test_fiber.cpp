#include <catch2/catch_amalgamated.hpp>

#include <formalglue/fiber_product.hpp>
#include <formalglue/poly_io.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace formalglue;

namespace {

LocalRingPresentation<Rational> base_field()
{
	return present(std::vector<std::string>{}, std::vector<Poly<Rational>>{}, Rational(1));
}

} // namespace

TEST_CASE("maps are validated on construction")
{
	auto R = ringQ({"x"}, {});
	auto T = ringQ({"t"}, {"t^3"});

	SECTION("a good map substitutes and reduces")
	{
		auto f = make_map(R, T, {pp(T, "t + t^2")});
		CHECK(to_string(substitute(pp(R, "x^2 - x"), f.images, 1, Rational(1)), T.vars()) ==
		      "-t + 2*t^3 + t^4");
		CHECK(to_string(apply_map(f, pp(R, "x^2 - x")), T.vars()) == "-t");
		CHECK(apply_map(f, pp(R, "x^3")).is_zero()); // lands in (t^3)
	}
	SECTION("constant terms are refused")
	{
		CHECK_THROWS_AS(make_map(R, T, {pp(T, "1 + t")}), Error);
		try {
			make_map(R, T, {pp(T, "1 + t")});
		} catch (const Error& e) {
			CHECK(e.code() == ErrorCode::IllDefinedMap);
		}
	}
	SECTION("one image per variable")
	{
		CHECK_THROWS_AS(make_map(R, T, {}), Error);
	}
	SECTION("relations must land in the target ideal")
	{
		auto Rsq = ringQ({"x"}, {"x^2"});
		auto line = ringQ({"t"}, {});
		try {
			make_map(Rsq, line, {pp(line, "t")});
			FAIL("expected IllDefinedMap");
		} catch (const Error& e) {
			CHECK(e.code() == ErrorCode::IllDefinedMap);
		}
		// into k[[t]]/(t^2) the same images work
		auto fat = ringQ({"t"}, {"t^2"});
		CHECK_NOTHROW(make_map(Rsq, fat, {pp(fat, "t")}));
	}
}

TEST_CASE("surjectivity through cotangent spaces")
{
	auto R = ringQ({"x"}, {});

	SECTION("x -> t + t^2 onto a fat point")
	{
		auto T = ringQ({"t"}, {"t^3"});
		CHECK(is_surjective(make_map(R, T, {pp(T, "t + t^2")})));
	}
	SECTION("the base field does not surject onto a line")
	{
		auto T = ringQ({"x", "y"}, {"x"});
		auto inc = make_map(base_field(), T, {});
		CHECK_FALSE(is_surjective(inc));
	}
	SECTION("target relations help")
	{
		auto T = ringQ({"x", "y"}, {"x"});
		CHECK(is_surjective(make_map(R, T, {pp(T, "y")})));
	}
	SECTION("a proper subring is caught")
	{
		auto T = ringQ({"x", "y"}, {});
		CHECK_FALSE(is_surjective(make_map(R, T, {pp(T, "x")})));
	}
	SECTION("quadratic images have no linear part")
	{
		auto T = ringQ({"t"}, {});
		CHECK_FALSE(is_surjective(make_map(R, T, {pp(T, "t^2")})));
	}
}

TEST_CASE("isomorphism probe")
{
	auto R = ringQ({"x"}, {});
	auto line = ringQ({"t"}, {});
	CHECK(is_isomorphism_up_to(make_map(R, line, {pp(line, "t")}), 6));

	auto fat = ringQ({"t"}, {"t^3"});
	CHECK_FALSE(is_isomorphism_up_to(make_map(R, fat, {pp(fat, "t")}), 6));

	auto node = ringQ({"x", "y"}, {"x*y"});
	CHECK_FALSE(is_isomorphism_up_to(make_map(node, line, {pp(line, "t"), Poly<Rational>::zero(1)}), 6));
}

TEST_CASE("fiber product of two lines over the residue field is the node")
{
	auto R = ringQ({"x"}, {});
	auto S = ringQ({"y"}, {});
	auto F = fiber_over_k(R, S);

	REQUIRE(F.ring.vars() == std::vector<std::string>{"x", "y"});
	REQUIRE(F.ring.basis().size() == 1);
	CHECK(to_string(F.ring.basis()[0], F.ring.vars()) == "x*y");

	CHECK(edim(F.ring) == 2);
	CHECK(krull_dim(F.ring) == 1);
	CHECK(depth(F.ring) == 1);

	SECTION("projections")
	{
		CHECK(to_string(apply_map(F.to_first, pp(F.ring, "x + y + x^2")), R.vars()) == "x + x^2");
		CHECK(apply_map(F.to_second, pp(F.ring, "x")).is_zero());
		CHECK(F.ker_first.size() == 1);
		CHECK(to_string(F.ker_first[0], F.ring.vars()) == "y");
	}
	SECTION("formula invariants agree with the resolution engine")
	{
		auto inv = fiber_invariants(F.first_to_base, F.second_to_base);
		CHECK(inv.dim == 1);
		CHECK(inv.depth == 1);
		CHECK(inv.depth_exact);
	}
}

TEST_CASE("residue field factors are refused")
{
	auto R = ringQ({"x"}, {});
	CHECK_THROWS_AS(fiber_over_k(R, base_field()), Error);
	auto S = ringQ({"y"}, {"y"});
	try {
		fiber_over_k(R, S);
		FAIL("expected TrivialFactor");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::TrivialFactor);
	}
}

TEST_CASE("variable collisions get renamed")
{
	auto R = ringQ({"x", "y"}, {"x*y"});
	auto S = ringQ({"y"}, {});
	auto F = fiber_over_k(R, S);
	CHECK(F.ring.vars() == std::vector<std::string>{"x", "y", "y_r"});
	CHECK(F.ring.gens().size() == 3); // x*y plus the two cross terms
	CHECK(edim(F.ring) == 3);
	CHECK(krull_dim(F.ring) == 1);
}

TEST_CASE("frozen invariant table for fiber products over the residue field")
{
	struct Row {
		std::vector<std::string> vr, gr, vs, gs;
		int dim, edim, depth;
	};
	// dim = max of the factors, edim = sum, depth = min(depth R, depth S, 1)
	std::vector<Row> rows = {
		{{"x"}, {}, {"y"}, {}, 1, 2, 1},
		{{"x"}, {"x^2"}, {"y"}, {"y^2"}, 0, 2, 0},
		{{"x", "y"}, {"x*y"}, {"z"}, {}, 1, 3, 1},
		{{"x", "y"}, {}, {"z"}, {}, 2, 3, 1},
		{{"x", "y"}, {"y^2 - x^3"}, {"z"}, {}, 1, 3, 1},
		{{"x"}, {"x^3"}, {"y"}, {}, 1, 2, 0},
	};
	for (const auto& r : rows) {
		auto R = ringQ(r.vr, r.gr);
		auto S = ringQ(r.vs, r.gs);
		auto F = fiber_over_k(R, S);
		INFO("factors " << r.vr[0] << " side and " << r.vs[0] << " side");
		CHECK(krull_dim(F.ring) == r.dim);
		CHECK(krull_dim(F.ring) == std::max(krull_dim(R), krull_dim(S)));
		CHECK(edim(F.ring) == r.edim);
		CHECK(edim(F.ring) == edim(R) + edim(S));
		CHECK(depth(F.ring) == r.depth);
		auto inv = fiber_invariants(F.first_to_base, F.second_to_base);
		CHECK(inv.dim == krull_dim(F.ring));
		CHECK(inv.depth == r.depth);
		CHECK(inv.depth_exact);
	}
}

TEST_CASE("shared ambient fiber products compute ideal intersections")
{
	Rational one(1);

	SECTION("(x) meets (y) in the node")
	{
		auto A = ringQ({"x", "y"}, {});
		auto F = fiber_same_ambient(A, {pp(A, "x")}, {pp(A, "y")});
		REQUIRE(F.ring.basis().size() == 1);
		CHECK(to_string(F.ring.basis()[0], A.vars()) == "x*y");
		CHECK(oracle::ideals_agree_mod_power(F.ring.gens(), {pp(A, "x*y")}, 8, one));
		CHECK(F.base.is_residue_field());
	}
	SECTION("(x^2) meets (x^3)")
	{
		auto A = ringQ({"x"}, {});
		auto F = fiber_same_ambient(A, {pp(A, "x^2")}, {pp(A, "x^3")});
		REQUIRE(F.ring.basis().size() == 1);
		CHECK(to_string(F.ring.basis()[0], A.vars()) == "x^3");
		CHECK(oracle::ideals_agree_mod_power(F.ring.gens(), {pp(A, "x^3")}, 8, one));
	}
	SECTION("(x) meets (x + y^2)")
	{
		auto A = ringQ({"x", "y"}, {});
		auto F = fiber_same_ambient(A, {pp(A, "x")}, {pp(A, "x + y^2")});
		CHECK(oracle::ideals_agree_mod_power(F.ring.gens(), {pp(A, "x^2 + x*y^2")}, 8, one));
	}
	SECTION("zero ideals are refused")
	{
		auto A = ringQ({"x", "y"}, {});
		try {
			fiber_same_ambient(A, {}, {pp(A, "y")});
			FAIL("expected ZeroIdeal");
		} catch (const Error& e) {
			CHECK(e.code() == ErrorCode::ZeroIdeal);
		}
		CHECK_THROWS_AS(fiber_same_ambient(A, {pp(A, "x")}, {Poly<Rational>::zero(2)}), Error);
	}
	SECTION("projection kernels carry the opposite ideal to the base")
	{
		auto A = ringQ({"x", "y"}, {});
		auto F = fiber_same_ambient(A, {pp(A, "x")}, {pp(A, "y")});
		REQUIRE(F.ker_second_to_base.size() == 1);
		CHECK(to_string(F.ker_second_to_base[0], A.vars()) == "x");
	}
}

TEST_CASE("general base invariants come with a depth bound only")
{
	auto R = ringQ({"x"}, {});
	auto S = ringQ({"y"}, {});
	auto T = ringQ({"t"}, {"t^2"});
	auto a = make_map(R, T, {pp(T, "t")});
	auto b = make_map(S, T, {pp(T, "t")});
	auto inv = fiber_invariants(a, b);
	CHECK(inv.dim == 1);
	CHECK(inv.depth == 1); // min(1, 1, depth T + 1) with T Artinian
	CHECK_FALSE(inv.depth_exact);
}

TEST_CASE("non-surjective maps cannot form fibers")
{
	auto T = ringQ({"x", "y"}, {"x"});
	auto inc = make_map(base_field(), T, {});
	auto id = identity_map(T, T);
	try {
		fiber_invariants(inc, id);
		FAIL("expected NonSurjectiveMap");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::NonSurjectiveMap);
	}
	CHECK_THROWS_AS(truncated_fiber(inc, id, 3), Error);
}

TEST_CASE("mismatched bases cannot form fibers")
{
	auto R = ringQ({"x"}, {});
	auto Ta = ringQ({"t"}, {"t^2"});
	auto Tb = ringQ({"t"}, {"t^3"});
	auto a = make_map(R, Ta, {pp(Ta, "t")});
	auto b = make_map(R, Tb, {pp(Tb, "t")});
	try {
		fiber_invariants(a, b);
		FAIL("expected AmbientMismatch");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::AmbientMismatch);
	}
}

TEST_CASE("truncated pair subalgebra of the node decomposition")
{
	auto R = ringQ({"x"}, {});
	auto S = ringQ({"y"}, {});
	auto F = fiber_over_k(R, S);

	// level n: the pair model has dimension 2n - 1, matching the node
	std::vector<int> expect = {1, 3, 5, 7};
	for (int n = 1; n <= 4; ++n) {
		TruncatedFiber<Rational> D = truncated_fiber(F.first_to_base, F.second_to_base, n);
		CHECK(D.dim() == expect[n - 1]);
		CHECK(check_truncated_dimension(D));
		CHECK(D.dim() == truncate(F.ring, n).dim());
	}
}

TEST_CASE("truncation commutes with the fiber construction")
{
	SECTION("two lines over k")
	{
		auto F = fiber_over_k(ringQ({"x"}, {}), ringQ({"y"}, {}));
		for (int n = 1; n <= 4; ++n)
			CHECK(fiber_commutes_with_truncation(F, n));
	}
	SECTION("node with a third line over k")
	{
		auto F = fiber_over_k(ringQ({"x", "y"}, {"x*y"}), ringQ({"z"}, {}));
		for (int n = 1; n <= 4; ++n)
			CHECK(fiber_commutes_with_truncation(F, n));
	}
	SECTION("shared ambient intersection")
	{
		auto A = ringQ({"x", "y"}, {});
		auto F = fiber_same_ambient(A, {pp(A, "x")}, {pp(A, "y")});
		for (int n = 1; n <= 4; ++n)
			CHECK(fiber_commutes_with_truncation(F, n));
	}
}

TEST_CASE("pair model over a fat point base")
{
	auto R = ringQ({"x"}, {});
	auto S = ringQ({"y"}, {});
	auto T = ringQ({"t"}, {"t^2"});
	auto a = make_map(R, T, {pp(T, "t")});
	auto b = make_map(S, T, {pp(T, "t")});

	// pairs (f, g) with f(0) = g(0) and f'(0) = g'(0)
	std::vector<int> expect = {1, 2, 4, 6};
	for (int n = 1; n <= 4; ++n) {
		TruncatedFiber<Rational> D = truncated_fiber(a, b, n);
		CHECK(D.dim() == expect[n - 1]);
		CHECK(check_truncated_dimension(D));
	}
}

TEST_CASE("powers of the pair ideal shrink coordinatewise")
{
	auto F = fiber_over_k(ringQ({"x"}, {}), ringQ({"y"}, {}));
	for (int n = 1; n <= 2; ++n)
		CHECK(check_pair_power_containment(F.first_to_base, F.second_to_base, n));

	auto R = ringQ({"x"}, {});
	auto S = ringQ({"y"}, {});
	auto T = ringQ({"t"}, {"t^2"});
	auto a = make_map(R, T, {pp(T, "t")});
	auto b = make_map(S, T, {pp(T, "t")});
	CHECK(check_pair_power_containment(a, b, 2));
}

TEST_CASE("modules lift across the projection")
{
	auto F = fiber_over_k(ringQ({"x"}, {}), ringQ({"y"}, {}));
	auto M = residue_field_module(F.to_first.target);
	auto lifted = module_over_fiber(M, F, true);
	CHECK(lifted.gens == 1);
	// relations x and y: the residue field of the node
	auto b = betti_numbers(lifted, F.ring, 3);
	CHECK(b == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("first Betti bound over the node decomposition")
{
	auto F = fiber_over_k(ringQ({"x"}, {}), ringQ({"y"}, {}));

	SECTION("residue field meets the bound with equality")
	{
		auto rep = check_betti_inequality(residue_field_module(F.to_first.target), F);
		CHECK(rep.lhs_b1 == 2);
		CHECK(rep.rhs_b1 == 2);
		CHECK(rep.b1_ok);
		CHECK(rep.lhs_edim == 2);
		CHECK(rep.rhs_edim == 2);
		CHECK(rep.edim_ok);
	}
	SECTION("free modules over the factor")
	{
		ModulePresentation<Rational> M;
		M.gens = 3;
		auto rep = check_betti_inequality(M, F);
		CHECK(rep.lhs_b1 == 3);
		CHECK(rep.rhs_b1 == 3);
		CHECK(rep.b1_ok);
	}
}

TEST_CASE("series domination comparator")
{
	CHECK(check_domination({1, 2, 2, 2}, {1, 2, 1, 0}));
	CHECK_FALSE(check_domination({1, 2, 1, 0}, {1, 2, 2, 2}));
	CHECK_THROWS_AS(check_domination({1, 2}, {1, 2, 3}), Error);
}

TEST_CASE("fiber products over a prime field")
{
	auto R = ringP(5, {"x"}, {});
	auto S = ringP(5, {"y"}, {});
	auto F = fiber_over_k(R, S);
	CHECK(to_string(F.ring.basis()[0], F.ring.vars()) == "x*y");
	CHECK(depth(F.ring) == 1);
	for (int n = 1; n <= 3; ++n)
		CHECK(fiber_commutes_with_truncation(F, n));
}
