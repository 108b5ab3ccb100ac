#include <catch2/catch_amalgamated.hpp>

#include <formalglue/standard_basis.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using formalglue::is_standard_basis;
using formalglue::lead_term;
using formalglue::LocalOrder;
using formalglue::Monomial;
using formalglue::std_basis;

namespace {

const LocalOrder ord;

std::vector<Poly<Rational>> basis_of(const LocalRingPresentation<Rational>& R,
                                     const std::vector<std::string>& gens)
{
	std::vector<Poly<Rational>> gs;
	for (const auto& s : gens)
		gs.push_back(pp(R, s));
	return std_basis(gs, ord);
}

std::vector<Monomial> leads_of(const std::vector<Poly<Rational>>& basis)
{
	std::vector<Monomial> out;
	for (const auto& f : basis)
		out.push_back(lead_term(f, ord).mono);
	return out;
}

} // namespace

TEST_CASE("principal ideals are their own standard basis")
{
	auto R = ringQ({"x", "y"}, {});
	auto b = basis_of(R, {"x*y"});
	REQUIRE(b.size() == 1);
	CHECK(b[0] == pp(R, "x*y"));
	CHECK(is_standard_basis(b, ord));

	b = basis_of(R, {"y^2 - x^3"});
	REQUIRE(b.size() == 1);
	CHECK(lead_term(b[0], ord).mono == Monomial({0, 2}));
	CHECK(is_standard_basis(b, ord));
}

TEST_CASE("unit multiples collapse to the monomial generator")
{
	auto R = ringQ({"x", "y"}, {});
	auto b = basis_of(R, {"x + x^2", "x"});
	REQUIRE(b.size() == 1);
	CHECK(lead_term(b[0], ord).mono == Monomial({1, 0}));
	CHECK(oracle::ideals_agree_mod_power(b, {pp(R, "x")}, 8, Rational(1)));
}

TEST_CASE("curve pair picks up the extra power")
{
	auto R = ringQ({"x", "y"}, {});
	std::vector<Poly<Rational>> gens = {pp(R, "x^2 - y^3"), pp(R, "x*y")};
	auto b = std_basis(gens, ord);
	REQUIRE(b.size() == 3);
	auto leads = leads_of(b);
	CHECK(leads[0] == Monomial({2, 0}));
	CHECK(leads[1] == Monomial({1, 1}));
	CHECK(leads[2] == Monomial({0, 4}));
	CHECK(is_standard_basis(b, ord));
	CHECK(oracle::ideals_agree_mod_power(b, gens, 8, Rational(1)));
	CHECK(formalglue::normal_form(pp(R, "y^4"), b, ord).is_zero());
	CHECK(!formalglue::normal_form(pp(R, "y^3"), b, ord).is_zero());
}

TEST_CASE("result does not depend on generator order")
{
	auto R = ringQ({"x", "y"}, {});
	auto a = basis_of(R, {"x^2 - y^3", "x*y"});
	auto b = basis_of(R, {"x*y", "x^2 - y^3"});
	CHECK(a == b);

	auto c = basis_of(R, {"x + y^2", "y^2", "x"});
	auto d = basis_of(R, {"x", "y^2", "x + y^2"});
	CHECK(c == d);
}

TEST_CASE("three axes in space")
{
	auto R = ringQ({"x", "y", "z"}, {});
	auto b = basis_of(R, {"x*y", "x*z", "y*z"});
	REQUIRE(b.size() == 3);
	CHECK(is_standard_basis(b, ord));
}

TEST_CASE("constant-term generators are rejected")
{
	auto R = ringQ({"x", "y"}, {});
	CHECK_THROWS_AS(basis_of(R, {"1 + x"}), formalglue::Error);
}

TEST_CASE("standard basis over F5")
{
	auto R = ringP(5, {"x", "y"}, {});
	std::vector<Poly<PrimeField>> gens = {pp(R, "x^2 - y^3"), pp(R, "x*y")};
	auto b = std_basis(gens, ord);
	REQUIRE(b.size() == 3);
	CHECK(is_standard_basis(b, ord));
	CHECK(oracle::ideals_agree_mod_power(b, gens, 8, PrimeField(1, 5)));
}

TEST_CASE("membership matches the truncated oracle")
{
	auto R = ringQ({"x", "y"}, {});
	auto b = basis_of(R, {"x^2 - y^3", "x*y"});
	std::vector<std::string> probes = {"x^2", "y^3", "x^3", "y^4",  "x^2 - y^3",
	                                   "x",   "y",   "x^4", "y^5",  "x^2*y",
	                                   "x*y + y^4", "x^2 + x*y", "y^3 + y^4"};
	for (const auto& s : probes) {
		auto f = pp(R, s);
		bool via_nf = formalglue::normal_form(f, b, ord).is_zero();
		bool via_oracle = oracle::in_ideal_mod_power(f, b, 8, Rational(1));
		CHECK(via_nf == via_oracle);
	}
}
