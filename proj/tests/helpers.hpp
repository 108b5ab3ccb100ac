#pragma once

#include <string>
#include <vector>

#include <formalglue/local_ring.hpp>
#include <formalglue/prime_field.hpp>
#include <formalglue/rational.hpp>

using formalglue::LocalRingPresentation;
using formalglue::Poly;
using formalglue::PrimeField;
using formalglue::Rational;

inline LocalRingPresentation<Rational> ringQ(std::vector<std::string> vars,
                                             std::vector<std::string> gens)
{
	Rational one(1);
	std::vector<Poly<Rational>> gs;
	for (const auto& s : gens)
		gs.push_back(formalglue::parse_poly(s, vars, one));
	return formalglue::present(std::move(vars), std::move(gs), one);
}

inline LocalRingPresentation<PrimeField> ringP(long p, std::vector<std::string> vars,
                                               std::vector<std::string> gens)
{
	PrimeField one(1, p);
	std::vector<Poly<PrimeField>> gs;
	for (const auto& s : gens)
		gs.push_back(formalglue::parse_poly(s, vars, one));
	return formalglue::present(std::move(vars), std::move(gs), one);
}

template <class K>
Poly<K> pp(const LocalRingPresentation<K>& R, const std::string& text)
{
	return R.parse(text);
}
