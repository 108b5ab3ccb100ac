#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace formalglue {

// canonical rendering, terms largest-first under the storage order
template <class K>
std::string to_string(const Poly<K>& f, const std::vector<std::string>& vars)
{
	if (f.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto& t : f.terms()) {
		std::string c = t.coeff.to_string();
		bool neg = !c.empty() && c[0] == '-';
		std::string mag = neg ? c.substr(1) : c;
		std::string mono;
		for (int i = 0; i < t.mono.nvars(); ++i) {
			if (t.mono[i] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += vars[i];
			if (t.mono[i] > 1)
				mono += "^" + std::to_string(t.mono[i]);
		}
		std::string body;
		if (mono.empty())
			body = mag;
		else if (mag == "1")
			body = mono;
		else
			body = mag + "*" + mono;
		if (first) {
			out += (neg ? "-" : "") + body;
			first = false;
		} else {
			out += (neg ? " - " : " + ") + body;
		}
	}
	return out;
}

// Recursive-descent parser for polynomial expressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := number | variable | '(' expr ')'
//   number := nat ('/' nat)?
//
// Variables must match the ambient list exactly; anything else is an error.
template <class K>
class PolyParser {
public:
	PolyParser(const std::vector<std::string>& vars, const K& one)
		: vars_(vars), one_(one)
	{
	}

	Poly<K> parse(const std::string& text) const
	{
		Cursor c{text, 0};
		Poly<K> p = expr(c);
		skip_ws(c);
		if (c.pos != text.size())
			fail_at(c, "unexpected trailing input");
		return p;
	}

private:
	struct Cursor {
		const std::string& s;
		size_t pos;
	};

	[[noreturn]] void fail_at(const Cursor& c, const std::string& msg) const
	{
		fail(ErrorCode::ParseError, msg + " at column " + std::to_string(c.pos + 1) + " in \"" + c.s + "\"");
	}

	static void skip_ws(Cursor& c)
	{
		while (c.pos < c.s.size() && std::isspace(static_cast<unsigned char>(c.s[c.pos])))
			++c.pos;
	}

	bool eat(Cursor& c, char ch) const
	{
		skip_ws(c);
		if (c.pos < c.s.size() && c.s[c.pos] == ch) {
			++c.pos;
			return true;
		}
		return false;
	}

	char peek(Cursor& c) const
	{
		skip_ws(c);
		return c.pos < c.s.size() ? c.s[c.pos] : '\0';
	}

	Poly<K> expr(Cursor& c) const
	{
		bool neg = false;
		if (eat(c, '-'))
			neg = true;
		else
			eat(c, '+');
		Poly<K> acc = term(c);
		if (neg)
			acc = -acc;
		for (;;) {
			char ch = peek(c);
			if (ch == '+') {
				++c.pos;
				acc = acc + term(c);
			} else if (ch == '-') {
				++c.pos;
				acc = acc - term(c);
			} else {
				break;
			}
		}
		return acc;
	}

	Poly<K> term(Cursor& c) const
	{
		Poly<K> acc = factor(c);
		while (eat(c, '*'))
			acc = acc * factor(c);
		return acc;
	}

	Poly<K> factor(Cursor& c) const
	{
		Poly<K> base = atom(c);
		if (eat(c, '^')) {
			long e = natural(c);
			Poly<K> acc = Poly<K>::constant(nvars(), one_);
			for (long i = 0; i < e; ++i)
				acc = acc * base;
			return acc;
		}
		return base;
	}

	Poly<K> atom(Cursor& c) const
	{
		char ch = peek(c);
		if (ch == '(') {
			++c.pos;
			Poly<K> p = expr(c);
			if (!eat(c, ')'))
				fail_at(c, "expected ')'");
			return p;
		}
		if (std::isdigit(static_cast<unsigned char>(ch))) {
			long num = natural(c);
			if (eat(c, '/')) {
				long den = natural(c);
				if (den == 0)
					fail_at(c, "zero denominator");
				return Poly<K>::constant(nvars(), K::from_ratio(num, den, one_));
			}
			return Poly<K>::constant(nvars(), K::from_long(num, one_));
		}
		if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
			std::string name = identifier(c);
			for (int i = 0; i < nvars(); ++i)
				if (vars_[i] == name)
					return Poly<K>::variable(nvars(), i, one_);
			fail(ErrorCode::UndefinedName, "unknown variable \"" + name + "\" in \"" + c.s + "\"");
		}
		fail_at(c, "expected a number, variable or '('");
	}

	long natural(Cursor& c) const
	{
		skip_ws(c);
		if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
			fail_at(c, "expected a number");
		long v = 0;
		while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
			v = v * 10 + (c.s[c.pos] - '0');
			if (v > 1000000000L)
				fail_at(c, "number too large");
			++c.pos;
		}
		return v;
	}

	std::string identifier(Cursor& c) const
	{
		skip_ws(c);
		std::string name;
		while (c.pos < c.s.size() &&
		       (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_')) {
			name += c.s[c.pos];
			++c.pos;
		}
		return name;
	}

	int nvars() const { return static_cast<int>(vars_.size()); }

	const std::vector<std::string>& vars_;
	const K one_;
};

template <class K>
Poly<K> parse_poly(const std::string& text, const std::vector<std::string>& vars, const K& one)
{
	return PolyParser<K>(vars, one).parse(text);
}

} // namespace formalglue
