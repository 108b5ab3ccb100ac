#pragma once

#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gluing.hpp"

namespace formalglue {

// ---------------------------------------------------------------- raw layer
// A session document parses into untyped declarations first; the field is
// only known after reading the document, so polynomials stay as text here.

struct RawImmersionClause {
	std::string z_chart, carrier, map;
};

struct RawDecl {
	enum class Kind { Ring, Map, Module, Atlas, Immersion, Fiber, Glue };
	Kind kind = Kind::Ring;
	std::string name;
	int line = 0;
	std::vector<std::string> vars, gens;                    // ring
	std::string from, to;                                   // map and immersion endpoints
	std::vector<std::string> images;                        // map
	std::string ring;                                       // module
	int gen_count = 0;                                      // module
	std::vector<std::vector<std::string>> rel_columns;      // module
	std::vector<std::pair<std::string, std::string>> charts; // atlas
	std::vector<RawImmersionClause> clauses;                // immersion
	std::string left, right, base;                          // fiber and glue
	std::string via_a, via_b;
	bool has_base = false;
	bool expect_refuse = false;
};

struct SessionDoc {
	std::string field = "Q";
	// unset options stay -1; the tool falls back to its own defaults
	int degree_bound = -1;
	int poincare_n = -1;
	int truncation = -1;
	std::vector<RawDecl> decls;
};

namespace detail {

class LineCursor {
public:
	LineCursor(const std::string& s, int line) : s_(s), line_(line) {}

	bool done()
	{
		skip_ws();
		return i_ >= s_.size();
	}

	bool take(char c)
	{
		skip_ws();
		if (i_ < s_.size() && s_[i_] == c) {
			++i_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!take(c))
			fail_here(std::string("expected '") + c + "'");
	}

	bool take_word(const std::string& w)
	{
		skip_ws();
		if (s_.compare(i_, w.size(), w) == 0 &&
		    (i_ + w.size() >= s_.size() || !is_ident(s_[i_ + w.size()]))) {
			i_ += w.size();
			return true;
		}
		return false;
	}

	void expect_word(const std::string& w)
	{
		if (!take_word(w))
			fail_here("expected \"" + w + "\"");
	}

	bool take_arrow()
	{
		skip_ws();
		if (s_.compare(i_, 2, "->") == 0) {
			i_ += 2;
			return true;
		}
		return false;
	}

	void expect_arrow()
	{
		if (!take_arrow())
			fail_here("expected \"->\"");
	}

	std::string ident()
	{
		skip_ws();
		size_t b = i_;
		while (i_ < s_.size() && is_ident(s_[i_]))
			++i_;
		if (b == i_)
			fail_here("expected a name");
		return s_.substr(b, i_ - b);
	}

	int integer()
	{
		skip_ws();
		size_t b = i_;
		while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
			++i_;
		if (b == i_)
			fail_here("expected a number");
		return std::stoi(s_.substr(b, i_ - b));
	}

	// text until one of the delimiters at parenthesis depth zero
	std::string chunk(const std::string& delims)
	{
		skip_ws();
		int depth = 0;
		size_t b = i_;
		while (i_ < s_.size()) {
			char c = s_[i_];
			if (c == '(')
				++depth;
			else if (c == ')' && depth > 0)
				--depth;
			else if (depth == 0 && delims.find(c) != std::string::npos)
				break;
			++i_;
		}
		size_t e = i_;
		while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1])))
			--e;
		return s_.substr(b, e - b);
	}

	void expect_end()
	{
		if (!done())
			fail_here("unexpected text \"" + s_.substr(i_) + "\"");
	}

	[[noreturn]] void fail_here(const std::string& msg)
	{
		fail(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + msg);
	}

	int line() const { return line_; }

private:
	void skip_ws()
	{
		while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
			++i_;
	}

	static bool is_ident(char c)
	{
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
	}

	const std::string& s_;
	int line_;
	size_t i_ = 0;
};

// comma-separated chunks between an opening and closing bracket pair
inline std::vector<std::string> bracket_list(LineCursor& c, char open, char close)
{
	c.expect(open);
	std::vector<std::string> items;
	if (c.take(close))
		return items;
	while (true) {
		std::string item = c.chunk(std::string(1, close) + ",");
		if (item.empty())
			c.fail_here("empty list entry");
		items.push_back(std::move(item));
		if (c.take(','))
			continue;
		c.expect(close);
		break;
	}
	return items;
}

} // namespace detail

inline SessionDoc parse_session(std::istream& in)
{
	SessionDoc doc;
	std::set<std::string> names;
	bool field_seen = false;
	bool options_seen = false;
	std::string line;
	int lineno = 0;

	auto declare = [&](detail::LineCursor& c, RawDecl& d, RawDecl::Kind kind) {
		d.kind = kind;
		d.line = c.line();
		d.name = c.ident();
		if (!names.insert(d.name).second)
			c.fail_here("the name \"" + d.name + "\" is already taken");
	};

	while (std::getline(in, line)) {
		++lineno;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		detail::LineCursor c(line, lineno);
		if (c.done())
			continue;
		RawDecl d;

		if (c.take_word("field")) {
			if (field_seen)
				c.fail_here("field is declared twice");
			field_seen = true;
			doc.field = c.ident();
			bool shaped = doc.field == "Q";
			if (!shaped && doc.field.size() >= 2 && doc.field[0] == 'F') {
				shaped = true;
				for (size_t i = 1; i < doc.field.size(); ++i)
					if (!std::isdigit(static_cast<unsigned char>(doc.field[i])))
						shaped = false;
			}
			if (!shaped)
				fail(ErrorCode::BadField, "line " + std::to_string(lineno) +
				                              ": unknown field label \"" + doc.field +
				                              "\", expected Q or Fp");
			c.expect_end();
			continue;
		}

		if (c.take_word("options")) {
			if (options_seen)
				c.fail_here("options are declared twice");
			options_seen = true;
			while (true) {
				int* slot = nullptr;
				if (c.take_word("degree-bound"))
					slot = &doc.degree_bound;
				else if (c.take_word("poincare-n"))
					slot = &doc.poincare_n;
				else if (c.take_word("truncation"))
					slot = &doc.truncation;
				else
					c.fail_here("unknown option");
				*slot = c.integer();
				if (*slot <= 0)
					c.fail_here("option values must be positive");
				if (c.take(','))
					continue;
				break;
			}
			c.expect_end();
			continue;
		}

		if (c.take_word("ring")) {
			declare(c, d, RawDecl::Kind::Ring);
			for (auto& v : detail::bracket_list(c, '[', ']'))
				d.vars.push_back(std::move(v));
			if (!c.done())
				d.gens = detail::bracket_list(c, '(', ')');
			c.expect_end();
		} else if (c.take_word("map")) {
			declare(c, d, RawDecl::Kind::Map);
			c.expect(':');
			d.from = c.ident();
			c.expect_arrow();
			d.to = c.ident();
			d.images = detail::bracket_list(c, '[', ']');
			c.expect_end();
		} else if (c.take_word("module")) {
			declare(c, d, RawDecl::Kind::Module);
			c.expect(':');
			d.ring = c.ident();
			c.expect_word("gens");
			d.gen_count = c.integer();
			if (c.take_word("rels")) {
				c.expect('(');
				std::vector<std::string> col;
				while (true) {
					std::string entry = c.chunk(",;)");
					if (entry.empty())
						c.fail_here("empty relation entry");
					col.push_back(std::move(entry));
					if (c.take(','))
						continue;
					d.rel_columns.push_back(std::move(col));
					col.clear();
					if (c.take(';'))
						continue;
					c.expect(')');
					break;
				}
			}
			c.expect_end();
		} else if (c.take_word("atlas")) {
			declare(c, d, RawDecl::Kind::Atlas);
			c.expect('{');
			while (true) {
				std::string chart = c.ident();
				c.expect(':');
				std::string ring = c.ident();
				d.charts.emplace_back(std::move(chart), std::move(ring));
				if (c.take(','))
					continue;
				c.expect('}');
				break;
			}
			c.expect_end();
		} else if (c.take_word("immersion")) {
			declare(c, d, RawDecl::Kind::Immersion);
			c.expect(':');
			d.from = c.ident(); // the closed piece
			c.expect_arrow();
			d.to = c.ident(); // the carrier
			c.expect('{');
			while (true) {
				RawImmersionClause cl;
				cl.z_chart = c.ident();
				c.expect_arrow();
				cl.carrier = c.ident();
				c.expect_word("via");
				cl.map = c.ident();
				d.clauses.push_back(std::move(cl));
				if (c.take(','))
					continue;
				c.expect('}');
				break;
			}
			c.expect_end();
		} else if (c.take_word("fiber")) {
			declare(c, d, RawDecl::Kind::Fiber);
			c.expect(':');
			d.left = c.ident();
			c.expect('*');
			d.right = c.ident();
			if (c.take_word("over")) {
				d.has_base = true;
				d.base = c.ident();
				c.expect_word("via");
				d.via_a = c.ident();
				c.expect(',');
				d.via_b = c.ident();
			}
			if (c.take_word("expect")) {
				c.expect_word("refuse");
				d.expect_refuse = true;
			}
			c.expect_end();
		} else if (c.take_word("glue")) {
			declare(c, d, RawDecl::Kind::Glue);
			c.expect(':');
			d.left = c.ident();
			c.expect('*');
			d.right = c.ident();
			c.expect_word("along");
			d.base = c.ident();
			d.has_base = true;
			c.expect_word("via");
			d.via_a = c.ident();
			c.expect(',');
			d.via_b = c.ident();
			if (c.take_word("expect")) {
				c.expect_word("refuse");
				d.expect_refuse = true;
			}
			c.expect_end();
		} else {
			c.fail_here("unknown declaration");
		}
		doc.decls.push_back(std::move(d));
	}
	return doc;
}

// canonical text for a parsed document; parsing it back gives the same data
inline std::string write_session(const SessionDoc& doc)
{
	std::ostringstream os;
	os << "field " << doc.field << "\n";
	if (doc.degree_bound > 0 || doc.poincare_n > 0 || doc.truncation > 0) {
		os << "options";
		const char* sep = " ";
		if (doc.degree_bound > 0) {
			os << sep << "degree-bound " << doc.degree_bound;
			sep = ", ";
		}
		if (doc.poincare_n > 0) {
			os << sep << "poincare-n " << doc.poincare_n;
			sep = ", ";
		}
		if (doc.truncation > 0)
			os << sep << "truncation " << doc.truncation;
		os << "\n";
	}
	auto list = [&](const std::vector<std::string>& items, char open, char close) {
		os << open;
		for (size_t i = 0; i < items.size(); ++i)
			os << (i ? ", " : "") << items[i];
		os << close;
	};
	for (const auto& d : doc.decls) {
		switch (d.kind) {
		case RawDecl::Kind::Ring:
			os << "ring " << d.name << " ";
			list(d.vars, '[', ']');
			if (!d.gens.empty()) {
				os << " ";
				list(d.gens, '(', ')');
			}
			break;
		case RawDecl::Kind::Map:
			os << "map " << d.name << " : " << d.from << " -> " << d.to << " ";
			list(d.images, '[', ']');
			break;
		case RawDecl::Kind::Module:
			os << "module " << d.name << " : " << d.ring << " gens " << d.gen_count;
			if (!d.rel_columns.empty()) {
				os << " rels (";
				for (size_t j = 0; j < d.rel_columns.size(); ++j) {
					if (j)
						os << " ; ";
					for (size_t i = 0; i < d.rel_columns[j].size(); ++i)
						os << (i ? ", " : "") << d.rel_columns[j][i];
				}
				os << ")";
			}
			break;
		case RawDecl::Kind::Atlas:
			os << "atlas " << d.name << " { ";
			for (size_t i = 0; i < d.charts.size(); ++i)
				os << (i ? ", " : "") << d.charts[i].first << " : " << d.charts[i].second;
			os << " }";
			break;
		case RawDecl::Kind::Immersion:
			os << "immersion " << d.name << " : " << d.from << " -> " << d.to << " { ";
			for (size_t i = 0; i < d.clauses.size(); ++i)
				os << (i ? ", " : "") << d.clauses[i].z_chart << " -> " << d.clauses[i].carrier
				   << " via " << d.clauses[i].map;
			os << " }";
			break;
		case RawDecl::Kind::Fiber:
			os << "fiber " << d.name << " : " << d.left << " * " << d.right;
			if (d.has_base)
				os << " over " << d.base << " via " << d.via_a << ", " << d.via_b;
			if (d.expect_refuse)
				os << " expect refuse";
			break;
		case RawDecl::Kind::Glue:
			os << "glue " << d.name << " : " << d.left << " * " << d.right << " along " << d.base
			   << " via " << d.via_a << ", " << d.via_b;
			if (d.expect_refuse)
				os << " expect refuse";
			break;
		}
		os << "\n";
	}
	return os.str();
}

// --------------------------------------------------------------- typed layer

template <class K>
struct Session {
	K one;

	std::vector<std::pair<std::string, LocalRingPresentation<K>>> rings;
	std::vector<std::pair<std::string, RingSurjection<K>>> maps;

	struct NamedModule {
		std::string name, ring;
		ModulePresentation<K> mod;
	};
	std::vector<NamedModule> modules;

	std::vector<std::pair<std::string, Atlas<K>>> atlases;

	struct NamedImmersion {
		std::string name, z, x;
		ClosedImmersion<K> imm;
	};
	std::vector<NamedImmersion> immersions;

	struct FiberRequest {
		std::string name, left, right, base, via_a, via_b;
		bool has_base = false;
		bool expect_refuse = false;
	};
	std::vector<FiberRequest> fibers;

	struct GlueRequest {
		std::string name, left, right, base, via_a, via_b;
		bool expect_refuse = false;
	};
	std::vector<GlueRequest> glues;

	const LocalRingPresentation<K>& ring(const std::string& n) const
	{
		for (const auto& [name, r] : rings)
			if (name == n)
				return r;
		fail(ErrorCode::UndefinedName, "no ring named \"" + n + "\"");
	}

	const RingSurjection<K>& map(const std::string& n) const
	{
		for (const auto& [name, m] : maps)
			if (name == n)
				return m;
		fail(ErrorCode::UndefinedName, "no map named \"" + n + "\"");
	}

	const Atlas<K>& atlas(const std::string& n) const
	{
		for (const auto& [name, a] : atlases)
			if (name == n)
				return a;
		fail(ErrorCode::UndefinedName, "no atlas named \"" + n + "\"");
	}

	const NamedImmersion& immersion(const std::string& n) const
	{
		for (const auto& i : immersions)
			if (i.name == n)
				return i;
		fail(ErrorCode::UndefinedName, "no immersion named \"" + n + "\"");
	}
};

template <class K>
Session<K> elaborate(const SessionDoc& doc, K one)
{
	Session<K> s;
	s.one = one;
	for (const auto& d : doc.decls) {
		try {
			switch (d.kind) {
			case RawDecl::Kind::Ring: {
				std::vector<Poly<K>> gs;
				for (const auto& raw : d.gens)
					gs.push_back(parse_poly(raw, d.vars, one));
				s.rings.emplace_back(d.name, present(d.vars, gs, one));
				break;
			}
			case RawDecl::Kind::Map: {
				const auto& src = s.ring(d.from);
				const auto& tgt = s.ring(d.to);
				std::vector<Poly<K>> imgs;
				for (const auto& raw : d.images)
					imgs.push_back(parse_poly(raw, tgt.vars(), one));
				s.maps.emplace_back(d.name, make_map(src, tgt, std::move(imgs)));
				break;
			}
			case RawDecl::Kind::Module: {
				const auto& R = s.ring(d.ring);
				typename Session<K>::NamedModule nm;
				nm.name = d.name;
				nm.ring = d.ring;
				nm.mod.gens = d.gen_count;
				for (const auto& col : d.rel_columns) {
					if (static_cast<int>(col.size()) != d.gen_count)
						fail(ErrorCode::ParseError,
						     "relation column has " + std::to_string(col.size()) +
							 " entries, the module has " + std::to_string(d.gen_count) +
							 " generators");
					std::vector<Poly<K>> comps;
					for (const auto& raw : col)
						comps.push_back(parse_poly(raw, R.vars(), one));
					nm.mod.rels.push_back(VecPoly<K>(std::move(comps)));
				}
				s.modules.push_back(std::move(nm));
				break;
			}
			case RawDecl::Kind::Atlas: {
				std::vector<Chart<K>> cs;
				for (const auto& [chart, ring] : d.charts)
					cs.push_back({chart, s.ring(ring)});
				s.atlases.emplace_back(d.name, make_atlas(d.name, std::move(cs)));
				break;
			}
			case RawDecl::Kind::Immersion: {
				const auto& Z = s.atlas(d.from);
				const auto& X = s.atlas(d.to);
				std::vector<ImmersionLeg<K>> legs;
				for (const auto& cl : d.clauses)
					legs.push_back({X.find(cl.carrier), Z.find(cl.z_chart), s.map(cl.map)});
				s.immersions.push_back(
					{d.name, d.from, d.to, make_immersion(d.name, X, Z, std::move(legs))});
				break;
			}
			case RawDecl::Kind::Fiber: {
				s.ring(d.left);
				s.ring(d.right);
				if (d.has_base) {
					const auto& T = s.ring(d.base);
					const auto& ma = s.map(d.via_a);
					const auto& mb = s.map(d.via_b);
					if (!same_presentation(ma.source, s.ring(d.left)) ||
					    !same_presentation(ma.target, T) ||
					    !same_presentation(mb.source, s.ring(d.right)) ||
					    !same_presentation(mb.target, T))
						fail(ErrorCode::AmbientMismatch,
						     "the via maps do not run from the factors onto the base");
				}
				s.fibers.push_back({d.name, d.left, d.right, d.base, d.via_a, d.via_b,
				                    d.has_base, d.expect_refuse});
				break;
			}
			case RawDecl::Kind::Glue: {
				s.atlas(d.left);
				s.atlas(d.right);
				s.atlas(d.base);
				const auto& a = s.immersion(d.via_a);
				const auto& b = s.immersion(d.via_b);
				if (a.z != d.base || a.x != d.left || b.z != d.base || b.x != d.right)
					fail(ErrorCode::AmbientMismatch,
					     "the via immersions do not run from the shared piece into the carriers");
				s.glues.push_back({d.name, d.left, d.right, d.base, d.via_a, d.via_b,
				                   d.expect_refuse});
				break;
			}
			}
		} catch (const Error& e) {
			if (e.message().rfind("line ", 0) == 0)
				throw;
			fail(e.code(), "line " + std::to_string(d.line) + ", declaring " + d.name + ": " +
			                   e.message());
		}
	}
	return s;
}

} // namespace formalglue
