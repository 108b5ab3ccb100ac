#pragma once

#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "session.hpp"

namespace formalglue {

struct RunOptions {
	int degree_bound = 8;
	int poincare_n = 5;
	int truncation = 4;
	std::string field_label = "Q";
};

namespace detail {

inline std::string join(const std::vector<std::string>& v)
{
	if (v.empty())
		return "-";
	std::string out;
	for (size_t i = 0; i < v.size(); ++i)
		out += (i ? ", " : "") + v[i];
	return out;
}

template <class K>
std::string join_polys(const std::vector<Poly<K>>& gs, const std::vector<std::string>& vars)
{
	if (gs.empty())
		return "0";
	std::string out;
	for (size_t i = 0; i < gs.size(); ++i)
		out += (i ? ", " : "") + to_string(gs[i], vars);
	return out;
}

template <class T>
std::string join_nums(const std::vector<T>& v)
{
	std::string out;
	for (size_t i = 0; i < v.size(); ++i)
		out += (i ? " " : "") + std::to_string(v[i]);
	return out;
}

} // namespace detail

// Deterministic line-oriented report; the same session and options always
// produce byte-identical output.
class ReportWriter {
public:
	explicit ReportWriter(std::ostream& os) : os_(os) {}

	void header(const std::string& command, const RunOptions& opt)
	{
		os_ << "formalglue-report 1\n";
		os_ << "command " << command << "\n";
		os_ << "field " << opt.field_label << "\n";
		os_ << "degree-bound " << opt.degree_bound << "\n";
		os_ << "poincare-n " << opt.poincare_n << "\n";
		os_ << "truncation " << opt.truncation << "\n";
	}

	void line(const std::string& s) { os_ << s << "\n"; }

	void check(const std::string& what, bool ok)
	{
		++checks_;
		if (!ok)
			++failed_;
		os_ << "check " << what << (ok ? " pass" : " fail") << "\n";
	}

	int finish()
	{
		os_ << "summary checks " << checks_ << " passed " << (checks_ - failed_) << " failed "
		    << failed_ << "\n";
		int code = failed_ > 0 ? 1 : 0;
		os_ << "exit " << code << "\n";
		return code;
	}

private:
	std::ostream& os_;
	int checks_ = 0;
	int failed_ = 0;
};

template <class K>
void ring_block(ReportWriter& w, const std::string& name, const LocalRingPresentation<K>& R)
{
	w.line("begin ring " + name);
	w.line("vars " + detail::join(R.vars()));
	w.line("ideal " + detail::join_polys(R.gens(), R.vars()));
	w.line("standard-basis " + detail::join_polys(R.basis(), R.vars()));
	InvariantsReport inv = invariants(R);
	w.line("edim " + std::to_string(inv.edim));
	w.line("dim " + std::to_string(inv.dim));
	w.line("depth " + std::to_string(inv.depth));
	w.line(std::string("regular ") + (inv.regular ? "yes" : "no"));
	w.line("end ring " + name);
}

// engine self-probe: random ideal combinations must reduce to zero
template <class K>
bool membership_probe(const LocalRingPresentation<K>& R, int degree_bound, int count)
{
	if (R.gens().empty())
		return true;
	std::mt19937 rng(20240811u);
	std::vector<Monomial> monos = monomials_below(R.nvars(), std::max(degree_bound - 2, 2));
	for (int t = 0; t < count; ++t) {
		Poly<K> f(R.nvars());
		int parts = 1 + static_cast<int>(rng() % 3);
		for (int p = 0; p < parts; ++p) {
			const Monomial& m = monos[rng() % monos.size()];
			const Poly<K>& g = R.gens()[rng() % R.gens().size()];
			K c = (rng() % 2) ? R.one() : -R.one();
			f = f + g.times_term(m, c);
		}
		if (!R.contains(f))
			return false;
	}
	return true;
}

template <class K>
struct FiberOutcome {
	std::optional<FiberProduct<K>> closed;
	std::optional<TruncatedFiber<K>> model;
	const RingSurjection<K>* via_a = nullptr;
	const RingSurjection<K>* via_b = nullptr;
	FiberInvariants inv;
};

template <class K>
FiberOutcome<K> evaluate_fiber(const Session<K>& s,
                               const typename Session<K>::FiberRequest& req,
                               const RunOptions& opt)
{
	const auto& R = s.ring(req.left);
	const auto& S = s.ring(req.right);
	FiberOutcome<K> out;
	if (!req.has_base) {
		if (R.vars() == S.vars()) {
			LocalRingPresentation<K> ambient(R.vars(), {}, R.one(), R.order());
			out.closed = fiber_same_ambient(ambient, R.gens(), S.gens());
		} else {
			out.closed = fiber_over_k(R, S);
		}
	} else {
		const auto& T = s.ring(req.base);
		const auto& ma = s.map(req.via_a);
		const auto& mb = s.map(req.via_b);
		out.via_a = &ma;
		out.via_b = &mb;
		if (!is_surjective(ma) || !is_surjective(mb))
			fail(ErrorCode::NonSurjectiveMap, "fiber products are taken along surjections only");
		if (T.is_residue_field())
			out.closed = fiber_over_k(R, S);
		else if (detail::shared_ambient_applies(R, S, T, ma, mb)) {
			LocalRingPresentation<K> ambient(R.vars(), {}, R.one(), R.order());
			out.closed = fiber_same_ambient(ambient, R.gens(), S.gens());
		} else
			out.model = truncated_fiber(ma, mb, opt.truncation);
	}
	if (out.closed)
		out.inv = fiber_invariants(out.closed->first_to_base, out.closed->second_to_base);
	else
		out.inv = fiber_invariants(*out.via_a, *out.via_b);
	return out;
}

inline const char* fiber_kind_name(FiberKind k)
{
	return k == FiberKind::OverResidueField ? "over-residue-field" : "shared-ambient";
}

template <class K>
void fiber_block(ReportWriter& w, const typename Session<K>::FiberRequest& req,
                 const FiberOutcome<K>& out, const RunOptions& opt)
{
	w.line("begin fiber " + req.name);
	w.line("factors " + req.left + " " + req.right);
	if (out.closed) {
		w.line(std::string("kind ") + fiber_kind_name(out.closed->kind));
		const auto& F = out.closed->ring;
		w.line("vars " + detail::join(F.vars()));
		w.line("ideal " + detail::join_polys(F.gens(), F.vars()));
		w.line("standard-basis " + detail::join_polys(F.basis(), F.vars()));
		w.line("edim " + std::to_string(edim(F)));
	} else {
		w.line("kind pair-model");
		std::vector<int> dims;
		for (int n = 1; n <= opt.truncation; ++n)
			dims.push_back(truncated_fiber(*out.via_a, *out.via_b, n).dim());
		w.line("model-dims " + detail::join_nums(dims));
	}
	w.line("dim " + std::to_string(out.inv.dim));
	w.line((out.inv.depth_exact ? "depth " : "depth-bound ") + std::to_string(out.inv.depth));
	w.line("end fiber " + req.name);
}

// checks shared by the verify command for one fiber request
template <class K>
void fiber_checks(ReportWriter& w, const typename Session<K>::FiberRequest& req,
                  const FiberOutcome<K>& out, const RunOptions& opt)
{
	const std::string tag = " " + req.name;
	if (out.closed) {
		const FiberProduct<K>& F = *out.closed;
		const auto& R = F.to_first.target;
		const auto& S = F.to_second.target;
		w.check("dim-formula" + tag, krull_dim(F.ring) == out.inv.dim);
		if (F.kind == FiberKind::OverResidueField) {
			w.check("edim-additive" + tag, edim(F.ring) == edim(R) + edim(S));
			w.check("depth-formula" + tag, depth(F.ring) == out.inv.depth);
		} else {
			w.check("depth-bound" + tag, depth(F.ring) >= out.inv.depth);
		}
		bool trunc_ok = true, square_ok = true;
		for (int n = 1; n <= opt.truncation; ++n) {
			trunc_ok = trunc_ok && fiber_commutes_with_truncation(F, n);
			square_ok = square_ok && check_pushout_square(F, n);
		}
		w.check("truncation-match" + tag, trunc_ok);
		w.check("pushout-square" + tag, square_ok);
		// The rank bound and the series divisibility hold over the residue
		// field. With a thicker shared piece both can fail: glue the two
		// thickened axes (x^2), (y^2) inside one plane and the union is the
		// hypersurface (x^2*y^2), whose first rank 2 undercuts the bound 3.
		if (F.kind == FiberKind::OverResidueField) {
			auto rep = check_betti_inequality(residue_field_module(R), F);
			w.check("betti-bound" + tag, rep.b1_ok && rep.edim_ok);
			std::vector<long> lhs = poincare_residue_field(F.ring, opt.poincare_n);
			std::vector<long> pr = poincare_residue_field(R, opt.poincare_n);
			auto bk = betti_numbers(cyclic_module(F.ring, F.ker_first), F.ring,
			                        opt.poincare_n);
			std::vector<long> prf(bk.begin(), bk.end());
			w.check("poincare-domination" + tag,
			        check_domination(lhs, series_product(pr, prf, opt.poincare_n)));
		}
	} else {
		bool dims_ok = true;
		for (int n = 1; n <= opt.truncation; ++n)
			dims_ok = dims_ok && check_truncated_dimension(
						      truncated_fiber(*out.via_a, *out.via_b, n));
		w.check("dimension-count" + tag, dims_ok);
		bool power_ok = true;
		for (int n = 1; n <= std::min(4, opt.truncation); ++n)
			power_ok = power_ok && check_pair_power_containment(*out.via_a, *out.via_b, n);
		w.check("power-containment" + tag, power_ok);
	}
}

template <class K>
void glue_block(ReportWriter& w, const GluedScheme<K>& G, const Atlas<K>& Z,
                const ClosedImmersion<K>& a, const ClosedImmersion<K>& b)
{
	w.line("begin glue " + G.name);
	w.line("charts " + std::to_string(G.charts.size()));
	SingularityReport sing = singularity_report(G);
	for (size_t i = 0; i < G.charts.size(); ++i) {
		const auto& c = G.charts[i];
		const std::string p = "chart " + c.name + " ";
		w.line(p + "carrier " + c.x_chart + " " + c.y_chart);
		if (c.closed) {
			w.line(p + "kind " + fiber_kind_name(c.closed->kind));
			w.line(p + "vars " + detail::join(c.closed->ring.vars()));
			w.line(p + "ideal " + detail::join_polys(c.closed->ring.gens(), c.closed->ring.vars()));
			w.line(p + "edim " + std::to_string(edim(c.closed->ring)));
		} else {
			w.line(p + "kind pair-model");
			w.line(p + "model-dim " + std::to_string(c.model->dim()) + " level " +
			       std::to_string(c.model->level));
		}
		w.line(p + "dim " + std::to_string(c.dim));
		w.line(p + (c.depth_exact ? "depth " : "depth-bound ") + std::to_string(c.depth_bound));
		w.line(p + "singular " + (sing.charts[i].singular ? "yes" : "no") + " note " +
		       sing.charts[i].note);
	}
	NoetherianReport noeth = noetherian_report(Z, a, b);
	w.line("noetherian " + noeth.verdict);
	w.line("end glue " + G.name);
}

// a semantic refusal, as opposed to a malformed request
inline bool is_refusal(ErrorCode c)
{
	return c == ErrorCode::NonSurjectiveMap || c == ErrorCode::TrivialGluing ||
	       c == ErrorCode::TrivialFactor || c == ErrorCode::ZeroIdeal;
}

template <class K>
void run_fiber_request(ReportWriter& w, const Session<K>& s,
                       const typename Session<K>::FiberRequest& req, const RunOptions& opt,
                       bool with_checks)
{
	if (req.expect_refuse) {
		try {
			evaluate_fiber(s, req, opt);
			w.line("begin fiber " + req.name);
			w.line("expected a refusal, but the construction went through");
			w.line("end fiber " + req.name);
			w.check("refusal " + req.name, false);
		} catch (const Error& e) {
			if (!is_refusal(e.code()))
				throw;
			w.line("begin fiber " + req.name);
			w.line("refused " + std::string(error_code_name(e.code())));
			w.line("reason " + e.message());
			w.line("end fiber " + req.name);
			w.check("refusal " + req.name, true);
		}
		return;
	}
	FiberOutcome<K> out = evaluate_fiber(s, req, opt);
	fiber_block<K>(w, req, out, opt);
	if (with_checks)
		fiber_checks<K>(w, req, out, opt);
}

template <class K>
void run_glue_request(ReportWriter& w, const Session<K>& s,
                      const typename Session<K>::GlueRequest& req, const RunOptions& opt,
                      bool with_checks)
{
	const Atlas<K>& X = s.atlas(req.left);
	const Atlas<K>& Y = s.atlas(req.right);
	const Atlas<K>& Z = s.atlas(req.base);
	const ClosedImmersion<K>& a = s.immersion(req.via_a).imm;
	const ClosedImmersion<K>& b = s.immersion(req.via_b).imm;

	if (req.expect_refuse) {
		try {
			glue(req.name, X, Y, Z, a, b, opt.truncation);
			w.line("begin glue " + req.name);
			w.line("expected a refusal, but the gluing went through");
			w.line("end glue " + req.name);
			w.check("refusal " + req.name, false);
		} catch (const Error& e) {
			if (!is_refusal(e.code()))
				throw;
			w.line("begin glue " + req.name);
			w.line("refused " + std::string(error_code_name(e.code())));
			w.line("reason " + e.message());
			NoetherianReport noeth = noetherian_report(Z, a, b);
			w.line("noetherian " + noeth.verdict);
			if (!noeth.warning.empty())
				w.line("warning " + noeth.warning);
			w.line("end glue " + req.name);
			w.check("refusal " + req.name, true);
		}
		return;
	}

	GluedScheme<K> G = glue(req.name, X, Y, Z, a, b, opt.truncation);
	glue_block(w, G, Z, a, b);
	if (!with_checks)
		return;
	SingularityReport sing = singularity_report(G);
	for (const auto& c : G.charts) {
		const std::string tag = " " + req.name + "." + c.name;
		w.check("chart-consistency" + tag, verify_glued_chart(c, opt.truncation));
		if (c.closed) {
			w.check("never-regular" + tag, edim(c.closed->ring) > krull_dim(c.closed->ring));
			if (c.closed->kind == FiberKind::OverResidueField) {
				auto rep = check_betti_inequality(
					residue_field_module(c.closed->to_first.target), *c.closed);
				w.check("betti-bound" + tag, rep.b1_ok && rep.edim_ok);
			}
		}
	}
	w.check("some-singular-chart " + req.name, sing.some_singular);
	w.check("noetherian " + req.name, noetherian_report(Z, a, b).all_surjective);
}

template <class K>
int run_session(const Session<K>& s, const std::string& command, const RunOptions& opt,
                std::ostream& os)
{
	ReportWriter w(os);
	w.header(command, opt);

	if (command == "info") {
		for (const auto& [name, R] : s.rings)
			ring_block(w, name, R);
	} else if (command == "resolve") {
		for (const auto& [name, R] : s.rings) {
			w.line("begin resolve " + name);
			FreeResolution<K> res =
				minimal_resolution(residue_field_module(R), R, opt.poincare_n);
			w.line("poincare " + detail::join_nums(res.betti));
			w.line(res.complete ? "pd " + std::to_string(res.pd) : "pd not-reached");
			w.line("depth " + std::to_string(depth(R)));
			w.line("end resolve " + name);
		}
		for (const auto& m : s.modules) {
			w.line("begin resolve " + m.name);
			FreeResolution<K> res = minimal_resolution(m.mod, s.ring(m.ring), opt.poincare_n);
			w.line("betti " + detail::join_nums(res.betti));
			w.line(res.complete ? "pd " + std::to_string(res.pd) : "pd not-reached");
			w.line("end resolve " + m.name);
		}
	} else if (command == "fiber") {
		for (const auto& req : s.fibers)
			run_fiber_request(w, s, req, opt, false);
	} else if (command == "glue") {
		for (const auto& req : s.glues)
			run_glue_request(w, s, req, opt, false);
	} else if (command == "verify") {
		for (const auto& [name, R] : s.rings) {
			w.check("standard-basis " + name, is_standard_basis(R.basis(), R.order()));
			w.check("membership " + name, membership_probe(R, opt.degree_bound, 25));
			w.check("poincare-recursion " + name,
			        check_syzygy_recursion(residue_field_module(R), R, opt.poincare_n));
		}
		for (const auto& m : s.modules)
			w.check("betti-recursion " + m.name,
			        check_syzygy_recursion(m.mod, s.ring(m.ring), opt.poincare_n));
		for (const auto& req : s.fibers)
			run_fiber_request(w, s, req, opt, true);
		for (const auto& req : s.glues)
			run_glue_request(w, s, req, opt, true);
	} else {
		fail(ErrorCode::ParseError, "unknown command \"" + command + "\"");
	}
	return w.finish();
}

} // namespace formalglue
