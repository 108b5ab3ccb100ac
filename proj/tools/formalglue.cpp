#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <formalglue/prime_field.hpp>
#include <formalglue/rational.hpp>
#include <formalglue/report.hpp>
#include <formalglue/session.hpp>

namespace {

using namespace formalglue;

bool is_prime(long p)
{
	if (p < 2)
		return false;
	for (long d = 2; d * d <= p; ++d)
		if (p % d == 0)
			return false;
	return true;
}

// "Q" or "Fp" with p a prime; returns the normalized label, 0 meaning Q
long parse_field_label(std::string& label)
{
	if (label == "Q" || label == "q") {
		label = "Q";
		return 0;
	}
	if (label.size() >= 2 && (label[0] == 'F' || label[0] == 'f')) {
		long p = 0;
		try {
			size_t used = 0;
			p = std::stol(label.substr(1), &used);
			if (used + 1 != label.size())
				p = 0;
		} catch (...) {
			p = 0;
		}
		if (p > 1'000'000'000)
			fail(ErrorCode::BadField, "modulus " + label.substr(1) + " is too large");
		if (!is_prime(p))
			fail(ErrorCode::BadField, "\"" + label + "\" is not a prime field label");
		label = "F" + std::to_string(p);
		return p;
	}
	fail(ErrorCode::BadField, "unknown field \"" + label + "\", expected Q or Fp");
}

int emit(const std::string& report, const std::string& machine_path)
{
	std::cout << report;
	if (!machine_path.empty()) {
		std::ofstream out(machine_path, std::ios::binary);
		if (!out) {
			std::cerr << "formalglue: cannot write " << machine_path << "\n";
			return 2;
		}
		out << report;
	}
	return -1;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exact invariants of formal schemes, their fiber products and gluings"};
	app.name("formalglue");

	std::string command, session_path, field_override, machine_path;
	RunOptions opt;

	app.add_option("command", command, "one of: info, fiber, glue, resolve, verify")->required();
	app.add_option("session-file", session_path, "session description to process")->required();
	app.add_option("--degree-bound", opt.degree_bound, "cap for oracle and probe degrees")
		->default_val(8);
	app.add_option("--poincare-n", opt.poincare_n, "resolution steps for series output")
		->default_val(5);
	app.add_option("--truncation", opt.truncation, "level for truncated fiber models")
		->default_val(4);
	app.add_option("--field", field_override, "work over Q or Fp, overriding the session");
	app.add_option("--machine-output", machine_path, "also write the report to this file");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		std::ifstream in(session_path);
		if (!in) {
			std::cerr << "formalglue: cannot open " << session_path << "\n";
			return 2;
		}
		SessionDoc doc = parse_session(in);

		// a flag given on the command line beats an options line in the file
		if (app.count("--degree-bound") == 0 && doc.degree_bound > 0)
			opt.degree_bound = doc.degree_bound;
		if (app.count("--poincare-n") == 0 && doc.poincare_n > 0)
			opt.poincare_n = doc.poincare_n;
		if (app.count("--truncation") == 0 && doc.truncation > 0)
			opt.truncation = doc.truncation;

		std::string label = field_override.empty() ? doc.field : field_override;
		long p = parse_field_label(label);
		opt.field_label = label;

		std::ostringstream report;
		int code;
		if (p == 0)
			code = run_session(elaborate(doc, Rational(1)), command, opt, report);
		else
			code = run_session(elaborate(doc, PrimeField(1, p)), command, opt, report);

		int emitted = emit(report.str(), machine_path);
		return emitted >= 0 ? emitted : code;
	} catch (const Error& e) {
		std::cerr << "formalglue: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "formalglue: " << e.what() << "\n";
		return 2;
	}
}
