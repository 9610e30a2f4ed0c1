// ybgeo command-line front end. Talks to the core exclusively through the
// C API in ybgeo.h. Exit codes: 0 pass, 1 check failed, 2 input error.

#include "ybgeo.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
	std::string input;
	int order = 6;
	std::string epsilon = "symbolic";
	std::string format = "human";
	std::string output;
	std::string closed_form;
	bool verify = false;
	bool flip_variant = false;
	bool corrupt = false;
};

struct CString {
	char *p = nullptr;
	~CString() { ybgeo_string_free(p); }
	std::string str() const { return p ? p : ""; }
};

template <class T, void (*F)(T *)> struct Handle {
	T *p = nullptr;
	~Handle() { F(p); }
	T **out() { return &p; }
};
using RMatrix = Handle<ybgeo_rmatrix, ybgeo_rmatrix_free>;
using Cbcst = Handle<ybgeo_cbcst, ybgeo_cbcst_free>;
using Quantum = Handle<ybgeo_quantum, ybgeo_quantum_free>;

[[noreturn]] void input_error(const std::string &msg)
{
	std::cerr << "error: " << msg << "\n";
	std::exit(2);
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		input_error("cannot open " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

void write_output(const Options &opt, const std::string &text)
{
	if (opt.output.empty()) {
		std::cout << text;
		if (!text.empty() && text.back() != '\n')
			std::cout << "\n";
		return;
	}
	std::ofstream out(opt.output, std::ios::binary);
	if (!out)
		input_error("cannot write " + opt.output);
	out << text;
}

// render a report produced by the C API in the requested format
std::string render_report(const Options &opt, const std::string &report_json)
{
	if (opt.format == "structured")
		return report_json;
	ordered_json j = ordered_json::parse(report_json);
	std::ostringstream os;
	for (const auto &item : j["items"]) {
		os << (item["pass"].get<bool>() ? "  ok   " : "  FAIL ")
		   << item["name"].get<std::string>();
		if (item.contains("witness"))
			os << "  (" << item["witness"].get<std::string>() << ")";
		os << "\n";
	}
	os << j["command"].get<std::string>() << ": " << j["verdict"].get<std::string>()
	   << "\n";
	return os.str();
}

int finish_check(const Options &opt, ybgeo_status st, const CString &report,
                 const CString &err)
{
	if (st == YBGEO_OK || st == YBGEO_CHECK_FAILED) {
		write_output(opt, render_report(opt, report.str()));
		return st == YBGEO_OK ? 0 : 1;
	}
	input_error(err.str());
}

RMatrix load_rmatrix(const Options &opt)
{
	RMatrix r;
	CString err;
	if (ybgeo_rmatrix_parse(read_file(opt.input).c_str(), r.out(), &err.p) != YBGEO_OK)
		input_error(err.str());
	if (opt.epsilon != "symbolic") {
		RMatrix spec;
		CString err2;
		if (ybgeo_rmatrix_specialize(r.p, opt.epsilon.c_str(), spec.out(), &err2.p) !=
		    YBGEO_OK)
			input_error(err2.str());
		std::swap(r.p, spec.p);
	}
	return r;
}

int cmd_check_cybe(const Options &opt)
{
	RMatrix r = load_rmatrix(opt);
	CString report, err;
	ybgeo_status st = ybgeo_rmatrix_check_cybe(r.p, &report.p, &err.p);
	return finish_check(opt, st, report, err);
}

int cmd_build_cbcst(const Options &opt)
{
	RMatrix r = load_rmatrix(opt);
	Cbcst c;
	CString err;
	if (ybgeo_cbcst_build(r.p, c.out(), &err.p) != YBGEO_OK)
		input_error(err.str());
	CString cjson, report, err2;
	if (ybgeo_cbcst_to_json(c.p, &cjson.p, &err2.p) != YBGEO_OK)
		input_error(err2.str());
	CString err3;
	ybgeo_status st = ybgeo_cbcst_validate(c.p, &report.p, &err3.p);
	if (st != YBGEO_OK && st != YBGEO_CHECK_FAILED)
		input_error(err3.str());
	ordered_json out;
	out["cbcst"] = ordered_json::parse(cjson.str());
	out["validation"] = ordered_json::parse(report.str());
	write_output(opt, out.dump(2) + "\n");
	return st == YBGEO_OK ? 0 : 1;
}

int cmd_to_rmatrix(const Options &opt)
{
	Cbcst c;
	CString err;
	if (ybgeo_cbcst_parse(read_file(opt.input).c_str(), c.out(), &err.p) != YBGEO_OK)
		input_error(err.str());
	RMatrix r;
	CString err2;
	if (ybgeo_cbcst_to_rmatrix(c.p, r.out(), &err2.p) != YBGEO_OK)
		input_error(err2.str());
	CString rjson, err3;
	if (ybgeo_rmatrix_to_json(r.p, &rjson.p, &err3.p) != YBGEO_OK)
		input_error(err3.str());
	write_output(opt, rjson.str() + "\n");
	return 0;
}

int cmd_quantize(const Options &opt)
{
	RMatrix r = load_rmatrix(opt);
	Cbcst c;
	CString err;
	if (ybgeo_cbcst_build(r.p, c.out(), &err.p) != YBGEO_OK)
		input_error(err.str());
	Quantum q;
	CString err2;
	if (ybgeo_quantize(c.p, opt.order, q.out(), &err2.p) != YBGEO_OK)
		input_error(err2.str());
	CString sjson, err3;
	if (ybgeo_quantum_to_json(q.p, &sjson.p, &err3.p) != YBGEO_OK)
		input_error(err3.str());
	ordered_json out = ordered_json::parse(sjson.str());
	bool pass = true;
	if (opt.verify) {
		CString braid, err4;
		ybgeo_status st = ybgeo_quantum_check_braid(q.p, 0, &braid.p, &err4.p);
		if (st != YBGEO_OK && st != YBGEO_CHECK_FAILED)
			input_error(err4.str());
		pass = pass && st == YBGEO_OK;
		CString limit, err5;
		ybgeo_status st2 = ybgeo_quantum_classical_limit(q.p, r.p, &limit.p, &err5.p);
		if (st2 != YBGEO_OK && st2 != YBGEO_CHECK_FAILED)
			input_error(err5.str());
		pass = pass && st2 == YBGEO_OK;
		out["verification"] = ordered_json::array(
		    {ordered_json::parse(braid.str()), ordered_json::parse(limit.str())});
	}
	if (!opt.closed_form.empty()) {
		CString match, err6;
		ybgeo_status st = ybgeo_quantum_match_closed_forms(
		    q.p, read_file(opt.closed_form).c_str(), &match.p, &err6.p);
		if (st != YBGEO_OK && st != YBGEO_CHECK_FAILED)
			input_error(err6.str());
		pass = pass && st == YBGEO_OK;
		out["closed_form_comparison"] = ordered_json::parse(match.str());
	}
	write_output(opt, out.dump(2) + "\n");
	return pass ? 0 : 1;
}

int cmd_check_braid(const Options &opt)
{
	RMatrix r = load_rmatrix(opt);
	Cbcst c;
	CString err;
	if (ybgeo_cbcst_build(r.p, c.out(), &err.p) != YBGEO_OK)
		input_error(err.str());
	Quantum q;
	CString err2;
	if (ybgeo_quantize(c.p, opt.order, q.out(), &err2.p) != YBGEO_OK)
		input_error(err2.str());
	CString report, err3;
	ybgeo_status st =
	    ybgeo_quantum_check_braid(q.p, opt.flip_variant ? 1 : 0, &report.p, &err3.p);
	return finish_check(opt, st, report, err3);
}

int cmd_verify_example5(const Options &opt)
{
	CString report, err;
	ybgeo_status st = ybgeo_verify_example5(opt.order, opt.epsilon.c_str(),
	                                        opt.corrupt ? 1 : 0, &report.p, &err.p);
	return finish_check(opt, st, report, err);
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact quantization of geometric classical r-matrices"};
	app.require_subcommand(1);
	Options opt;

	auto add_common = [&](CLI::App *cmd, bool needs_input) {
		if (needs_input)
			cmd->add_option("input", opt.input, "input file")->required();
		cmd->add_option("--order", opt.order, "truncation order N");
		cmd->add_option("--epsilon", opt.epsilon, "'symbolic' or an exact rational");
		cmd->add_option("--format", opt.format, "report format")
		    ->check(CLI::IsMember({"human", "structured"}));
		cmd->add_option("--output", opt.output, "write result to a file");
	};

	auto *cybe = app.add_subcommand("check-cybe", "verify the classical Yang-Baxter equation");
	add_common(cybe, true);
	auto *build = app.add_subcommand("build-cbcst", "construct the classical cocycle 7-tuple");
	add_common(build, true);
	auto *tor = app.add_subcommand("to-rmatrix", "read a 7-tuple and emit its r-matrix");
	add_common(tor, true);
	auto *quant = app.add_subcommand("quantize", "produce the quantum R-matrix series");
	add_common(quant, true);
	quant->add_flag("--verify", opt.verify, "also run braid and classical-limit checks");
	quant->add_option("--closed-form", opt.closed_form,
	                  "compare against closed-form expressions from a file");
	auto *braid = app.add_subcommand("check-braid", "quantize and verify the braid identity");
	add_common(braid, true);
	braid->add_flag("--flip-variant", opt.flip_variant,
	                "check the adjacent-placement braid relation for sigma.R");
	auto *ver5 = app.add_subcommand("verify-example5",
	                                "run the full built-in example verification");
	add_common(ver5, false);
	ver5->add_flag("--corrupt-fixture", opt.corrupt,
	               "perturb the fixture first (negative control)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (cybe->parsed())
			return cmd_check_cybe(opt);
		if (build->parsed())
			return cmd_build_cbcst(opt);
		if (tor->parsed())
			return cmd_to_rmatrix(opt);
		if (quant->parsed())
			return cmd_quantize(opt);
		if (braid->parsed())
			return cmd_check_braid(opt);
		if (ver5->parsed()) {
			if (ver5->count("--order") == 0)
				opt.order = 4;
			return cmd_verify_example5(opt);
		}
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
