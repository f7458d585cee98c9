/* Batch front end: every computation and verification as a subcommand with
 * machine-readable output. Exit codes: 0 all checks passed, 1 a check
 * failed, 2 bad arguments, 3 undetermined (order or precision too small).
 * Identical invocations produce byte-identical output. */

#include "ptheta/asymptotics.hpp"
#include "ptheta/combinatorics.hpp"
#include "ptheta/json_io.hpp"
#include "ptheta/numeric.hpp"
#include "ptheta/qseries.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using ptheta::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitUndetermined = 3;

void write_output(const std::string& text, const std::string& out_path)
{
	if (out_path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(out_path, std::ios::binary);
	if (!f)
		throw std::runtime_error("cannot open output file '" + out_path + "'");
	f << text;
}

void emit_json(const json& j, const std::string& out_path)
{
	write_output(j.dump(2) + "\n", out_path);
}

int status_exit(const std::string& status)
{
	if (status == "ok") return kExitOk;
	if (status == "undetermined") return kExitUndetermined;
	return kExitFailed;
}

// ---- coeffs ----------------------------------------------------------

int run_coeffs(int b, int order, const std::string& format,
               const std::string& out_path)
{
	ptheta::ExpansionResult res = ptheta::asymptotic_coeffs(b, order);
	if (format == "csv") {
		write_output(ptheta::expansion_to_csv(res), out_path);
	} else if (format == "json") {
		json j{{"schema", ptheta::kSchemaVersion}};
		j.update(ptheta::expansion_to_json(res));
		emit_json(j, out_path);
	} else {
		std::ostringstream os;
		os << "b = " << res.b << ", order = " << res.order << "\n";
		for (size_t n = 0; n < res.a.size(); ++n)
			os << n << "\t" << ptheta::rational_to_string(res.a[n]) << "\n";
		if (res.sign.determined)
			os << "stable sign " << (res.sign.sign > 0 ? "+1" : "-1")
			   << " from n = " << res.sign.cutoff << "\n";
		else
			os << "sign stabilization not observed at this order\n";
		write_output(os.str(), out_path);
	}
	return kExitOk;
}

// ---- verify ----------------------------------------------------------

int run_verify_recursion(int b_max, int order, const std::string& out_path)
{
	json results = json::array();
	bool all_ok = true;
	for (int b = 2; b <= b_max; ++b) {
		ptheta::IdentityReport rep = ptheta::recursion_check(b, order);
		all_ok = all_ok && rep.ok;
		results.push_back(ptheta::report_to_json(rep));
	}
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "recursion"},
	       {"order", order},
	       {"b_max", b_max},
	       {"results", std::move(results)},
	       {"status", all_ok ? "ok" : "failed"}};
	emit_json(j, out_path);
	return all_ok ? kExitOk : kExitFailed;
}

int run_verify_eta(int order, const std::string& out_path)
{
	ptheta::IdentityReport rep = ptheta::eta_identity_check(order);
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "eta-identity"},
	       {"order", order},
	       {"result", ptheta::report_to_json(rep)},
	       {"status", rep.ok ? "ok" : "failed"}};
	emit_json(j, out_path);
	return rep.ok ? kExitOk : kExitFailed;
}

int run_verify_signs(int b_max, int order, const std::string& out_path)
{
	json results = json::array();
	bool any_undetermined = false;
	bool any_failed = false;
	for (int b = 1; b <= b_max; ++b) {
		ptheta::ExpansionResult res = ptheta::asymptotic_coeffs(b, order);
		int expected = ptheta::expected_stable_sign(b);
		json row{{"b", b}, {"expected_sign", expected}};
		if (!res.sign.determined) {
			any_undetermined = true;
			row["cutoff"] = nullptr;
			row["stable_sign"] = 0;
			row["status"] = "undetermined";
		} else if (res.sign.sign != expected) {
			any_failed = true;
			row["cutoff"] = res.sign.cutoff;
			row["stable_sign"] = res.sign.sign;
			row["status"] = "mismatch";
		} else {
			row["cutoff"] = res.sign.cutoff;
			row["stable_sign"] = res.sign.sign;
			row["status"] = "ok";
		}
		results.push_back(std::move(row));
	}
	std::string status = any_failed ? "failed"
	                   : any_undetermined ? "undetermined" : "ok";
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "signs"},
	       {"order", order},
	       {"b_max", b_max},
	       {"results", std::move(results)},
	       {"status", status}};
	emit_json(j, out_path);
	return status_exit(status);
}

int run_verify_integrality(int b_max, int order, const std::string& out_path)
{
	json results = json::array();
	bool all_ok = true;
	for (int b = 1; b <= b_max; ++b) {
		ptheta::ExpansionResult res = ptheta::asymptotic_coeffs(b, order);
		bool ok = ptheta::all_integers(res.a);
		all_ok = all_ok && ok;
		results.push_back(json{{"b", b}, {"all_integers", ok}});
	}
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "integrality"},
	       {"order", order},
	       {"b_max", b_max},
	       {"results", std::move(results)},
	       {"status", all_ok ? "ok" : "failed"}};
	emit_json(j, out_path);
	return all_ok ? kExitOk : kExitFailed;
}

int run_verify_involutions(int order, const std::string& out_path)
{
	ptheta::ExpansionResult res = ptheta::asymptotic_coeffs(1, order);
	json results = json::array();
	bool all_ok = true;
	for (int n = 0; n <= order; ++n) {
		ptheta::Int count = ptheta::fpf_alternating_involutions(n);
		bool ok = ptheta::is_integer(res.a[static_cast<size_t>(n)])
		          && numerator(res.a[static_cast<size_t>(n)]) == count;
		all_ok = all_ok && ok;
		results.push_back(json{
		    {"n", n},
		    {"a_n", ptheta::rational_to_string(res.a[static_cast<size_t>(n)])},
		    {"involutions", count.str()},
		    {"status", ok ? "ok" : "mismatch"}});
	}
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "involutions"},
	       {"order", order},
	       {"results", std::move(results)},
	       {"status", all_ok ? "ok" : "failed"}};
	emit_json(j, out_path);
	return all_ok ? kExitOk : kExitFailed;
}

int run_verify_oracles(int b_max, int order, long prec,
                       const std::string& t0_str,
                       const std::string& out_path)
{
	using ptheta::BigFloat;
	BigFloat tol = BigFloat::from_string("1e-6", prec);
	BigFloat t0 = BigFloat::from_string(t0_str, prec);
	BigFloat ratio = BigFloat::from_string("1/2", prec);
	json results = json::array();
	bool all_ok = true;
	bool undetermined = false;
	for (int b = 1; b <= b_max; ++b) {
		ptheta::ExpansionResult exact = ptheta::asymptotic_coeffs(b, order);
		ptheta::ExtractionResult num = ptheta::extract_coeffs(
		    BigFloat::from_long(b, prec), order, t0, ratio, prec);
		BigFloat max_diff(prec);
		bool est_ok = true;
		for (int n = 0; n <= order; ++n) {
			BigFloat diff = abs(
			    num.coeffs[static_cast<size_t>(n)]
			    - BigFloat::from_rational(exact.a[static_cast<size_t>(n)], prec));
			if (diff > max_diff) max_diff = diff;
			if (num.error_estimates[static_cast<size_t>(n)] > tol)
				est_ok = false;
		}
		bool ok = est_ok && max_diff <= tol;
		if (!est_ok) undetermined = true;
		else all_ok = all_ok && ok;
		results.push_back(json{
		    {"b", b},
		    {"max_abs_diff", max_diff.to_string(3)},
		    {"status", !est_ok ? "undetermined" : (ok ? "ok" : "mismatch")}});
	}
	// second oracle: the b = 1 coefficients against the involution counts
	ptheta::ExpansionResult res1 = ptheta::asymptotic_coeffs(1, 6);
	bool inv_ok = true;
	for (int n = 0; n <= 6; ++n)
		inv_ok = inv_ok
		         && ptheta::is_integer(res1.a[static_cast<size_t>(n)])
		         && numerator(res1.a[static_cast<size_t>(n)])
		                == ptheta::fpf_alternating_involutions(n);
	all_ok = all_ok && inv_ok;
	std::string status = !all_ok ? "failed"
	                   : undetermined ? "undetermined" : "ok";
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "oracles"},
	       {"order", order},
	       {"b_max", b_max},
	       {"precision_bits", prec},
	       {"tolerance", "1e-6"},
	       {"numeric", std::move(results)},
	       {"involutions_match", inv_ok},
	       {"status", status}};
	emit_json(j, out_path);
	return status_exit(status);
}

// ---- numeric subcommands ---------------------------------------------

int run_extract(const std::string& b_str, int count, const std::string& t0_str,
                const std::string& ratio_str, int depth, long prec, int digits,
                const std::string& out_path)
{
	using ptheta::BigFloat;
	BigFloat b = BigFloat::from_string(b_str, prec);
	BigFloat t0 = BigFloat::from_string(t0_str, prec);
	BigFloat ratio = BigFloat::from_string(ratio_str, prec);
	ptheta::ExtractionResult res =
	    ptheta::extract_coeffs(b, count, t0, ratio, prec, depth);
	json coeffs = json::array(), ests = json::array();
	for (const auto& c : res.coeffs)
		coeffs.push_back(c.to_string(digits));
	for (const auto& e : res.error_estimates)
		ests.push_back(e.to_string(3));
	json j{{"schema", ptheta::kSchemaVersion},
	       {"b", b_str},
	       {"t0", t0_str},
	       {"ratio", ratio_str},
	       {"grid_depth", depth},
	       {"precision_bits", prec},
	       {"coeffs", std::move(coeffs)},
	       {"error_estimates", std::move(ests)}};
	emit_json(j, out_path);
	return kExitOk;
}

int run_eval(const std::string& b_str, const std::string& t_str, long prec,
             int digits, const std::string& out_path)
{
	using ptheta::BigFloat;
	BigFloat b = BigFloat::from_string(b_str, prec);
	BigFloat t = BigFloat::from_string(t_str, prec);
	BigFloat value = ptheta::eval_f(b, t, prec);
	json j{{"schema", ptheta::kSchemaVersion},
	       {"b", b_str},
	       {"t", t_str},
	       {"precision_bits", prec},
	       {"value", value.to_string(digits)}};
	emit_json(j, out_path);
	return kExitOk;
}

int run_eta_check(long prec, int digits, const std::string& out_path)
{
	using ptheta::BigFloat;
	BigFloat bound = BigFloat::from_string("1e-30", prec);
	json panel = json::array();
	BigFloat max_res(prec);
	for (const auto& [label, tau] : ptheta::modular_sample_panel(prec)) {
		BigFloat r = ptheta::modular_check(tau, prec);
		if (r > max_res) max_res = r;
		panel.push_back(json{{"tau", label}, {"residual", r.to_string(digits)}});
	}
	bool ok = max_res < bound;
	json j{{"schema", ptheta::kSchemaVersion},
	       {"check", "eta-modular-transformation"},
	       {"precision_bits", prec},
	       {"bound", "1e-30"},
	       {"panel", std::move(panel)},
	       {"max_residual", max_res.to_string(digits)},
	       {"status", ok ? "ok" : "failed"}};
	emit_json(j, out_path);
	return ok ? kExitOk : kExitFailed;
}

// ---- tables ----------------------------------------------------------

int run_zigzag(int order, const std::string& format,
               const std::string& out_path)
{
	if (format == "json") {
		json values = json::array();
		for (int n = 0; n <= order; ++n)
			values.push_back(ptheta::zigzag(n).str());
		emit_json(json{{"schema", ptheta::kSchemaVersion},
		               {"table", "zigzag"},
		               {"order", order},
		               {"values", std::move(values)}},
		          out_path);
	} else {
		std::ostringstream os;
		for (int n = 0; n <= order; ++n)
			os << n << "\t" << ptheta::zigzag(n).str() << "\n";
		write_output(os.str(), out_path);
	}
	return kExitOk;
}

int run_involutions(int order, const std::string& format,
                    const std::string& out_path)
{
	if (format == "json") {
		json values = json::array();
		for (int n = 0; n <= order; ++n)
			values.push_back(ptheta::fpf_alternating_involutions(n).str());
		emit_json(json{{"schema", ptheta::kSchemaVersion},
		               {"table", "fpf-alternating-involutions"},
		               {"order", order},
		               {"values", std::move(values)}},
		          out_path);
	} else {
		std::ostringstream os;
		for (int n = 0; n <= order; ++n)
			os << n << "\t" << ptheta::fpf_alternating_involutions(n).str()
			   << "\n";
		write_output(os.str(), out_path);
	}
	return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exact and numeric expansions of the partial theta "
	             "functions f_b(t) = 2 sum (-1)^n q^(n^2+bn), "
	             "q = (1-t)/(1+t)"};
	app.require_subcommand(1);
	// let --format/--out appear after the subcommand as well
	app.fallthrough();

	std::string format = "text", out_path;
	app.add_option("--format", format, "output format")
	    ->check(CLI::IsMember({"json", "csv", "text"}));
	app.add_option("--out", out_path, "write output to this file");

	// coeffs
	auto* coeffs = app.add_subcommand(
	    "coeffs", "exact expansion coefficients a_0..a_N with sign report");
	int c_b = 1, c_order = 16;
	coeffs->add_option("--b", c_b, "index b (positive integer)")
	    ->required()->check(CLI::PositiveNumber);
	coeffs->add_option("--order", c_order, "truncation order N")
	    ->check(CLI::NonNegativeNumber);

	// verify
	auto* verify = app.add_subcommand("verify", "run a verification suite");
	verify->require_subcommand(1);
	int v_bmax = 12, v_order = -1;
	long v_prec = 512;
	std::string v_t0 = "1/16";
	for (const char* name :
	     {"recursion", "eta-identity", "signs", "integrality", "oracles",
	      "involutions"}) {
		auto* sub = verify->add_subcommand(name);
		sub->add_option("--b-max", v_bmax, "largest b to check")
		    ->check(CLI::PositiveNumber);
		sub->add_option("--order", v_order, "truncation order")
		    ->check(CLI::NonNegativeNumber);
		sub->add_option("--precision-bits", v_prec, "working precision")
		    ->check(CLI::Range(64L, 1L << 20));
		sub->add_option("--t0", v_t0, "largest grid point (oracles)");
	}

	// extract
	auto* extract = app.add_subcommand(
	    "extract", "numeric extraction of leading expansion coefficients");
	std::string x_b = "1", x_t0 = "1/16", x_ratio = "1/2";
	int x_count = 4, x_depth = 24, x_digits = 20;
	long x_prec = 512;
	extract->add_option("--b", x_b, "index b (real, > 0)");
	// the expansion is asymptotic; beyond ~8 coefficients the grid leaves
	// the regime where extrapolation converges
	extract->add_option("--order", x_count, "number of coefficients minus one")
	    ->check(CLI::Range(0, 8));
	extract->add_option("--t0", x_t0, "largest grid point");
	extract->add_option("--ratio", x_ratio, "grid ratio in (0,1)");
	extract->add_option("--depth", x_depth, "grid depth")
	    ->check(CLI::Range(4, 64));
	extract->add_option("--precision-bits", x_prec, "working precision")
	    ->check(CLI::Range(64L, 1L << 20));
	extract->add_option("--digits", x_digits, "display digits")
	    ->check(CLI::Range(1, 1000));

	// eval
	auto* eval = app.add_subcommand("eval", "evaluate f_b(t) directly");
	std::string e_b = "1", e_t;
	long e_prec = 256;
	int e_digits = 20;
	eval->add_option("--b", e_b, "index b (real)");
	eval->add_option("--t", e_t, "point in (0,1), decimal or p/q")->required();
	eval->add_option("--precision-bits", e_prec, "working precision")
	    ->check(CLI::Range(64L, 1L << 20));
	eval->add_option("--digits", e_digits, "display digits")
	    ->check(CLI::Range(1, 1000));

	// eta-check
	auto* eta = app.add_subcommand(
	    "eta-check", "modular transformation residuals on the sample panel");
	long h_prec = 256;
	int h_digits = 10;
	eta->add_option("--precision-bits", h_prec, "working precision")
	    ->check(CLI::Range(64L, 1L << 20));
	eta->add_option("--digits", h_digits, "display digits")
	    ->check(CLI::Range(1, 1000));

	// zigzag / involutions tables
	auto* zz = app.add_subcommand("zigzag",
	                              "alternating permutation counts 0..N");
	int z_order = 10;
	zz->add_option("--order", z_order, "largest n")
	    ->check(CLI::NonNegativeNumber);

	auto* inv = app.add_subcommand(
	    "involutions", "fixed-point-free alternating involution counts 0..N");
	int i_order = 6;
	inv->add_option("--order", i_order, "largest n (enumeration bound 7)")
	    ->check(CLI::Range(0, 7));

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return kExitBadArgs;
	}

	try {
		if (*coeffs)
			return run_coeffs(c_b, c_order, format, out_path);
		if (*verify) {
			auto* sub = verify->get_subcommands().at(0);
			const std::string name = sub->get_name();
			if (name == "recursion")
				return run_verify_recursion(
				    v_bmax, v_order < 0 ? 200 : v_order, out_path);
			if (name == "eta-identity")
				return run_verify_eta(v_order < 0 ? 200 : v_order, out_path);
			if (name == "signs")
				return run_verify_signs(v_bmax, v_order < 0 ? 60 : v_order,
				                        out_path);
			if (name == "integrality")
				return run_verify_integrality(
				    v_bmax, v_order < 0 ? 60 : v_order, out_path);
			if (name == "oracles")
				return run_verify_oracles(std::min(v_bmax, 4),
				                          v_order < 0 ? 5 : v_order, v_prec,
				                          v_t0, out_path);
			if (name == "involutions")
				return run_verify_involutions(v_order < 0 ? 6 : v_order,
				                              out_path);
		}
		if (*extract)
			return run_extract(x_b, x_count, x_t0, x_ratio, x_depth, x_prec,
			                   x_digits, out_path);
		if (*eval)
			return run_eval(e_b, e_t, e_prec, e_digits, out_path);
		if (*eta)
			return run_eta_check(h_prec, h_digits, out_path);
		if (*zz)
			return run_zigzag(z_order, format, out_path);
		if (*inv)
			return run_involutions(i_order, format, out_path);
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitBadArgs;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitFailed;
	}
	return kExitBadArgs;
}
