/* End-to-end checks of the command-line tool: exit codes per the contract
 * (0 ok, 1 failed, 2 bad arguments, 3 undetermined), output shapes, and
 * byte-identical reruns. Takes the binary path as argv[1]. */

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

std::string g_cli;
int g_failures = 0;

struct RunResult {
	int exit_code;
	std::string out;
};

RunResult run(const std::string& args)
{
	std::string cmd = g_cli + " " + args + " 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	if (!pipe) {
		std::cerr << "popen failed for: " << cmd << "\n";
		std::exit(2);
	}
	std::string out;
	char buf[4096];
	size_t n;
	while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
		out.append(buf, n);
	int status = pclose(pipe);
	int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return {code, out};
}

void expect(bool cond, const std::string& what)
{
	if (cond) {
		std::cout << "  ok: " << what << "\n";
	} else {
		std::cout << "  FAILED: " << what << "\n";
		++g_failures;
	}
}

bool contains(const std::string& hay, const std::string& needle)
{
	return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv)
{
	if (argc < 2) {
		std::cerr << "usage: ptheta_cli_tests <path-to-cli>\n";
		return 2;
	}
	g_cli = argv[1];

	{
		RunResult r = run("coeffs --b 1 --order 4");
		expect(r.exit_code == 0, "coeffs --b 1 exits 0");
		expect(contains(r.out, "0\t1") && contains(r.out, "3\t2")
		           && contains(r.out, "4\t5"),
		       "coeffs --b 1 --order 4 prints 1 1 1 2 5");
	}
	{
		RunResult r = run("--format json coeffs --b 2 --order 5");
		expect(r.exit_code == 0, "coeffs json exits 0");
		json j = json::parse(r.out, nullptr, false);
		expect(!j.is_discarded(), "coeffs json parses");
		expect(j.at("schema") == "ptheta/1", "schema field present");
		expect(j.at("a") == json::array({"1", "2", "2", "2", "2", "2"}),
		       "b = 2 coefficients are 1 2 2 2 2 2");
		expect(j.at("sign_cutoff") == 0 && j.at("stable_sign") == 1,
		       "b = 2 sign report");
	}
	{
		RunResult r = run("--format csv coeffs --b 1 --order 3");
		expect(r.exit_code == 0 && r.out == "n,a_n\n0,1\n1,1\n2,1\n3,2\n",
		       "coeffs csv is one row per n");
	}
	{
		expect(run("coeffs --b 0 --order 4").exit_code == 2,
		       "coeffs --b 0 exits 2");
		expect(run("coeffs --order 4").exit_code == 2,
		       "coeffs without --b exits 2");
		expect(run("nonsense").exit_code == 2, "unknown subcommand exits 2");
		expect(run("coeffs --b 1 --order -3").exit_code == 2,
		       "negative order exits 2");
		expect(run("").exit_code == 2, "missing subcommand exits 2");
	}
	{
		RunResult r = run("verify recursion --b-max 6 --order 80");
		expect(r.exit_code == 0, "verify recursion exits 0");
		json j = json::parse(r.out, nullptr, false);
		expect(!j.is_discarded() && j.at("status") == "ok"
		           && j.at("results").size() == 5,
		       "recursion report covers b = 2..6");
	}
	{
		expect(run("verify eta-identity --order 80").exit_code == 0,
		       "verify eta-identity exits 0");
		expect(run("verify integrality --b-max 4 --order 20").exit_code == 0,
		       "verify integrality exits 0");
		expect(run("verify involutions --order 5").exit_code == 0,
		       "verify involutions exits 0");
	}
	{
		RunResult r = run("verify signs --b-max 4 --order 30");
		expect(r.exit_code == 0, "verify signs exits 0 at order 30");
		json j = json::parse(r.out, nullptr, false);
		expect(!j.is_discarded() && j.at("results")[2].at("cutoff") == 3,
		       "b = 3 cutoff reported as 3");
	}
	{
		RunResult r = run("verify signs --order 3");
		expect(r.exit_code == 3, "verify signs --order 3 exits 3");
		json j = json::parse(r.out, nullptr, false);
		expect(!j.is_discarded() && j.at("status") == "undetermined",
		       "status undetermined at order 3");
	}
	{
		RunResult r = run(
		    "verify oracles --b-max 2 --order 3 --precision-bits 256");
		expect(r.exit_code == 0, "verify oracles exits 0");
		json j = json::parse(r.out, nullptr, false);
		expect(!j.is_discarded() && j.at("involutions_match") == true,
		       "oracles report involution match");
	}
	{
		RunResult r = run(
		    "extract --b 1 --order 2 --depth 12 --precision-bits 256");
		expect(r.exit_code == 0, "extract exits 0");
		json j = json::parse(r.out, nullptr, false);
		expect(!j.is_discarded(), "extract json parses");
		bool close = true;
		const double want[] = {1.0, 1.0, 1.0};
		for (int n = 0; n <= 2; ++n) {
			double got = std::strtod(
			    j.at("coeffs")[n].get<std::string>().c_str(), nullptr);
			close = close && std::abs(got - want[n]) < 1e-6;
		}
		expect(close, "extract coefficients approximate 1 1 1");
	}
	{
		RunResult r = run("eval --b 1 --t 1/2 --digits 12");
		expect(r.exit_code == 0, "eval exits 0");
		expect(contains(r.out, "1.78051749922"),
		       "eval value starts 1.78051749922");
		expect(run("eval --b 1 --t 2").exit_code == 2,
		       "eval outside (0,1) exits 2");
	}
	{
		expect(run("eta-check --precision-bits 256").exit_code == 0,
		       "eta-check exits 0");
	}
	{
		RunResult r = run("zigzag --order 7");
		expect(r.exit_code == 0 && contains(r.out, "7\t272"),
		       "zigzag table ends at 272");
		RunResult ri = run("involutions --order 4");
		expect(ri.exit_code == 0 && contains(ri.out, "4\t5"),
		       "involution table ends at 5");
		expect(run("involutions --order 9").exit_code == 2,
		       "involutions above the bound exits 2");
	}
	{
		RunResult a = run("verify signs --b-max 3 --order 12");
		RunResult b = run("verify signs --b-max 3 --order 12");
		expect(a.exit_code == b.exit_code && a.out == b.out,
		       "identical runs produce byte-identical output");
	}
	{
		std::string path = "cli_test_out.json";
		RunResult direct = run("--format json coeffs --b 3 --order 6");
		RunResult filed =
		    run("--format json --out " + path + " coeffs --b 3 --order 6");
		std::ifstream f(path, std::ios::binary);
		std::stringstream ss;
		ss << f.rdbuf();
		expect(filed.exit_code == 0 && ss.str() == direct.out
		           && filed.out.empty(),
		       "--out writes exactly the stdout bytes to the file");
		std::remove(path.c_str());
	}

	if (g_failures == 0) {
		std::cout << "cli: all checks passed\n";
		return 0;
	}
	std::cout << "cli: " << g_failures << " check(s) FAILED\n";
	return 1;
}
