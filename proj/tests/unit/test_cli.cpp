#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "support.hpp"

namespace {

struct Run {
	int status;
	std::string out;
	std::string err;
};

Run cli(std::vector<std::string> args) {
	args.insert(args.begin(), "somlat");
	std::vector<const char*> argv;
	for (const auto& a : args) {
		argv.push_back(a.c_str());
	}
	std::ostringstream out, err;
	const int status = somlat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
	return {status, out.str(), err.str()};
}

std::string fixture(const std::string& file) {
	return (test::fixture_dir() / file).string();
}

std::vector<nlohmann::json> records(const std::string& out) {
	std::vector<nlohmann::json> lines;
	std::istringstream in(out);
	for (std::string line; std::getline(in, line);) {
		lines.push_back(nlohmann::json::parse(line));
	}
	return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
	return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("classify") {
	const Run r = cli({"classify", fixture("fig2.poset")});
	CHECK(r.status == somlat::cli::kOk);
	CHECK(contains(r.out, "label: almost-skew-orthomodular"));
	CHECK(contains(r.out, "orthomodular-violation (a, d)"));

	const Run j = cli({"--format", "json", "classify", fixture("fig2.poset")});
	const auto recs = records(j.out);
	REQUIRE(recs.size() == 1);
	CHECK(recs[0]["record"] == "classify");
	CHECK(recs[0]["label"] == "almost-skew-orthomodular");
	const auto& som = recs[0]["classes"][3];
	CHECK(som["class"] == "skew-orthomodular");
	CHECK(som["holds"] == false);
	CHECK(som["witness"]["subject"] == nlohmann::json::array({"a", "d"}));
}

TEST_CASE("props") {
	const Run r = cli({"--format", "json", "props", fixture("fig5.poset")});
	CHECK(r.status == 0);
	const auto rec = records(r.out).at(0);
	CHECK(rec["antitone"] == true);
	CHECK(rec["involution"] == false);
	CHECK(rec["lattice"] == false);
	CHECK(rec.contains("involution_witness"));
	CHECK(contains(cli({"props", fixture("fig2.poset")}).out, "covers: 11"));
}

TEST_CASE("assignments") {
	const Run count = cli({"assignments", fixture("fig1.poset"), "--count"});
	CHECK(count.status == 0);
	CHECK(contains(count.out, "count: 108"));
	const Run listed = cli({"--format", "json", "assignments", fixture("fig2.poset"), "--enumerate"});
	const auto recs = records(listed.out);
	CHECK(recs.size() == 9);
	CHECK(recs.back()["index"] == 9);
	const Run sampled = cli({"assignments", fixture("fig2.poset"), "--sample", "3", "--seed", "4"});
	CHECK(sampled.out == cli({"assignments", fixture("fig2.poset"), "--sample", "3", "--seed", "4"}).out);
	CHECK(std::count(sampled.out.begin(), sampled.out.end(), '\n') == 3);
	CHECK(cli({"assignments", fixture("fig1.poset"), "--enumerate", "--cap", "10"}).status == somlat::cli::kUsage);
	CHECK(cli({"assignments", fixture("fig1.poset")}).status == somlat::cli::kUsage);
}

TEST_CASE("check") {
	const Run fail = cli({"check", fixture("fig8.lambda"), "--builtin", "eq5"});
	CHECK(fail.status == somlat::cli::kFailed);
	CHECK(fail.out == "eq5: FAIL at x=a, y=c: lhs a != rhs c\n");
	CHECK(cli({"check", fixture("fig8.lambda"), "--builtin", "eq4"}).status == 0);

	const Run member = cli({"--format", "json", "check", fixture("fig1.poset"), "--builtin", "eq5"});
	CHECK(member.status == 0);
	const auto rec = records(member.out).at(0);
	CHECK(rec["regime"] == "exhaustive");
	CHECK(rec["checked"] == 108);
	CHECK(rec["holds"] == true);

	const Run sampled = cli({"--format", "json", "check", fixture("fig1.poset"), "--identity", "(x|y) = (y|x)",
	                         "--cap", "5", "--samples", "7"});
	const auto srec = records(sampled.out).at(0);
	CHECK(srec["regime"] == "sampled");
	CHECK(srec["checked"] == 7);

	const Run fig4 = cli({"check", fixture("fig4.poset"), "--builtin", "eq3"});
	CHECK(fig4.status == somlat::cli::kFailed);
	CHECK(contains(fig4.out, "first failure: member #1 "));
	CHECK(contains(fig4.out, "FAIL on 0 of 9"));

	CHECK(cli({"check", fixture("fig8.lambda"), "--builtin", "t"}).status == somlat::cli::kUsage);
	const Run bad = cli({"check", fixture("fig8.lambda"), "--identity", "(x | y"});
	CHECK(bad.status == somlat::cli::kUsage);
	CHECK(contains(bad.err, "offset 6"));
	CHECK(cli({"check", fixture("fig8.lambda")}).status == somlat::cli::kUsage);
}

TEST_CASE("axioms") {
	const Run ok = cli({"axioms", fixture("fig7.lambda")});
	CHECK(ok.status == 0);
	CHECK(contains(ok.out, "lambda-lattice: yes"));
	CHECK(cli({"axioms", fixture("fig1.poset")}).status == somlat::cli::kUsage);
	const auto recs = records(cli({"--format", "json", "axioms", fixture("fig6.lambda")}).out);
	CHECK(recs.size() == 13);
	CHECK(recs.back()["record"] == "axioms");
}

TEST_CASE("con") {
	const Run r = cli({"con", fixture("fig8.lambda"), "--list"});
	CHECK(r.status == 0);
	CHECK(contains(r.out, "congruences: 5"));
	CHECK(contains(r.out, "distributive: yes"));
	const auto recs = records(cli({"--format", "json", "con", fixture("fig6.lambda")}).out);
	REQUIRE(recs.size() == 1);
	CHECK(recs[0]["size"] == 2);
	CHECK(recs[0]["permutable"] == true);
	CHECK(cli({"con", fixture("fig8.lambda"), "--distributive"}).status == 0);
}

TEST_CASE("dot") {
	const Run r = cli({"dot", fixture("fig8.lambda")});
	CHECK(r.status == 0);
	CHECK(r.out.rfind("digraph", 0) == 0);
	const auto path = std::filesystem::temp_directory_path() / "somlat-cli-test.dot";
	const Run file = cli({"dot", fixture("fig2.poset"), "-o", path.string()});
	CHECK(file.status == 0);
	CHECK(file.out.empty());
	std::ifstream in(path);
	std::stringstream buf;
	buf << in.rdbuf();
	CHECK(contains(buf.str(), "\"a\" -> \"d\""));
	std::filesystem::remove(path);
}

TEST_CASE("verify-paper") {
	const Run r = cli({"verify-paper", "--fixtures", test::fixture_dir().string()});
	CHECK(r.status == 0);
	CHECK(contains(r.out, "all claims pass"));
	CHECK(contains(r.out, "PASS class-chain"));
	CHECK(contains(r.out, "NOTE finding-complement-gap"));

	const std::vector<std::string> args{"--format", "json", "verify-paper", "--fixtures", test::fixture_dir().string()};
	const Run a = cli(args);
	const Run b = cli(args);
	CHECK(a.out == b.out);
	const auto recs = records(a.out);
	CHECK(recs.back()["record"] == "verify");
	CHECK(recs.back()["passed"] == true);
	CHECK_FALSE(recs.front().contains("seconds"));
	const auto timed = records(cli({"--format", "json", "verify-paper", "--timings", "--filter", "fixtures"}).out);
	CHECK(timed.front().contains("seconds"));
	CHECK(timed.back().contains("seconds"));
	CHECK(contains(cli({"verify-paper", "--filter", "fixtures"}).out, " s)"));

	CHECK(cli({"verify-paper", "--filter", "nope"}).status == somlat::cli::kUsage);
	const Run one = cli({"verify-paper", "--filter", "independence", "--no-timings"});
	CHECK(one.status == 0);
	CHECK(contains(one.out, "PASS independence  "));
}

TEST_CASE("usage errors") {
	CHECK(cli({}).status == somlat::cli::kUsage);
	CHECK(cli({"frobnicate"}).status == somlat::cli::kUsage);
	CHECK(cli({"--format", "xml", "classify", fixture("fig1.poset")}).status == somlat::cli::kUsage);
	CHECK(cli({"classify", fixture("missing.poset")}).status == somlat::cli::kUsage);
	CHECK(cli({"--help"}).status == somlat::cli::kOk);
}

}
