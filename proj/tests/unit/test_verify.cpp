#include <doctest.h>

#include "somlat/error.hpp"
#include "somlat/verify.hpp"
#include "support.hpp"

using namespace somlat;

namespace {

VerifyOptions options(std::map<std::string, std::string> overrides = {}) {
	VerifyOptions opts{FixtureSource(test::fixture_dir(), std::move(overrides)), std::nullopt, {}, 6};
	return opts;
}

const ClaimResult* find(const VerifyReport& r, const std::string& name) {
	for (const auto& c : r.claims) {
		if (c.info.name == name) {
			return &c;
		}
	}
	return nullptr;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("every claim passes on the shipped fixtures") {
	const VerifyReport r = verify_paper(options());
	CHECK(r.passed());
	CHECK(r.claims.size() == claim_catalog().size());
	for (const auto& c : r.claims) {
		CHECK_MESSAGE(c.passed, c.info.name);
		CHECK(c.seconds >= 0);
	}
	const ClaimResult* gap = find(r, "finding-complement-gap");
	REQUIRE(gap);
	CHECK_FALSE(gap->witnesses.empty());
}

TEST_CASE("filter runs a single claim") {
	VerifyOptions opts = options();
	opts.filter = "eq5-not-implied";
	const VerifyReport r = verify_paper(opts);
	REQUIRE(r.claims.size() == 1);
	CHECK(r.claims[0].info.name == "eq5-not-implied");
	CHECK(r.passed());
	opts.filter = "no-such-claim";
	CHECK_THROWS_AS(verify_paper(opts), Error);
}

TEST_CASE("a mutated fixture fails the run") {
	auto text = FixtureSource(test::fixture_dir()).text("fig8");
	const auto pos = text.find("prime c b");
	REQUIRE(pos != std::string::npos);
	text.replace(pos, 9, "prime c a");
	const VerifyReport r = verify_paper(options({{"fig8", text}}));
	CHECK_FALSE(r.passed());
	CHECK_FALSE(find(r, "fixtures")->passed);
	// claims depending on the broken fixture report the load error instead of passing silently
	CHECK_FALSE(find(r, "eq5-not-implied")->passed);
	CHECK(find(r, "class-chain")->passed);
}

TEST_CASE("an unreadable fixture fails every claim that needs it") {
	const VerifyReport r = verify_paper(options({{"fig1", "not a poset\n"}}));
	CHECK_FALSE(r.passed());
	CHECK_FALSE(find(r, "class-chain")->passed);
	CHECK_FALSE(find(r, "congruence-terms")->passed);
}

TEST_CASE("findings never fail the run") {
	for (const auto& info : claim_catalog()) {
		if (info.finding) {
			CHECK(info.name.rfind("finding-", 0) == 0);
		}
	}
}

}
