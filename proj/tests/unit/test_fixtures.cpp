#include <doctest.h>

#include <fstream>
#include <sstream>

#include "somlat/error.hpp"
#include "somlat/fixtures.hpp"
#include "support.hpp"

using namespace somlat;

namespace {

std::string raw(const std::string& name) {
	return FixtureSource(test::fixture_dir()).text(name);
}

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
	const auto pos = text.find(from);
	REQUIRE(pos != std::string::npos);
	return text.replace(pos, from.size(), to);
}

std::vector<FactResult> facts_of(const std::string& name, const std::string& text) {
	return check_pinned_facts(name, parse_fixture(fixture_info(name), text));
}

bool all_pass(const std::vector<FactResult>& facts) {
	return std::all_of(facts.begin(), facts.end(), [](const FactResult& f) { return f.passed; });
}

} // namespace

TEST_SUITE("fixtures") {

TEST_CASE("catalog") {
	const auto& cat = fixture_catalog();
	REQUIRE(cat.size() == 10);
	std::size_t posets = 0;
	for (const auto& f : cat) {
		posets += f.kind == FixtureKind::poset;
		CHECK(std::filesystem::exists(test::fixture_dir() / f.file));
		CHECK_FALSE(f.summary.empty());
	}
	CHECK(posets == 5);
	CHECK(cat.front().name == "fig1");
	CHECK(fixture_info("fig7").kind == FixtureKind::lambda);
	CHECK_THROWS_AS(fixture_info("fig9"), FixtureError);
	CHECK_THROWS_AS(load_poset_fixture("fig6", test::fixture_dir()), FixtureError);
	CHECK_THROWS_AS(load_lambda_fixture("fig1", test::fixture_dir()), FixtureError);
	CHECK_THROWS_AS(load_fixture("fig1", test::fixture_dir() / "missing"), Error);
}

TEST_CASE("every pinned fact holds on the shipped files") {
	for (const auto& f : fixture_catalog()) {
		const auto facts = check_pinned_facts(f.name, read_fixture(f.name, test::fixture_dir()));
		CHECK(facts.size() >= 2);
		for (const auto& r : facts) {
			CHECK_MESSAGE(r.passed, r.fixture << " " << r.fact << ": " << r.detail);
		}
	}
}

TEST_CASE("fig7 is a nine-element lambda-lattice") {
	const LambdaLattice l = test::lambda_fixture("fig7");
	CHECK(l.size() == 9);
	CHECK(check_axioms(l).axioms_hold());
}

TEST_CASE("a changed prime is caught by the prime table") {
	const std::string mutated = replace_line(raw("fig2"), "prime a c", "prime a d");
	const auto facts = facts_of("fig2", mutated);
	CHECK_FALSE(all_pass(facts));
	CHECK_FALSE(std::find_if(facts.begin(), facts.end(), [](const FactResult& f) {
		return !f.passed && f.fact.find("prime") != std::string::npos;
	}) == facts.end());
}

TEST_CASE("a changed order is caught by a class fact") {
	// dropping the cover under the witness pair
	const std::string mutated = replace_line(raw("fig2"), "cover a d", "cover a e");
	CHECK_FALSE(all_pass(facts_of("fig2", mutated)));
}

TEST_CASE("a changed table entry is caught") {
	const std::string mutated = replace_line(raw("fig8"), "join a b 1", "join a b c");
	bool caught = false;
	try {
		caught = !all_pass(facts_of("fig8", mutated));
	} catch (const FormatError&) {
		caught = true;
	}
	CHECK(caught);
	const std::string fig6 = replace_line(raw("fig6"), "join a b 1", "join a b f");
	CHECK_FALSE(all_pass(facts_of("fig6", fig6)));
}

TEST_CASE("an incomplete partial table is a format error") {
	// b and c have the two minimal upper bounds e and g
	const std::string mutated = replace_line(raw("fig7"), "join b c 1\n", "");
	CHECK_THROWS_AS(parse_fixture(fixture_info("fig7"), mutated), FormatError);
}

TEST_CASE("load_fixture names the failing fact") {
	const auto dir = std::filesystem::temp_directory_path() / "somlat-fixture-test";
	std::filesystem::create_directories(dir);
	for (const auto& f : fixture_catalog()) {
		std::filesystem::copy_file(test::fixture_dir() / f.file, dir / f.file,
		                           std::filesystem::copy_options::overwrite_existing);
	}
	std::ofstream(dir / "fig3.poset") << replace_line(raw("fig3"), "prime b d", "prime b a");
	try {
		load_fixture("fig3", dir);
		FAIL("mutated fixture accepted");
	} catch (const FixtureError& e) {
		CHECK(std::string(e.what()).find("fig3: pinned fact") == 0);
	}
	CHECK_NOTHROW(load_fixture("fig4", dir));
	std::filesystem::remove_all(dir);
}

TEST_CASE("overrides replace file contents") {
	const FixtureSource src(test::fixture_dir(), {{"fig1", "poset\n"}});
	CHECK(src.text("fig1") == "poset\n");
	CHECK(src.text("fig2") == raw("fig2"));
	CHECK_THROWS_AS(src.text("nope"), FixtureError);
}

}
