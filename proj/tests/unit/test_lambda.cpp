#include <doctest.h>

#include "somlat/assignment.hpp"
#include "somlat/error.hpp"
#include "somlat/lambda_lattice.hpp"
#include "support.hpp"

using namespace somlat;

namespace {

const char* kDiamondPartial = R"(lambda partial
elements 0 a b 1
cover 0 a
cover 0 b
cover a 1
cover b 1
prime 0 1
prime a b
prime b a
prime 1 0
)";

std::string format_error(const std::string& text) {
	try {
		parse_lambda(text);
	} catch (const FormatError& e) {
		return e.what();
	}
	return "";
}

// Diamond 0 < a, b < 1 from its lattice tables.
LambdaLattice diamond() {
	return parse_lambda(kDiamondPartial);
}

} // namespace

TEST_SUITE("lambda") {

TEST_CASE("fixture algebras satisfy the axioms") {
	for (const auto& name : {"fig6", "fig7", "fig8", "two_elem_prime0", "two_elem_prime1"}) {
		const auto report = check_axioms(test::lambda_fixture(name));
		CHECK_MESSAGE(report.axioms_hold(), name);
		CHECK_MESSAGE(report.all_hold(), name);
		CHECK(report.results.size() == 12);
	}
}

TEST_CASE("fig6 listed choices") {
	const LambdaLattice l = test::lambda_fixture("fig6");
	CHECK(l.size() == 8);
	CHECK(l.name(l.join(l.at("a"), l.at("b"))) == "1");
	CHECK(l.name(l.join(l.at("b"), l.at("c"))) == "f");
	CHECK(l.name(l.meet(l.at("e"), l.at("f"))) == "c");
	CHECK(l.name(l.join(l.at("a"), l.at("c"))) == "c");
	const Poset p = induced_poset(l);
	CHECK(p.sup(p.at("a"), p.at("b")) == p.at("f"));
	CHECK_FALSE(is_assigned_to(l, p));
}

TEST_CASE("a non-commutative join fails at the first asymmetric pair") {
	const LambdaLattice d = diamond();
	std::vector<Element> join = d.join_table();
	join[d.at("a") * d.size() + d.at("b")] = d.at("a");
	const LambdaLattice bad(d.names(), join, d.meet_table(), d.prime_map(), d.bottom(), d.top());
	const auto report = check_axioms(bad);
	CHECK_FALSE(report.axioms_hold());
	const AxiomResult* comm = report.find("join_comm");
	REQUIRE(comm);
	CHECK_FALSE(comm->passed);
	CHECK(comm->first_failure == std::vector<Element>{d.at("a"), d.at("b")});
	CHECK(report.find("meet_comm")->passed);
}

TEST_CASE("induced posets") {
	const Poset pentagon = induced_poset(test::lambda_fixture("fig8"));
	CHECK(pentagon.covers().size() == 5);
	CHECK(pentagon.less(pentagon.at("a"), pentagon.at("c")));
	CHECK_FALSE(pentagon.comparable(pentagon.at("b"), pentagon.at("c")));
	CHECK(is_lattice(pentagon));

	const Poset chain = induced_poset(test::lambda_fixture("two_elem_prime0"));
	CHECK(chain.size() == 2);
	CHECK(chain.covers() == std::vector<std::pair<Element, Element>>{{0, 1}});
	CHECK(chain.prime(0) == 0);
	CHECK(chain.prime(1) == 0);
}

TEST_CASE("join and meet orders must agree") {
	const LambdaLattice d = diamond();
	std::vector<Element> meet = d.meet_table();
	// a ⊔ 1 = 1 puts a below 1, but a ⊓ 1 = 0 denies it
	meet[d.at("a") * d.size() + d.top()] = meet[d.top() * d.size() + d.at("a")] = d.bottom();
	const LambdaLattice bad(d.names(), d.join_table(), meet, d.prime_map(), d.bottom(), d.top());
	CHECK_THROWS_AS(induced_poset(bad), StructureError);
}

TEST_CASE("format errors") {
	CHECK(format_error("lambda\nelements 0 1\njoin 0 1 1\nprime 0 1\nprime 1 0\n").find("missing 'meet'") !=
	      std::string::npos);
	// every pair has a sup and an inf here, so nothing needs listing
	const std::string no_sup = "lambda partial\nelements 0 a b c 1\ncover 0 a\ncover 0 b\ncover a c\ncover b c\n"
	                           "cover a 1\ncover b 1\ncover c 1\nprime 0 1\nprime a b\nprime b a\nprime c 0\nprime 1 0\n";
	CHECK(format_error(no_sup).empty());
	const std::string two_tops = "lambda partial\nelements 0 a b c d 1\ncover 0 a\ncover 0 b\ncover a c\ncover b c\n"
	                             "cover a d\ncover b d\ncover c 1\ncover d 1\nprime 0 1\nprime a b\nprime b a\n"
	                             "prime c d\nprime d c\nprime 1 0\n";
	CHECK(format_error(two_tops).find("incomplete table: sup(a, b)") != std::string::npos);
	CHECK(format_error(two_tops + "join a b 1\n").find("incomplete table: inf(c, d)") != std::string::npos);
	CHECK_NOTHROW(parse_lambda(two_tops + "join a b 1\nmeet c d 0\n"));
	const std::string not_upper = std::string(kDiamondPartial) + "join a b a\n";
	CHECK(format_error(not_upper).find("not a common upper bound") != std::string::npos);
	CHECK(format_error(std::string(kDiamondPartial) + "meet a b 1\n").find("not a common lower bound") !=
	      std::string::npos);
	CHECK(format_error("lambda\nelements 0 1\ncover 0 1\n").find("only allowed") != std::string::npos);
	CHECK(format_error("lambda full\nelements 0 1\n").find("header") != std::string::npos);
	CHECK(format_error("lambda\nelements 0 1\njoin 0 1 1\njoin 1 0 1\n").find("second 'join'") != std::string::npos);
	CHECK(format_error("lambda\nprime 0 1\n").find("missing 'elements'") != std::string::npos);
	CHECK(format_error(std::string(kDiamondPartial) + "join a x 1\n").find("unknown element 'x'") !=
	      std::string::npos);
}

TEST_CASE("text round trip") {
	for (const auto& name : {"fig6", "fig7", "fig8", "two_elem_prime0", "two_elem_prime1"}) {
		const LambdaLattice l = test::lambda_fixture(name);
		CHECK(parse_lambda(to_text(l)) == l);
	}
}

TEST_CASE("class membership through the induced poset") {
	const LambdaLattice fig7 = test::lambda_fixture("fig7");
	CHECK(in_class(fig7, PosetClass::orthogonal));
	CHECK_FALSE(in_class(fig7, PosetClass::almost_skew_orthomodular));
	CHECK_FALSE(in_class(test::lambda_fixture("two_elem_prime1"), PosetClass::complemented));
	CHECK_FALSE(in_class(test::lambda_fixture("two_elem_prime0"), PosetClass::complemented));
	CHECK(in_class(test::boolean_two(), PosetClass::skew_orthomodular));
	CHECK(in_class(test::lambda_fixture("fig6"), PosetClass::almost_skew_orthomodular));
}

TEST_CASE("derived laws hold in every assigned algebra of the poset fixtures") {
	for (const auto& name : {"fig2", "fig3", "fig4", "fig5"}) {
		const Poset p = test::poset_fixture(name);
		enumerate_assignments(p, [&](const LambdaLattice& l) {
			const auto report = check_axioms(l);
			CHECK(report.all_hold());
			CHECK(induced_poset(l) == p);
			return true;
		});
	}
}

}
