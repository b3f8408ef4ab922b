#include <doctest.h>

#include <random>
#include <set>

#include "somlat/error.hpp"
#include "somlat/oracle.hpp"
#include "somlat/poset.hpp"
#include "support.hpp"

using namespace somlat;

namespace {

const char* kChain = R"(poset
elements 0 1
cover 0 1
prime 0 1
prime 1 0
)";

std::size_t error_line(const std::string& text) {
	try {
		parse_poset(text);
	} catch (const FormatError& e) {
		return e.line();
	}
	FAIL("expected a FormatError");
	return 0;
}

std::string error_text(const std::string& text) {
	try {
		parse_poset(text);
	} catch (const FormatError& e) {
		return e.what();
	}
	return "";
}

} // namespace

TEST_SUITE("poset") {

TEST_CASE("fig2 parses with its prime table") {
	const Poset p = test::poset_fixture("fig2");
	CHECK(p.size() == 8);
	CHECK(p.leq(p.at("a"), p.at("d")));
	CHECK(p.leq(p.at("a"), p.at("e")));
	const std::vector<std::string> primes{"1", "c", "c", "d", "f", "f", "a", "0"};
	for (Element x = 0; x < p.size(); ++x) {
		CHECK(p.name(p.prime(x)) == primes[x]);
	}
	CHECK(p.name(p.bottom()) == "0");
	CHECK(p.name(p.top()) == "1");
}

TEST_CASE("two-element chain") {
	const Poset p = parse_poset(kChain);
	CHECK(p.size() == 2);
	CHECK(p.less(p.bottom(), p.top()));
	CHECK(p.is_antitone());
	CHECK(p.is_involution());
	CHECK(p.covers() == std::vector<std::pair<Element, Element>>{{0, 1}});
}

TEST_CASE("sections may come in any order and comments are ignored") {
	const Poset p = parse_poset("# leading comment\nposet\nprime 1 0 # trailing\nprime 0 1\ncover 0 1\nelements 0 1\n");
	CHECK(p == parse_poset(kChain));
}

TEST_CASE("malformed files") {
	CHECK(error_text("poset\nelements 0 a b 1\ncover 0 a\ncover a b\ncover b a\ncover b 1\n"
	                 "prime 0 1\nprime a a\nprime b b\nprime 1 0\n")
	          .find("cycle") != std::string::npos);
	CHECK(error_text("poset\nelements 0 a 1\ncover 0 a\ncover a a\ncover a 1\nprime 0 1\nprime a a\nprime 1 0\n")
	          .find("cycle") != std::string::npos);
	CHECK(error_line("poset\nelements 0 a a 1\n") == 2);
	CHECK(error_text("poset\nelements 0 a 1\ncover 0 a\ncover a 1\nprime 0 1\nprime 1 0\n").find("not total") !=
	      std::string::npos);
	CHECK(error_line("poset\nelements 0 a 1\ncover 0 a\ncover a 1\nprime 0 1\nprime a a\nprime a 1\nprime 1 0\n") == 7);
	CHECK(error_text("poset\nelements a 1\ncover a 1\nprime a 1\nprime 1 a\n").find("'0'") != std::string::npos);
	CHECK(error_text("poset\nelements 0 a 1\ncover 0 1\nprime 0 1\nprime a a\nprime 1 0\n").find("not the bottom") !=
	      std::string::npos);
	CHECK(error_line("poset\nelements 0 1\ncover 0 z\n") == 3);
	CHECK(error_line("poset\nelements 0 1\ncover 0 1\nprime 0 q\n") == 4);
	CHECK(error_line("poset\nelements 0 1\nedge 0 1\n") == 3);
	CHECK(error_line("poset\nelements 0 1\ncover 0\n") == 3);
	CHECK_THROWS_AS(parse_poset("lambda\nelements 0 1\n"), FormatError);
	CHECK_THROWS_AS(parse_poset(""), FormatError);
}

TEST_CASE("bound sets") {
	const Poset fig2 = test::poset_fixture("fig2");
	CHECK(fig2.lower_bounds(fig2.at("c"), fig2.at("d")).elements() == std::vector<Element>{fig2.at("0")});

	const Poset fig3 = test::poset_fixture("fig3");
	const Element f = fig3.at("f"), e = fig3.at("e");
	const BoundSet u = fig3.upper_bounds(f, e);
	CHECK(u.kind == BoundKind::upper);
	for (Element x = 0; x < fig3.size(); ++x) {
		CHECK(u.contains(x) == (fig3.relation()[f][x] && fig3.relation()[e][x]));
	}
	for (Element x = 0; x < fig3.size(); ++x) {
		const BoundSet down = fig3.lower_bounds(x, x);
		CHECK(down.contains(x));
		for (Element y = 0; y < fig3.size(); ++y) {
			CHECK(down.contains(y) == fig3.leq(y, x));
		}
	}
}

TEST_CASE("sup and inf on the fixtures") {
	const Poset fig3 = test::poset_fixture("fig3");
	CHECK_FALSE(fig3.inf(fig3.at("f"), fig3.at("e")));
	const Poset fig4 = test::poset_fixture("fig4");
	CHECK_FALSE(fig4.sup(fig4.at("a"), fig4.at("b")));
	for (const auto& name : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
		const Poset p = test::poset_fixture(name);
		for (Element a = 0; a < p.size(); ++a) {
			for (Element b = 0; b < p.size(); ++b) {
				CHECK(p.sup(a, b) == oracle::sup(p, a, b));
				CHECK(p.inf(a, b) == oracle::inf(p, a, b));
				if (p.leq(a, b)) {
					CHECK(p.sup(a, b) == b);
					CHECK(p.inf(a, b) == a);
				}
			}
		}
	}
}

TEST_CASE("antitone and involution diagnostics") {
	const Poset fig1 = test::poset_fixture("fig1");
	CHECK(fig1.is_antitone());
	CHECK_FALSE(fig1.is_involution());
	const Poset fig2 = test::poset_fixture("fig2");
	CHECK_FALSE(fig2.is_antitone());
	CHECK_FALSE(fig2.is_involution());
}

TEST_CASE("dot export") {
	const Poset chain = parse_poset(kChain);
	const std::string dot = to_dot(chain);
	CHECK(dot.find("digraph") != std::string::npos);
	CHECK(dot.find("rankdir=BT") != std::string::npos);
	CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
	CHECK(dot.find("0 / 0'=1") != std::string::npos);

	auto edges = [](const std::string& d) {
		std::size_t count = 0;
		for (std::size_t pos = d.find("->"); pos != std::string::npos; pos = d.find("->", pos + 2)) {
			++count;
		}
		return count;
	};
	const Poset fig2 = test::poset_fixture("fig2");
	const auto reduction = oracle::transitive_reduction(fig2);
	CHECK(edges(to_dot(fig2)) == reduction.size());
	CHECK(reduction.size() == 11);
	const auto covers = fig2.covers();
	CHECK(std::set(reduction.begin(), reduction.end()) == std::set(covers.begin(), covers.end()));

	const Poset fig7 = induced_poset(test::lambda_fixture("fig7"));
	const std::string d7 = to_dot(fig7);
	std::size_t nodes = 0;
	for (std::size_t pos = d7.find("label="); pos != std::string::npos; pos = d7.find("label=", pos + 1)) {
		++nodes;
	}
	CHECK(nodes == 9);
}

TEST_CASE("text round trip") {
	for (const auto& name : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
		const Poset p = test::poset_fixture(name);
		CHECK(parse_poset(to_text(p)) == p);
	}
}

TEST_CASE("constructor validation") {
	Relation r = make_relation(2);
	r[0].set(0);
	r[1].set(1);
	CHECK_THROWS_AS(Poset({"0", "1"}, r, {1, 0}, 0, 1), StructureError);
	r[0].set(1);
	CHECK_THROWS_AS(Poset({"0", "1"}, r, {1, 2}, 0, 1), StructureError);
	CHECK_THROWS_AS(Poset({"0", "1"}, r, {1, 0}, 1, 0), StructureError);
	CHECK_NOTHROW(Poset({"0", "1"}, r, {1, 0}, 0, 1));
}

TEST_CASE("invariants on random posets") {
	std::mt19937_64 rng(7);
	for (int round = 0; round < 200; ++round) {
		const Poset p = test::random_poset(rng, 1 + round % 8, (round % 5 + 1) / 6.0);
		const std::size_t n = p.size();

		Relation cover = make_relation(n);
		for (auto [x, y] : p.covers()) {
			cover[x].set(y);
		}
		CHECK(reflexive_transitive_closure(cover) == p.relation());
		CHECK(p.covers().size() == oracle::transitive_reduction(p).size());

		for (Element a = 0; a < n; ++a) {
			CHECK(p.sup(a, p.bottom()) == a);
			CHECK(p.inf(a, p.top()) == a);
			CHECK(p.sup(a, p.top()) == p.top());
			CHECK(p.inf(a, p.bottom()) == p.bottom());
			for (Element b = 0; b < n; ++b) {
				const auto s = p.sup(a, b);
				const auto i = p.inf(a, b);
				CHECK(s == p.sup(b, a));
				CHECK(i == p.inf(b, a));
				CHECK(s == oracle::sup(p, a, b));
				CHECK(i == oracle::inf(p, a, b));
				const BoundSet u = p.upper_bounds(a, b);
				const BoundSet l = p.lower_bounds(a, b);
				CHECK(u.contains(p.top()));
				CHECK(l.contains(p.bottom()));
				if (s) {
					CHECK(u.contains(*s));
					for (Element x : u.elements()) {
						CHECK(p.leq(*s, x));
					}
				}
				if (i) {
					CHECK(l.contains(*i));
					for (Element x : l.elements()) {
						CHECK(p.leq(x, *i));
					}
				}
			}
		}
		CHECK(parse_poset(to_text(p)) == p);
	}
}

}
