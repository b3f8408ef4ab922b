#include "somlat/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "somlat/classes.hpp"
#include "somlat/error.hpp"
#include "somlat/term.hpp"

#ifndef SOMLAT_FIXTURE_DIR
#define SOMLAT_FIXTURE_DIR "fixtures"
#endif

namespace somlat {

namespace {

// A fact returns nothing when it holds, otherwise what was observed.
using Fact = std::function<std::optional<std::string>(const Structure&)>;

struct PinnedFact {
	std::string name;
	Fact check;
};

std::vector<std::string> split(std::string_view s) {
	std::istringstream in{std::string(s)};
	std::vector<std::string> out;
	for (std::string w; in >> w;) {
		out.push_back(w);
	}
	return out;
}

template <class S>
std::string names_of(const S& s, const std::vector<Element>& xs) {
	std::string out;
	for (Element x : xs) {
		out += (out.empty() ? "" : " ") + s.name(x);
	}
	return out;
}

// Prime values listed in carrier order, as printed next to each figure.
PinnedFact prime_row(std::string row) {
	return {"prime-table", [row](const Structure& s) -> std::optional<std::string> {
		        return std::visit(
		            [&](const auto& x) -> std::optional<std::string> {
			            std::vector<Element> expected;
			            for (const auto& w : split(row)) {
				            auto e = x.find(w);
				            if (!e) {
					            return "unknown element " + w;
				            }
				            expected.push_back(*e);
			            }
			            if (expected != x.prime_map()) {
				            return "prime row is '" + names_of(x, x.prime_map()) + "', expected '" + row + "'";
			            }
			            return std::nullopt;
		            },
		            s);
	        }};
}

const Poset& as_poset(const Structure& s) { return std::get<Poset>(s); }
const LambdaLattice& as_lambda(const Structure& s) { return std::get<LambdaLattice>(s); }

std::optional<std::string> expect(bool ok, std::string what) {
	return ok ? std::nullopt : std::optional<std::string>(std::move(what));
}

std::string show(const Poset& p, std::optional<Element> e) {
	return e ? p.name(*e) : std::string("none");
}

PinnedFact poset_class(PosetClass c) {
	return {"class", [c](const Structure& s) {
		        auto r = classify(as_poset(s));
		        return expect(r.label == c, "classified as " + std::string(to_string(r.label)));
	        }};
}

PinnedFact poset_flag(std::string name, std::function<bool(const Poset&)> f, bool want) {
	return {name, [f, want](const Structure& s) { return expect(f(as_poset(s)) == want, want ? "false" : "true"); }};
}

PinnedFact axioms_hold() {
	return {"axioms", [](const Structure& s) {
		        auto r = check_axioms(as_lambda(s));
		        for (const auto& a : r.results) {
			        if (!a.passed) {
				        return expect(false, a.name + " fails");
			        }
		        }
		        return expect(true, "");
	        }};
}

// Evaluates both sides of a built-in identity at a named valuation.
PinnedFact identity_values(std::string name, std::string identity, std::string valuation, std::string lhs,
                           std::string rhs) {
	return {name, [=](const Structure& s) -> std::optional<std::string> {
		        const auto& l = as_lambda(s);
		        const Identity id = builtin_identity(identity);
		        std::vector<Element> env;
		        for (const auto& w : split(valuation)) {
			        auto e = l.find(w);
			        if (!e) {
				        return "unknown element " + w;
			        }
			        env.push_back(*e);
		        }
		        const Element a = eval(id.lhs, l, env);
		        const Element b = eval(id.rhs, l, env);
		        if (l.name(a) != lhs || l.name(b) != rhs) {
			        return "lhs " + l.name(a) + ", rhs " + l.name(b);
		        }
		        return std::nullopt;
	        }};
}

struct Entry {
	FixtureInfo info;
	std::vector<PinnedFact> facts;
};

const std::vector<Entry>& entries() {
	static const std::vector<Entry> table = [] {
		std::vector<Entry> t;
		t.push_back({{"fig1", FixtureKind::poset, "fig1.poset", "skew-orthomodular poset that is not a lattice"},
		             {prime_row("1 j j j i i h f f e c 0"), poset_class(PosetClass::skew_orthomodular),
		              poset_flag("not-lattice", is_lattice, false),
		              poset_flag("antitone", [](const Poset& p) { return p.is_antitone(); }, true),
		              poset_flag("not-involution", [](const Poset& p) { return p.is_involution(); }, false)}});
		t.push_back({{"fig2", FixtureKind::poset, "fig2.poset", "almost skew-orthomodular, not skew-orthomodular"},
		             {prime_row("1 c c d f f a 0"), poset_class(PosetClass::almost_skew_orthomodular),
		              {"orthomodular-witness", [](const Structure& s) {
			               // a <= d but a | (a' & d) = a
			               const auto& p = as_poset(s);
			               const Element a = p.at("a"), d = p.at("d");
			               auto m = p.inf(p.prime(a), d);
			               auto v = m ? p.sup(a, *m) : std::nullopt;
			               return expect(p.leq(a, d) && v == a, "a | (a' & d) = " + show(p, v));
		               }}}});
		t.push_back({{"fig3", FixtureKind::poset, "fig3.poset", "orthogonal, not almost skew-orthomodular"},
		             {prime_row("1 f d d a d d 0"), poset_class(PosetClass::orthogonal),
		              {"missing-inf-f-e", [](const Structure& s) {
			               const auto& p = as_poset(s);
			               const Element a = p.at("a"), e = p.at("e"), f = p.at("f");
			               return expect(p.leq(a, e) && p.prime(a) == f && !p.inf(f, e),
			                             "inf(f, e) = " + show(p, p.inf(f, e)));
		               }}}});
		t.push_back({{"fig4", FixtureKind::poset, "fig4.poset", "complemented, not orthogonal"},
		             {prime_row("1 c d a c c c 0"), poset_class(PosetClass::complemented),
		              {"missing-sup-a-b", [](const Structure& s) {
			               const auto& p = as_poset(s);
			               const Element a = p.at("a"), b = p.at("b");
			               return expect(p.leq(a, p.prime(b)) && !p.sup(a, b), "sup(a, b) = " + show(p, p.sup(a, b)));
		               }}}});
		t.push_back({{"fig5", FixtureKind::poset, "fig5.poset", "not complemented"},
		             {prime_row("1 g g 1 1 g g 1 g"), poset_class(PosetClass::none),
		              {"c-meet-prime", [](const Structure& s) {
			               const auto& p = as_poset(s);
			               const Element c = p.at("c");
			               auto m = p.inf(c, p.prime(c));
			               return expect(m == c, "c & c' = " + show(p, m));
		               }}}});
		t.push_back({{"fig6", FixtureKind::lambda, "fig6.lambda", "satisfies eq1, eq2, eq4 but not eq3"},
		             {prime_row("1 d e d a b d 0"), axioms_hold(), identity_values("eq3-values", "eq3", "a b f", "f", "1")}});
		t.push_back({{"fig7", FixtureKind::lambda, "fig7.lambda", "satisfies eq1, eq2, eq3 but not eq4"},
		             {prime_row("1 g f f e d b a 0"), axioms_hold(), identity_values("eq4-values", "eq4", "d g b", "1", "c")}});
		t.push_back({{"fig8", FixtureKind::lambda, "fig8.lambda", "satisfies eq1..eq4 but not eq5"},
		             {prime_row("1 b a b 0"), axioms_hold(), identity_values("eq5-values", "eq5", "a c", "a", "c")}});
		t.push_back({{"two_elem_prime0", FixtureKind::lambda, "two_elem_prime0.lambda", "fails eq1 only"},
		             {prime_row("0 0"), axioms_hold(), identity_values("eq1-values", "eq1", "0 0", "0", "1")}});
		t.push_back({{"two_elem_prime1", FixtureKind::lambda, "two_elem_prime1.lambda", "fails eq2 only"},
		             {prime_row("1 1"), axioms_hold(), identity_values("eq2-values", "eq2", "1 1", "1", "0")}});
		return t;
	}();
	return table;
}

const Entry& entry(std::string_view name) {
	for (const auto& e : entries()) {
		if (e.info.name == name) {
			return e;
		}
	}
	throw FixtureError("unknown fixture '" + std::string(name) + "'");
}

std::string read_file(const std::filesystem::path& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw Error("cannot read " + path.string());
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

} // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
	static const std::vector<FixtureInfo> infos = [] {
		std::vector<FixtureInfo> out;
		for (const auto& e : entries()) {
			out.push_back(e.info);
		}
		return out;
	}();
	return infos;
}

const FixtureInfo& fixture_info(std::string_view name) {
	return entry(name).info;
}

std::filesystem::path default_fixture_dir() {
	if (const char* env = std::getenv("SOMLAT_FIXTURES"); env && *env) {
		return env;
	}
	return SOMLAT_FIXTURE_DIR;
}

FixtureSource::FixtureSource(std::filesystem::path dir, std::map<std::string, std::string> overrides)
	: dir_(std::move(dir)), overrides_(std::move(overrides)) {}

std::string FixtureSource::text(std::string_view name) const {
	if (auto it = overrides_.find(std::string(name)); it != overrides_.end()) {
		return it->second;
	}
	return read_file(dir_ / fixture_info(name).file);
}

Structure parse_fixture(const FixtureInfo& info, std::string_view text) {
	if (info.kind == FixtureKind::poset) {
		return parse_poset(text);
	}
	return parse_lambda(text);
}

Structure read_fixture(std::string_view name, const std::filesystem::path& dir) {
	return parse_fixture(fixture_info(name), FixtureSource(dir).text(name));
}

std::vector<FactResult> check_pinned_facts(std::string_view name, const Structure& s) {
	const Entry& e = entry(name);
	std::vector<FactResult> out;
	for (const auto& f : e.facts) {
		FactResult r{e.info.name, f.name, true, ""};
		try {
			if (auto observed = f.check(s)) {
				r.passed = false;
				r.detail = *observed;
			}
		} catch (const std::exception& ex) {
			r.passed = false;
			r.detail = ex.what();
		}
		out.push_back(std::move(r));
	}
	return out;
}

Structure load_fixture(std::string_view name, const std::filesystem::path& dir) {
	Structure s = read_fixture(name, dir);
	for (const auto& r : check_pinned_facts(name, s)) {
		if (!r.passed) {
			throw FixtureError(r.fixture + ": pinned fact " + r.fact + " fails: " + r.detail);
		}
	}
	return s;
}

Poset load_poset_fixture(std::string_view name, const std::filesystem::path& dir) {
	if (fixture_info(name).kind != FixtureKind::poset) {
		throw FixtureError(std::string(name) + " is not a poset fixture");
	}
	return std::get<Poset>(load_fixture(name, dir));
}

LambdaLattice load_lambda_fixture(std::string_view name, const std::filesystem::path& dir) {
	if (fixture_info(name).kind != FixtureKind::lambda) {
		throw FixtureError(std::string(name) + " is not a lambda-lattice fixture");
	}
	return std::get<LambdaLattice>(load_fixture(name, dir));
}

} // namespace somlat
