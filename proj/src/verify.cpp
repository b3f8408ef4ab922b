#include "somlat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "somlat/classes.hpp"
#include "somlat/congruence.hpp"
#include "somlat/error.hpp"
#include "somlat/oracle.hpp"
#include "somlat/search.hpp"
#include "somlat/term.hpp"

namespace somlat {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

const std::vector<std::string> kPosetFixtures{"fig1", "fig2", "fig3", "fig4", "fig5"};
const std::vector<std::string> kLambdaFixtures{"fig6", "fig7", "fig8", "two_elem_prime0", "two_elem_prime1"};

class Context {
public:
	Context(const VerifyOptions& opts) : opts_(opts) {}

	const VerifyOptions& options() const { return opts_; }

	const Structure& get(const std::string& name) {
		auto it = cache_.find(name);
		if (it == cache_.end()) {
			try {
				it = cache_.emplace(name, parse_fixture(fixture_info(name), opts_.source.text(name))).first;
			} catch (const std::exception& ex) {
				it = cache_.emplace(name, std::string(ex.what())).first;
			}
		}
		if (auto* err = std::get_if<std::string>(&it->second)) {
			throw Error(name + ": " + *err);
		}
		return std::get<Structure>(it->second);
	}

	const Poset& poset(const std::string& name) { return std::get<Poset>(get(name)); }
	const LambdaLattice& lambda(const std::string& name) { return std::get<LambdaLattice>(get(name)); }

private:
	const VerifyOptions& opts_;
	std::map<std::string, std::variant<Structure, std::string>> cache_;
};

class Recorder {
public:
	explicit Recorder(ClaimResult& r) : r_(r) {}

	void note(std::string s) { r_.details.push_back(std::move(s)); }

	void fail(std::string s) {
		r_.passed = false;
		if (++failures_ <= kMaxWitnesses) {
			r_.witnesses.push_back(std::move(s));
		}
	}

	void require(bool ok, std::string s) {
		if (!ok) {
			fail(std::move(s));
		}
	}

	void witness(std::string s) { r_.witnesses.push_back(std::move(s)); }

	void finish() {
		if (failures_ > kMaxWitnesses) {
			r_.witnesses.push_back("... " + std::to_string(failures_ - kMaxWitnesses) + " more");
		}
	}

private:
	ClaimResult& r_;
	std::size_t failures_ = 0;
};

std::string tables(const LambdaLattice& l) {
	std::ostringstream out;
	bool first = true;
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = x + 1; y < l.size(); ++y) {
			out << (first ? "" : ", ") << l.name(x) << "|" << l.name(y) << "=" << l.name(l.join(x, y)) << " "
			    << l.name(x) << "&" << l.name(y) << "=" << l.name(l.meet(x, y));
			first = false;
		}
	}
	return out.str();
}

std::string coverage_note(const std::string& fixture, const Coverage& c) {
	return fixture + ": " + std::to_string(c.visited) + " of " + c.total.str() + " assigned members (" +
	       std::string(to_string(c.regime)) + ")";
}

Identity eq(int k) {
	return builtin_identity("eq" + std::to_string(k));
}

std::string valuation_text(const LambdaLattice& l, const Identity& id, const std::vector<Element>& v) {
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i) {
		out += (i ? ", " : "") + id.lhs.variables()[i] + "=" + l.name(v[i]);
	}
	return out;
}

// ---------------------------------------------------------------- claims

void fixtures_claim(Context& ctx, Recorder& rec) {
	for (const auto& info : fixture_catalog()) {
		try {
			const Structure& s = ctx.get(info.name);
			std::size_t passed = 0;
			auto facts = check_pinned_facts(info.name, s);
			for (const auto& f : facts) {
				passed += f.passed;
				rec.require(f.passed, info.name + ": " + f.fact + ": " + f.detail);
			}
			rec.note(info.name + ": " + std::to_string(passed) + "/" + std::to_string(facts.size()) + " pinned facts");
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	}
}

void class_chain_claim(Context& ctx, Recorder& rec) {
	const auto start = std::chrono::steady_clock::now();
	struct Expect {
		std::string fixture;
		PosetClass label;
		std::function<std::optional<std::string>(const Poset&, const ClassReport&)> witness;
	};
	auto kind_of = [](const Witness* w, WitnessKind k) { return w && w->kind == k; };
	const std::vector<Expect> expected{
	    {"fig1", PosetClass::skew_orthomodular, nullptr},
	    {"fig2", PosetClass::almost_skew_orthomodular,
	     [&](const Poset& p, const ClassReport& r) -> std::optional<std::string> {
		     const Witness* w = r.witness_for(PosetClass::skew_orthomodular);
		     const std::vector<Element> ad{p.at("a"), p.at("d")};
		     if (kind_of(w, WitnessKind::orthomodular_violation) && w->subject == ad && w->actual == p.at("a") &&
		         w->expected == p.at("d")) {
			     return std::nullopt;
		     }
		     return w ? w->describe(p) : "no witness";
	     }},
	    {"fig3", PosetClass::orthogonal,
	     [&](const Poset& p, const ClassReport& r) -> std::optional<std::string> {
		     const Witness* w = r.witness_for(PosetClass::almost_skew_orthomodular);
		     if (kind_of(w, WitnessKind::missing_inf) && w->query == std::pair{p.at("f"), p.at("e")}) {
			     return std::nullopt;
		     }
		     return w ? w->describe(p) : "no witness";
	     }},
	    {"fig4", PosetClass::complemented,
	     [&](const Poset& p, const ClassReport& r) -> std::optional<std::string> {
		     const Witness* w = r.witness_for(PosetClass::orthogonal);
		     const std::set<Element> ab{p.at("a"), p.at("b")};
		     if (kind_of(w, WitnessKind::missing_sup) && std::set{w->query.first, w->query.second} == ab) {
			     return std::nullopt;
		     }
		     return w ? w->describe(p) : "no witness";
	     }},
	    {"fig5", PosetClass::none,
	     [&](const Poset& p, const ClassReport& r) -> std::optional<std::string> {
		     const Witness* w = r.witness_for(PosetClass::complemented);
		     const Element c = p.at("c");
		     if (kind_of(w, WitnessKind::wrong_complement_meet) && w->subject == std::vector{c} && w->actual == c) {
			     return std::nullopt;
		     }
		     return w ? w->describe(p) : "no witness";
	     }},
	};
	for (const auto& e : expected) {
		try {
			const Poset& p = ctx.poset(e.fixture);
			const ClassReport r = classify(p);
			std::string line = e.fixture + ": " + std::string(to_string(r.label));
			if (!r.witnesses.empty()) {
				line += "; " + r.witnesses.front().second.describe(p);
			}
			rec.note(line);
			rec.require(r.label == e.label, e.fixture + " classified as " + std::string(to_string(r.label)) +
			                                    ", expected " + std::string(to_string(e.label)));
			if (e.witness) {
				if (auto bad = e.witness(p, r)) {
					rec.fail(e.fixture + " unexpected witness: " + *bad);
				}
			}
			for (const auto& [c, w] : r.witnesses) {
				rec.require(reverify(p, w), e.fixture + " witness does not reverify: " + w.describe(p));
			}
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	}
	const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	rec.require(ms < 1000.0, "classification took " + std::to_string(ms) + " ms");
}

// Runs `per_member` over the assigned algebras of each fixture with the
// coverage policy, recording coverage and exceptions.
void over_members(Context& ctx, Recorder& rec, const std::vector<std::string>& fixtures,
                  const std::function<void(const std::string&, const Poset&, const LambdaLattice&)>& per_member) {
	for (const auto& name : fixtures) {
		try {
			const Poset& p = ctx.poset(name);
			auto cov = visit_assignments(p, ctx.options().policy, [&](const LambdaLattice& l) {
				per_member(name, p, l);
				return true;
			});
			rec.note(coverage_note(name, cov));
		} catch (const std::exception& ex) {
			rec.fail(name + ": " + ex.what());
		}
	}
}

bool holds_all(const LambdaLattice& l, std::initializer_list<int> ks) {
	return std::all_of(ks.begin(), ks.end(), [&](int k) { return holds(eq(k), l).holds; });
}

// Checks "identities hold on L iff the induced poset is in `cls`" for
// members whose induced poset lies in `within`, plus the two anchors: every
// member of `failing` (in within \ cls) fails, every member of `passing` holds.
void characterization(Context& ctx, Recorder& rec, std::initializer_list<int> ks, PosetClass within, PosetClass cls,
                      const std::string& failing, const std::string& passing) {
	std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // members, identities hold
	std::size_t mismatches = 0;
	over_members(ctx, rec, kPosetFixtures, [&](const std::string& name, const Poset&, const LambdaLattice& l) {
		const Poset q = induced_poset(l);
		if (!check_class(q, within)) {
			return;
		}
		const bool ids = holds_all(l, ks);
		const bool in = check_class(q, cls).holds;
		auto& t = tally[name];
		++t.first;
		t.second += ids;
		if (ids != in) {
			++mismatches;
			rec.fail(name + ": identities " + (ids ? "hold" : "fail") + " but induced poset is " +
			         (in ? "" : "not ") + std::string(to_string(cls)) + "; " + tables(l));
		}
	});
	for (const auto& [name, t] : tally) {
		rec.note(name + ": identities hold on " + std::to_string(t.second) + " of " + std::to_string(t.first) +
		         " members" +
		         (within == PosetClass::none ? std::string() : ", poset " + std::string(to_string(within))));
	}
	rec.note(std::to_string(mismatches) + " mismatches");

	auto anchor = [&](const std::string& name, bool want_in) {
		try {
			const Poset& p = ctx.poset(name);
			const bool in_within = check_class(p, within).holds;
			const bool in_cls = check_class(p, cls).holds;
			rec.require(in_within && in_cls == want_in, name + " is not in the expected class");
			auto t = tally[name];
			const bool ok = want_in ? t.second == t.first : t.second == 0;
			rec.require(ok && t.first > 0, name + ": identities hold on " + std::to_string(t.second) + " of " +
			                                   std::to_string(t.first) + " members");
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	};
	anchor(failing, false);
	anchor(passing, true);
}

void complement_claim(Context& ctx, Recorder& rec) {
	characterization(ctx, rec, {1, 2}, PosetClass::none, PosetClass::complemented, "fig5", "fig4");
	// the characterization is stated for fig4 and fig1 in particular
	try {
		rec.require(is_complemented(ctx.poset("fig1")).holds, "fig1 is not complemented");
	} catch (const std::exception& ex) {
		rec.fail(ex.what());
	}
}

void orthogonality_claim(Context& ctx, Recorder& rec) {
	characterization(ctx, rec, {3}, PosetClass::complemented, PosetClass::orthogonal, "fig4", "fig3");
}

void asom_claim(Context& ctx, Recorder& rec) {
	characterization(ctx, rec, {4}, PosetClass::orthogonal, PosetClass::almost_skew_orthomodular, "fig3", "fig2");
}

void som_claim(Context& ctx, Recorder& rec) {
	characterization(ctx, rec, {1, 2, 3, 4, 5}, PosetClass::none, PosetClass::skew_orthomodular, "fig2", "fig1");
	// which identities fail on fig2
	std::map<int, std::size_t> failing;
	std::size_t members = 0;
	over_members(ctx, rec, {"fig2"}, [&](const std::string&, const Poset&, const LambdaLattice& l) {
		++members;
		for (int k = 1; k <= 5; ++k) {
			failing[k] += !holds(eq(k), l).holds;
		}
	});
	std::string line = "fig2 failures by identity:";
	for (auto [k, n] : failing) {
		line += " eq" + std::to_string(k) + "=" + std::to_string(n);
	}
	rec.note(line + " (of " + std::to_string(members) + ")");
}

void independence_claim(Context& ctx, Recorder& rec) {
	struct Case {
		std::string fixture;
		int fails;
		std::vector<std::string> valuation;  // empty: any counterexample
		std::string lhs;
		std::string rhs;
	};
	const std::vector<Case> cases{
	    {"two_elem_prime0", 1, {}, "0", "1"},
	    {"two_elem_prime1", 2, {}, "1", "0"},
	    {"fig6", 3, {"a", "b", "f"}, "f", "1"},
	    {"fig7", 4, {"d", "g", "b"}, "1", "c"},
	};
	for (const auto& c : cases) {
		try {
			const LambdaLattice& l = ctx.lambda(c.fixture);
			rec.require(check_axioms(l).all_hold(), c.fixture + " is not a lambda-lattice");
			for (int k = 1; k <= 4; ++k) {
				auto r = holds(eq(k), l);
				if (k != c.fails) {
					rec.require(r.holds, c.fixture + " fails eq" + std::to_string(k) + ": " +
					                         (r.counterexample ? r.counterexample->describe(l) : ""));
					continue;
				}
				if (r.holds) {
					rec.fail(c.fixture + " satisfies eq" + std::to_string(k));
					continue;
				}
				rec.note(c.fixture + ": first counterexample " + r.counterexample->describe(l));
				const Identity id = eq(k);
				if (c.valuation.empty()) {
					const auto& ce = *r.counterexample;
					rec.require(l.name(ce.lhs) == c.lhs && l.name(ce.rhs) == c.rhs,
					            c.fixture + ": counterexample values " + l.name(ce.lhs) + " vs " + l.name(ce.rhs));
				} else {
					std::vector<Element> env;
					for (const auto& v : c.valuation) {
						env.push_back(l.at(v));
					}
					const Element a = eval(id.lhs, l, env), b = eval(id.rhs, l, env);
					rec.note(c.fixture + ": at " + valuation_text(l, id, env) + " lhs " + l.name(a) + ", rhs " +
					         l.name(b));
					rec.require(l.name(a) == c.lhs && l.name(b) == c.rhs,
					            c.fixture + ": at " + valuation_text(l, id, env) + " lhs " + l.name(a) + ", rhs " +
					                l.name(b));
				}
			}
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	}
}

void eq5_claim(Context& ctx, Recorder& rec) {
	try {
		const LambdaLattice& l = ctx.lambda("fig8");
		rec.require(check_axioms(l).all_hold(), "fig8 is not a lambda-lattice");
		for (int k = 1; k <= 4; ++k) {
			auto r = holds(eq(k), l);
			rec.require(r.holds, "fig8 fails eq" + std::to_string(k));
		}
		auto r = holds(eq(5), l);
		rec.require(!r.holds, "fig8 satisfies eq5");
		if (!r.holds) {
			rec.note("fig8: first counterexample " + r.counterexample->describe(l));
		}
		const Identity id = eq(5);
		const std::vector<Element> env{l.at("a"), l.at("c")};
		const Element a = eval(id.lhs, l, env), b = eval(id.rhs, l, env);
		rec.note("fig8: at x=a, y=c lhs " + l.name(a) + ", rhs " + l.name(b));
		rec.require(l.name(a) == "a" && l.name(b) == "c",
		            "fig8: at x=a, y=c lhs " + l.name(a) + ", rhs " + l.name(b));
	} catch (const std::exception& ex) {
		rec.fail(ex.what());
	}
}

void congruence_claim(Context& ctx, Recorder& rec) {
	std::map<std::size_t, std::size_t> con_sizes;
	const std::vector<Identity> hypotheses{builtin_identity("meet_complement"), builtin_identity("zero_prime"), eq(5)};
	over_members(ctx, rec, {"fig1"}, [&](const std::string&, const Poset&, const LambdaLattice& l) {
		for (const auto& h : hypotheses) {
			auto r = holds(h, l);
			if (!r) {
				rec.fail("hypothesis " + h.name + " fails: " + r.counterexample->describe(l));
				return;
			}
		}
		rec.require(check_malcev(l), "Malcev term fails on " + tables(l));
		rec.require(check_regularity_terms(l), "regularity terms fail on " + tables(l));
		const CongruenceLattice con = all_congruences(l);
		++con_sizes[con.size()];
		if (auto pair = find_nonpermuting_pair(con)) {
			rec.fail("congruences " + format_blocks(con[pair->first], l.names()) + " and " +
			         format_blocks(con[pair->second], l.names()) + " do not permute");
		}
		rec.require(is_regular(con), "congruences not regular on " + tables(l));
		rec.require(is_distributive(con), "congruence lattice not distributive on " + tables(l));
	});
	std::string line = "congruence lattice sizes:";
	for (auto [size, n] : con_sizes) {
		line += " " + std::to_string(size) + " (x" + std::to_string(n) + ")";
	}
	rec.note(line);
}

void oracle_claim(Context& ctx, Recorder& rec) {
	std::vector<std::pair<std::string, const Poset*>> posets;
	std::vector<Poset> induced;
	induced.reserve(kLambdaFixtures.size());
	std::size_t pairs = 0;
	for (const auto& name : kPosetFixtures) {
		try {
			posets.emplace_back(name, &ctx.poset(name));
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	}
	for (const auto& name : kLambdaFixtures) {
		try {
			induced.push_back(induced_poset(ctx.lambda(name)));
			posets.emplace_back(name, &induced.back());
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	}
	for (const auto& [name, p] : posets) {
		for (Element a = 0; a < p->size(); ++a) {
			for (Element b = 0; b < p->size(); ++b) {
				++pairs;
				rec.require(p->sup(a, b) == oracle::sup(*p, a, b), name + ": sup(" + p->name(a) + ", " + p->name(b) + ")");
				rec.require(p->inf(a, b) == oracle::inf(*p, a, b), name + ": inf(" + p->name(a) + ", " + p->name(b) + ")");
			}
		}
	}
	rec.note("sup/inf agree on " + std::to_string(pairs) + " pairs");

	for (const auto& name : kLambdaFixtures) {
		try {
			const LambdaLattice& l = ctx.lambda(name);
			auto brute = oracle::congruences(l);
			std::set<Congruence> expected(brute.begin(), brute.end());
			const CongruenceLattice con = all_congruences(l);
			std::set<Congruence> actual(con.members().begin(), con.members().end());
			rec.require(actual == expected, name + ": Con has " + std::to_string(actual.size()) +
			                                    " members, brute force finds " + std::to_string(expected.size()));
			for (Element a = 0; a < l.size(); ++a) {
				for (Element b = a + 1; b < l.size(); ++b) {
					const Congruence fast = principal_congruence(l, a, b);
					const Congruence slow = oracle::principal(brute, a, b);
					rec.require(fast == slow, name + ": principal(" + l.name(a) + ", " + l.name(b) + ") = " +
					                              format_blocks(fast, l.names()) + ", brute force " +
					                              format_blocks(slow, l.names()));
				}
			}
			for (int k = 1; k <= 5; ++k) {
				rec.require(holds(eq(k), l).holds == oracle::holds(eq(k), l),
				            name + ": eq" + std::to_string(k) + " disagrees with the naive evaluator");
			}
			rec.note(name + ": " + std::to_string(l.size()) + " elements, " + std::to_string(expected.size()) +
			         " congruences");
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
	}
}

void soundness_claim(Context& ctx, Recorder& rec) {
	for (const auto& name : kPosetFixtures) {
		try {
			const Poset& p = ctx.poset(name);
			const ChoiceSpace space = choice_space(p);
			std::set<std::pair<std::vector<Element>, std::vector<Element>>> seen;
			std::size_t bad = 0;
			auto cov = visit_assignments(p, ctx.options().policy, [&](const LambdaLattice& l) {
				seen.emplace(l.join_table(), l.meet_table());
				const bool ok = check_axioms(l).all_hold() && induced_poset(l) == p && is_assigned_to(l, p);
				bad += !ok;
				rec.require(ok, name + ": member fails the axioms or does not induce the poset: " + tables(l));
				return true;
			});
			rec.note(coverage_note(name, cov) + ", " + std::to_string(bad) + " unsound");
			rec.require(space.count == oracle::assignment_count(p),
			            name + ": choice space counts " + space.count.str() + ", brute force " +
			                oracle::assignment_count(p).str());
			if (cov.regime == Regime::exhaustive) {
				rec.require(cov.visited == space.count && seen.size() == cov.visited,
				            name + ": visited " + std::to_string(cov.visited) + " (" + std::to_string(seen.size()) +
				                " distinct) of " + space.count.str());
			}
		} catch (const std::exception& ex) {
			rec.fail(name + ": " + ex.what());
		}
	}
}

// ---------------------------------------------------------------- findings

void fig5_finding(Context& ctx, Recorder& rec) {
	std::size_t members = 0, satisfied = 0;
	over_members(ctx, rec, {"fig5"}, [&](const std::string&, const Poset&, const LambdaLattice& l) {
		++members;
		satisfied += holds(eq(4), l).holds;
	});
	std::string reading = satisfied == members ? "every member" : satisfied == 0 ? "no member" : "some members only";
	rec.note("eq4 holds on " + std::to_string(satisfied) + " of " + std::to_string(members) + " members: " + reading);
	try {
		rec.note("fig5 class: " + std::string(to_string(classify(ctx.poset("fig5")).label)));
	} catch (const std::exception& ex) {
		rec.fail(ex.what());
	}
}

void gap_finding(Context& ctx, Recorder& rec) {
	for (bool assigned : {false, true}) {
		const std::string scope = assigned ? "assigned lambda-lattices" : "lambda-lattices";
		const auto search = find_complement_gap(ctx.options().gap_search_size, assigned);
		rec.note(scope + ": none with at most " + std::to_string(search.clear_up_to) + " elements (" +
		         std::to_string(search.examined) + " examined)");
		if (!search.witness) {
			continue;
		}
		const LambdaLattice& l = *search.witness;
		const Poset p = induced_poset(l);
		const Poset q(p.names(), p.relation(), l.prime_map(), p.bottom(), p.top());
		rec.require(check_axioms(l).all_hold(), "example is not a lambda-lattice");
		rec.require(holds(builtin_identity("join_complement"), l).holds &&
		                holds(builtin_identity("meet_complement"), l).holds,
		            "example violates the complement identities");
		rec.require(!assigned || is_assigned_to(l, q), "example is not assigned to its poset");
		auto c = is_complemented(q);
		rec.require(!c.holds, "example induces a complemented poset");
		std::string covers, prime;
		for (auto [x, y] : q.covers()) {
			covers += (covers.empty() ? "" : ", ") + q.name(x) + "<" + q.name(y);
		}
		for (Element x = 0; x < l.size(); ++x) {
			prime += (x ? " " : "") + l.name(x) + "'=" + l.name(l.prime(x));
		}
		rec.witness(scope + ", " + std::to_string(l.size()) + " elements; covers " + covers);
		rec.witness("  prime: " + prime);
		rec.witness("  operations: " + tables(l));
		if (c.witness) {
			rec.witness("  induced poset: " + c.witness->describe(q));
		}
	}
}

void fig6_finding(Context& ctx, Recorder& rec) {
	try {
		const LambdaLattice& l = ctx.lambda("fig6");
		const Poset p = induced_poset(l);
		rec.note(std::string("assigned to its induced poset: ") + (is_assigned_to(l, p) ? "yes" : "no"));
		for (Element x = 0; x < l.size(); ++x) {
			for (Element y = x + 1; y < l.size(); ++y) {
				if (auto s = p.sup(x, y); s && *s != l.join(x, y)) {
					rec.witness(l.name(x) + "|" + l.name(y) + " = " + l.name(l.join(x, y)) + " but sup = " + p.name(*s));
				}
				if (auto i = p.inf(x, y); i && *i != l.meet(x, y)) {
					rec.witness(l.name(x) + "&" + l.name(y) + " = " + l.name(l.meet(x, y)) + " but inf = " + p.name(*i));
				}
			}
		}
		rec.note("induced poset class: " + std::string(to_string(classify(p).label)));
	} catch (const std::exception& ex) {
		rec.fail(ex.what());
	}
}

struct Claim {
	ClaimInfo info;
	std::function<void(Context&, Recorder&)> run;
};

const std::vector<Claim>& claims() {
	static const std::vector<Claim> table{
	    {{"fixtures", "every fixture loads and its pinned facts hold", false}, fixtures_claim},
	    {{"class-chain", "fig1..fig5 separate the four poset classes", false}, class_chain_claim},
	    {{"complement-identities", "eq1 and eq2 hold on an assigned algebra iff the poset is complemented", false},
	     complement_claim},
	    {{"orthogonality-identity", "for complemented posets, eq3 holds iff the poset is orthogonal", false},
	     orthogonality_claim},
	    {{"asom-identity", "for orthogonal posets, eq4 holds iff the poset is almost skew-orthomodular", false},
	     asom_claim},
	    {{"som-identities", "eq1..eq5 hold iff the poset is skew-orthomodular", false}, som_claim},
	    {{"independence", "eq1..eq4 are independent", false}, independence_claim},
	    {{"eq5-not-implied", "eq1..eq4 do not imply eq5", false}, eq5_claim},
	    {{"congruence-terms", "assigned algebras of fig1 are congruence permutable, regular and distributive", false},
	     congruence_claim},
	    {{"oracle-agreement", "fast routines agree with brute-force oracles", false}, oracle_claim},
	    {{"assignment-soundness", "every assigned algebra is a lambda-lattice inducing its poset", false},
	     soundness_claim},
	    {{"finding-fig5-eq4", "how many assigned algebras of fig5 satisfy eq4", true}, fig5_finding},
	    {{"finding-complement-gap", "smallest lambda-lattice satisfying the complement identities whose poset is not complemented", true},
	     gap_finding},
	    {{"finding-fig6-order", "whether fig6 is assigned to its induced poset", true}, fig6_finding},
	};
	return table;
}

} // namespace

const std::vector<ClaimInfo>& claim_catalog() {
	static const std::vector<ClaimInfo> infos = [] {
		std::vector<ClaimInfo> out;
		for (const auto& c : claims()) {
			out.push_back(c.info);
		}
		return out;
	}();
	return infos;
}

bool VerifyReport::passed() const {
	return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed || c.info.finding; });
}

VerifyReport verify_paper(const VerifyOptions& opts) {
	if (opts.filter) {
		const auto& cat = claims();
		if (std::none_of(cat.begin(), cat.end(), [&](const Claim& c) { return c.info.name == *opts.filter; })) {
			throw Error("unknown claim '" + *opts.filter + "'");
		}
	}
	Context ctx(opts);
	VerifyReport report;
	const auto start = std::chrono::steady_clock::now();
	for (const auto& c : claims()) {
		if (opts.filter && c.info.name != *opts.filter) {
			continue;
		}
		ClaimResult r;
		r.info = c.info;
		Recorder rec(r);
		const auto t0 = std::chrono::steady_clock::now();
		try {
			c.run(ctx, rec);
		} catch (const std::exception& ex) {
			rec.fail(ex.what());
		}
		rec.finish();
		r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		report.claims.push_back(std::move(r));
	}
	report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	return report;
}

} // namespace somlat
