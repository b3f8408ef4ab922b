#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "somlat/assignment.hpp"
#include "somlat/classes.hpp"
#include "somlat/congruence.hpp"
#include "somlat/error.hpp"
#include "somlat/fixtures.hpp"
#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"
#include "somlat/term.hpp"
#include "somlat/verify.hpp"

namespace somlat::cli {

namespace {

using json = nlohmann::ordered_json;

class Output {
public:
	Output(std::ostream& out, bool structured) : out_(out), structured_(structured) {}

	bool structured() const { return structured_; }
	std::ostream& text() { return out_; }
	void record(const json& j) { out_ << j.dump() << '\n'; }

private:
	std::ostream& out_;
	bool structured_;
};

std::string read_text(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw Error("cannot read " + path);
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

// Either kind of input file, told apart by its header line.
struct Input {
	std::optional<Poset> poset;
	std::optional<LambdaLattice> lambda;
};

Input load(const std::string& path) {
	const std::string text = read_text(path);
	std::istringstream lines(text);
	for (std::string line; std::getline(lines, line);) {
		std::istringstream words(line.substr(0, line.find('#')));
		std::string head;
		if (!(words >> head)) {
			continue;
		}
		if (head == "poset") {
			return {parse_poset(text), std::nullopt};
		}
		if (head == "lambda") {
			return {std::nullopt, parse_lambda(text)};
		}
		break;
	}
	throw FormatError(0, path + ": expected a 'poset' or 'lambda' header");
}

Poset require_poset(const std::string& path) {
	auto in = load(path);
	if (!in.poset) {
		throw Error(path + " is not a poset file");
	}
	return std::move(*in.poset);
}

LambdaLattice require_lambda(const std::string& path) {
	auto in = load(path);
	if (!in.lambda) {
		throw Error(path + " is not a lambda-lattice file");
	}
	return std::move(*in.lambda);
}

template <class S>
json name_list(const S& s, const std::vector<Element>& xs) {
	json out = json::array();
	for (Element x : xs) {
		out.push_back(s.name(x));
	}
	return out;
}

json witness_json(const Poset& p, const Witness& w) {
	json j{{"kind", to_string(w.kind)},
	       {"subject", name_list(p, w.subject)},
	       {"query", name_list(p, {w.query.first, w.query.second})}};
	j["expected"] = w.expected ? json(p.name(*w.expected)) : json(nullptr);
	j["actual"] = w.actual ? json(p.name(*w.actual)) : json(nullptr);
	j["text"] = w.describe(p);
	return j;
}

json counterexample_json(const LambdaLattice& l, const Counterexample& c) {
	json valuation = json::object();
	for (std::size_t i = 0; i < c.valuation.size(); ++i) {
		valuation[c.variables[i]] = l.name(c.valuation[i]);
	}
	return {{"valuation", valuation}, {"lhs", l.name(c.lhs)}, {"rhs", l.name(c.rhs)}};
}

std::string pair_key(const LambdaLattice& l, const ChoiceSlot& s, char op) {
	return l.name(s.x) + op + l.name(s.y);
}

json choices_json(const LambdaLattice& l, const ChoiceSpace& space) {
	json join = json::object(), meet = json::object();
	for (const auto& s : space.sup_free) {
		join[pair_key(l, s, '|')] = l.name(l.join(s.x, s.y));
	}
	for (const auto& s : space.inf_free) {
		meet[pair_key(l, s, '&')] = l.name(l.meet(s.x, s.y));
	}
	return {{"join", join}, {"meet", meet}};
}

std::string choices_text(const LambdaLattice& l, const ChoiceSpace& space) {
	std::string out;
	for (std::size_t i = 0; i < space.slot_count(); ++i) {
		const auto& s = space.slot(i);
		const bool sup = space.is_sup_slot(i);
		out += (i ? " " : "") + pair_key(l, s, sup ? '|' : '&') + "=" + l.name(sup ? l.join(s.x, s.y) : l.meet(s.x, s.y));
	}
	return out.empty() ? "(no free choices)" : out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

int cmd_classify(Output& out, const std::string& path) {
	const Poset p = require_poset(path);
	const ClassReport r = classify(p);
	constexpr PosetClass chain[]{PosetClass::complemented, PosetClass::orthogonal,
	                             PosetClass::almost_skew_orthomodular, PosetClass::skew_orthomodular};
	if (out.structured()) {
		json classes = json::array();
		for (PosetClass c : chain) {
			json e{{"class", to_string(c)}, {"holds", r.in(c)}};
			if (const Witness* w = r.witness_for(c); w && !r.in(c)) {
				e["witness"] = witness_json(p, *w);
			}
			classes.push_back(e);
		}
		out.record({{"record", "classify"}, {"input", path}, {"label", to_string(r.label)}, {"classes", classes}});
		return kOk;
	}
	out.text() << "label: " << to_string(r.label) << '\n';
	for (PosetClass c : chain) {
		out.text() << "  " << std::left << std::setw(26) << to_string(c) << yes_no(r.in(c));
		if (const Witness* w = r.witness_for(c); w && !r.in(c)) {
			out.text() << "  " << w->describe(p);
		}
		out.text() << '\n';
	}
	return kOk;
}

int cmd_props(Output& out, const std::string& path) {
	const Poset p = require_poset(path);
	std::optional<std::pair<Element, Element>> antitone_failure;
	std::optional<Element> involution_failure;
	for (Element x = 0; x < p.size() && !antitone_failure; ++x) {
		for (Element y = 0; y < p.size(); ++y) {
			if (p.leq(x, y) && !p.leq(p.prime(y), p.prime(x))) {
				antitone_failure = {x, y};
				break;
			}
		}
	}
	for (Element x = 0; x < p.size(); ++x) {
		if (p.prime(p.prime(x)) != x) {
			involution_failure = x;
			break;
		}
	}
	const bool lattice = is_lattice(p);
	if (out.structured()) {
		json j{{"record", "props"}, {"input", path}, {"size", p.size()}, {"covers", p.covers().size()},
		       {"antitone", !antitone_failure}, {"involution", !involution_failure}, {"lattice", lattice}};
		if (antitone_failure) {
			j["antitone_witness"] = name_list(p, {antitone_failure->first, antitone_failure->second});
		}
		if (involution_failure) {
			j["involution_witness"] = p.name(*involution_failure);
		}
		out.record(j);
		return kOk;
	}
	auto& o = out.text();
	o << "elements: " << p.size() << "\ncovers: " << p.covers().size() << '\n';
	o << "antitone: " << yes_no(!antitone_failure);
	if (antitone_failure) {
		auto [x, y] = *antitone_failure;
		o << "  (" << p.name(x) << " <= " << p.name(y) << " but " << p.name(p.prime(y)) << " not <= "
		  << p.name(p.prime(x)) << ")";
	}
	o << "\ninvolution: " << yes_no(!involution_failure);
	if (involution_failure) {
		const Element x = *involution_failure;
		o << "  (" << p.name(x) << "'' = " << p.name(p.prime(p.prime(x))) << ")";
	}
	o << "\nlattice: " << yes_no(lattice) << '\n';
	return kOk;
}

struct AssignmentArgs {
	bool count = false;
	bool enumerate = false;
	std::optional<std::size_t> sample;
	std::uint64_t seed = 1;
	std::uint64_t cap = kDefaultEnumerationCap;
};

int cmd_assignments(Output& out, const std::string& path, const AssignmentArgs& a) {
	const Poset p = require_poset(path);
	const ChoiceSpace space = choice_space(p);
	if (a.count) {
		if (out.structured()) {
			json slots = json::array();
			for (std::size_t i = 0; i < space.slot_count(); ++i) {
				const auto& s = space.slot(i);
				slots.push_back({{"op", space.is_sup_slot(i) ? "join" : "meet"},
				                 {"pair", name_list(p, {s.x, s.y})},
				                 {"candidates", name_list(p, s.candidates)}});
			}
			out.record({{"record", "assignment-count"}, {"input", path}, {"count", space.count.str()}, {"slots", slots}});
		} else {
			out.text() << "count: " << space.count << '\n';
			for (std::size_t i = 0; i < space.slot_count(); ++i) {
				const auto& s = space.slot(i);
				out.text() << "  " << p.name(s.x) << (space.is_sup_slot(i) ? " | " : " & ") << p.name(s.y) << " in {";
				for (std::size_t k = 0; k < s.candidates.size(); ++k) {
					out.text() << (k ? " " : "") << p.name(s.candidates[k]);
				}
				out.text() << "}\n";
			}
		}
		return kOk;
	}
	std::size_t index = 0;
	auto emit = [&](const LambdaLattice& l) {
		++index;
		if (out.structured()) {
			json j{{"record", "assignment"}, {"index", index}};
			j.update(choices_json(l, space));
			out.record(j);
		} else {
			out.text() << '#' << index << ' ' << choices_text(l, space) << '\n';
		}
		return true;
	};
	if (a.enumerate) {
		enumerate_assignments(p, emit, {a.cap, false});
	} else {
		for (const auto& l : sample_assignments(p, *a.sample, a.seed)) {
			emit(l);
		}
	}
	return kOk;
}

struct CheckArgs {
	std::string builtin;
	std::string identity;
	CoveragePolicy policy;
};

Identity check_identity(const CheckArgs& a) {
	if (!a.builtin.empty()) {
		auto b = builtin(a.builtin);
		if (!std::holds_alternative<Identity>(b)) {
			throw Error("'" + a.builtin + "' is a term, not an identity");
		}
		return std::get<Identity>(b);
	}
	return parse_identity(a.identity);
}

int cmd_check(Output& out, const std::string& path, const CheckArgs& a) {
	const Identity id = check_identity(a);
	const std::string label = id.name.empty() ? to_string(id) : id.name;
	Input in = load(path);
	if (in.lambda) {
		const LambdaLattice& l = *in.lambda;
		auto r = holds(id, l);
		if (out.structured()) {
			json j{{"record", "check"}, {"input", path}, {"identity", label}, {"dsl", to_string(id)}, {"holds", r.holds}};
			if (r.counterexample) {
				j["counterexample"] = counterexample_json(l, *r.counterexample);
			}
			out.record(j);
		} else {
			out.text() << label << ": " << (r.holds ? "PASS" : "FAIL");
			if (r.counterexample) {
				out.text() << " at " << r.counterexample->describe(l);
			}
			out.text() << '\n';
		}
		return r.holds ? kOk : kFailed;
	}

	const Poset& p = *in.poset;
	const ChoiceSpace space = choice_space(p);
	std::uint64_t failing = 0, index = 0;
	std::optional<std::pair<std::uint64_t, json>> first_json;
	std::optional<std::string> first_text;
	const Coverage cov = visit_assignments(p, a.policy, [&](const LambdaLattice& l) {
		++index;
		auto r = holds(id, l);
		if (!r.holds) {
			if (++failing == 1) {
				json j{{"member", index}, {"counterexample", counterexample_json(l, *r.counterexample)}};
				j.update(choices_json(l, space));
				first_json = {index, j};
				first_text = "member #" + std::to_string(index) + " [" + choices_text(l, space) + "]: " +
				             r.counterexample->describe(l);
			}
		}
		return true;
	});
	const bool ok = failing == 0;
	if (out.structured()) {
		json j{{"record", "check"},
		       {"input", path},
		       {"identity", label},
		       {"dsl", to_string(id)},
		       {"holds", ok},
		       {"regime", to_string(cov.regime)},
		       {"members", cov.total.str()},
		       {"checked", cov.visited},
		       {"failing", failing}};
		if (cov.regime == Regime::sampled) {
			j["seed"] = a.policy.seed;
		}
		if (first_json) {
			j["first_failure"] = first_json->second;
		}
		out.record(j);
	} else {
		out.text() << label << ": " << (ok ? "PASS" : "FAIL") << " on " << (cov.visited - failing) << " of "
		           << cov.visited << " assigned members checked\n";
		out.text() << "regime: " << to_string(cov.regime) << " (" << cov.visited << " of " << cov.total << ")\n";
		if (first_text) {
			out.text() << "first failure: " << *first_text << '\n';
		}
	}
	return ok ? kOk : kFailed;
}

int cmd_axioms(Output& out, const std::string& path) {
	const LambdaLattice l = require_lambda(path);
	const AxiomReport r = check_axioms(l);
	for (const auto& a : r.results) {
		if (out.structured()) {
			json j{{"record", "axiom"}, {"name", a.name}, {"identity", a.identity}, {"derived", a.derived},
			       {"passed", a.passed}};
			if (!a.passed) {
				j["valuation"] = name_list(l, a.first_failure);
			}
			out.record(j);
		} else {
			out.text() << (a.passed ? "PASS " : "FAIL ") << std::left << std::setw(16) << a.name << a.identity;
			if (a.derived) {
				out.text() << "  (derived)";
			}
			if (!a.passed) {
				out.text() << "  at " << name_list(l, a.first_failure).dump();
			}
			out.text() << '\n';
		}
	}
	if (out.structured()) {
		out.record({{"record", "axioms"}, {"input", path}, {"axioms_hold", r.axioms_hold()}, {"all_hold", r.all_hold()}});
	} else {
		out.text() << "lambda-lattice: " << yes_no(r.axioms_hold()) << '\n';
	}
	return r.all_hold() ? kOk : kFailed;
}

struct ConArgs {
	bool permutable = false;
	bool regular = false;
	bool distributive = false;
	bool list = false;
};

int cmd_con(Output& out, const std::string& path, const ConArgs& a) {
	const LambdaLattice l = require_lambda(path);
	const CongruenceLattice con = all_congruences(l);
	const bool all = !a.permutable && !a.regular && !a.distributive;
	if (a.list) {
		for (std::size_t i = 0; i < con.size(); ++i) {
			if (out.structured()) {
				json blocks = json::array();
				for (const auto& b : con[i].blocks()) {
					blocks.push_back(name_list(l, b));
				}
				out.record({{"record", "congruence"}, {"index", i}, {"blocks", blocks}});
			} else {
				out.text() << i << ": " << format_blocks(con[i], l.names()) << '\n';
			}
		}
	}
	int status = kOk;
	json summary{{"record", "con"}, {"input", path}, {"size", con.size()}};
	if (!out.structured()) {
		out.text() << "congruences: " << con.size() << '\n';
	}
	auto report = [&](const char* name, bool value, bool requested, const std::string& note) {
		if (!all && !requested) {
			return;
		}
		if (requested && !value) {
			status = kFailed;
		}
		summary[name] = value;
		if (!out.structured()) {
			out.text() << name << ": " << yes_no(value) << note << '\n';
		}
	};
	std::string note;
	const auto pair = find_nonpermuting_pair(con);
	if (pair) {
		note = "  (" + format_blocks(con[pair->first], l.names()) + " vs " + format_blocks(con[pair->second], l.names()) + ")";
		summary["nonpermuting"] = json::array({pair->first, pair->second});
	}
	report("permutable", !pair, a.permutable, note);
	report("regular", is_regular(con), a.regular, "");
	report("distributive", is_distributive(con), a.distributive, "");
	if (out.structured()) {
		if (!all && !a.permutable) {
			summary.erase("nonpermuting");
		}
		out.record(summary);
	}
	return status;
}

int cmd_dot(Output& out, const std::string& path, const std::string& target) {
	Input in = load(path);
	const Poset p = in.poset ? *in.poset : induced_poset(*in.lambda);
	const std::string dot = to_dot(p);
	if (target == "-") {
		out.text() << dot;
		return kOk;
	}
	std::ofstream file(target, std::ios::binary);
	if (!(file << dot)) {
		throw Error("cannot write " + target);
	}
	if (out.structured()) {
		out.record({{"record", "dot"}, {"input", path}, {"output", target}});
	}
	return kOk;
}

struct VerifyArgs {
	std::string filter;
	std::string fixtures;
	bool timings = true;
	CoveragePolicy policy;
};

int cmd_verify(Output& out, const VerifyArgs& a) {
	VerifyOptions opts{FixtureSource(a.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(a.fixtures)), std::nullopt, a.policy};
	if (!a.filter.empty()) {
		opts.filter = a.filter;
	}
	const VerifyReport r = verify_paper(opts);
	for (const auto& c : r.claims) {
		const char* status = c.info.finding ? "NOTE" : c.passed ? "PASS" : "FAIL";
		if (out.structured()) {
			json j{{"record", "claim"}, {"name", c.info.name}, {"title", c.info.title}, {"finding", c.info.finding},
			       {"passed", c.passed}, {"details", c.details}, {"witnesses", c.witnesses}};
			if (a.timings) {
				j["seconds"] = c.seconds;
			}
			out.record(j);
			continue;
		}
		auto& o = out.text();
		o << status << ' ' << c.info.name;
		if (a.timings) {
			o << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
		}
		o << "  " << c.info.title << '\n';
		if (c.info.finding && !c.passed) {
			o << "    finding could not be evaluated\n";
		}
		for (const auto& d : c.details) {
			o << "    " << d << '\n';
		}
		for (const auto& w : c.witnesses) {
			o << "    > " << w << '\n';
		}
	}
	if (out.structured()) {
		json j{{"record", "verify"}, {"passed", r.passed()}, {"claims", r.claims.size()}};
		if (a.timings) {
			j["seconds"] = r.seconds;
		}
		out.record(j);
	} else {
		out.text() << (r.passed() ? "all claims pass" : "some claims FAIL");
		if (a.timings) {
			out.text() << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
		}
		out.text() << '\n';
	}
	return r.passed() ? kOk : kFailed;
}

void add_policy(CLI::App* sub, CoveragePolicy& policy) {
	sub->add_option("--cap", policy.cap, "enumerate exhaustively up to this many assigned members")->capture_default_str();
	sub->add_option("--samples", policy.samples, "number of seeded samples above the cap")->capture_default_str();
	sub->add_option("--seed", policy.seed, "sampling seed")->capture_default_str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"Posets with a unary operation, assigned lambda-lattices and their identities", "somlat"};
	app.require_subcommand(1);
	app.fallthrough();
	std::string format = "text";
	app.add_option("--format", format, "output mode")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

	std::string input;
	auto* classify = app.add_subcommand("classify", "class membership with witnesses");
	classify->add_option("file", input, "poset file")->required();

	auto* props = app.add_subcommand("props", "antitone, involution and lattice diagnostics");
	props->add_option("file", input, "poset file")->required();

	AssignmentArgs assign;
	auto* assignments = app.add_subcommand("assignments", "the assigned lambda-lattices of a poset");
	assignments->add_option("file", input, "poset file")->required();
	auto* count_flag = assignments->add_flag("--count", assign.count, "number of assigned lambda-lattices");
	auto* enum_flag = assignments->add_flag("--enumerate", assign.enumerate, "list every member");
	auto* sample_opt = assignments->add_option("--sample", assign.sample, "list N seeded samples");
	assignments->add_option("--seed", assign.seed, "sampling seed")->capture_default_str();
	assignments->add_option("--cap", assign.cap, "refuse to enumerate more members than this")->capture_default_str();
	count_flag->excludes(enum_flag)->excludes(sample_opt);
	enum_flag->excludes(sample_opt);

	CheckArgs check_args;
	auto* check = app.add_subcommand("check", "check an identity on an algebra or on all assigned algebras");
	check->add_option("file", input, "poset or lambda-lattice file")->required();
	auto* builtin_opt = check->add_option("--builtin", check_args.builtin, "built-in identity name");
	auto* identity_opt = check->add_option("--identity", check_args.identity, "identity in the term syntax");
	builtin_opt->excludes(identity_opt);
	add_policy(check, check_args.policy);

	auto* axioms = app.add_subcommand("axioms", "lambda-lattice axiom report");
	axioms->add_option("file", input, "lambda-lattice file")->required();

	ConArgs con_args;
	auto* con = app.add_subcommand("con", "congruence lattice properties");
	con->add_option("file", input, "lambda-lattice file")->required();
	con->add_flag("--permutable", con_args.permutable);
	con->add_flag("--regular", con_args.regular);
	con->add_flag("--distributive", con_args.distributive);
	con->add_flag("--list", con_args.list, "list every congruence");

	std::string dot_target = "-";
	auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT syntax");
	dot->add_option("file", input, "poset or lambda-lattice file")->required();
	dot->add_option("-o,--output", dot_target, "output path, - for stdout")->capture_default_str();

	VerifyArgs verify_args;
	auto* verify = app.add_subcommand("verify-paper", "run the fixture claim suite");
	verify->add_option("--filter", verify_args.filter, "run one claim");
	verify->add_option("--fixtures", verify_args.fixtures, "fixture directory");
	auto* no_timings = verify->add_flag("--no-timings", "omit runtimes from text output");
	// structured output stays byte-identical across runs unless runtimes are requested
	auto* with_timings = verify->add_flag("--timings", "include runtimes in json output");
	add_policy(verify, verify_args.policy);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e, out, err) == 0 ? kOk : kUsage;
	}

	Output o(out, format == "json");
	try {
		if (*classify) return cmd_classify(o, input);
		if (*props) return cmd_props(o, input);
		if (*assignments) {
			if (!assign.count && !assign.enumerate && !assign.sample) {
				err << "assignments: one of --count, --enumerate, --sample is required\n";
				return kUsage;
			}
			return cmd_assignments(o, input, assign);
		}
		if (*check) {
			if (check_args.builtin.empty() && check_args.identity.empty()) {
				err << "check: one of --builtin, --identity is required\n";
				return kUsage;
			}
			return cmd_check(o, input, check_args);
		}
		if (*axioms) return cmd_axioms(o, input);
		if (*con) return cmd_con(o, input, con_args);
		if (*dot) return cmd_dot(o, input, dot_target);
		if (*verify) {
			verify_args.timings = o.structured() ? bool(*with_timings) : !*no_timings;
			return cmd_verify(o, verify_args);
		}
	} catch (const std::exception& ex) {
		err << "error: " << ex.what() << '\n';
		return kUsage;
	}
	return kUsage;
}

} // namespace somlat::cli
