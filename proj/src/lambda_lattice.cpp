#include "somlat/lambda_lattice.hpp"

#include <sstream>

#include "line_format.hpp"
#include "somlat/error.hpp"

namespace somlat {

LambdaLattice::LambdaLattice(std::vector<std::string> names, std::vector<Element> join,
                             std::vector<Element> meet, std::vector<Element> prime, Element bottom,
                             Element top)
	: names_(std::move(names)), join_(std::move(join)), meet_(std::move(meet)), prime_(std::move(prime)),
	  bottom_(bottom), top_(top) {
	const std::size_t n = names_.size();
	if (n == 0) {
		throw StructureError("algebra has no elements");
	}
	if (join_.size() != n * n || meet_.size() != n * n || prime_.size() != n) {
		throw StructureError("operation tables do not match the element count");
	}
	auto in_range = [n](Element e) { return e < n; };
	for (std::size_t i = 0; i < n * n; ++i) {
		if (!in_range(join_[i]) || !in_range(meet_[i])) {
			throw StructureError("operation table entry out of range");
		}
	}
	for (Element p : prime_) {
		if (!in_range(p)) {
			throw StructureError("prime entry out of range");
		}
	}
	if (!in_range(bottom_) || !in_range(top_)) {
		throw StructureError("bottom/top out of range");
	}
}

std::optional<Element> LambdaLattice::find(std::string_view name) const {
	for (Element i = 0; i < names_.size(); ++i) {
		if (names_[i] == name) {
			return i;
		}
	}
	return std::nullopt;
}

Element LambdaLattice::at(std::string_view name) const {
	if (auto e = find(name)) {
		return *e;
	}
	throw StructureError("unknown element '" + std::string(name) + "'");
}

bool AxiomReport::axioms_hold() const {
	for (const auto& r : results) {
		if (!r.derived && !r.passed) {
			return false;
		}
	}
	return true;
}

bool AxiomReport::all_hold() const {
	for (const auto& r : results) {
		if (!r.passed) {
			return false;
		}
	}
	return true;
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
	for (const auto& r : results) {
		if (r.name == name) {
			return &r;
		}
	}
	return nullptr;
}

namespace {

template <class Pred>
AxiomResult check_unary(const LambdaLattice& l, std::string name, std::string text, bool derived, Pred ok) {
	AxiomResult r{std::move(name), std::move(text), derived, true, {}};
	for (Element x = 0; x < l.size(); ++x) {
		if (!ok(x)) {
			r.passed = false;
			r.first_failure = {x};
			break;
		}
	}
	return r;
}

template <class Pred>
AxiomResult check_binary(const LambdaLattice& l, std::string name, std::string text, bool derived, Pred ok) {
	AxiomResult r{std::move(name), std::move(text), derived, true, {}};
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = 0; y < l.size(); ++y) {
			if (!ok(x, y)) {
				r.passed = false;
				r.first_failure = {x, y};
				return r;
			}
		}
	}
	return r;
}

template <class Pred>
AxiomResult check_ternary(const LambdaLattice& l, std::string name, std::string text, Pred ok) {
	AxiomResult r{std::move(name), std::move(text), false, true, {}};
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = 0; y < l.size(); ++y) {
			for (Element z = 0; z < l.size(); ++z) {
				if (!ok(x, y, z)) {
					r.passed = false;
					r.first_failure = {x, y, z};
					return r;
				}
			}
		}
	}
	return r;
}

} // namespace

AxiomReport check_axioms(const LambdaLattice& l) {
	const Element zero = l.bottom();
	const Element one = l.top();
	AxiomReport rep;
	auto& out = rep.results;
	out.push_back(check_binary(l, "join_comm", "(x|y) = (y|x)", false,
	                           [&](Element x, Element y) { return l.join(x, y) == l.join(y, x); }));
	out.push_back(check_binary(l, "meet_comm", "(x&y) = (y&x)", false,
	                           [&](Element x, Element y) { return l.meet(x, y) == l.meet(y, x); }));
	out.push_back(check_ternary(l, "join_skew_assoc", "(x|((x|y)|z)) = ((x|y)|z)",
	                            [&](Element x, Element y, Element z) {
		                            Element w = l.join(l.join(x, y), z);
		                            return l.join(x, w) == w;
	                            }));
	out.push_back(check_ternary(l, "meet_skew_assoc", "(x&((x&y)&z)) = ((x&y)&z)",
	                            [&](Element x, Element y, Element z) {
		                            Element w = l.meet(l.meet(x, y), z);
		                            return l.meet(x, w) == w;
	                            }));
	out.push_back(check_binary(l, "join_absorb", "(x|(x&y)) = x", false,
	                           [&](Element x, Element y) { return l.join(x, l.meet(x, y)) == x; }));
	out.push_back(check_binary(l, "meet_absorb", "(x&(x|y)) = x", false,
	                           [&](Element x, Element y) { return l.meet(x, l.join(x, y)) == x; }));
	out.push_back(check_unary(l, "join_zero", "(x|0) = x", false, [&](Element x) { return l.join(x, zero) == x; }));
	out.push_back(check_unary(l, "join_one", "(x|1) = 1", false, [&](Element x) { return l.join(x, one) == one; }));
	out.push_back(check_unary(l, "meet_zero", "(x&0) = 0", true, [&](Element x) { return l.meet(x, zero) == zero; }));
	out.push_back(check_unary(l, "meet_one", "(x&1) = x", true, [&](Element x) { return l.meet(x, one) == x; }));
	out.push_back(check_unary(l, "join_idem", "(x|x) = x", true, [&](Element x) { return l.join(x, x) == x; }));
	out.push_back(check_unary(l, "meet_idem", "(x&x) = x", true, [&](Element x) { return l.meet(x, x) == x; }));
	return rep;
}

Poset induced_poset(const LambdaLattice& l) {
	const std::size_t n = l.size();
	Relation leq = make_relation(n);
	for (Element x = 0; x < n; ++x) {
		for (Element y = 0; y < n; ++y) {
			const bool by_join = l.join(x, y) == y;
			const bool by_meet = l.meet(x, y) == x;
			if (by_join != by_meet) {
				throw StructureError("join order and meet order disagree at (" + l.name(x) + ", " + l.name(y) + ")");
			}
			if (by_join) {
				leq[x].set(y);
			}
		}
	}
	// the Poset constructor re-validates reflexivity, antisymmetry, transitivity and bounds
	return Poset(l.names(), std::move(leq), l.prime_map(), l.bottom(), l.top());
}

bool in_class(const LambdaLattice& l, PosetClass c) {
	return check_class(induced_poset(l), c).holds;
}

namespace {

struct TableLine {
	std::size_t line;
	Element value;
};

} // namespace

LambdaLattice parse_lambda(std::string_view text) {
	auto lines = detail::tokenize_lines(text);
	if (lines.empty() || lines.front().tokens[0] != "lambda" || lines.front().tokens.size() > 2 ||
	    (lines.front().tokens.size() == 2 && lines.front().tokens[1] != "partial")) {
		throw FormatError(lines.empty() ? 0 : lines.front().number, "expected header 'lambda' or 'lambda partial'");
	}
	const bool partial = lines.front().tokens.size() == 2;

	detail::ElementTable table;
	for (const auto& line : lines) {
		if (line.tokens[0] == "elements") {
			table.declare(line);
		}
	}
	if (!table.declared()) {
		throw FormatError(0, "missing 'elements' line");
	}
	const std::size_t n = table.size();
	std::vector<std::optional<TableLine>> join(n * n), meet(n * n);
	std::vector<Element> prime(n, npos);
	Relation cover = make_relation(n);

	for (std::size_t i = 1; i < lines.size(); ++i) {
		const auto& line = lines[i];
		const std::string& kw = line.tokens[0];
		if (kw == "elements") {
			continue;
		}
		if (kw == "join" || kw == "meet") {
			detail::expect_arity(line, 3);
			Element x = table.lookup(line.tokens[1], line.number);
			Element y = table.lookup(line.tokens[2], line.number);
			Element v = table.lookup(line.tokens[3], line.number);
			auto& tab = kw == "join" ? join : meet;
			if (tab[x * n + y]) {
				throw FormatError(line.number, "second '" + kw + "' line for pair {" + line.tokens[1] + ", " +
				                                   line.tokens[2] + "}");
			}
			tab[x * n + y] = tab[y * n + x] = TableLine{line.number, v};
		} else if (kw == "prime") {
			detail::expect_arity(line, 2);
			Element x = table.lookup(line.tokens[1], line.number);
			if (prime[x] != npos) {
				throw FormatError(line.number, "second prime line for '" + line.tokens[1] + "'");
			}
			prime[x] = table.lookup(line.tokens[2], line.number);
		} else if (kw == "cover") {
			if (!partial) {
				throw FormatError(line.number, "'cover' lines are only allowed in 'lambda partial' files");
			}
			detail::expect_arity(line, 2);
			Element x = table.lookup(line.tokens[1], line.number);
			Element y = table.lookup(line.tokens[2], line.number);
			if (x == y) {
				throw FormatError(line.number, "cycle in covers: '" + line.tokens[1] + "' covers itself");
			}
			cover[x].set(y);
		} else {
			throw FormatError(line.number, "unknown directive '" + kw + "'");
		}
	}
	for (Element x = 0; x < n; ++x) {
		if (prime[x] == npos) {
			throw FormatError(0, "prime is not total: no prime line for '" + table.names()[x] + "'");
		}
	}
	const Element bottom = table.constant("0");
	const Element top = table.constant("1");

	std::vector<Element> join_tab(n * n), meet_tab(n * n);
	if (!partial) {
		for (Element x = 0; x < n; ++x) {
			for (Element y = x; y < n; ++y) {
				for (auto* tab : {&join, &meet}) {
					const auto& entry = (*tab)[x * n + y];
					if (!entry && x != y) {
						throw FormatError(0, std::string("missing '") + (tab == &join ? "join" : "meet") + "' line for pair {" +
						                         table.names()[x] + ", " + table.names()[y] + "}");
					}
				}
				Element j = join[x * n + y] ? join[x * n + y]->value : x;
				Element m = meet[x * n + y] ? meet[x * n + y]->value : x;
				join_tab[x * n + y] = join_tab[y * n + x] = j;
				meet_tab[x * n + y] = meet_tab[y * n + x] = m;
			}
		}
		return LambdaLattice(table.names(), std::move(join_tab), std::move(meet_tab), std::move(prime), bottom, top);
	}

	Poset order = [&] {
		try {
			Relation leq = reflexive_transitive_closure(cover);
			return Poset(table.names(), std::move(leq), prime, bottom, top);
		} catch (const StructureError& e) {
			throw FormatError(0, std::string("declared order: ") + e.what());
		}
	}();
	for (Element x = 0; x < n; ++x) {
		for (Element y = x; y < n; ++y) {
			const auto& je = join[x * n + y];
			const auto& me = meet[x * n + y];
			Element j, m;
			if (je) {
				if (!order.upper_bounds(x, y).contains(je->value)) {
					throw FormatError(je->line, "listed join is not a common upper bound");
				}
				j = je->value;
			} else if (auto s = order.sup(x, y)) {
				j = *s;
			} else {
				throw FormatError(0, "incomplete table: sup(" + table.names()[x] + ", " + table.names()[y] +
				                         ") does not exist and no join is listed");
			}
			if (me) {
				if (!order.lower_bounds(x, y).contains(me->value)) {
					throw FormatError(me->line, "listed meet is not a common lower bound");
				}
				m = me->value;
			} else if (auto i = order.inf(x, y)) {
				m = *i;
			} else {
				throw FormatError(0, "incomplete table: inf(" + table.names()[x] + ", " + table.names()[y] +
				                         ") does not exist and no meet is listed");
			}
			join_tab[x * n + y] = join_tab[y * n + x] = j;
			meet_tab[x * n + y] = meet_tab[y * n + x] = m;
		}
	}
	LambdaLattice result(table.names(), std::move(join_tab), std::move(meet_tab), std::move(prime), bottom, top);
	try {
		if (!(induced_poset(result) == order)) {
			throw FormatError(0, "listed choices change the declared order");
		}
	} catch (const StructureError& e) {
		throw FormatError(0, std::string("completed tables: ") + e.what());
	}
	return result;
}

std::string to_text(const LambdaLattice& l) {
	std::ostringstream out;
	out << "lambda\nelements";
	for (const auto& name : l.names()) {
		out << ' ' << name;
	}
	out << '\n';
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = x + 1; y < l.size(); ++y) {
			out << "join " << l.name(x) << ' ' << l.name(y) << ' ' << l.name(l.join(x, y)) << '\n';
		}
	}
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = x + 1; y < l.size(); ++y) {
			out << "meet " << l.name(x) << ' ' << l.name(y) << ' ' << l.name(l.meet(x, y)) << '\n';
		}
	}
	for (Element x = 0; x < l.size(); ++x) {
		if (l.join(x, x) != x) {
			out << "join " << l.name(x) << ' ' << l.name(x) << ' ' << l.name(l.join(x, x)) << '\n';
		}
		if (l.meet(x, x) != x) {
			out << "meet " << l.name(x) << ' ' << l.name(x) << ' ' << l.name(l.meet(x, x)) << '\n';
		}
	}
	for (Element x = 0; x < l.size(); ++x) {
		out << "prime " << l.name(x) << ' ' << l.name(l.prime(x)) << '\n';
	}
	return out.str();
}

} // namespace somlat
