#include "somlat/poset.hpp"

#include <sstream>

#include "line_format.hpp"
#include "somlat/error.hpp"

namespace somlat {

Relation make_relation(std::size_t n) {
	return Relation(n, boost::dynamic_bitset<>(n));
}

Relation reflexive_transitive_closure(Relation rel) {
	const std::size_t n = rel.size();
	for (std::size_t i = 0; i < n; ++i) {
		rel[i].set(i);
	}
	for (std::size_t k = 0; k < n; ++k) {
		for (std::size_t i = 0; i < n; ++i) {
			if (rel[i].test(k)) {
				rel[i] |= rel[k];
			}
		}
	}
	return rel;
}

std::vector<Element> BoundSet::elements() const {
	std::vector<Element> out;
	for (auto i = members.find_first(); i != boost::dynamic_bitset<>::npos; i = members.find_next(i)) {
		out.push_back(i);
	}
	return out;
}

Poset::Poset(std::vector<std::string> names, Relation leq, std::vector<Element> prime,
             Element bottom, Element top)
	: names_(std::move(names)), leq_(std::move(leq)), prime_(std::move(prime)), bottom_(bottom),
	  top_(top) {
	const std::size_t n = names_.size();
	if (n == 0) {
		throw StructureError("poset has no elements");
	}
	if (leq_.size() != n || prime_.size() != n) {
		throw StructureError("relation or prime map does not match the element count");
	}
	for (const auto& row : leq_) {
		if (row.size() != n) {
			throw StructureError("relation row has the wrong width");
		}
	}
	if (bottom_ >= n || top_ >= n) {
		throw StructureError("bottom/top out of range");
	}
	for (Element x = 0; x < n; ++x) {
		if (prime_[x] >= n) {
			throw StructureError("prime of '" + names_[x] + "' is out of range");
		}
		if (!leq_[x].test(x)) {
			throw StructureError("relation is not reflexive at '" + names_[x] + "'");
		}
	}
	geq_ = make_relation(n);
	for (Element x = 0; x < n; ++x) {
		for (Element y = 0; y < n; ++y) {
			if (!leq_[x].test(y)) {
				continue;
			}
			geq_[y].set(x);
			if (x != y && leq_[y].test(x)) {
				throw StructureError("relation is not antisymmetric: '" + names_[x] + "' and '" +
				                     names_[y] + "' lie on a cycle");
			}
			if (!leq_[y].is_subset_of(leq_[x])) {
				throw StructureError("relation is not transitive through '" + names_[y] + "'");
			}
		}
	}
	for (Element x = 0; x < n; ++x) {
		if (!leq_[bottom_].test(x)) {
			throw StructureError("'" + names_[bottom_] + "' is not below '" + names_[x] + "'");
		}
		if (!leq_[x].test(top_)) {
			throw StructureError("'" + names_[x] + "' is not below '" + names_[top_] + "'");
		}
	}

	sup_.assign(n * n, npos);
	inf_.assign(n * n, npos);
	for (Element a = 0; a < n; ++a) {
		for (Element b = a; b < n; ++b) {
			// least element of U(a,b): a member whose up-set contains all of U(a,b)
			const auto ub = leq_[a] & leq_[b];
			for (auto u = ub.find_first(); u != boost::dynamic_bitset<>::npos; u = ub.find_next(u)) {
				if (ub.is_subset_of(leq_[u])) {
					sup_[a * n + b] = sup_[b * n + a] = u;
					break;
				}
			}
			const auto lb = geq_[a] & geq_[b];
			for (auto l = lb.find_first(); l != boost::dynamic_bitset<>::npos; l = lb.find_next(l)) {
				if (lb.is_subset_of(geq_[l])) {
					inf_[a * n + b] = inf_[b * n + a] = l;
					break;
				}
			}
		}
	}
}

std::optional<Element> Poset::find(std::string_view name) const {
	for (Element i = 0; i < names_.size(); ++i) {
		if (names_[i] == name) {
			return i;
		}
	}
	return std::nullopt;
}

Element Poset::at(std::string_view name) const {
	if (auto e = find(name)) {
		return *e;
	}
	throw StructureError("unknown element '" + std::string(name) + "'");
}

void Poset::check(Element x) const {
	if (x >= size()) {
		throw StructureError("element index " + std::to_string(x) + " out of range");
	}
}

BoundSet Poset::lower_bounds(Element a, Element b) const {
	check(a);
	check(b);
	return {BoundKind::lower, geq_[a] & geq_[b]};
}

BoundSet Poset::upper_bounds(Element a, Element b) const {
	check(a);
	check(b);
	return {BoundKind::upper, leq_[a] & leq_[b]};
}

std::optional<Element> Poset::sup(Element a, Element b) const {
	check(a);
	check(b);
	Element s = sup_[a * size() + b];
	return s == npos ? std::nullopt : std::optional<Element>(s);
}

std::optional<Element> Poset::inf(Element a, Element b) const {
	check(a);
	check(b);
	Element s = inf_[a * size() + b];
	return s == npos ? std::nullopt : std::optional<Element>(s);
}

bool Poset::is_antitone() const {
	for (Element x = 0; x < size(); ++x) {
		for (Element y = 0; y < size(); ++y) {
			if (leq(x, y) && !leq(prime_[y], prime_[x])) {
				return false;
			}
		}
	}
	return true;
}

bool Poset::is_involution() const {
	for (Element x = 0; x < size(); ++x) {
		if (prime_[prime_[x]] != x) {
			return false;
		}
	}
	return true;
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
	std::vector<std::pair<Element, Element>> out;
	const std::size_t n = size();
	for (Element x = 0; x < n; ++x) {
		auto above = leq_[x];
		above.reset(x);
		for (auto y = above.find_first(); y != boost::dynamic_bitset<>::npos; y = above.find_next(y)) {
			// y covers x iff nothing strictly between: strict-above(x) ∩ strict-below(y) = ∅
			auto below = geq_[y];
			below.reset(y);
			if (!above.intersects(below)) {
				out.emplace_back(x, y);
			}
		}
	}
	return out;
}

bool operator==(const Poset& a, const Poset& b) {
	return a.names_ == b.names_ && a.leq_ == b.leq_ && a.prime_ == b.prime_ &&
	       a.bottom_ == b.bottom_ && a.top_ == b.top_;
}

Poset parse_poset(std::string_view text) {
	auto lines = detail::tokenize_lines(text);
	if (lines.empty() || lines.front().tokens != std::vector<std::string>{"poset"}) {
		throw FormatError(lines.empty() ? 0 : lines.front().number, "expected header line 'poset'");
	}
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
	Relation cover = make_relation(n);
	std::vector<Element> prime(n, npos);
	for (std::size_t i = 1; i < lines.size(); ++i) {
		const auto& line = lines[i];
		const std::string& kw = line.tokens[0];
		if (kw == "elements") {
			continue;
		}
		if (kw == "cover") {
			detail::expect_arity(line, 2);
			Element x = table.lookup(line.tokens[1], line.number);
			Element y = table.lookup(line.tokens[2], line.number);
			if (x == y) {
				throw FormatError(line.number, "cycle in covers: '" + line.tokens[1] + "' covers itself");
			}
			cover[x].set(y);
		} else if (kw == "prime") {
			detail::expect_arity(line, 2);
			Element x = table.lookup(line.tokens[1], line.number);
			Element y = table.lookup(line.tokens[2], line.number);
			if (prime[x] != npos) {
				throw FormatError(line.number, "second prime line for '" + line.tokens[1] + "'");
			}
			prime[x] = y;
		} else {
			throw FormatError(line.number, "unknown directive '" + kw + "'");
		}
	}
	for (Element x = 0; x < n; ++x) {
		if (prime[x] == npos) {
			throw FormatError(0, "prime is not total: no prime line for '" + table.names()[x] + "'");
		}
	}
	Relation leq = reflexive_transitive_closure(cover);
	for (Element x = 0; x < n; ++x) {
		for (Element y = x + 1; y < n; ++y) {
			if (leq[x].test(y) && leq[y].test(x)) {
				throw FormatError(0, "cycle in covers through '" + table.names()[x] + "' and '" +
				                         table.names()[y] + "'");
			}
		}
	}
	const Element bottom = table.constant("0");
	const Element top = table.constant("1");
	for (Element x = 0; x < n; ++x) {
		if (!leq[bottom].test(x)) {
			throw FormatError(0, "declared '0' is not the bottom: not below '" + table.names()[x] + "'");
		}
		if (!leq[x].test(top)) {
			throw FormatError(0, "declared '1' is not the top: '" + table.names()[x] + "' is not below it");
		}
	}
	return Poset(table.names(), std::move(leq), std::move(prime), bottom, top);
}

std::string to_text(const Poset& p) {
	std::ostringstream out;
	out << "poset\nelements";
	for (const auto& name : p.names()) {
		out << ' ' << name;
	}
	out << '\n';
	for (auto [x, y] : p.covers()) {
		out << "cover " << p.name(x) << ' ' << p.name(y) << '\n';
	}
	for (Element x = 0; x < p.size(); ++x) {
		out << "prime " << p.name(x) << ' ' << p.name(p.prime(x)) << '\n';
	}
	return out.str();
}

namespace {

std::string quoted(const std::string& s) {
	std::string out = "\"";
	for (char c : s) {
		if (c == '"' || c == '\\') {
			out += '\\';
		}
		out += c;
	}
	return out + '"';
}

} // namespace

std::string to_dot(const Poset& p, std::string_view graph_name) {
	std::ostringstream out;
	out << "digraph " << quoted(std::string(graph_name)) << " {\n";
	out << "  rankdir=BT;\n";
	for (Element x = 0; x < p.size(); ++x) {
		out << "  " << quoted(p.name(x)) << " [label="
		    << quoted(p.name(x) + " / " + p.name(x) + "'=" + p.name(p.prime(x))) << "];\n";
	}
	for (auto [x, y] : p.covers()) {
		out << "  " << quoted(p.name(x)) << " -> " << quoted(p.name(y)) << ";\n";
	}
	out << "}\n";
	return out.str();
}

} // namespace somlat
