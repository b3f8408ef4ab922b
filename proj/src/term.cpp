#include "somlat/term.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "somlat/error.hpp"

namespace somlat {

Term::Term(std::vector<Node> nodes, std::vector<std::string> variables)
	: nodes_(std::move(nodes)), variables_(std::move(variables)) {
	if (nodes_.empty()) {
		throw StructureError("empty term");
	}
	for (std::size_t i = 0; i < nodes_.size(); ++i) {
		const Node& n = nodes_[i];
		switch (n.kind) {
		case Kind::var:
			if (n.a >= variables_.size()) {
				throw StructureError("term references an undeclared variable");
			}
			break;
		case Kind::join:
		case Kind::meet:
			if (n.b >= i) {
				throw StructureError("term nodes are not in post-order");
			}
			[[fallthrough]];
		case Kind::prime:
			if (n.a >= i) {
				throw StructureError("term nodes are not in post-order");
			}
			break;
		default:
			break;
		}
	}
}

namespace {

class Parser {
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Term whole_term() {
		auto nodes = side();
		skip_ws();
		if (pos_ != text_.size()) {
			throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "' after term");
		}
		return Term(std::move(nodes), variables_);
	}

	Identity identity() {
		auto lhs = side();
		skip_ws();
		if (pos_ == text_.size()) {
			throw SyntaxError(pos_, "unexpected end of input, expected '='");
		}
		if (text_[pos_] != '=') {
			throw SyntaxError(pos_, std::string("expected '=', found '") + text_[pos_] + "'");
		}
		++pos_;
		auto rhs = side();
		skip_ws();
		if (pos_ != text_.size()) {
			throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "' after identity");
		}
		return Identity{"", Term(std::move(lhs), variables_), Term(std::move(rhs), variables_)};
	}

private:
	std::vector<Term::Node> side() {
		nodes_.clear();
		term();
		return std::move(nodes_);
	}

	void skip_ws() {
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
			++pos_;
		}
	}

	std::uint32_t push(Term::Node n) {
		nodes_.push_back(n);
		return static_cast<std::uint32_t>(nodes_.size() - 1);
	}

	std::uint32_t term() {
		std::uint32_t node = primary();
		for (skip_ws(); pos_ < text_.size() && text_[pos_] == '\''; skip_ws()) {
			++pos_;
			node = push({Term::Kind::prime, node, 0});
		}
		return node;
	}

	std::uint32_t primary() {
		skip_ws();
		if (pos_ == text_.size()) {
			throw SyntaxError(pos_, "unexpected end of input, expected a term");
		}
		const char c = text_[pos_];
		if (c == '(') {
			++pos_;
			std::uint32_t left = term();
			skip_ws();
			if (pos_ == text_.size()) {
				throw SyntaxError(pos_, "unexpected end of input, expected '|' or '&'");
			}
			Term::Kind kind;
			if (text_[pos_] == '|') {
				kind = Term::Kind::join;
			} else if (text_[pos_] == '&') {
				kind = Term::Kind::meet;
			} else {
				throw SyntaxError(pos_, std::string("expected '|' or '&', found '") + text_[pos_] + "'");
			}
			++pos_;
			std::uint32_t right = term();
			skip_ws();
			if (pos_ == text_.size()) {
				throw SyntaxError(pos_, "unexpected end of input, expected ')'");
			}
			if (text_[pos_] != ')') {
				throw SyntaxError(pos_, std::string("expected ')', found '") + text_[pos_] + "'");
			}
			++pos_;
			return push({kind, left, right});
		}
		if (c == '0' || c == '1') {
			++pos_;
			return push({c == '0' ? Term::Kind::zero : Term::Kind::one});
		}
		if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
			const std::size_t start = pos_++;
			if (c == 'x') {
				while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
					++pos_;
				}
			}
			return push({Term::Kind::var, variable(std::string(text_.substr(start, pos_ - start)), start)});
		}
		throw SyntaxError(pos_, std::string("expected a term, found '") + c + "'");
	}

	std::uint32_t variable(const std::string& name, std::size_t at) {
		auto it = index_.find(name);
		if (it != index_.end()) {
			return it->second;
		}
		if (variables_.size() == kMaxVariables) {
			throw SyntaxError(at, "too many variables (limit " + std::to_string(kMaxVariables) + ")");
		}
		auto idx = static_cast<std::uint32_t>(variables_.size());
		variables_.push_back(name);
		index_.emplace(name, idx);
		return idx;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
	std::vector<Term::Node> nodes_;
	std::vector<std::string> variables_;
	std::unordered_map<std::string, std::uint32_t> index_;
};

void print(const Term& t, std::size_t i, std::string& out) {
	const auto& n = t.nodes()[i];
	switch (n.kind) {
	case Term::Kind::var: out += t.variables()[n.a]; break;
	case Term::Kind::zero: out += '0'; break;
	case Term::Kind::one: out += '1'; break;
	case Term::Kind::prime:
		print(t, n.a, out);
		out += '\'';
		break;
	case Term::Kind::join:
	case Term::Kind::meet:
		out += '(';
		print(t, n.a, out);
		out += n.kind == Term::Kind::join ? '|' : '&';
		print(t, n.b, out);
		out += ')';
		break;
	}
}

} // namespace

Term parse_term(std::string_view text) {
	return Parser(text).whole_term();
}

Identity parse_identity(std::string_view text) {
	return Parser(text).identity();
}

std::string to_string(const Term& t) {
	std::string out;
	print(t, t.root(), out);
	return out;
}

std::string to_string(const Identity& id) {
	return to_string(id.lhs) + " = " + to_string(id.rhs);
}

Element Evaluator::operator()(const Term& t, std::span<const Element> env) {
	const auto& nodes = t.nodes();
	scratch_.resize(nodes.size());
	for (std::size_t i = 0; i < nodes.size(); ++i) {
		const auto& n = nodes[i];
		switch (n.kind) {
		case Term::Kind::var: scratch_[i] = env[n.a]; break;
		case Term::Kind::zero: scratch_[i] = l_.bottom(); break;
		case Term::Kind::one: scratch_[i] = l_.top(); break;
		case Term::Kind::prime: scratch_[i] = l_.prime(scratch_[n.a]); break;
		case Term::Kind::join: scratch_[i] = l_.join(scratch_[n.a], scratch_[n.b]); break;
		case Term::Kind::meet: scratch_[i] = l_.meet(scratch_[n.a], scratch_[n.b]); break;
		}
	}
	return scratch_.back();
}

Element eval(const Term& t, const LambdaLattice& l, std::span<const Element> env) {
	for (const auto& n : t.nodes()) {
		if (n.kind == Term::Kind::var && n.a >= env.size()) {
			throw StructureError("unbound variable '" + t.variables()[n.a] + "'");
		}
	}
	for (Element e : env) {
		if (e >= l.size()) {
			throw StructureError("valuation holds an element outside the algebra");
		}
	}
	return Evaluator(l)(t, env);
}

std::string Counterexample::describe(const LambdaLattice& l) const {
	std::ostringstream out;
	for (std::size_t i = 0; i < valuation.size(); ++i) {
		out << (i ? ", " : "") << variables[i] << "=" << l.name(valuation[i]);
	}
	out << ": lhs " << l.name(lhs) << " != rhs " << l.name(rhs);
	return out.str();
}

HoldsResult holds(const Identity& id, const LambdaLattice& l) {
	const std::size_t k = id.arity();
	const std::size_t n = l.size();
	std::vector<Element> env(k, 0);
	Evaluator ev(l);
	while (true) {
		const Element lhs = ev(id.lhs, env);
		const Element rhs = ev(id.rhs, env);
		if (lhs != rhs) {
			return {false, Counterexample{id.name.empty() ? to_string(id) : id.name, id.lhs.variables(), env, lhs, rhs}};
		}
		std::size_t i = k;
		while (i > 0 && ++env[i - 1] == n) {
			env[--i] = 0;
		}
		if (i == 0) {
			return {true, std::nullopt};
		}
	}
}

namespace {

struct BuiltinDef {
	std::string_view name;
	std::string_view text;
	bool is_identity;
};

constexpr std::array kBuiltins{
	BuiltinDef{"eq1", "((x|y)|(x'|y)) = 1", true},
	BuiltinDef{"eq2", "((x&y)&(x'&y)) = 0", true},
	BuiltinDef{"eq3", "((((x&y')|z)|(y|z))&((x&y')|y)) = ((x&y')|y)", true},
	BuiltinDef{"eq4", "((((x&y)'&z)&(y&z))|((x&y)'&y)) = ((x&y)'&y)", true},
	BuiltinDef{"eq5", "(x|(x'&(x|y))) = (x|y)", true},
	BuiltinDef{"join_complement", "(x|x') = 1", true},
	BuiltinDef{"meet_complement", "(x&x') = 0", true},
	BuiltinDef{"zero_prime", "0' = 1", true},
	BuiltinDef{"join_comm", "(x|y) = (y|x)", true},
	BuiltinDef{"meet_comm", "(x&y) = (y&x)", true},
	BuiltinDef{"join_skew_assoc", "(x|((x|y)|z)) = ((x|y)|z)", true},
	BuiltinDef{"meet_skew_assoc", "(x&((x&y)&z)) = ((x&y)&z)", true},
	BuiltinDef{"join_absorb", "(x|(x&y)) = x", true},
	BuiltinDef{"meet_absorb", "(x&(x|y)) = x", true},
	BuiltinDef{"join_zero", "(x|0) = x", true},
	BuiltinDef{"join_one", "(x|1) = 1", true},
	BuiltinDef{"meet_zero", "(x&0) = 0", true},
	BuiltinDef{"meet_one", "(x&1) = x", true},
	BuiltinDef{"join_idem", "(x|x) = x", true},
	BuiltinDef{"meet_idem", "(x&x) = x", true},
	BuiltinDef{"malcev_p", "((x|(y'&(y|z)))&(z|(y'&(y|x))))", false},
	BuiltinDef{"t", "((x'&(x|y))|(y'&(x|y)))", false},
	BuiltinDef{"t1", "(((x'&(x|y))|(y'&(x|y)))|z)", false},
	BuiltinDef{"t2", "(((x'&(x|y))|(y'&(x|y)))'&z)", false},
};

const BuiltinDef& find_builtin(std::string_view name) {
	for (const auto& b : kBuiltins) {
		if (b.name == name) {
			return b;
		}
	}
	throw Error("unknown built-in '" + std::string(name) + "'");
}

} // namespace

std::variant<Identity, Term> builtin(std::string_view name) {
	const auto& b = find_builtin(name);
	if (b.is_identity) {
		Identity id = parse_identity(b.text);
		id.name = std::string(b.name);
		return id;
	}
	return parse_term(b.text);
}

Identity builtin_identity(std::string_view name) {
	auto v = builtin(name);
	if (auto* id = std::get_if<Identity>(&v)) {
		return std::move(*id);
	}
	throw Error("built-in '" + std::string(name) + "' is a term, not an identity");
}

Term builtin_term(std::string_view name) {
	auto v = builtin(name);
	if (auto* t = std::get_if<Term>(&v)) {
		return std::move(*t);
	}
	throw Error("built-in '" + std::string(name) + "' is an identity, not a term");
}

std::vector<std::string_view> builtin_names() {
	std::vector<std::string_view> out;
	for (const auto& b : kBuiltins) {
		out.push_back(b.name);
	}
	return out;
}

bool check_malcev(const LambdaLattice& l) {
	static const Term p = builtin_term("malcev_p");
	Evaluator ev(l);
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = 0; y < l.size(); ++y) {
			const std::array<Element, 3> xxy{x, x, y};
			const std::array<Element, 3> yxx{y, x, x};
			if (ev(p, xxy) != y || ev(p, yxx) != y) {
				return false;
			}
		}
	}
	return true;
}

bool check_regularity_terms(const LambdaLattice& l) {
	static const Term t = builtin_term("t");
	static const Term t1 = builtin_term("t1");
	static const Term t2 = builtin_term("t2");
	const Element zero = l.bottom();
	Evaluator ev(l);
	for (Element x = 0; x < l.size(); ++x) {
		for (Element y = 0; y < l.size(); ++y) {
			const std::array<Element, 2> xy{x, y};
			if ((x == y) != (ev(t, xy) == zero)) {
				return false;
			}
			for (Element z = 0; z < l.size(); ++z) {
				const std::array<Element, 3> xyz{x, y, z};
				const bool both_z = ev(t1, xyz) == z && ev(t2, xyz) == z;
				if (both_z != (x == y)) {
					return false;
				}
			}
		}
	}
	return true;
}

} // namespace somlat
