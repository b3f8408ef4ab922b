#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "somlat/lambda_lattice.hpp"

namespace somlat {

/// Terms over {⊔, ⊓, ', 0, 1} and variables.
///
/// Concrete syntax, with mandatory parentheses around every binary node:
///
///     term := var | '0' | '1' | term "'" | '(' term '|' term ')' | '(' term '&' term ')'
///     var  := 'x' | 'y' | 'z' | 'w' | 'x' digits
///
/// Nodes are stored in post-order in a flat array, so evaluation is a single
/// forward sweep. Variables are numbered by first appearance.
class Term {
public:
	enum class Kind : std::uint8_t { var, zero, one, prime, join, meet };

	struct Node {
		Kind kind;
		std::uint32_t a = 0;  // variable index, or first child
		std::uint32_t b = 0;  // second child

		friend bool operator==(const Node&, const Node&) = default;
	};

	Term() = default;
	Term(std::vector<Node> nodes, std::vector<std::string> variables);

	const std::vector<Node>& nodes() const noexcept { return nodes_; }
	std::size_t root() const noexcept { return nodes_.size() - 1; }
	/// Variable names by index. For a side of an Identity this is the
	/// identity's full variable list.
	const std::vector<std::string>& variables() const noexcept { return variables_; }
	std::size_t arity() const noexcept { return variables_.size(); }

	friend bool operator==(const Term&, const Term&) = default;

private:
	std::vector<Node> nodes_;
	std::vector<std::string> variables_;
};

struct Identity {
	std::string name;  // empty unless built-in or named by the caller
	Term lhs;
	Term rhs;

	std::size_t arity() const noexcept { return lhs.arity(); }
	friend bool operator==(const Identity& a, const Identity& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
};

inline constexpr std::size_t kMaxVariables = 8;

/// Throws SyntaxError (byte offset) on malformed input or more than kMaxVariables variables.
Term parse_term(std::string_view text);
Identity parse_identity(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Identity& id);

/// Bottom-up evaluation. `env[i]` is the value of variable i. Throws
/// StructureError when env is too short or holds an out-of-range element.
Element eval(const Term& t, const LambdaLattice& l, std::span<const Element> env);

/// Evaluates with a reusable scratch buffer; for hot loops.
class Evaluator {
public:
	explicit Evaluator(const LambdaLattice& l) : l_(l) {}
	Element operator()(const Term& t, std::span<const Element> env);

private:
	const LambdaLattice& l_;
	std::vector<Element> scratch_;
};

struct Counterexample {
	std::string identity;
	std::vector<std::string> variables;
	std::vector<Element> valuation;
	Element lhs;
	Element rhs;

	std::string describe(const LambdaLattice& l) const;
};

struct HoldsResult {
	bool holds;
	std::optional<Counterexample> counterexample;  // lexicographically first
	explicit operator bool() const noexcept { return holds; }
};

/// Exhaustive over all |L|^arity valuations, first variable most significant.
HoldsResult holds(const Identity& id, const LambdaLattice& l);

/// Built-in identities (eq1..eq5, the complement pair, lambda-lattice axioms)
/// and terms (malcev_p, t, t1, t2). Throws Error for unknown names.
std::variant<Identity, Term> builtin(std::string_view name);
Identity builtin_identity(std::string_view name);
Term builtin_term(std::string_view name);
std::vector<std::string_view> builtin_names();

/// p(x,x,y) = p(y,x,x) = y for all x, y.
bool check_malcev(const LambdaLattice& l);

/// t(x,x) = 0; t(x,y) = 0 implies x = y; t1(x,x,z) = t2(x,x,z) = z; and
/// t1(x,y,z) = t2(x,y,z) = z implies x = y.
bool check_regularity_terms(const LambdaLattice& l);

} // namespace somlat
