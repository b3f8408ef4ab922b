#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "somlat/classes.hpp"
#include "somlat/poset.hpp"

namespace somlat {

/// Finite algebra (L, ⊔, ⊓, ', 0, 1) given by its operation tables.
///
/// Construction only checks that the tables are total and in range; whether
/// they satisfy the lambda-lattice axioms is reported by check_axioms(). That
/// lets the same type carry control algebras with arbitrary operations.
class LambdaLattice {
public:
	LambdaLattice(std::vector<std::string> names, std::vector<Element> join, std::vector<Element> meet,
	              std::vector<Element> prime, Element bottom, Element top);

	std::size_t size() const noexcept { return names_.size(); }
	const std::vector<std::string>& names() const noexcept { return names_; }
	const std::string& name(Element x) const { return names_.at(x); }
	std::optional<Element> find(std::string_view name) const;
	Element at(std::string_view name) const;

	Element join(Element x, Element y) const { return join_[x * size() + y]; }
	Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
	Element prime(Element x) const { return prime_[x]; }
	Element bottom() const noexcept { return bottom_; }
	Element top() const noexcept { return top_; }

	const std::vector<Element>& join_table() const noexcept { return join_; }
	const std::vector<Element>& meet_table() const noexcept { return meet_; }
	const std::vector<Element>& prime_map() const noexcept { return prime_; }

	/// Writes x⊔y and y⊔x (resp. ⊓). Used by the assignment enumerator.
	void set_join(Element x, Element y, Element v) { join_[x * size() + y] = join_[y * size() + x] = v; }
	void set_meet(Element x, Element y, Element v) { meet_[x * size() + y] = meet_[y * size() + x] = v; }

	friend bool operator==(const LambdaLattice&, const LambdaLattice&) = default;

private:
	std::vector<std::string> names_;
	std::vector<Element> join_;
	std::vector<Element> meet_;
	std::vector<Element> prime_;
	Element bottom_;
	Element top_;
};

struct AxiomResult {
	std::string name;
	std::string identity;  // DSL spelling, for reports
	bool derived;          // consequence of the defining axioms rather than one of them
	bool passed;
	std::vector<Element> first_failure;  // valuation of x, y, z (as many as the identity uses)
};

struct AxiomReport {
	std::vector<AxiomResult> results;

	bool axioms_hold() const;  ///< the eight defining identities
	bool all_hold() const;     ///< defining and derived
	const AxiomResult* find(std::string_view name) const;
};

/// Exhaustive check of the eight defining identities plus the derived laws
/// x⊓0=0, x⊓1=x, x⊔x=x, x⊓x=x.
AxiomReport check_axioms(const LambdaLattice& l);

/// Induced poset: x <= y iff x⊔y = y. Throws StructureError if the join and
/// meet orders disagree or the relation is not a bounded partial order.
Poset induced_poset(const LambdaLattice& l);

/// Membership of the induced poset in a poset class.
bool in_class(const LambdaLattice& l, PosetClass c);

/// Parses `lambda` (full tables) and `lambda partial` (covers plus listed
/// choices, completed from sup/inf) files. Throws FormatError.
LambdaLattice parse_lambda(std::string_view text);

/// Serializes with full tables; parse_lambda inverts it.
std::string to_text(const LambdaLattice& l);

} // namespace somlat
