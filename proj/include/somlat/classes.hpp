#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "somlat/poset.hpp"

namespace somlat {

/// The four nested classes, coarsest first. `none` means not complemented.
enum class PosetClass { none, complemented, orthogonal, almost_skew_orthomodular, skew_orthomodular };

std::string_view to_string(PosetClass c);
std::optional<PosetClass> parse_poset_class(std::string_view s);

enum class WitnessKind {
	missing_sup,
	missing_inf,
	wrong_complement_join,
	wrong_complement_meet,
	orthomodular_violation,
};

std::string_view to_string(WitnessKind k);

/// First failure found by a class predicate.
///
/// `subject` holds the quantified elements (x, or x and y). `query` is the
/// sup/inf call that failed or produced `actual`; for an orthomodular
/// violation it is the outer sup(x, inf(x', y)) whose value `actual` differs
/// from `expected` = y.
struct Witness {
	WitnessKind kind;
	PosetClass failed;
	std::vector<Element> subject;
	std::pair<Element, Element> query;
	std::optional<Element> expected;
	std::optional<Element> actual;

	std::string describe(const Poset& p) const;
};

/// Re-runs the sup/inf queries behind a witness; true iff it still fails.
bool reverify(const Poset& p, const Witness& w);

struct ClassCheck {
	bool holds;
	std::optional<Witness> witness;

	explicit operator bool() const noexcept { return holds; }
};

ClassCheck is_complemented(const Poset& p);
/// All (x, y) with x <= y'.
std::vector<std::pair<Element, Element>> orthogonal_pairs(const Poset& p);
ClassCheck is_orthogonal(const Poset& p);
ClassCheck is_almost_skew_orthomodular(const Poset& p);
ClassCheck is_skew_orthomodular(const Poset& p);
ClassCheck check_class(const Poset& p, PosetClass c);

bool is_lattice(const Poset& p);

struct ClassReport {
	PosetClass label;
	/// One entry per class the poset fails, coarsest first.
	std::vector<std::pair<PosetClass, Witness>> witnesses;

	bool in(PosetClass c) const;
	const Witness* witness_for(PosetClass c) const;
};

ClassReport classify(const Poset& p);

} // namespace somlat
