#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace somlat {

/// Elements are dense indices 0..n-1 into a structure's name list.
using Element = std::size_t;

/// Square boolean relation stored as bit rows: `rel[x][y]` is (x, y) in rel.
using Relation = std::vector<boost::dynamic_bitset<>>;

Relation make_relation(std::size_t n);
/// Reflexive-transitive closure (Warshall over bit rows).
Relation reflexive_transitive_closure(Relation rel);

enum class BoundKind { lower, upper };

/// Common lower (resp. upper) bounds of a pair.
struct BoundSet {
	BoundKind kind;
	boost::dynamic_bitset<> members;

	bool contains(Element x) const { return members.test(x); }
	std::size_t size() const { return members.count(); }
	std::vector<Element> elements() const;
};

/// Finite bounded poset (P, <=, ', 0, 1). The unary operation is arbitrary:
/// it need not be antitone, an involution or a complementation.
///
/// Instances are immutable once built; sup/inf of every pair are tabulated
/// at construction so queries are O(1).
class Poset {
public:
	/// Validates that `leq` is a partial order and that bottom/top are its
	/// least and greatest elements. Throws StructureError otherwise.
	Poset(std::vector<std::string> names, Relation leq, std::vector<Element> prime,
	      Element bottom, Element top);

	std::size_t size() const noexcept { return names_.size(); }
	const std::vector<std::string>& names() const noexcept { return names_; }
	const std::string& name(Element x) const { return names_.at(x); }
	std::optional<Element> find(std::string_view name) const;
	/// Like find() but throws StructureError for unknown names.
	Element at(std::string_view name) const;

	bool leq(Element x, Element y) const { return leq_[x].test(y); }
	bool less(Element x, Element y) const { return x != y && leq(x, y); }
	bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
	const Relation& relation() const noexcept { return leq_; }

	Element prime(Element x) const { return prime_.at(x); }
	const std::vector<Element>& prime_map() const noexcept { return prime_; }
	Element bottom() const noexcept { return bottom_; }
	Element top() const noexcept { return top_; }

	BoundSet lower_bounds(Element a, Element b) const;
	BoundSet upper_bounds(Element a, Element b) const;
	std::optional<Element> sup(Element a, Element b) const;
	std::optional<Element> inf(Element a, Element b) const;

	bool is_antitone() const;
	bool is_involution() const;

	/// Cover pairs (x, y), x covered by y, in element order.
	std::vector<std::pair<Element, Element>> covers() const;

	friend bool operator==(const Poset&, const Poset&);

private:
	void check(Element x) const;

	std::vector<std::string> names_;
	Relation leq_;
	Relation geq_;
	std::vector<Element> prime_;
	Element bottom_;
	Element top_;
	// n*n tables; npos marks an absent sup/inf.
	std::vector<Element> sup_;
	std::vector<Element> inf_;
};

inline constexpr Element npos = static_cast<Element>(-1);

/// Parses the line-based poset file format. Throws FormatError.
Poset parse_poset(std::string_view text);

/// Serializes to the poset file format (covers only); parse_poset inverts it.
std::string to_text(const Poset& p);

/// DOT digraph of the cover relation with `x / x'=y` node labels.
std::string to_dot(const Poset& p, std::string_view graph_name = "poset");

} // namespace somlat
