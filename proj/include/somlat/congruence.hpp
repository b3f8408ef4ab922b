#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "somlat/lambda_lattice.hpp"

namespace somlat {

/// Partition of 0..n-1 in block-leader form: leader[i] is the least element
/// of i's block.
class Congruence {
public:
	explicit Congruence(std::vector<Element> leader);

	static Congruence identity(std::size_t n);  ///< Δ
	static Congruence total(std::size_t n);     ///< ∇

	std::size_t size() const noexcept { return leader_.size(); }
	Element leader(Element x) const { return leader_[x]; }
	const std::vector<Element>& leaders() const noexcept { return leader_; }
	bool related(Element a, Element b) const { return leader_[a] == leader_[b]; }
	std::size_t block_count() const;
	std::vector<std::vector<Element>> blocks() const;
	/// Members of x's block, as a bit set.
	boost::dynamic_bitset<> block_of(Element x) const;
	/// Refinement order: every block of *this lies inside a block of other.
	bool refines(const Congruence& other) const;

	friend auto operator<=>(const Congruence&, const Congruence&) = default;

private:
	std::vector<Element> leader_;
};

/// θ is compatible with ⊔, ⊓ (in both argument positions) and '.
bool is_compatible(const LambdaLattice& l, const Congruence& theta);

/// Least congruence containing (a, b).
Congruence principal_congruence(const LambdaLattice& l, Element a, Element b);

/// Least congruence containing both.
Congruence join(const LambdaLattice& l, const Congruence& theta, const Congruence& phi);
/// Block-wise intersection.
Congruence meet(const Congruence& theta, const Congruence& phi);

inline constexpr std::size_t kDefaultCongruenceCap = 100'000;

/// Con L: every congruence, with index tables for its lattice operations.
class CongruenceLattice {
public:
	const std::vector<Congruence>& members() const noexcept { return members_; }
	std::size_t size() const noexcept { return members_.size(); }
	const Congruence& operator[](std::size_t i) const { return members_[i]; }
	std::size_t bottom() const noexcept { return bottom_; }
	std::size_t top() const noexcept { return top_; }
	std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
	std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
	std::optional<std::size_t> index_of(const Congruence& c) const;

private:
	friend CongruenceLattice all_congruences(const LambdaLattice&, std::size_t);

	std::vector<Congruence> members_;
	std::vector<std::size_t> join_;
	std::vector<std::size_t> meet_;
	std::size_t bottom_ = 0;
	std::size_t top_ = 0;
};

/// Closure of {Δ} ∪ principal congruences under join; sorted with the
/// finest partitions first. Throws CapExceeded past `cap` members.
CongruenceLattice all_congruences(const LambdaLattice& l, std::size_t cap = kDefaultCongruenceCap);

/// Relational composition {(a,c) : a θ b φ c for some b}.
Relation compose(const Congruence& theta, const Congruence& phi);

bool is_permutable_instance(const LambdaLattice& l);
bool is_permutable(const CongruenceLattice& con);
/// First pair (i, j) of Con members whose compositions differ.
std::optional<std::pair<std::size_t, std::size_t>> find_nonpermuting_pair(const CongruenceLattice& con);

bool is_regular_instance(const LambdaLattice& l);
bool is_regular(const CongruenceLattice& con);

bool is_distributive(const CongruenceLattice& con);

std::string format_blocks(const Congruence& c, const std::vector<std::string>& names);

} // namespace somlat
