#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"

namespace somlat {

using BigInt = boost::multiprecision::cpp_int;

/// One free choice: an unordered incomparable pair {x, y} (x < y as indices)
/// lacking a sup (resp. inf), with its candidate set U(x,y) (resp. L(x,y)).
struct ChoiceSlot {
	Element x;
	Element y;
	std::vector<Element> candidates;
};

/// The free choices defining the set of lambda-lattices assigned to a poset.
struct ChoiceSpace {
	std::vector<ChoiceSlot> sup_free;
	std::vector<ChoiceSlot> inf_free;
	BigInt count;

	std::size_t slot_count() const { return sup_free.size() + inf_free.size(); }
	/// Slot i in enumeration order: sup slots first, then inf slots.
	const ChoiceSlot& slot(std::size_t i) const;
	bool is_sup_slot(std::size_t i) const { return i < sup_free.size(); }
};

ChoiceSpace choice_space(const Poset& p);

/// Like choice_space but every incomparable pair is free, including those
/// with a sup (inf). Its members are all lambda-lattices inducing `p`.
ChoiceSpace lambda_choice_space(const Poset& p);

/// The assigned algebra selecting candidate `choice[i]` in slot i.
LambdaLattice assignment_from_choices(const Poset& p, const ChoiceSpace& space, std::span<const std::size_t> choice);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::size_t kDefaultSampleCount = 1000;

struct EnumerationOptions {
	std::uint64_t cap = kDefaultEnumerationCap;
	bool force = false;
};

/// Calls `visit` on every assigned lambda-lattice exactly once, in
/// lexicographic order of choice indices (last slot varies fastest). The
/// reference passed to `visit` is only valid during the call. Returning
/// false from `visit` stops the enumeration. Returns the number visited.
/// Throws CapExceeded when the count is above `opts.cap` and not forced.
std::uint64_t enumerate_assignments(const Poset& p, const std::function<bool(const LambdaLattice&)>& visit,
                                    const EnumerationOptions& opts = {});

/// Enumerates an arbitrary choice space over `p` without a cap.
std::uint64_t enumerate_space(const Poset& p, const ChoiceSpace& space,
                              const std::function<bool(const LambdaLattice&)>& visit);

/// Uniform independent choice per slot from a mt19937_64 stream seeded with `seed`.
LambdaLattice sample_assignment(const Poset& p, std::uint64_t seed);

/// `count` samples drawn from a single stream seeded with `seed`; the first
/// equals sample_assignment(p, seed).
std::vector<LambdaLattice> sample_assignments(const Poset& p, std::size_t count, std::uint64_t seed);

/// True iff l's operations agree with sup/inf where they exist, pick common
/// upper/lower bounds elsewhere, and l's prime and bounds match p. Throws
/// StructureError when the carriers differ.
bool is_assigned_to(const LambdaLattice& l, const Poset& p);

enum class Regime { exhaustive, sampled };

std::string_view to_string(Regime r);

/// How to quantify over all assigned algebras: exhaustively when the count
/// is within `cap`, otherwise `samples` seeded draws.
struct CoveragePolicy {
	std::uint64_t cap = kDefaultEnumerationCap;
	std::size_t samples = kDefaultSampleCount;
	std::uint64_t seed = 1;
};

struct Coverage {
	Regime regime;
	std::uint64_t visited;
	BigInt total;
};

/// Visits every member (exhaustive) or a seeded sample, per `policy`.
/// `visit` returning false stops early.
Coverage visit_assignments(const Poset& p, const CoveragePolicy& policy,
                           const std::function<bool(const LambdaLattice&)>& visit);

} // namespace somlat
