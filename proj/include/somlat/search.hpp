#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"

namespace somlat {

/// Calls `visit` on every bounded poset with `n` elements named 0, m1.., 1
/// (labelled, not up to isomorphism); the prime is the identity. Stops when
/// `visit` returns false.
void for_each_bounded_poset(std::size_t n, const std::function<bool(const Poset&)>& visit);

struct ComplementGapSearch {
	/// Largest size for which every lambda-lattice was examined without a hit.
	std::size_t clear_up_to = 0;
	std::uint64_t examined = 0;
	/// A lambda-lattice satisfying x⊔x'=1 and x⊓x'=0 whose induced poset is
	/// not complemented, of the smallest size found.
	std::optional<LambdaLattice> witness;
};

/// Exhaustive search over sizes 2..max_size, stopping at the first witness.
/// With `assigned_only` only lambda-lattices assigned to their induced poset
/// are examined.
ComplementGapSearch find_complement_gap(std::size_t max_size, bool assigned_only = false);

} // namespace somlat
