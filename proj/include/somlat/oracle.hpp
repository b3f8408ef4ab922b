#pragma once

// Deliberately naive reference computations. Each one re-derives a result
// from definitions alone, without sharing code paths with the routines it is
// used to cross-check.

#include <optional>
#include <utility>
#include <vector>

#include "somlat/assignment.hpp"
#include "somlat/congruence.hpp"
#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"
#include "somlat/term.hpp"

namespace somlat::oracle {

/// Least upper bound by scanning the transposed (>=) relation.
std::optional<Element> sup(const Poset& p, Element a, Element b);
std::optional<Element> inf(const Poset& p, Element a, Element b);

/// Cover edges: (x, z) with x < z and no y with x < y < z.
std::vector<std::pair<Element, Element>> transitive_reduction(const Poset& p);

/// Product over unordered pairs lacking a sup (inf) of |U| (|L|).
BigInt assignment_count(const Poset& p);

/// Every partition of the carrier compatible with the operations, via
/// restricted growth strings. Only feasible for small carriers.
std::vector<Congruence> congruences(const LambdaLattice& l);

/// Least compatible partition relating a and b, from the full enumeration.
Congruence principal(const LambdaLattice& l, Element a, Element b);
/// Same, reusing a list previously returned by congruences().
Congruence principal(const std::vector<Congruence>& all, Element a, Element b);

/// Recursive tree-walking evaluation from the root.
Element eval(const Term& t, const LambdaLattice& l, const std::vector<Element>& env);

/// Identity check by recursive evaluation over every valuation.
bool holds(const Identity& id, const LambdaLattice& l);

/// Scans all 5-element subsets of Con for a sublattice isomorphic to M3 or N5.
bool has_m3_or_n5(const CongruenceLattice& con);

/// On a lattice: x ∨ (x' ∧ (x ∨ y)) = x ∨ y for all x, y.
bool orthomodular_law(const Poset& lattice);

} // namespace somlat::oracle
