#include "somlat/search.hpp"

#include <numeric>

#include "somlat/assignment.hpp"
#include "somlat/classes.hpp"

namespace somlat {

void for_each_bounded_poset(std::size_t n, const std::function<bool(const Poset&)>& visit) {
	if (n < 2) {
		return;
	}
	const std::size_t k = n - 2;
	std::vector<std::string> names{"0"};
	for (std::size_t i = 1; i <= k; ++i) {
		names.push_back("m" + std::to_string(i));
	}
	names.push_back("1");
	std::vector<std::pair<std::size_t, std::size_t>> cells;
	for (std::size_t i = 0; i < k; ++i) {
		for (std::size_t j = 0; j < k; ++j) {
			if (i != j) {
				cells.emplace_back(i, j);
			}
		}
	}
	std::vector<Element> prime(n);
	std::iota(prime.begin(), prime.end(), Element{0});
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
		Relation r = make_relation(k);
		for (std::size_t c = 0; c < cells.size(); ++c) {
			if (mask >> c & 1) {
				r[cells[c].first].set(cells[c].second);
			}
		}
		// keep only masks that are already transitive and antisymmetric
		bool order = true;
		for (std::size_t i = 0; i < k && order; ++i) {
			for (std::size_t j = 0; j < k && order; ++j) {
				if (!r[i].test(j)) {
					continue;
				}
				order = !r[j].test(i) && (r[j] & ~r[i]).none();
			}
		}
		if (!order) {
			continue;
		}
		Relation leq = make_relation(n);
		for (Element x = 0; x < n; ++x) {
			leq[0].set(x);
			leq[x].set(n - 1);
			leq[x].set(x);
		}
		for (std::size_t i = 0; i < k; ++i) {
			for (std::size_t j = 0; j < k; ++j) {
				if (r[i].test(j)) {
					leq[i + 1].set(j + 1);
				}
			}
		}
		if (!visit(Poset(names, std::move(leq), prime, 0, n - 1))) {
			return;
		}
	}
}

ComplementGapSearch find_complement_gap(std::size_t max_size, bool assigned_only) {
	ComplementGapSearch out;
	for (std::size_t n = 2; n <= max_size && !out.witness; ++n) {
		for_each_bounded_poset(n, [&](const Poset& p) {
			enumerate_space(p, assigned_only ? choice_space(p) : lambda_choice_space(p), [&](const LambdaLattice& l) {
				++out.examined;
				// per element, the primes making both identities true at x
				std::vector<std::optional<Element>> good(n), bad(n);
				bool any_bad = false;
				for (Element x = 0; x < n; ++x) {
					for (Element y = 0; y < n; ++y) {
						if (l.join(x, y) != l.top() || l.meet(x, y) != l.bottom()) {
							continue;
						}
						auto& slot = p.sup(x, y) == p.top() && p.inf(x, y) == p.bottom() ? good[x] : bad[x];
						slot = slot.value_or(y);
					}
					if (!good[x] && !bad[x]) {
						return true;
					}
					any_bad = any_bad || bad[x];
				}
				if (!any_bad) {
					return true;
				}
				std::vector<Element> prime(n);
				bool placed = false;
				for (Element x = 0; x < n; ++x) {
					if (bad[x] && (!placed || !good[x])) {
						prime[x] = *bad[x];
						placed = true;
					} else {
						prime[x] = *good[x];
					}
				}
				out.witness = LambdaLattice(l.names(), l.join_table(), l.meet_table(), prime, l.bottom(), l.top());
				return false;
			});
			return !out.witness;
		});
		if (!out.witness) {
			out.clear_up_to = n;
		}
	}
	return out;
}

} // namespace somlat
