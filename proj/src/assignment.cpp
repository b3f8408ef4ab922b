#include "somlat/assignment.hpp"

#include <random>

#include "somlat/error.hpp"

namespace somlat {

const ChoiceSlot& ChoiceSpace::slot(std::size_t i) const {
	return i < sup_free.size() ? sup_free.at(i) : inf_free.at(i - sup_free.size());
}

namespace {

ChoiceSpace build_space(const Poset& p, bool all_incomparable) {
	ChoiceSpace space;
	space.count = 1;
	for (Element x = 0; x < p.size(); ++x) {
		for (Element y = x + 1; y < p.size(); ++y) {
			const bool free = all_incomparable && !p.comparable(x, y);
			if (free || !p.sup(x, y)) {
				space.sup_free.push_back({x, y, p.upper_bounds(x, y).elements()});
				space.count *= space.sup_free.back().candidates.size();
			}
			if (free || !p.inf(x, y)) {
				space.inf_free.push_back({x, y, p.lower_bounds(x, y).elements()});
				space.count *= space.inf_free.back().candidates.size();
			}
		}
	}
	return space;
}

} // namespace

ChoiceSpace choice_space(const Poset& p) {
	return build_space(p, false);
}

ChoiceSpace lambda_choice_space(const Poset& p) {
	return build_space(p, true);
}

namespace {

// Tables with sup/inf filled in; free slots hold their first candidate.
LambdaLattice base_assignment(const Poset& p, const ChoiceSpace& space) {
	const std::size_t n = p.size();
	std::vector<Element> join(n * n), meet(n * n);
	for (Element x = 0; x < n; ++x) {
		for (Element y = 0; y < n; ++y) {
			join[x * n + y] = p.sup(x, y).value_or(npos);
			meet[x * n + y] = p.inf(x, y).value_or(npos);
		}
	}
	for (const auto& s : space.sup_free) {
		join[s.x * n + s.y] = join[s.y * n + s.x] = s.candidates.front();
	}
	for (const auto& s : space.inf_free) {
		meet[s.x * n + s.y] = meet[s.y * n + s.x] = s.candidates.front();
	}
	return LambdaLattice(p.names(), std::move(join), std::move(meet), p.prime_map(), p.bottom(), p.top());
}

void apply(LambdaLattice& l, const ChoiceSpace& space, std::size_t slot, std::size_t choice) {
	const auto& s = space.slot(slot);
	if (space.is_sup_slot(slot)) {
		l.set_join(s.x, s.y, s.candidates.at(choice));
	} else {
		l.set_meet(s.x, s.y, s.candidates.at(choice));
	}
}

} // namespace

LambdaLattice assignment_from_choices(const Poset& p, const ChoiceSpace& space, std::span<const std::size_t> choice) {
	if (choice.size() != space.slot_count()) {
		throw StructureError("choice vector length does not match the number of free slots");
	}
	LambdaLattice l = base_assignment(p, space);
	for (std::size_t i = 0; i < choice.size(); ++i) {
		apply(l, space, i, choice[i]);
	}
	return l;
}

std::uint64_t enumerate_space(const Poset& p, const ChoiceSpace& space,
                              const std::function<bool(const LambdaLattice&)>& visit) {
	LambdaLattice l = base_assignment(p, space);
	const std::size_t k = space.slot_count();
	std::vector<std::size_t> digit(k, 0);
	std::uint64_t visited = 0;
	while (true) {
		++visited;
		if (!visit(l)) {
			return visited;
		}
		// odometer step: last slot fastest
		std::size_t i = k;
		while (true) {
			if (i == 0) {
				return visited;
			}
			--i;
			if (++digit[i] < space.slot(i).candidates.size()) {
				apply(l, space, i, digit[i]);
				break;
			}
			digit[i] = 0;
			apply(l, space, i, 0);
		}
	}
}

std::uint64_t enumerate_assignments(const Poset& p, const std::function<bool(const LambdaLattice&)>& visit,
                                    const EnumerationOptions& opts) {
	const ChoiceSpace space = choice_space(p);
	if (!opts.force && space.count > opts.cap) {
		throw CapExceeded("assignment count " + space.count.str() + " exceeds the cap of " + std::to_string(opts.cap));
	}
	return enumerate_space(p, space, visit);
}

std::vector<LambdaLattice> sample_assignments(const Poset& p, std::size_t count, std::uint64_t seed) {
	const ChoiceSpace space = choice_space(p);
	std::mt19937_64 rng(seed);
	std::vector<LambdaLattice> out;
	out.reserve(count);
	LambdaLattice l = base_assignment(p, space);
	for (std::size_t s = 0; s < count; ++s) {
		for (std::size_t i = 0; i < space.slot_count(); ++i) {
			std::uniform_int_distribution<std::size_t> pick(0, space.slot(i).candidates.size() - 1);
			apply(l, space, i, pick(rng));
		}
		out.push_back(l);
	}
	return out;
}

LambdaLattice sample_assignment(const Poset& p, std::uint64_t seed) {
	return std::move(sample_assignments(p, 1, seed).front());
}

bool is_assigned_to(const LambdaLattice& l, const Poset& p) {
	if (l.names() != p.names()) {
		throw StructureError("carrier mismatch between algebra and poset");
	}
	if (l.prime_map() != p.prime_map() || l.bottom() != p.bottom() || l.top() != p.top()) {
		return false;
	}
	for (Element x = 0; x < p.size(); ++x) {
		for (Element y = 0; y < p.size(); ++y) {
			const Element j = l.join(x, y);
			const Element m = l.meet(x, y);
			if (j != l.join(y, x) || m != l.meet(y, x)) {
				return false;
			}
			if (auto s = p.sup(x, y); s ? j != *s : !p.upper_bounds(x, y).contains(j)) {
				return false;
			}
			if (auto i = p.inf(x, y); i ? m != *i : !p.lower_bounds(x, y).contains(m)) {
				return false;
			}
		}
	}
	return true;
}

std::string_view to_string(Regime r) {
	return r == Regime::exhaustive ? "exhaustive" : "sampled";
}

Coverage visit_assignments(const Poset& p, const CoveragePolicy& policy,
                           const std::function<bool(const LambdaLattice&)>& visit) {
	const ChoiceSpace space = choice_space(p);
	if (space.count <= policy.cap) {
		auto n = enumerate_assignments(p, visit, {policy.cap, true});
		return {Regime::exhaustive, n, space.count};
	}
	std::uint64_t n = 0;
	for (const auto& l : sample_assignments(p, policy.samples, policy.seed)) {
		++n;
		if (!visit(l)) {
			break;
		}
	}
	return {Regime::sampled, n, space.count};
}

} // namespace somlat
