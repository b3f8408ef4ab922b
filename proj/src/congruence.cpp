#include "somlat/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "somlat/error.hpp"

namespace somlat {

Congruence::Congruence(std::vector<Element> leader) : leader_(std::move(leader)) {
	for (Element i = 0; i < leader_.size(); ++i) {
		if (leader_[i] > i || leader_[leader_[i]] != leader_[i]) {
			throw StructureError("not a canonical block-leader array");
		}
	}
}

Congruence Congruence::identity(std::size_t n) {
	std::vector<Element> leader(n);
	std::iota(leader.begin(), leader.end(), Element{0});
	return Congruence(std::move(leader));
}

Congruence Congruence::total(std::size_t n) {
	return Congruence(std::vector<Element>(n, 0));
}

std::size_t Congruence::block_count() const {
	std::size_t count = 0;
	for (Element i = 0; i < size(); ++i) {
		count += leader_[i] == i;
	}
	return count;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
	std::vector<std::vector<Element>> out;
	std::vector<std::size_t> slot(size());
	for (Element i = 0; i < size(); ++i) {
		if (leader_[i] == i) {
			slot[i] = out.size();
			out.emplace_back();
		}
		out[slot[leader_[i]]].push_back(i);
	}
	return out;
}

boost::dynamic_bitset<> Congruence::block_of(Element x) const {
	boost::dynamic_bitset<> bits(size());
	for (Element i = 0; i < size(); ++i) {
		if (leader_[i] == leader_[x]) {
			bits.set(i);
		}
	}
	return bits;
}

bool Congruence::refines(const Congruence& other) const {
	for (Element i = 0; i < size(); ++i) {
		if (!other.related(i, leader_[i])) {
			return false;
		}
	}
	return true;
}

bool is_compatible(const LambdaLattice& l, const Congruence& theta) {
	const std::size_t n = l.size();
	for (Element a = 0; a < n; ++a) {
		for (Element b = a + 1; b < n; ++b) {
			if (!theta.related(a, b)) {
				continue;
			}
			if (!theta.related(l.prime(a), l.prime(b))) {
				return false;
			}
			for (Element c = 0; c < n; ++c) {
				if (!theta.related(l.join(a, c), l.join(b, c)) || !theta.related(l.join(c, a), l.join(c, b)) ||
				    !theta.related(l.meet(a, c), l.meet(b, c)) || !theta.related(l.meet(c, a), l.meet(c, b))) {
					return false;
				}
			}
		}
	}
	return true;
}

namespace {

// Union-find whose merges are queued so the closure only revisits new pairs.
class Closure {
public:
	Closure(const LambdaLattice& l) : l_(l), parent_(l.size()) {
		std::iota(parent_.begin(), parent_.end(), Element{0});
	}

	void unite(Element a, Element b) {
		Element ra = find(a), rb = find(b);
		if (ra == rb) {
			return;
		}
		parent_[std::max(ra, rb)] = std::min(ra, rb);
		pending_.emplace_back(a, b);
	}

	// A merged pair (u, v) forces (f(u,c), f(v,c)) for every operation and c;
	// the processed pairs span each block, so this reaches the least congruence.
	Congruence close() {
		while (!pending_.empty()) {
			auto [u, v] = pending_.back();
			pending_.pop_back();
			unite(l_.prime(u), l_.prime(v));
			for (Element c = 0; c < l_.size(); ++c) {
				unite(l_.join(u, c), l_.join(v, c));
				unite(l_.join(c, u), l_.join(c, v));
				unite(l_.meet(u, c), l_.meet(v, c));
				unite(l_.meet(c, u), l_.meet(c, v));
			}
		}
		std::vector<Element> leader(parent_.size());
		for (Element i = 0; i < parent_.size(); ++i) {
			leader[i] = find(i);  // roots are block minima
		}
		return Congruence(std::move(leader));
	}

private:
	Element find(Element x) {
		while (parent_[x] != x) {
			parent_[x] = parent_[parent_[x]];
			x = parent_[x];
		}
		return x;
	}

	const LambdaLattice& l_;
	std::vector<Element> parent_;
	std::vector<std::pair<Element, Element>> pending_;
};

} // namespace

Congruence principal_congruence(const LambdaLattice& l, Element a, Element b) {
	if (a >= l.size() || b >= l.size()) {
		throw StructureError("element out of range");
	}
	Closure cl(l);
	cl.unite(a, b);
	return cl.close();
}

Congruence join(const LambdaLattice& l, const Congruence& theta, const Congruence& phi) {
	Closure cl(l);
	for (Element i = 0; i < l.size(); ++i) {
		cl.unite(i, theta.leader(i));
		cl.unite(i, phi.leader(i));
	}
	return cl.close();
}

Congruence meet(const Congruence& theta, const Congruence& phi) {
	const std::size_t n = theta.size();
	std::vector<Element> leader(n);
	std::map<std::pair<Element, Element>, Element> first;
	for (Element i = 0; i < n; ++i) {
		leader[i] = first.try_emplace({theta.leader(i), phi.leader(i)}, i).first->second;
	}
	return Congruence(std::move(leader));
}

std::optional<std::size_t> CongruenceLattice::index_of(const Congruence& c) const {
	auto it = std::find(members_.begin(), members_.end(), c);
	if (it == members_.end()) {
		return std::nullopt;
	}
	return static_cast<std::size_t>(it - members_.begin());
}

CongruenceLattice all_congruences(const LambdaLattice& l, std::size_t cap) {
	const std::size_t n = l.size();
	std::vector<Congruence> list{Congruence::identity(n)};
	std::set<Congruence> seen{list.front()};
	auto add = [&](Congruence c) {
		if (seen.insert(c).second) {
			if (list.size() == cap) {
				throw CapExceeded("congruence lattice exceeds " + std::to_string(cap) + " members");
			}
			list.push_back(std::move(c));
		}
	};
	for (Element a = 0; a < n; ++a) {
		for (Element b = a + 1; b < n; ++b) {
			add(principal_congruence(l, a, b));
		}
	}
	for (std::size_t i = 0; i < list.size(); ++i) {
		for (std::size_t j = 0; j < i; ++j) {
			add(join(l, list[i], list[j]));
		}
	}
	std::sort(list.begin(), list.end(), [](const Congruence& x, const Congruence& y) {
		auto bx = x.block_count(), by = y.block_count();
		return bx != by ? bx > by : x.leaders() > y.leaders();
	});

	CongruenceLattice con;
	con.members_ = std::move(list);
	const std::size_t m = con.members_.size();
	std::map<Congruence, std::size_t> index;
	for (std::size_t i = 0; i < m; ++i) {
		index.emplace(con.members_[i], i);
	}
	con.join_.resize(m * m);
	con.meet_.resize(m * m);
	for (std::size_t i = 0; i < m; ++i) {
		for (std::size_t j = i; j < m; ++j) {
			auto jn = index.find(join(l, con.members_[i], con.members_[j]));
			auto mt = index.find(meet(con.members_[i], con.members_[j]));
			if (jn == index.end() || mt == index.end()) {
				throw StructureError("congruence lattice is not closed under join/meet");
			}
			con.join_[i * m + j] = con.join_[j * m + i] = jn->second;
			con.meet_[i * m + j] = con.meet_[j * m + i] = mt->second;
		}
	}
	con.bottom_ = index.at(Congruence::identity(n));
	con.top_ = index.at(Congruence::total(n));
	return con;
}

Relation compose(const Congruence& theta, const Congruence& phi) {
	const std::size_t n = theta.size();
	std::vector<boost::dynamic_bitset<>> phi_block(n);
	for (Element b = 0; b < n; ++b) {
		if (phi.leader(b) == b) {
			phi_block[b] = phi.block_of(b);
		}
	}
	Relation out = make_relation(n);
	for (Element a = 0; a < n; ++a) {
		for (Element b = 0; b < n; ++b) {
			if (theta.related(a, b)) {
				out[a] |= phi_block[phi.leader(b)];
			}
		}
	}
	return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_nonpermuting_pair(const CongruenceLattice& con) {
	for (std::size_t i = 0; i < con.size(); ++i) {
		for (std::size_t j = i + 1; j < con.size(); ++j) {
			if (compose(con[i], con[j]) != compose(con[j], con[i])) {
				return std::pair{i, j};
			}
		}
	}
	return std::nullopt;
}

bool is_permutable(const CongruenceLattice& con) {
	return !find_nonpermuting_pair(con);
}

bool is_permutable_instance(const LambdaLattice& l) {
	return is_permutable(all_congruences(l));
}

bool is_regular(const CongruenceLattice& con) {
	if (con.size() == 0) {
		return true;
	}
	const std::size_t n = con[0].size();
	for (Element a = 0; a < n; ++a) {
		std::set<boost::dynamic_bitset<>> blocks;
		for (const auto& c : con.members()) {
			if (!blocks.insert(c.block_of(a)).second) {
				return false;
			}
		}
	}
	return true;
}

bool is_regular_instance(const LambdaLattice& l) {
	return is_regular(all_congruences(l));
}

bool is_distributive(const CongruenceLattice& con) {
	const std::size_t m = con.size();
	for (std::size_t a = 0; a < m; ++a) {
		for (std::size_t b = 0; b < m; ++b) {
			for (std::size_t c = b + 1; c < m; ++c) {
				if (con.meet(a, con.join(b, c)) != con.join(con.meet(a, b), con.meet(a, c))) {
					return false;
				}
			}
		}
	}
	return true;
}

std::string format_blocks(const Congruence& c, const std::vector<std::string>& names) {
	std::ostringstream out;
	bool first_block = true;
	for (const auto& block : c.blocks()) {
		out << (first_block ? "" : " | ");
		first_block = false;
		for (std::size_t i = 0; i < block.size(); ++i) {
			out << (i ? " " : "") << names.at(block[i]);
		}
	}
	return out.str();
}

} // namespace somlat
