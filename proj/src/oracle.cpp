#include "somlat/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "somlat/error.hpp"

namespace somlat::oracle {

std::optional<Element> sup(const Poset& p, Element a, Element b) {
	const std::size_t n = p.size();
	// geq[v][u] == (u <= v)
	std::vector<std::vector<bool>> geq(n, std::vector<bool>(n));
	for (Element u = 0; u < n; ++u) {
		for (Element v = 0; v < n; ++v) {
			geq[v][u] = p.relation()[u][v];
		}
	}
	std::vector<Element> ub;
	for (Element u = 0; u < n; ++u) {
		if (geq[u][a] && geq[u][b]) {
			ub.push_back(u);
		}
	}
	for (Element u : ub) {
		bool least = true;
		for (Element v : ub) {
			least = least && geq[v][u];
		}
		if (least) {
			return u;
		}
	}
	return std::nullopt;
}

std::optional<Element> inf(const Poset& p, Element a, Element b) {
	const std::size_t n = p.size();
	std::vector<Element> lb;
	for (Element l = 0; l < n; ++l) {
		if (p.relation()[l][a] && p.relation()[l][b]) {
			lb.push_back(l);
		}
	}
	for (Element l : lb) {
		bool greatest = true;
		for (Element v : lb) {
			greatest = greatest && p.relation()[v][l];
		}
		if (greatest) {
			return l;
		}
	}
	return std::nullopt;
}

std::vector<std::pair<Element, Element>> transitive_reduction(const Poset& p) {
	std::vector<std::pair<Element, Element>> out;
	const std::size_t n = p.size();
	for (Element x = 0; x < n; ++x) {
		for (Element z = 0; z < n; ++z) {
			if (x == z || !p.relation()[x][z]) {
				continue;
			}
			bool between = false;
			for (Element y = 0; y < n; ++y) {
				between = between || (y != x && y != z && p.relation()[x][y] && p.relation()[y][z]);
			}
			if (!between) {
				out.emplace_back(x, z);
			}
		}
	}
	return out;
}

BigInt assignment_count(const Poset& p) {
	BigInt count = 1;
	const std::size_t n = p.size();
	for (Element x = 0; x < n; ++x) {
		for (Element y = x + 1; y < n; ++y) {
			std::size_t ub = 0, lb = 0;
			for (Element u = 0; u < n; ++u) {
				ub += p.relation()[x][u] && p.relation()[y][u];
				lb += p.relation()[u][x] && p.relation()[u][y];
			}
			if (!sup(p, x, y)) {
				count *= ub;
			}
			if (!inf(p, x, y)) {
				count *= lb;
			}
		}
	}
	return count;
}

namespace {

bool compatible(const LambdaLattice& l, const std::vector<Element>& block) {
	const std::size_t n = l.size();
	auto same = [&](Element a, Element b) { return block[a] == block[b]; };
	for (Element a = 0; a < n; ++a) {
		for (Element b = 0; b < n; ++b) {
			if (!same(a, b)) {
				continue;
			}
			if (!same(l.prime(a), l.prime(b))) {
				return false;
			}
			for (Element c = 0; c < n; ++c) {
				if (!same(l.join(a, c), l.join(b, c)) || !same(l.join(c, a), l.join(c, b)) ||
				    !same(l.meet(a, c), l.meet(b, c)) || !same(l.meet(c, a), l.meet(c, b))) {
					return false;
				}
			}
		}
	}
	return true;
}

Congruence from_growth_string(const std::vector<Element>& block) {
	std::vector<Element> leader(block.size());
	std::vector<Element> first(block.size(), npos);
	for (Element i = 0; i < block.size(); ++i) {
		if (first[block[i]] == npos) {
			first[block[i]] = i;
		}
		leader[i] = first[block[i]];
	}
	return Congruence(std::move(leader));
}

} // namespace

std::vector<Congruence> congruences(const LambdaLattice& l) {
	const std::size_t n = l.size();
	if (n > 10) {
		throw StructureError("brute-force partition enumeration is limited to 10 elements");
	}
	std::vector<Congruence> out;
	std::vector<Element> block(n, 0);
	std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element used) {
		if (i == n) {
			if (compatible(l, block)) {
				out.push_back(from_growth_string(block));
			}
			return;
		}
		for (Element b = 0; b <= used; ++b) {
			block[i] = b;
			rec(i + 1, std::max(used, b + 1));
		}
	};
	block[0] = 0;
	rec(1, 1);
	return out;
}

Congruence principal(const std::vector<Congruence>& all, Element a, Element b) {
	std::optional<Congruence> least;
	for (const auto& c : all) {
		if (c.related(a, b) && (!least || c.refines(*least))) {
			least = c;
		}
	}
	if (!least) {
		throw StructureError("no congruence relates the pair");
	}
	// the least one must refine every candidate
	for (const auto& c : all) {
		if (c.related(a, b) && !least->refines(c)) {
			throw StructureError("no least congruence found");
		}
	}
	return *least;
}

Congruence principal(const LambdaLattice& l, Element a, Element b) {
	return principal(congruences(l), a, b);
}

namespace {

Element eval_node(const Term& t, std::size_t i, const LambdaLattice& l, const std::vector<Element>& env) {
	const auto& node = t.nodes()[i];
	switch (node.kind) {
	case Term::Kind::var: return env.at(node.a);
	case Term::Kind::zero: return l.bottom();
	case Term::Kind::one: return l.top();
	case Term::Kind::prime: return l.prime(eval_node(t, node.a, l, env));
	case Term::Kind::join: return l.join(eval_node(t, node.a, l, env), eval_node(t, node.b, l, env));
	case Term::Kind::meet: return l.meet(eval_node(t, node.a, l, env), eval_node(t, node.b, l, env));
	}
	return npos;
}

} // namespace

Element eval(const Term& t, const LambdaLattice& l, const std::vector<Element>& env) {
	return eval_node(t, t.root(), l, env);
}

bool holds(const Identity& id, const LambdaLattice& l) {
	std::vector<Element> env;
	std::function<bool(std::size_t)> rec = [&](std::size_t depth) {
		if (depth == id.arity()) {
			return eval(id.lhs, l, env) == eval(id.rhs, l, env);
		}
		for (Element e = 0; e < l.size(); ++e) {
			env.push_back(e);
			bool ok = rec(depth + 1);
			env.pop_back();
			if (!ok) {
				return false;
			}
		}
		return true;
	};
	return rec(0);
}

namespace {

// Checks whether the labelled 5-tuple (o, a, b, c, i) is a copy of M3 or N5.
bool is_m3(const CongruenceLattice& con, const std::array<std::size_t, 5>& e) {
	auto [o, a, b, c, i] = e;
	for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
		if (con.join(x, y) != i || con.meet(x, y) != o) {
			return false;
		}
	}
	return true;
}

bool is_n5(const CongruenceLattice& con, const std::array<std::size_t, 5>& e) {
	// o < a < c < i, b incomparable to a and c
	auto [o, a, b, c, i] = e;
	return con.meet(a, c) == a && con.join(a, b) == i && con.join(c, b) == i && con.meet(a, b) == o &&
	       con.meet(c, b) == o && con.meet(o, a) == o && con.join(c, i) == i;
}

} // namespace

bool has_m3_or_n5(const CongruenceLattice& con) {
	const std::size_t m = con.size();
	std::array<std::size_t, 5> pick{};
	std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
		if (depth == 5) {
			std::array<std::size_t, 5> perm = pick;
			std::sort(perm.begin(), perm.end());
			do {
				if (is_m3(con, perm) || is_n5(con, perm)) {
					return true;
				}
			} while (std::next_permutation(perm.begin(), perm.end()));
			return false;
		}
		for (std::size_t k = start; k < m; ++k) {
			pick[depth] = k;
			if (rec(depth + 1, k + 1)) {
				return true;
			}
		}
		return false;
	};
	return rec(0, 0);
}

bool orthomodular_law(const Poset& lattice) {
	for (Element x = 0; x < lattice.size(); ++x) {
		for (Element y = 0; y < lattice.size(); ++y) {
			auto xy = sup(lattice, x, y);
			if (!xy) {
				throw StructureError("orthomodular_law oracle requires a lattice");
			}
			auto m = inf(lattice, lattice.prime(x), *xy);
			auto lhs = m ? sup(lattice, x, *m) : std::nullopt;
			if (!lhs || *lhs != *xy) {
				return false;
			}
		}
	}
	return true;
}

} // namespace somlat::oracle
