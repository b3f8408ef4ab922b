#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "somlat/fixtures.hpp"
#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"

namespace test {

using namespace somlat;

inline std::filesystem::path fixture_dir() {
	return SOMLAT_TEST_FIXTURES;
}

inline Poset poset_fixture(const std::string& name) {
	return load_poset_fixture(name, fixture_dir());
}

inline LambdaLattice lambda_fixture(const std::string& name) {
	return load_lambda_fixture(name, fixture_dir());
}

/// Random bounded poset on 0, p1..pk, 1: each forward pair in a random
/// linear extension is related with probability `density`.
inline Poset random_poset(std::mt19937_64& rng, std::size_t middle, double density) {
	const std::size_t n = middle + 2;
	std::vector<std::string> names{"0"};
	for (std::size_t i = 1; i <= middle; ++i) {
		names.push_back("p" + std::to_string(i));
	}
	names.push_back("1");
	std::vector<std::size_t> order(middle);
	std::iota(order.begin(), order.end(), std::size_t{1});
	std::shuffle(order.begin(), order.end(), rng);
	std::bernoulli_distribution edge(density);
	Relation r = make_relation(n);
	for (std::size_t i = 0; i < middle; ++i) {
		r[0].set(order[i]);
		r[order[i]].set(n - 1);
		for (std::size_t j = i + 1; j < middle; ++j) {
			if (edge(rng)) {
				r[order[i]].set(order[j]);
			}
		}
	}
	r[0].set(n - 1);
	std::uniform_int_distribution<std::size_t> pick(0, n - 1);
	std::vector<Element> prime(n);
	for (auto& p : prime) {
		p = pick(rng);
	}
	return Poset(names, reflexive_transitive_closure(std::move(r)), prime, 0, n - 1);
}

/// Two-element Boolean algebra.
inline LambdaLattice boolean_two() {
	return parse_lambda("lambda\nelements 0 1\njoin 0 1 1\nmeet 0 1 0\nprime 0 1\nprime 1 0\n");
}

/// Algebra on n elements whose operations ignore their arguments, so every
/// partition is a congruence. Not a lambda-lattice; a control for the
/// congruence property checks.
inline LambdaLattice constant_algebra(std::size_t n) {
	std::vector<std::string> names;
	for (std::size_t i = 0; i < n; ++i) {
		names.push_back("e" + std::to_string(i));
	}
	return LambdaLattice(names, std::vector<Element>(n * n, 0), std::vector<Element>(n * n, 0),
	                     std::vector<Element>(n, 0), 0, n - 1);
}

} // namespace test
