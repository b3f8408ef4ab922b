#include "somlat/classes.hpp"

#include <array>
#include <sstream>

namespace somlat {

namespace {

constexpr std::array<std::pair<PosetClass, std::string_view>, 5> kClassNames{{
	{PosetClass::none, "none"},
	{PosetClass::complemented, "complemented"},
	{PosetClass::orthogonal, "orthogonal"},
	{PosetClass::almost_skew_orthomodular, "almost-skew-orthomodular"},
	{PosetClass::skew_orthomodular, "skew-orthomodular"},
}};

ClassCheck pass() { return {true, std::nullopt}; }

ClassCheck fail(Witness w) { return {false, std::move(w)}; }

} // namespace

std::string_view to_string(PosetClass c) {
	for (auto [k, name] : kClassNames) {
		if (k == c) {
			return name;
		}
	}
	return "?";
}

std::optional<PosetClass> parse_poset_class(std::string_view s) {
	for (auto [k, name] : kClassNames) {
		if (name == s) {
			return k;
		}
	}
	return std::nullopt;
}

std::string_view to_string(WitnessKind k) {
	switch (k) {
	case WitnessKind::missing_sup: return "missing-sup";
	case WitnessKind::missing_inf: return "missing-inf";
	case WitnessKind::wrong_complement_join: return "wrong-complement-join";
	case WitnessKind::wrong_complement_meet: return "wrong-complement-meet";
	case WitnessKind::orthomodular_violation: return "orthomodular-violation";
	}
	return "?";
}

std::string Witness::describe(const Poset& p) const {
	std::ostringstream out;
	out << to_string(kind) << " (";
	for (std::size_t i = 0; i < subject.size(); ++i) {
		out << (i ? ", " : "") << p.name(subject[i]);
	}
	out << "): ";
	const auto& [a, b] = query;
	switch (kind) {
	case WitnessKind::missing_sup:
		out << "sup(" << p.name(a) << ", " << p.name(b) << ") does not exist";
		break;
	case WitnessKind::missing_inf:
		out << "inf(" << p.name(a) << ", " << p.name(b) << ") does not exist";
		break;
	case WitnessKind::wrong_complement_join:
		out << "sup(" << p.name(a) << ", " << p.name(b) << ") = " << p.name(*actual) << " != " << p.name(*expected);
		break;
	case WitnessKind::wrong_complement_meet:
		out << "inf(" << p.name(a) << ", " << p.name(b) << ") = " << p.name(*actual) << " != " << p.name(*expected);
		break;
	case WitnessKind::orthomodular_violation:
		out << "sup(" << p.name(a) << ", " << p.name(b) << ") = " << p.name(*actual) << " != " << p.name(*expected);
		break;
	}
	return out.str();
}

bool reverify(const Poset& p, const Witness& w) {
	const auto& [a, b] = w.query;
	switch (w.kind) {
	case WitnessKind::missing_sup:
		return !p.sup(a, b);
	case WitnessKind::missing_inf:
		return !p.inf(a, b);
	case WitnessKind::wrong_complement_join: {
		auto s = p.sup(a, b);
		return w.subject.size() == 1 && b == p.prime(a) && s && s == w.actual && *s != p.top();
	}
	case WitnessKind::wrong_complement_meet: {
		auto s = p.inf(a, b);
		return w.subject.size() == 1 && b == p.prime(a) && s && s == w.actual && *s != p.bottom();
	}
	case WitnessKind::orthomodular_violation: {
		if (w.subject.size() != 2) {
			return false;
		}
		const Element x = w.subject[0];
		const Element y = w.subject[1];
		auto m = p.inf(p.prime(x), y);
		if (!p.leq(x, y) || !m || a != x || b != *m) {
			return false;
		}
		auto s = p.sup(x, *m);
		return s && s == w.actual && *s != y && w.expected == y;
	}
	}
	return false;
}

ClassCheck is_complemented(const Poset& p) {
	for (Element x = 0; x < p.size(); ++x) {
		const Element xp = p.prime(x);
		auto s = p.sup(x, xp);
		if (!s) {
			return fail({WitnessKind::missing_sup, PosetClass::complemented, {x}, {x, xp}, p.top(), std::nullopt});
		}
		if (*s != p.top()) {
			return fail({WitnessKind::wrong_complement_join, PosetClass::complemented, {x}, {x, xp}, p.top(), *s});
		}
		auto i = p.inf(x, xp);
		if (!i) {
			return fail({WitnessKind::missing_inf, PosetClass::complemented, {x}, {x, xp}, p.bottom(), std::nullopt});
		}
		if (*i != p.bottom()) {
			return fail({WitnessKind::wrong_complement_meet, PosetClass::complemented, {x}, {x, xp}, p.bottom(), *i});
		}
	}
	return pass();
}

std::vector<std::pair<Element, Element>> orthogonal_pairs(const Poset& p) {
	std::vector<std::pair<Element, Element>> out;
	for (Element x = 0; x < p.size(); ++x) {
		for (Element y = 0; y < p.size(); ++y) {
			if (p.leq(x, p.prime(y))) {
				out.emplace_back(x, y);
			}
		}
	}
	return out;
}

ClassCheck is_orthogonal(const Poset& p) {
	if (auto c = is_complemented(p); !c) {
		return c;
	}
	for (auto [x, y] : orthogonal_pairs(p)) {
		if (!p.sup(x, y)) {
			return fail({WitnessKind::missing_sup, PosetClass::orthogonal, {x, y}, {x, y}, std::nullopt, std::nullopt});
		}
	}
	return pass();
}

namespace {

// Scans x <= y for x ∨ (x' ∧ y); `exact` additionally demands the value be y.
ClassCheck check_orthomodular_term(const Poset& p, bool exact) {
	const PosetClass cls = exact ? PosetClass::skew_orthomodular : PosetClass::almost_skew_orthomodular;
	for (Element x = 0; x < p.size(); ++x) {
		for (Element y = 0; y < p.size(); ++y) {
			if (!p.leq(x, y)) {
				continue;
			}
			const Element xp = p.prime(x);
			auto m = p.inf(xp, y);
			if (!m) {
				return fail({WitnessKind::missing_inf, cls, {x, y}, {xp, y}, std::nullopt, std::nullopt});
			}
			auto s = p.sup(x, *m);
			if (!s) {
				return fail({WitnessKind::missing_sup, cls, {x, y}, {x, *m}, std::nullopt, std::nullopt});
			}
			if (exact && *s != y) {
				return fail({WitnessKind::orthomodular_violation, cls, {x, y}, {x, *m}, y, *s});
			}
		}
	}
	return pass();
}

} // namespace

ClassCheck is_almost_skew_orthomodular(const Poset& p) {
	if (auto c = is_orthogonal(p); !c) {
		return c;
	}
	return check_orthomodular_term(p, false);
}

ClassCheck is_skew_orthomodular(const Poset& p) {
	if (auto c = is_almost_skew_orthomodular(p); !c) {
		return c;
	}
	return check_orthomodular_term(p, true);
}

ClassCheck check_class(const Poset& p, PosetClass c) {
	switch (c) {
	case PosetClass::none: return pass();
	case PosetClass::complemented: return is_complemented(p);
	case PosetClass::orthogonal: return is_orthogonal(p);
	case PosetClass::almost_skew_orthomodular: return is_almost_skew_orthomodular(p);
	case PosetClass::skew_orthomodular: return is_skew_orthomodular(p);
	}
	return pass();
}

bool is_lattice(const Poset& p) {
	for (Element a = 0; a < p.size(); ++a) {
		for (Element b = a + 1; b < p.size(); ++b) {
			if (!p.sup(a, b) || !p.inf(a, b)) {
				return false;
			}
		}
	}
	return true;
}

bool ClassReport::in(PosetClass c) const {
	return static_cast<int>(c) <= static_cast<int>(label);
}

const Witness* ClassReport::witness_for(PosetClass c) const {
	for (const auto& [k, w] : witnesses) {
		if (k == c) {
			return &w;
		}
	}
	return nullptr;
}

ClassReport classify(const Poset& p) {
	ClassReport report{PosetClass::none, {}};
	constexpr std::array chain{PosetClass::complemented, PosetClass::orthogonal,
	                           PosetClass::almost_skew_orthomodular, PosetClass::skew_orthomodular};
	std::optional<Witness> inherited;
	for (PosetClass c : chain) {
		if (inherited) {
			report.witnesses.emplace_back(c, *inherited);
			continue;
		}
		// each predicate re-checks the coarser ones; only the new condition can fail here
		auto r = check_class(p, c);
		if (r) {
			report.label = c;
		} else {
			inherited = r.witness;
			report.witnesses.emplace_back(c, *r.witness);
		}
	}
	return report;
}

} // namespace somlat
