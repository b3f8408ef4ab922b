#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "somlat/assignment.hpp"
#include "somlat/classes.hpp"
#include "somlat/congruence.hpp"
#include "somlat/error.hpp"
#include "somlat/fixtures.hpp"
#include "somlat/lambda_lattice.hpp"
#include "somlat/poset.hpp"
#include "somlat/term.hpp"
#include "somlat/verify.hpp"

namespace py = pybind11;
using namespace somlat;

namespace {

Identity to_identity(const std::string& text) {
	for (auto name : builtin_names()) {
		if (name == text) {
			return builtin_identity(text);
		}
	}
	return parse_identity(text);
}

py::dict witness_dict(const Poset& p, const Witness& w) {
	py::dict d;
	d["kind"] = std::string(to_string(w.kind));
	std::vector<std::string> subject;
	for (Element x : w.subject) {
		subject.push_back(p.name(x));
	}
	d["subject"] = subject;
	d["query"] = py::make_tuple(p.name(w.query.first), p.name(w.query.second));
	d["expected"] = w.expected ? py::object(py::str(p.name(*w.expected))) : py::object(py::none());
	d["actual"] = w.actual ? py::object(py::str(p.name(*w.actual))) : py::object(py::none());
	d["text"] = w.describe(p);
	return d;
}

py::object holds_result(const LambdaLattice& l, const HoldsResult& r) {
	py::dict d;
	d["holds"] = r.holds;
	if (r.counterexample) {
		py::dict v;
		for (std::size_t i = 0; i < r.counterexample->valuation.size(); ++i) {
			v[py::str(r.counterexample->variables[i])] = l.name(r.counterexample->valuation[i]);
		}
		d["valuation"] = v;
		d["lhs"] = l.name(r.counterexample->lhs);
		d["rhs"] = l.name(r.counterexample->rhs);
	}
	return std::move(d);
}

std::vector<std::vector<std::vector<std::string>>> congruence_blocks(const LambdaLattice& l) {
	std::vector<std::vector<std::vector<std::string>>> out;
	const CongruenceLattice con = all_congruences(l);
	for (const auto& c : con.members()) {
		auto& blocks = out.emplace_back();
		for (const auto& b : c.blocks()) {
			auto& names = blocks.emplace_back();
			for (Element x : b) {
				names.push_back(l.name(x));
			}
		}
	}
	return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
	m.doc() = "posets with a unary operation and their assigned lambda-lattices";

	auto error = py::register_exception<Error>(m, "Error");
	py::register_exception<FormatError>(m, "FormatError", error.ptr());
	py::register_exception<SyntaxError>(m, "SyntaxError", error.ptr());
	py::register_exception<StructureError>(m, "StructureError", error.ptr());
	py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
	py::register_exception<FixtureError>(m, "FixtureError", error.ptr());

	py::class_<Poset>(m, "Poset")
	    .def_property_readonly("size", &Poset::size)
	    .def_property_readonly("names", &Poset::names)
	    .def("leq", [](const Poset& p, const std::string& x, const std::string& y) { return p.leq(p.at(x), p.at(y)); })
	    .def("prime", [](const Poset& p, const std::string& x) { return p.name(p.prime(p.at(x))); })
	    .def("sup",
	         [](const Poset& p, const std::string& x, const std::string& y) -> std::optional<std::string> {
		         auto s = p.sup(p.at(x), p.at(y));
		         return s ? std::optional(p.name(*s)) : std::nullopt;
	         })
	    .def("inf",
	         [](const Poset& p, const std::string& x, const std::string& y) -> std::optional<std::string> {
		         auto s = p.inf(p.at(x), p.at(y));
		         return s ? std::optional(p.name(*s)) : std::nullopt;
	         })
	    .def("covers",
	         [](const Poset& p) {
		         std::vector<std::pair<std::string, std::string>> out;
		         for (auto [x, y] : p.covers()) {
			         out.emplace_back(p.name(x), p.name(y));
		         }
		         return out;
	         })
	    .def("is_antitone", &Poset::is_antitone)
	    .def("is_involution", &Poset::is_involution)
	    .def("is_lattice", [](const Poset& p) { return is_lattice(p); })
	    .def("to_text", [](const Poset& p) { return to_text(p); })
	    .def("to_dot", [](const Poset& p) { return to_dot(p); })
	    .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

	py::class_<LambdaLattice>(m, "LambdaLattice")
	    .def_property_readonly("size", &LambdaLattice::size)
	    .def_property_readonly("names", &LambdaLattice::names)
	    .def("join", [](const LambdaLattice& l, const std::string& x, const std::string& y) {
		    return l.name(l.join(l.at(x), l.at(y)));
	    })
	    .def("meet", [](const LambdaLattice& l, const std::string& x, const std::string& y) {
		    return l.name(l.meet(l.at(x), l.at(y)));
	    })
	    .def("prime", [](const LambdaLattice& l, const std::string& x) { return l.name(l.prime(l.at(x))); })
	    .def("to_text", [](const LambdaLattice& l) { return to_text(l); })
	    .def("__eq__", [](const LambdaLattice& a, const LambdaLattice& b) { return a == b; });

	m.def("parse_poset", [](const std::string& text) { return parse_poset(text); });
	m.def("parse_lambda", [](const std::string& text) { return parse_lambda(text); });

	m.def("classify", [](const Poset& p) {
		const ClassReport r = classify(p);
		py::dict d;
		d["label"] = std::string(to_string(r.label));
		py::dict witnesses;
		for (const auto& [c, w] : r.witnesses) {
			witnesses[py::str(std::string(to_string(c)))] = witness_dict(p, w);
		}
		d["witnesses"] = witnesses;
		return d;
	});

	m.def("check_axioms", [](const LambdaLattice& l) {
		std::map<std::string, bool> out;
		for (const auto& a : check_axioms(l).results) {
			out[a.name] = a.passed;
		}
		return out;
	});
	m.def("induced_poset", &induced_poset);
	m.def("holds", [](const std::string& identity, const LambdaLattice& l) {
		return holds_result(l, holds(to_identity(identity), l));
	}, py::arg("identity"), py::arg("algebra"), "identity is a built-in name or DSL text");

	m.def("assignment_count", [](const Poset& p) {
		return py::int_(py::str(choice_space(p).count.str()));
	});
	m.def("assignments", [](const Poset& p, std::uint64_t cap) {
		std::vector<LambdaLattice> out;
		enumerate_assignments(p, [&](const LambdaLattice& l) {
			out.push_back(l);
			return true;
		}, {cap, false});
		return out;
	}, py::arg("poset"), py::arg("cap") = 100000);
	m.def("sample_assignments", &sample_assignments, py::arg("poset"), py::arg("count"), py::arg("seed") = 1);
	m.def("is_assigned_to", &is_assigned_to);

	m.def("congruences", &congruence_blocks, "blocks of every congruence, finest first");
	m.def("congruence_properties", [](const LambdaLattice& l) {
		const CongruenceLattice con = all_congruences(l);
		std::map<std::string, bool> out{
		    {"permutable", is_permutable(con)}, {"regular", is_regular(con)}, {"distributive", is_distributive(con)}};
		return out;
	});

	m.def("fixture_names", [] {
		std::vector<std::string> out;
		for (const auto& f : fixture_catalog()) {
			out.push_back(f.name);
		}
		return out;
	});
	m.def("load_fixture", [](const std::string& name) -> py::object {
		Structure s = load_fixture(name);
		if (auto* p = std::get_if<Poset>(&s)) {
			return py::cast(*p);
		}
		return py::cast(std::get<LambdaLattice>(s));
	});

	m.def("verify_paper", [](std::optional<std::string> filter) {
		VerifyOptions opts;
		opts.filter = std::move(filter);
		py::list out;
		for (const auto& c : verify_paper(opts).claims) {
			py::dict d;
			d["name"] = c.info.name;
			d["finding"] = c.info.finding;
			d["passed"] = c.passed;
			d["details"] = c.details;
			d["witnesses"] = c.witnesses;
			d["seconds"] = c.seconds;
			out.append(d);
		}
		return out;
	}, py::arg("filter") = py::none());
}
