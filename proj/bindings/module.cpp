#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "neighborly/betti.hpp"
#include "neighborly/formulas.hpp"
#include "neighborly/graph.hpp"
#include "neighborly/io.hpp"
#include "neighborly/simplicial.hpp"
#include "neighborly/verify.hpp"

namespace py = pybind11;
using namespace neighborly;

namespace {

std::vector<std::vector<int>> subsets_as_lists(const std::vector<Subset>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (Subset s : sets) out.push_back(to_vertices(s));
    return out;
}

std::vector<Subset> subsets_from_lists(const std::vector<std::vector<int>>& lists) {
    std::vector<Subset> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.push_back(from_vertices(l));
    return out;
}

py::dict betti_as_dict(const BettiTable& b, bool multigraded) {
    py::dict entries;
    for (const auto& [ij, value] : b.entries)
        entries[py::make_tuple(ij.first, ij.second)] = value;
    py::dict out;
    out["n"] = b.ambient_n;
    out["char"] = b.field_char;
    out["entries"] = entries;
    out["pd"] = b.pd();
    out["reg"] = b.reg();
    if (multigraded) {
        py::dict mg;
        for (const auto& [key, value] : b.multigraded)
            mg[py::make_tuple(key.first, py::tuple(py::cast(to_vertices(key.second))))] = value;
        out["multigraded"] = mg;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_neighborly, m) {
    m.doc() = "closed neighborhood ideals of squared paths: formulas, recursion, exact engines";

    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<SquarefreeIdeal>(m, "SquarefreeIdeal")
        .def_static(
            "make",
            [](int n, const std::vector<std::vector<int>>& gens) {
                return SquarefreeIdeal::make(n, subsets_from_lists(gens));
            },
            py::arg("n"), py::arg("generators"))
        .def_readonly("n", &SquarefreeIdeal::ambient_n)
        .def_property_readonly(
            "generators", [](const SquarefreeIdeal& i) { return subsets_as_lists(i.gens); })
        .def_property_readonly("is_zero", &SquarefreeIdeal::is_zero)
        .def_property_readonly("is_unit", &SquarefreeIdeal::is_unit)
        .def("__eq__", [](const SquarefreeIdeal& a, const SquarefreeIdeal& b) { return a == b; })
        .def("__repr__", [](const SquarefreeIdeal& i) {
            std::string r = "SquarefreeIdeal(n=" + std::to_string(i.ambient_n) + ", [";
            for (std::size_t k = 0; k < i.gens.size(); ++k)
                r += (k ? ", " : "") + subset_to_string(i.gens[k]);
            return r + "])";
        });

    m.def("ni_pn2", &ni_pn2, py::arg("n"),
          "closed neighborhood ideal of the squared path on n vertices");
    m.def("path_ideal", &path_ideal, py::arg("n"), py::arg("t"));
    m.def(
        "colon_by", [](const SquarefreeIdeal& i,
                       const std::vector<int>& u) { return colon_by_monomial(i, from_vertices(u)); },
        py::arg("ideal"), py::arg("monomial"));
    m.def("add_ideals", &add, py::arg("a"), py::arg("b"));
    m.def("alexander_dual", [](const SquarefreeIdeal& i) { return alexander_dual_ideal(i); },
          py::arg("ideal"));

    m.def(
        "minimal_primes",
        [](const SquarefreeIdeal& i) {
            PrimeList p = minimal_primes(i);
            py::dict out;
            out["primes"] = subsets_as_lists(p.primes);
            out["height"] = p.height;
            out["bight"] = p.bight;
            return out;
        },
        py::arg("ideal"));

    m.def(
        "dominating_sets",
        [](int n) {
            DominationSummary d = minimal_dominating_sets(graph_square(path_graph(n)));
            py::dict out;
            out["gamma"] = d.gamma;
            out["gamma_prime"] = d.gamma_prime;
            out["minimal_sets"] = subsets_as_lists(d.minimal_sets);
            return out;
        },
        py::arg("n"), "minimal dominating sets of the squared path on n vertices");

    m.def(
        "betti",
        [](const SquarefreeIdeal& i, long long field_char, bool multigraded, int max_ambient) {
            EngineCaps caps;
            if (max_ambient > 0) caps.max_ambient_hochster = max_ambient;
            return betti_as_dict(betti_hochster(i, field_char, caps), multigraded);
        },
        py::arg("ideal"), py::arg("field_char") = 0, py::arg("multigraded") = false,
        py::arg("max_ambient") = 0, "graded Betti numbers of S/I (Hochster engine)");
    m.def(
        "betti_koszul",
        [](const SquarefreeIdeal& i, long long field_char, bool multigraded) {
            return betti_as_dict(betti_koszul_oracle(i, field_char), multigraded);
        },
        py::arg("ideal"), py::arg("field_char") = 0, py::arg("multigraded") = false,
        "independent Koszul-complex route to the same table");

    m.def(
        "invariants",
        [](const SquarefreeIdeal& i) {
            HomologicalInvariants inv = pd_reg_depth(betti_hochster(i), i);
            py::dict out;
            out["pd"] = inv.pd;
            out["reg"] = inv.reg;
            out["depth"] = inv.depth;
            out["dim"] = inv.dim;
            return out;
        },
        py::arg("ideal"));
    m.def("is_cohen_macaulay",
          [](const SquarefreeIdeal& i) { return is_cohen_macaulay(i); }, py::arg("ideal"));
    m.def(
        "is_sequentially_cm",
        [](const SquarefreeIdeal& i) -> py::object {
            switch (is_sequentially_cm(i)) {
                case TriState::True: return py::bool_(true);
                case TriState::False: return py::bool_(false);
                default: return py::none();
            }
        },
        py::arg("ideal"), "True/False, or None when the ambient cap was hit");

    m.def("height_formula", &height_formula, py::arg("n"));
    m.def("bight_formula", &bight_formula, py::arg("n"));
    m.def(
        "pdreg_formula",
        [](int n) { PdReg v = pdreg_formula(n); return py::make_tuple(v.pd, v.reg); },
        py::arg("n"));
    m.def(
        "pdpath_formula",
        [](int n, int t) { PdReg v = pdpath_formula(n, t); return py::make_tuple(v.pd, v.reg); },
        py::arg("n"), py::arg("t"));
    m.def(
        "mapping_cone_recursion",
        [](int n) { PdReg v = mapping_cone_recursion(n); return py::make_tuple(v.pd, v.reg); },
        py::arg("n"));
    m.def(
        "fh_formula",
        [](int n) {
            FHFormula v = fh_formula(n);
            py::dict out;
            out["f"] = v.f;
            out["h"] = v.h;
            out["euler"] = v.euler;
            out["reduced_euler"] = v.reduced_euler;
            out["top_faces"] = v.top_faces;
            return out;
        },
        py::arg("n"));

    m.def(
        "fh_vectors",
        [](const SquarefreeIdeal& i) {
            FHVectors v = fh_vectors(facet_complex(i));
            py::dict out;
            out["dim"] = v.dim;
            out["f"] = v.f;
            out["h"] = v.h;
            out["euler"] = v.euler;
            out["reduced_euler"] = v.reduced_euler;
            return out;
        },
        py::arg("ideal"), "f/h/Euler data of the facet complex");
    m.def(
        "shelling_order",
        [](int n) { return subsets_as_lists(paper_shelling_order(n)); }, py::arg("n"),
        "the published shelling order of the facet complex, n >= 7");
    m.def(
        "is_shelling_order",
        [](const SquarefreeIdeal& i, const std::vector<std::vector<int>>& order) {
            return is_shelling_order(facet_complex(i), subsets_from_lists(order));
        },
        py::arg("ideal"), py::arg("order"));
    m.def(
        "find_shelling",
        [](const SquarefreeIdeal& i) -> py::object {
            auto order = find_shelling(facet_complex(i));
            if (!order) return py::none();
            return py::cast(subsets_as_lists(*order));
        },
        py::arg("ideal"));
    m.def(
        "has_free_vertex_property",
        [](const SquarefreeIdeal& i) { return has_free_vertex_property(facet_complex(i)); },
        py::arg("ideal"));
    m.def(
        "find_linear_quotients_order",
        [](const SquarefreeIdeal& i) -> py::object {
            auto order = find_linear_quotients_order(i);
            if (!order) return py::none();
            return py::cast(subsets_as_lists(*order));
        },
        py::arg("ideal"));
    m.def(
        "complementary_ideal",
        [](const SquarefreeIdeal& i) { return complementary_ideal(facet_complex(i)); },
        py::arg("ideal"), "ideal of facet complements of the facet complex");

    m.def(
        "verify",
        [](std::optional<int> from, std::optional<int> to, const std::vector<std::string>& checks,
           long long field_char, bool strict) {
            VerifyConfig config;
            config.field_char = field_char;
            config.strict = strict;
            VerificationReport report = verify(from, to, checks, config);
            py::module_ json = py::module_::import("json");
            return json.attr("loads")(report_to_json(report).dump());
        },
        py::arg("from_n") = py::none(), py::arg("to_n") = py::none(),
        py::arg("checks") = std::vector<std::string>{}, py::arg("field_char") = 0,
        py::arg("strict") = false, "run the cross-check suite; returns the JSON report as a dict");

    m.def("check_names", [] {
        std::vector<std::string> names;
        for (const CheckInfo& info : check_registry()) names.push_back(info.name);
        return names;
    });
}
