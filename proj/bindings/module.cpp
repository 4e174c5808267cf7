#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "famc/cli.hpp"
#include "famc/constants.hpp"
#include "famc/degrees.hpp"
#include "famc/families.hpp"
#include "famc/fourier.hpp"
#include "famc/report_json.hpp"
#include "famc/table_io.hpp"

namespace py = pybind11;
using namespace famc;

namespace {

// Opaque handle so python holds the immutable group by shared ownership.
struct GroupHandle {
    GroupPtr ptr;
};

std::vector<std::pair<unsigned, unsigned>> spectrum_entries(
    const GroupHandle& g, std::size_t class_cap) {
    return degree_spectrum(*g.ptr, class_cap).entries;
}

py::dict report_dict(const GroupHandle& g, const std::string& name) {
    const AmenabilityReport r = amenability_report(g.ptr, name);
    py::dict d;
    d["group"] = r.group;
    d["order"] = r.order;
    d["am"] = r.am.str();
    d["ad"] = r.ad.str();
    py::dict bounds;
    bounds["lower"] = r.runde_lower.str();
    bounds["upper"] = r.runde_upper;
    bounds["improved"] = r.improved_upper.str();
    d["bounds"] = bounds;
    d["nu_omega"] = r.nu_omega.str();
    d["maxdeg"] = r.maxdeg;
    d["commutator_order"] = r.commutator_order;
    d["center_index"] = r.center_index;
    py::list spec;
    for (auto [deg, mult] : r.spectrum.entries) {
        spec.append(py::make_tuple(deg, mult));
    }
    d["spectrum"] = spec;
    py::dict flags;
    flags["abelian"] = r.flags.abelian;
    flags["ad_maximal"] = r.flags.ad_maximal;
    flags["two_degree"] = r.flags.two_degree;
    flags["center_index_4"] = r.flags.center_index_4;
    d["flags"] = flags;
    return d;
}

py::tuple run_cli_py(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_famc, m) {
    m.doc() = "amenability constants of Fourier algebras of finite groups";

    py::register_exception<Error>(m, "FamcError", PyExc_RuntimeError);

    py::class_<GroupHandle>(m, "Group")
        .def_property_readonly(
            "order", [](const GroupHandle& g) { return g.ptr->order(); })
        .def_property_readonly(
            "abelian", [](const GroupHandle& g) { return g.ptr->is_abelian(); })
        .def_property_readonly(
            "exponent", [](const GroupHandle& g) { return g.ptr->exponent(); })
        .def("mul",
             [](const GroupHandle& g, Elem a, Elem b) { return g.ptr->mul(a, b); })
        .def("inverse",
             [](const GroupHandle& g, Elem a) { return g.ptr->inverse(a); })
        .def("label",
             [](const GroupHandle& g, Elem a) { return g.ptr->label(a); })
        .def("__len__", [](const GroupHandle& g) { return g.ptr->order(); })
        .def("__repr__", [](const GroupHandle& g) {
            return "<Group of order " + std::to_string(g.ptr->order()) + ">";
        });

    m.def(
        "parse_family",
        [](const std::string& text, std::size_t max_order) {
            return GroupHandle{parse_family(text, max_order)};
        },
        py::arg("text"), py::arg("max_order") = kDefaultMaxOrder,
        "build a group from a family expression like 'Hr(3,2)xC(4)'");
    m.def(
        "load_group",
        [](const std::string& path, std::size_t max_order) {
            return GroupHandle{load_group_file(path, max_order)};
        },
        py::arg("path"), py::arg("max_order") = kDefaultMaxOrder,
        "load a group from a Cayley-table JSON file");
    m.def(
        "direct_product",
        [](const GroupHandle& a, const GroupHandle& b) {
            return GroupHandle{direct_product(a.ptr, b.ptr)};
        },
        py::arg("a"), py::arg("b"));

    m.def("degree_spectrum", &spectrum_entries, py::arg("group"),
          py::arg("class_cap") = std::size_t(2000),
          "exact irreducible degree multiset as (degree, multiplicity) pairs");
    m.def(
        "degree_spectrum_numeric",
        [](const GroupHandle& g, std::uint64_t seed) {
            return degree_spectrum_numeric(*g.ptr, seed).entries;
        },
        py::arg("group"), py::arg("seed") = kDefaultSeed,
        "floating-point oracle for the degree multiset");

    m.def(
        "am",
        [](const GroupHandle& g) {
            return johnson_constant(degree_spectrum(*g.ptr)).str();
        },
        py::arg("group"), "amenability constant as an exact rational string");
    m.def(
        "ad",
        [](const GroupHandle& g) {
            return ad_constant(degree_spectrum(*g.ptr)).str();
        },
        py::arg("group"),
        "antidiagonal constant (independent route) as an exact rational string");

    m.def("amenability_report", &report_dict, py::arg("group"),
          py::arg("name") = std::string(),
          "full report: constants, bounds, spectrum, and structural flags");

    m.def(
        "hr_sequence",
        [](unsigned p, unsigned count) {
            const HrSequence seq = hr_sequence(p, count);
            py::list rows;
            for (const auto& r : seq.reports) {
                py::dict d;
                d["group"] = r.group;
                d["order"] = r.order;
                d["am"] = r.am.str();
                rows.append(d);
            }
            return py::make_tuple(seq.expected.str(), rows, seq.all_match);
        },
        py::arg("p"), py::arg("count"),
        "(expected, rows, all_match) for the reduced Heisenberg tower");

    m.def(
        "standard_polynomial_check",
        [](unsigned n, unsigned d, unsigned trials, std::uint64_t seed) {
            const StandardPolyReport r =
                standard_polynomial_check(n, d, trials, seed);
            py::dict out;
            out["n"] = r.n;
            out["d"] = r.d;
            out["trials"] = r.trials;
            out["vanish_expected"] = r.vanish_expected;
            out["all_zero"] = r.all_zero;
            out["witness_found"] = r.witness_found;
            out["pass"] = r.pass;
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("trials") = 100U,
        py::arg("seed") = kDefaultSeed);

    m.def("run_cli", &run_cli_py, py::arg("args"),
          "(exit_code, stdout, stderr) for the in-process CLI driver");
}
