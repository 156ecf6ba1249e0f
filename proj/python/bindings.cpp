#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "morava/cli.hpp"
#include "morava/derive.hpp"
#include "morava/expr.hpp"
#include "morava/padic.hpp"
#include "morava/powerops.hpp"
#include "morava/presentation_io.hpp"
#include "morava/report.hpp"
#include "morava/rings.hpp"

namespace py = pybind11;
using namespace morava;

namespace {

ETheoryPresentation load(const std::string& name, std::optional<int> precision, std::optional<int> truncation) {
    return instantiate(load_presentation_file(resolve_presentation_path(name)), precision, truncation);
}

SaturationLimits limits_of(int max_passes, std::size_t max_basis_rows, bool exhaustive) {
    SaturationLimits limits;
    limits.max_passes = max_passes;
    limits.max_basis_rows = max_basis_rows;
    limits.exhaustive = exhaustive;
    return limits;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "p-adic helpers, E-theory presentations, power operations and relation saturation";

    py::class_<PAdicInt>(m, "PAdicInt")
        .def(py::init<std::uint64_t, std::int64_t, int>(), py::arg("prime"), py::arg("value"),
             py::arg("precision") = kDefaultPAdicPrecision)
        .def_static("from_residue", &PAdicInt::from_residue)
        .def_property_readonly("prime", &PAdicInt::prime)
        .def_property_readonly("residue", &PAdicInt::residue)
        .def_property_readonly("precision", &PAdicInt::precision)
        .def("signed_value", &PAdicInt::signed_value)
        .def("is_unit", &PAdicInt::is_unit)
        .def("is_zero", &PAdicInt::is_zero)
        .def("with_precision", &PAdicInt::with_precision)
        .def("pow", &PAdicInt::pow)
        .def("inverse", &PAdicInt::inverse)
        .def("divide_by_p", &PAdicInt::divide_by_p)
        .def("congruent", &PAdicInt::congruent)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__int__", [](const PAdicInt& x) { return x.residue(); })
        .def("__repr__", &PAdicInt::to_string);

    m.def("valuation", &valuation, "p-adic valuation; None for zero");
    m.def("theta", &theta);
    m.def("rezk_log", &rezk_log);
    m.def("rezk_log_series", [](const PAdicInt& x) {
        const auto s = rezk_log_series(x);
        return py::make_tuple(s.value, s.terms);
    });
    m.def("hensel_unit_root", &hensel_unit_root, py::arg("p"), py::arg("k"), py::arg("b"), py::arg("precision"));
    m.def("unit_root_power", &unit_root_power, py::arg("c"), py::arg("k"), py::arg("digits"));

    py::class_<CoeffRingSpec>(m, "CoeffRingSpec")
        .def(py::init<std::uint64_t, int, int>(), py::arg("prime"), py::arg("precision"), py::arg("truncation"))
        .def_property_readonly("prime", &CoeffRingSpec::prime)
        .def_property_readonly("precision", &CoeffRingSpec::precision)
        .def_property_readonly("truncation", &CoeffRingSpec::truncation)
        .def(py::self == py::self)
        .def("__repr__", &CoeffRingSpec::describe);

    py::class_<CoeffElem>(m, "CoeffElem")
        .def(py::init<const CoeffRingSpec&, std::vector<std::uint64_t>>())
        .def_static("constant", &CoeffElem::constant)
        .def_property_readonly("spec", &CoeffElem::spec)
        .def_property_readonly("coefficients", &CoeffElem::coefficients)
        .def("degree", &CoeffElem::degree)
        .def("is_zero", &CoeffElem::is_zero)
        .def("in_maximal_ideal", &CoeffElem::in_maximal_ideal)
        .def("pow", &CoeffElem::pow)
        .def("reduced_to", &CoeffElem::reduced_to)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &CoeffElem::to_string);

    m.def("parse_relation", [](const CoeffRingSpec& spec, const std::string& text) { return parse_relation(spec, text); });

    py::class_<SigmaElem>(m, "SigmaElem")
        .def_property_readonly("coefficients", &SigmaElem::coefficients)
        .def("at_zero", &SigmaElem::at_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__repr__", &SigmaElem::to_string);

    py::class_<ETheoryPresentation>(m, "Presentation")
        .def_property_readonly("name", [](const ETheoryPresentation& p) { return p.source.name; })
        .def_property_readonly("height", [](const ETheoryPresentation& p) { return p.height; })
        .def_property_readonly("spec", &ETheoryPresentation::spec)
        .def_property_readonly("rank", &ETheoryPresentation::rank)
        .def_property_readonly("tr1", [](const ETheoryPresentation& p) { return p.tr1; })
        .def_property_readonly("p_of_a", [](const ETheoryPresentation& p) { return p.p_of_a; })
        .def("element", [](const ETheoryPresentation& p, const std::string& text) { return parse_relation(p.spec(), text); })
        .def("__repr__", [](const ETheoryPresentation& p) { return "<Presentation " + p.source.name + " over " + p.spec().describe() + ">"; });

    m.def("load_presentation", &load, py::arg("name"), py::arg("precision") = py::none(), py::arg("truncation") = py::none(),
          "Load a presentation file by path or by name from the data directory.");

    m.def("power", &power);
    m.def("transfer", &transfer);
    m.def("pbar_coeffs", py::overload_cast<const ETheoryPresentation&, const CoeffElem&>(&pbar_coeffs));
    m.def("reduce_z_power", &reduce_z_power);
    m.def("check_presentation", [](const ETheoryPresentation& pres) {
        py::list out;
        for (const auto& c : check_presentation(pres).checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
    });

    py::class_<WindowMatrix>(m, "WindowMatrix")
        .def_property_readonly("shift", &WindowMatrix::shift)
        .def_property_readonly("rank", &WindowMatrix::rank)
        .def("__call__", &WindowMatrix::operator(), "1-based entry (i, j)")
        .def("rows", [](const WindowMatrix& w) {
            std::vector<std::vector<CoeffElem>> rows;
            for (int i = 1; i <= w.rank(); ++i) {
                rows.emplace_back();
                for (int j = 1; j <= w.rank(); ++j) rows.back().push_back(w(i, j));
            }
            return rows;
        })
        .def("describe_dual_map", &WindowMatrix::describe_dual_map)
        .def(py::self * py::self)
        .def(py::self == py::self);

    m.def("window_matrix", &window_matrix);
    m.def("window_shift_for_loop_level", &window_shift_for_loop_level);

    py::class_<Ideal>(m, "Ideal")
        .def(py::init<CoeffRingSpec>())
        .def(py::init<CoeffRingSpec, const std::vector<CoeffElem>&>())
        .def("add", &Ideal::add)
        .def("contains", &Ideal::contains)
        .def("__contains__", &Ideal::contains)
        .def("is_trivial", &Ideal::is_trivial)
        .def("remainder", &Ideal::remainder)
        .def_property_readonly("generators", &Ideal::generators)
        .def("minimal_generators", &Ideal::minimal_generators)
        .def("basis_elements", &Ideal::basis_elements)
        .def(py::self == py::self)
        .def("__repr__", &Ideal::to_string);

    m.def("syzygies", &syzygies);

    py::class_<TraceEntry>(m, "TraceEntry")
        .def_readonly("input", &TraceEntry::input)
        .def_readonly("loop_level", &TraceEntry::loop_level)
        .def_readonly("syzygy", &TraceEntry::syzygy)
        .def_readonly("relation", &TraceEntry::relation)
        .def_readonly("reduced", &TraceEntry::reduced)
        .def_readonly("pass_index", &TraceEntry::pass);

    py::class_<SaturationReport>(m, "SaturationReport")
        .def_readonly("loop_level", &SaturationReport::loop_level)
        .def_readonly("ideal", &SaturationReport::ideal)
        .def_readonly("trace", &SaturationReport::trace)
        .def_readonly("trivial", &SaturationReport::trivial)
        .def_readonly("fixpoint", &SaturationReport::fixpoint)
        .def_readonly("passes", &SaturationReport::passes)
        .def_readonly("stop_reason", &SaturationReport::stop_reason)
        .def("to_json", [](const SaturationReport& r) { return saturation_json(r).dump(); })
        .def("__str__", [](const SaturationReport& r) { return render_text(saturation_json(r)); });

    m.def(
        "saturate",
        [](const ETheoryPresentation& pres, int loop_level, const std::vector<CoeffElem>& initial, int max_passes,
           std::size_t max_basis_rows, bool exhaustive) {
            return saturate(pres, loop_level, initial, limits_of(max_passes, max_basis_rows, exhaustive));
        },
        py::arg("pres"), py::arg("loop_level"), py::arg("initial"), py::arg("max_passes") = 64,
        py::arg("max_basis_rows") = 4096, py::arg("exhaustive") = false);
    m.def(
        "saturate",
        [](const ETheoryPresentation& pres, int loop_level, const std::string& relations, int max_passes,
           std::size_t max_basis_rows, bool exhaustive) {
            return saturate(pres, loop_level, parse_relation_list(pres.spec(), relations),
                            limits_of(max_passes, max_basis_rows, exhaustive));
        },
        py::arg("pres"), py::arg("loop_level"), py::arg("relations"), py::arg("max_passes") = 64,
        py::arg("max_basis_rows") = 4096, py::arg("exhaustive") = false);
    m.def("verify_fixpoint", &verify_fixpoint);
    m.def("verify_trace", &verify_trace);
    m.def("find_derivation", &find_derivation);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Run a command-line scenario; returns (exit code, stdout, stderr).");
}
