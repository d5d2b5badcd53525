#include "oasislab/cli.hpp"
#include "oasislab/report.hpp"
#include "oasislab/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

using namespace oasislab;

namespace {

Base make_base(Int b) { return Base{b}; }

std::string run_repr(const Run& run) {
    std::ostringstream os;
    os << "Run(base=" << run.base.value() << ", d_min=" << run.d_min
       << ", d_max=" << run.d_max << ", kind=" << to_string(run.kind) << ")";
    return os.str();
}

std::string oasis_repr(const Oasis& oasis) {
    std::ostringstream os;
    os << "Oasis(base=" << oasis.base.value() << ", c_min=" << oasis.c_min
       << ", c_max=" << oasis.c_max << ", length=" << oasis.length << ")";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fixed points of augmented happy functions: oasis and mirage "
              "search core";

    py::register_exception<OverflowError>(m, "CapacityError", PyExc_OverflowError);

    py::class_<Base>(m, "Base")
        .def(py::init<Int>(), py::arg("value"))
        .def_property_readonly("value", &Base::value)
        .def("__repr__", [](const Base& b) {
            return "Base(" + std::to_string(b.value()) + ")";
        });

    py::class_<Run>(m, "Run")
        .def_property_readonly("base", [](const Run& r) { return r.base.value(); })
        .def_readonly("d_min", &Run::d_min)
        .def_readonly("d_max", &Run::d_max)
        .def_readonly("length", &Run::length)
        .def_readonly("witnesses", &Run::witnesses)
        .def_property_readonly(
            "kind", [](const Run& r) { return std::string(to_string(r.kind)); })
        .def("__repr__", &run_repr);

    py::class_<Oasis>(m, "Oasis")
        .def_property_readonly("base",
                               [](const Oasis& o) { return o.base.value(); })
        .def_readonly("c_min", &Oasis::c_min)
        .def_readonly("c_max", &Oasis::c_max)
        .def_readonly("length", &Oasis::length)
        .def_readonly("fixed_points", &Oasis::fixed_points)
        .def_readonly("truncated_lo", &Oasis::truncated_lo)
        .def_readonly("truncated_hi", &Oasis::truncated_hi)
        .def("__repr__", &oasis_repr);

    py::class_<MaxOasisResult>(m, "MaxOasisResult")
        .def_readonly("length", &MaxOasisResult::length)
        .def_readonly("oasis", &MaxOasisResult::oasis)
        .def_readonly("mirage_length", &MaxOasisResult::mirage_length);

    py::class_<DigitTheoremViolation>(m, "DigitTheoremViolation")
        .def_readonly("check", &DigitTheoremViolation::check)
        .def_readonly("c_first", &DigitTheoremViolation::c_first)
        .def_readonly("a_first", &DigitTheoremViolation::a_first)
        .def_readonly("c_second", &DigitTheoremViolation::c_second)
        .def_readonly("a_second", &DigitTheoremViolation::a_second);

    py::class_<DigitTheoremReport>(m, "DigitTheoremReport")
        .def_readonly("digit_count_ok", &DigitTheoremReport::digit_count_ok)
        .def_readonly("digit_agreement_ok",
                      &DigitTheoremReport::digit_agreement_ok)
        .def_readonly("violations", &DigitTheoremReport::violations)
        .def("passed", &DigitTheoremReport::passed);

    py::class_<Table1Row>(m, "Table1Row")
        .def_readonly("base", &Table1Row::base)
        .def_readonly("length", &Table1Row::length)
        .def_readonly("c_min", &Table1Row::c_min)
        .def_readonly("c_max", &Table1Row::c_max)
        .def_readonly("smallest_fixed_points", &Table1Row::smallest_fixed_points);

    m.def("digits",
          [](Int a, Int b) { return digits(a, make_base(b)).digits; },
          py::arg("a"), py::arg("base"),
          "Little-endian base-b digit expansion; empty for zero.");
    m.def("sum_of_digit_squares",
          [](Int a, Int b) { return sum_of_digit_squares(a, make_base(b)); },
          py::arg("a"), py::arg("base"));
    m.def("eval_happy",
          [](Int c, Int b, Int a) { return eval_happy(c, make_base(b), a); },
          py::arg("c"), py::arg("base"), py::arg("a"),
          "c plus the sum of squared base-b digits of a.");
    m.def("deficiency",
          [](Int r, Int b) { return deficiency(r, make_base(b)); },
          py::arg("r"), py::arg("base"));
    m.def("constant_of_fixed_point",
          [](Int a, Int b) { return constant_of_fixed_point(a, make_base(b)); },
          py::arg("a"), py::arg("base"),
          "The unique constant making a a fixed point, or None.");
    m.def("to_base_string",
          [](Int a, Int b) { return to_base_string(a, make_base(b)); },
          py::arg("a"), py::arg("base"));

    m.def("search_bound",
          [](Int c, Int b) { return search_bound(c, make_base(b)); },
          py::arg("c"), py::arg("base"));
    m.def("fixed_points",
          [](Int c, Int b, int threads) {
              return fixed_points(c, make_base(b), threads);
          },
          py::arg("c"), py::arg("base"), py::arg("threads") = 1);
    m.def("has_fixed_point",
          [](Int c, Int b) { return has_fixed_point(c, make_base(b)); },
          py::arg("c"), py::arg("base"));
    m.def("smallest_fixed_point",
          [](Int c, Int b) { return smallest_fixed_point(c, make_base(b)); },
          py::arg("c"), py::arg("base"));
    m.def("companion_increment",
          [](Int a, Int b) { return companion_increment(a, make_base(b)); },
          py::arg("a"), py::arg("base"));
    m.def("companion_reflect_second_digit",
          [](Int a, Int b) {
              return companion_reflect_second_digit(a, make_base(b));
          },
          py::arg("a"), py::arg("base"));

    m.def("deficiency_table",
          [](Int b, int threads) {
              return deficiency_table(make_base(b), threads).entries;
          },
          py::arg("base"), py::arg("threads") = 1,
          "Mapping d -> ascending witnesses r in [0, b^3).");
    m.def("maximal_mirage_runs",
          [](Int b, int threads) {
              return maximal_mirage_runs(make_base(b), threads);
          },
          py::arg("base"), py::arg("threads") = 1);
    m.def("mirage_max_length",
          [](Int b, int threads) {
              return mirage_max_length(make_base(b), threads);
          },
          py::arg("base"), py::arg("threads") = 1);

    m.def("oasis_scan",
          [](Int b, Int lo, Int hi, int threads) {
              return oasis_scan(make_base(b), lo, hi, threads);
          },
          py::arg("base"), py::arg("c_lo"), py::arg("c_hi"),
          py::arg("threads") = 1);
    m.def("max_oasis",
          [](Int b, int threads) { return max_oasis(make_base(b), threads); },
          py::arg("base"), py::arg("threads") = 1);
    m.def("oasis_length_bound",
          [](Int b) { return oasis_length_bound(make_base(b)); },
          py::arg("base"));
    m.def("construct_5_oasis",
          [](Int b) { return construct_5_oasis(make_base(b)); },
          py::arg("base"));
    m.def("translate_oasis", &translate_oasis, py::arg("oasis"), py::arg("t"));
    m.def("check_digit_theorems", &check_digit_theorems, py::arg("oasis"));

    m.def("table1",
          [](Int max_base, int threads) { return table1(max_base, threads); },
          py::arg("max_base") = 20, py::arg("threads") = 1);

    m.def("verify_base",
          [](Int b, int threads) {
              std::ostringstream os;
              const bool ok = verify_base(make_base(b), threads, os);
              return py::make_tuple(ok, os.str());
          },
          py::arg("base"), py::arg("threads") = 1,
          "Returns (passed, report_text).");

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Returns (exit_code, stdout, stderr).");

    m.attr("__version__") = std::string(kToolVersion);
}
