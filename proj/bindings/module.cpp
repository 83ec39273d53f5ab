#include "braidcover/braid.hpp"
#include "braidcover/burau.hpp"
#include "braidcover/json_io.hpp"
#include "braidcover/ordering.hpp"
#include "braidcover/topology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace braidcover;

namespace {

py::object big_to_py(const BigInt& v) {
    std::string s = v.str();
    PyObject* p = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

py::object json_to_py(const json& j) {
    using value_t = json::value_t;
    switch (j.type()) {
    case value_t::null:
        return py::none();
    case value_t::boolean:
        return py::bool_(j.get<bool>());
    case value_t::number_integer:
        return py::int_(j.get<long long>());
    case value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case value_t::number_float:
        return py::float_(j.get<double>());
    case value_t::string:
        return py::str(j.get<std::string>());
    case value_t::array: {
        py::list out;
        for (const auto& e : j) out.append(json_to_py(e));
        return out;
    }
    case value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
        return out;
    }
    default:
        return py::none();
    }
}

py::list poly_pairs(const LaurentPoly& p) {
    py::list out;
    for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(e, big_to_py(c)));
    return out;
}

py::list int_matrix_rows(const IntMatrix& m) {
    py::list out;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(big_to_py(m.at(i, j)));
        out.append(row);
    }
    return out;
}

py::list poly_matrix_rows(const PolyMatrix& m) {
    py::list out;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(poly_pairs(m.at(i, j)));
        out.append(row);
    }
    return out;
}

py::dict fdtc_to_py(const FdtcEstimate& e) {
    py::dict d;
    d["lower"] = e.lower.str();
    d["upper"] = e.upper.str();
    d["pinned"] = e.pinned ? py::object(py::str(e.pinned->str())) : py::object(py::none());
    d["power_used"] = e.power_used;
    return d;
}

FdtcOptions fdtc_options(int max_power, std::optional<long long> denominator_bound,
                         long long step_limit) {
    FdtcOptions o;
    o.max_power = max_power;
    o.denominator_bound = denominator_bound;
    o.step_limit = step_limit;
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact braid invariants of double branched covers";

    py::register_exception<ParseError>(m, "BraidParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "BraidDomainError", PyExc_ValueError);
    py::register_exception<StepLimitError>(m, "StepLimitExceeded", PyExc_RuntimeError);

    py::class_<BraidWord>(m, "Word")
        .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
        .def_property_readonly("strands", &BraidWord::strands)
        .def_property_readonly("letters",
                               [](const BraidWord& w) { return w.letters(); })
        .def("__len__", &BraidWord::length)
        .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
        .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return compose(a, b); })
        .def("inverse", &BraidWord::inverse)
        .def("__repr__", [](const BraidWord& w) {
            std::string s = "Word(strands=" + std::to_string(w.strands()) + ", letters=[";
            for (std::size_t i = 0; i < w.letters().size(); ++i) {
                if (i) s += ", ";
                s += std::to_string(w.letters()[i]);
            }
            return s + "])";
        });

    m.def(
        "parse",
        [](const std::string& text, int strands) { return flatten(parse_expr(text), strands); },
        py::arg("text"), py::arg("strands"));
    m.def("identity", &BraidWord::identity, py::arg("strands"));
    m.def("delta", &delta, py::arg("strands"));
    m.def("delta_rev", &delta_rev, py::arg("strands"));
    m.def("full_twist", &full_twist, py::arg("strands"));
    m.def("beta", &beta_family, py::arg("strands"), py::arg("twists"));
    m.def("free_reduce", &free_reduce, py::arg("word"));
    m.def("cyclic_rotate", &cyclic_rotate, py::arg("word"), py::arg("k"));
    m.def("exponent_sum", &exponent_sum, py::arg("word"));
    m.def(
        "cycle_type", [](const BraidWord& w) { return permutation(w).cycle_type(); },
        py::arg("word"));
    m.def("components", &closure_component_count, py::arg("word"));
    m.def("is_positive", &is_positive_word, py::arg("word"));
    m.def("stabilize", &markov_stabilize, py::arg("word"), py::arg("sign"));
    m.def(
        "destabilize",
        [](const BraidWord& w) -> py::object {
            auto r = markov_destabilize(w);
            return r ? py::cast(*r) : py::object(py::none());
        },
        py::arg("word"));

    m.def(
        "burau", [](const BraidWord& w) { return poly_matrix_rows(burau_word(w)); },
        py::arg("word"),
        "Reduced Burau matrix as nested lists of (exponent, coefficient) pairs");
    m.def(
        "burau_at_minus1",
        [](const BraidWord& w) { return int_matrix_rows(burau_at_minus1(w)); }, py::arg("word"));
    m.def(
        "alexander", [](const BraidWord& w) { return alexander_polynomial(w).str(); },
        py::arg("word"));
    m.def(
        "alexander_pairs",
        [](const BraidWord& w) { return poly_pairs(alexander_polynomial(w)); }, py::arg("word"));
    m.def(
        "knot_determinant", [](const BraidWord& w) { return big_to_py(knot_determinant(w)); },
        py::arg("word"));
    m.def(
        "h1_order", [](const BraidWord& w) { return big_to_py(h1_order(w)); }, py::arg("word"));

    m.def(
        "handle_reduce",
        [](const BraidWord& w, long long step_limit) {
            HandleReduction r = handle_reduce(w, step_limit);
            py::dict d;
            d["word"] = r.word;
            d["sign"] = r.cls.sign;
            d["main_index"] = r.cls.main_index;
            d["steps"] = r.steps;
            return d;
        },
        py::arg("word"), py::arg("step_limit") = kDefaultStepLimit);
    m.def(
        "compare",
        [](const BraidWord& a, const BraidWord& b, long long step_limit) {
            switch (compare_dehornoy(a, b, step_limit)) {
            case OrderRel::Less: return -1;
            case OrderRel::Equal: return 0;
            default: return 1;
            }
        },
        py::arg("a"), py::arg("b"), py::arg("step_limit") = kDefaultStepLimit);
    m.def("dehornoy_floor", &dehornoy_floor, py::arg("word"),
          py::arg("step_limit") = kDefaultStepLimit);
    m.def(
        "fdtc",
        [](const BraidWord& w, int max_power, std::optional<long long> denominator_bound,
           long long step_limit) {
            return fdtc_to_py(fdtc(w, max_power, denominator_bound, step_limit));
        },
        py::arg("word"), py::arg("max_power") = 6, py::arg("denominator_bound") = py::none(),
        py::arg("step_limit") = kDefaultStepLimit);
    m.def(
        "bh_fdtc",
        [](const BraidWord& w, int max_power, std::optional<long long> denominator_bound,
           long long step_limit) {
            return fdtc_to_py(bh_fdtc(fdtc(w, max_power, denominator_bound, step_limit),
                                      w.strands()));
        },
        py::arg("word"), py::arg("max_power") = 6, py::arg("denominator_bound") = py::none(),
        py::arg("step_limit") = kDefaultStepLimit);

    m.def(
        "page",
        [](int strands) {
            json j(page_of(strands));
            return json_to_py(j);
        },
        py::arg("strands"));
    m.def(
        "open_book_report",
        [](const BraidWord& w, int max_power, std::optional<long long> denominator_bound,
           long long step_limit) {
            json j(open_book_report(w, fdtc_options(max_power, denominator_bound, step_limit)));
            return json_to_py(j);
        },
        py::arg("word"), py::arg("max_power") = 6, py::arg("denominator_bound") = py::none(),
        py::arg("step_limit") = kDefaultStepLimit);
    m.def(
        "determinant_table",
        [](int k_max) {
            json j(verify_prop41(k_max));
            return json_to_py(j);
        },
        py::arg("k_max"));
    m.def(
        "open_book_pair_report",
        [](int k, int max_power, std::optional<long long> denominator_bound,
           long long step_limit) {
            json j(theorem12_report(k, fdtc_options(max_power, denominator_bound, step_limit)));
            return json_to_py(j);
        },
        py::arg("k"), py::arg("max_power") = 6, py::arg("denominator_bound") = py::none(),
        py::arg("step_limit") = kDefaultStepLimit);
}
