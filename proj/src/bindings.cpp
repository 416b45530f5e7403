#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtrskit/commands.hpp"
#include "gtrskit/constructions.hpp"

namespace py = pybind11;
using namespace gtrskit;

namespace {

// Thin index-level wrapper: python passes and receives canonical element
// indices (plain ints), never FieldElem objects.
struct PyField {
    const FieldCtx* F;
    explicit PyField(uint32_t q) : F(&make_field_order(q)) {}
    PyField(uint32_t p, uint32_t m) : F(&make_field(p, m)) {}
};

std::vector<FieldElem> to_elems(const FieldCtx& F, const std::vector<uint32_t>& idx) {
    std::vector<FieldElem> out;
    out.reserve(idx.size());
    for (uint32_t v : idx) out.push_back(F.elem(v));
    return out;
}

EvalConfig cfg_of(const PyField& f, const std::vector<uint32_t>& points,
                  const std::vector<uint32_t>& mults) {
    return EvalConfig(*f.F, to_elems(*f.F, points), to_elems(*f.F, mults));
}

TwistParams tp_of(const PyField& f, uint32_t k, uint32_t t, uint32_t h, uint32_t eta) {
    return TwistParams(k, t, h, f.F->elem(eta));
}

std::string run_command(const std::string& command, const std::string& params_json,
                        uint64_t seed, uint32_t workers) {
    RunConfig rc;
    rc.command = command;
    rc.params = ojson::parse(params_json);
    rc.seed = seed;
    rc.workers = workers ? workers : 1;
    Report rep;
    if (command == "construct")
        rep = cmd_construct(rc);
    else if (command == "verify")
        rep = cmd_verify(rc);
    else if (command == "search")
        rep = cmd_search(rc);
    else
        throw std::invalid_argument("unknown command: " + command);
    return rep.to_json(false).dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "generalized twisted Reed-Solomon code toolkit (index-level core)";

    py::register_exception<ParamWindowError>(mod, "ParamWindowError", PyExc_ValueError);
    py::register_exception<GuardExceededError>(mod, "GuardExceededError", PyExc_RuntimeError);

    py::class_<PyField>(mod, "Field")
        .def(py::init<uint32_t>(), py::arg("q"))
        .def(py::init<uint32_t, uint32_t>(), py::arg("p"), py::arg("m"))
        .def_property_readonly("q", [](const PyField& f) { return f.F->q(); })
        .def_property_readonly("p", [](const PyField& f) { return f.F->p(); })
        .def_property_readonly("m", [](const PyField& f) { return f.F->m(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.F->spec().modulus; })
        .def("add", [](const PyField& f, uint32_t a, uint32_t b) { return f.F->vadd(a, b); })
        .def("sub", [](const PyField& f, uint32_t a, uint32_t b) { return f.F->vsub(a, b); })
        .def("mul", [](const PyField& f, uint32_t a, uint32_t b) { return f.F->vmul(a, b); })
        .def("neg", [](const PyField& f, uint32_t a) { return f.F->vneg(a); })
        .def("inv", [](const PyField& f, uint32_t a) { return f.F->vinv(a); })
        .def("pow", [](const PyField& f, uint32_t a, uint64_t e) { return f.F->vpow(a, e); })
        .def("generator", [](const PyField& f) { return f.F->generator().value(); })
        .def("subfield",
             [](const PyField& f, uint32_t r) {
                 std::vector<uint32_t> out;
                 for (const auto& e : f.F->subfield_elements(r)) out.push_back(e.value());
                 return out;
             })
        .def("__repr__", [](const PyField& f) {
            return "Field(q=" + std::to_string(f.F->q()) + ")";
        });

    mod.def(
        "gtrs_generator",
        [](const PyField& f, const std::vector<uint32_t>& points,
           const std::vector<uint32_t>& mults, uint32_t k, uint32_t t, uint32_t h,
           uint32_t eta) {
            return gtrs_code(cfg_of(f, points, mults), tp_of(f, k, t, h, eta))
                .generator()
                .value_rows();
        },
        py::arg("field"), py::arg("points"), py::arg("multipliers"), py::arg("k"),
        py::arg("t"), py::arg("h"), py::arg("eta"),
        "Literal generator rows of the twisted evaluation code.");

    mod.def(
        "rs_generator",
        [](const PyField& f, uint32_t k) { return rs_code(*f.F, k).generator().value_rows(); },
        py::arg("field"), py::arg("k"));

    mod.def(
        "dual_rows",
        [](const PyField& f, const std::vector<std::vector<uint32_t>>& rows) {
            return dual(LinearCode::from_generators(Matrix::from_value_rows(*f.F, rows)))
                .rref_generator()
                .value_rows();
        },
        py::arg("field"), py::arg("rows"));

    mod.def(
        "schur_square_rows",
        [](const PyField& f, const std::vector<std::vector<uint32_t>>& rows) {
            return schur_square(LinearCode::from_generators(Matrix::from_value_rows(*f.F, rows)))
                .rref_generator()
                .value_rows();
        },
        py::arg("field"), py::arg("rows"));

    mod.def(
        "is_self_orthogonal",
        [](const PyField& f, const std::vector<std::vector<uint32_t>>& rows) {
            return is_self_orthogonal(
                LinearCode::from_generators(Matrix::from_value_rows(*f.F, rows)));
        },
        py::arg("field"), py::arg("rows"));

    mod.def(
        "min_distance",
        [](const PyField& f, const std::vector<std::vector<uint32_t>>& rows) {
            DistanceReport r = min_distance(
                LinearCode::from_generators(Matrix::from_value_rows(*f.F, rows)));
            py::dict out;
            out["d"] = r.d;
            out["exact"] = r.exact;
            out["method"] =
                r.method == DistanceMethod::MinorScan ? "minor_scan" : "exhaustive";
            return out;
        },
        py::arg("field"), py::arg("rows"));

    mod.def(
        "self_orth_feasible",
        [](const PyField& f, const std::vector<uint32_t>& points,
           const std::vector<uint32_t>& mults, uint32_t k, uint32_t t, uint32_t h,
           uint32_t eta) {
            SelfOrthWitness w =
                self_orth_feasibility(cfg_of(f, points, mults), tp_of(f, k, t, h, eta));
            py::dict out;
            out["feasible"] = w.feasible;
            out["dual_dim"] = w.dual_dim;
            if (w.feasible) {
                py::dict poly;
                const auto& c = w.witness.coeff_values();
                for (size_t e = 0; e < c.size(); ++e)
                    if (c[e]) poly[py::int_(e)] = c[e];
                out["witness"] = poly;
            } else {
                out["witness_row"] = w.witness_row;
            }
            return out;
        },
        py::arg("field"), py::arg("points"), py::arg("multipliers"), py::arg("k"),
        py::arg("t"), py::arg("h"), py::arg("eta"),
        "Dual-interpolation feasibility verdict with witness polynomial.");

    mod.def(
        "t_k_set",
        [](const PyField& f, const std::vector<uint32_t>& points, uint32_t k) {
            std::vector<uint32_t> out;
            for (const auto& e : t_k_set(to_elems(*f.F, points), k)) out.push_back(e.value());
            return out;
        },
        py::arg("field"), py::arg("points"), py::arg("k"));

    mod.def("run_command", &run_command, py::arg("command"), py::arg("params_json"),
            py::arg("seed") = 0, py::arg("workers") = 1,
            "Run a construct/verify/search command; returns the JSON report text.");
}
