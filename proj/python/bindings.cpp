#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "latip/diophantine.hpp"
#include "latip/gen.hpp"
#include "latip/io.hpp"
#include "latip/oracle.hpp"
#include "latip/pipeline.hpp"
#include "latip/selftest.hpp"

namespace py = pybind11;

namespace {

// Python ints are arbitrary precision; decimal strings bridge them to mpz.
latip::Int to_int(const py::handle& obj) {
    return latip::parse_int(py::str(obj).cast<std::string>());
}

py::object to_py_int(const latip::Int& v) {
    PyObject* raw = PyLong_FromString(latip::int_str(v).c_str(), nullptr, 10);
    if (!raw) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(raw);
}

latip::IntVec to_vec(const py::sequence& seq) {
    latip::IntVec out;
    out.reserve(seq.size());
    for (const auto& item : seq) out.push_back(to_int(item));
    return out;
}

py::list to_py_list(const latip::IntVec& v) {
    py::list out;
    for (const latip::Int& e : v) out.append(to_py_int(e));
    return out;
}

latip::BkpInstance make_bkp(const py::sequence& a, const py::handle& b, const py::sequence& u) {
    latip::BkpInstance inst{to_vec(a), to_int(b), to_vec(u)};
    auto violations = latip::validate_instance(inst);
    if (!violations.empty()) throw py::value_error(violations.front());
    return inst;
}

latip::BipInstance make_bip(const py::sequence& rows, const py::sequence& b,
                            const py::sequence& u) {
    latip::BipInstance inst;
    for (const auto& row : rows) inst.A.push_back(to_vec(row.cast<py::sequence>()));
    inst.b = to_vec(b);
    inst.u = to_vec(u);
    auto violations = latip::validate_instance(inst);
    if (!violations.empty()) throw py::value_error(violations.front());
    return inst;
}

latip::PipelineOptions make_options(const std::string& norm, long safety,
                                    std::uint64_t node_budget) {
    latip::PipelineOptions opts;
    if (norm == "l1") opts.norm = latip::Norm::L1;
    else if (norm == "linf") opts.norm = latip::Norm::Linf;
    else throw py::value_error("norm must be 'l1' or 'linf'");
    opts.safety = latip::Int(safety);
    opts.node_budget = node_budget;
    return opts;
}

py::object opt_assignment(const std::optional<latip::Assignment>& x) {
    if (!x) return py::none();
    return to_py_list(*x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solving and counting of bounded integer programs via lattice enumeration";

    m.def(
        "solve_bkp",
        [](const py::sequence& a, const py::handle& b, const py::sequence& u,
           const std::string& norm, long safety, std::uint64_t node_budget) {
            return opt_assignment(latip::solve_bkp_via_sap(
                make_bkp(a, b, u), make_options(norm, safety, node_budget)));
        },
        py::arg("a"), py::arg("b"), py::arg("u"), py::arg("norm") = "linf",
        py::arg("safety") = 1, py::arg("node_budget") = 100'000'000,
        "Solve a bounded knapsack through the lattice route; None means infeasible.");

    m.def(
        "count_bkp",
        [](const py::sequence& a, const py::handle& b, const py::sequence& u, long safety,
           std::uint64_t node_budget) {
            return to_py_int(latip::count_bkp_via_sap(
                make_bkp(a, b, u), make_options("linf", safety, node_budget)));
        },
        py::arg("a"), py::arg("b"), py::arg("u"), py::arg("safety") = 1,
        py::arg("node_budget") = 100'000'000,
        "Exact number of solutions of a bounded knapsack.");

    m.def(
        "solve_bip",
        [](const py::sequence& rows, const py::sequence& b, const py::sequence& u,
           const std::string& norm, long safety, std::uint64_t node_budget) {
            return opt_assignment(latip::solve_bip(make_bip(rows, b, u),
                                                   make_options(norm, safety, node_budget)));
        },
        py::arg("A"), py::arg("b"), py::arg("u"), py::arg("norm") = "linf",
        py::arg("safety") = 1, py::arg("node_budget") = 100'000'000,
        "Solve a bounded equation system through aggregation and the lattice route.");

    m.def(
        "count_bip",
        [](const py::sequence& rows, const py::sequence& b, const py::sequence& u, long safety,
           std::uint64_t node_budget) {
            return to_py_int(latip::count_bip_via_sap(
                make_bip(rows, b, u), make_options("linf", safety, node_budget)));
        },
        py::arg("A"), py::arg("b"), py::arg("u"), py::arg("safety") = 1,
        py::arg("node_budget") = 100'000'000);

    m.def(
        "optimize_bip",
        [](const py::sequence& rows, const py::sequence& b, const py::sequence& u,
           const py::sequence& c, const std::string& norm, long safety,
           std::uint64_t node_budget) -> py::object {
            auto best = latip::optimize_bip(make_bip(rows, b, u), to_vec(c),
                                            make_options(norm, safety, node_budget));
            if (!best) return py::none();
            return py::make_tuple(to_py_list(best->first), to_py_int(best->second));
        },
        py::arg("A"), py::arg("b"), py::arg("u"), py::arg("c"), py::arg("norm") = "linf",
        py::arg("safety") = 1, py::arg("node_budget") = 100'000'000,
        "Minimize c·x over the feasible box; returns (x, value) or None.");

    m.def(
        "oracle_solve",
        [](const py::sequence& rows, const py::sequence& b, const py::sequence& u,
           long box_budget) {
            return opt_assignment(latip::oracle_solve(make_bip(rows, b, u),
                                                      latip::Int(box_budget)));
        },
        py::arg("A"), py::arg("b"), py::arg("u"), py::arg("box_budget") = 10'000'000,
        "Brute-force reference: lexicographically smallest solution.");

    m.def(
        "oracle_count",
        [](const py::sequence& rows, const py::sequence& b, const py::sequence& u,
           long box_budget) {
            return to_py_int(latip::oracle_count(make_bip(rows, b, u), latip::Int(box_budget)));
        },
        py::arg("A"), py::arg("b"), py::arg("u"), py::arg("box_budget") = 10'000'000);

    m.def(
        "shortest_length_profile",
        [](const py::sequence& a, const py::handle& b, const py::sequence& u, long safety) {
            latip::LengthProfile p = latip::shortest_length_profile(
                make_bkp(a, b, u), make_options("linf", safety, 100'000'000));
            py::object linf = p.linf_min ? py::cast(latip::rat_str(*p.linf_min)) : py::none();
            py::object l1 = p.l1_min ? py::cast(latip::rat_str(*p.l1_min)) : py::none();
            return py::make_tuple(linf, l1);
        },
        py::arg("a"), py::arg("b"), py::arg("u"), py::arg("safety") = 1,
        "Shortest-vector norms (linf via the surfaced route, l1 at ceiling n) as strings.");

    m.def(
        "dio_check_lemma",
        [](long lambda, std::size_t n, long t, long box) {
            return latip::dio_check_lemma(latip::make_dio(latip::Int(lambda), n, latip::Int(t)),
                                          latip::Int(box));
        },
        py::arg("lam"), py::arg("n"), py::arg("t"), py::arg("box"));

    m.def(
        "gen_bkp",
        [](std::uint64_t seed, std::size_t n, std::uint64_t umax, std::uint64_t amax,
           bool feasible) {
            auto inst = latip::gen_bkp(seed, n, umax, amax, feasible);
            return py::make_tuple(to_py_list(inst.a), to_py_int(inst.b), to_py_list(inst.u));
        },
        py::arg("seed"), py::arg("n"), py::arg("umax") = 4, py::arg("amax") = 15,
        py::arg("feasible") = false, "Deterministic seeded knapsack as (a, b, u).");

    m.def("run_acceptance_criterion", [](int id) {
        latip::CriterionResult r = latip::run_criterion(id);
        return py::make_tuple(r.passed, r.name, r.detail);
    });
}
