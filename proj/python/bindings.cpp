#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphfair/fixtures.hpp"
#include "graphfair/generate.hpp"
#include "graphfair/io.hpp"
#include "graphfair/oracle.hpp"
#include "graphfair/solve.hpp"
#include "graphfair/tree_smms.hpp"
#include "graphfair/two_agents.hpp"

namespace py = pybind11;
using namespace graphfair;

namespace {

using Bundles = std::vector<Bundle>;

Allocation to_allocation(const Bundles& b) {
    Bundles sorted = b;
    for (auto& x : sorted) {
        std::sort(x.begin(), x.end());
    }
    return Allocation(std::move(sorted));
}

Instance make_instance(std::size_t vertices, const std::vector<Edge>& edges,
                       const std::vector<std::vector<Value>>& values) {
    Instance in{ItemGraph(vertices, edges), {}};
    for (const auto& v : values) {
        in.agents.push_back(UtilityFunction::additive(v));
    }
    validate_instance(in);
    return in;
}

py::dict report_dict(const FairnessReport& r) {
    py::dict d;
    d["pass"] = r.pass;
    if (r.witness) {
        py::dict w;
        w["agent"] = r.witness->agent;
        w["other"] = r.witness->other < 0 ? py::object(py::none()) : py::object(py::int_(r.witness->other));
        w["lhs"] = r.witness->lhs;
        w["rhs"] = r.witness->rhs;
        w["deficit"] = r.witness->deficit;
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Connected fair division of graph items";

    auto base = py::register_exception<Error>(m, "GraphFairError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<SizeGuardExceeded>(m, "SizeGuardExceeded", base.ptr());
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());

    py::class_<Instance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("vertices"), py::arg("edges"), py::arg("values"),
             "Additive agents over a graph on vertices 0..n-1.")
        .def_static("from_json", &parse_instance)
        .def("to_json", &write_instance, py::arg("canonical") = true)
        .def_property_readonly("n_vertices", [](const Instance& in) { return in.graph.size(); })
        .def_property_readonly("n_agents", &Instance::n_agents)
        .def_property_readonly("edges", [](const Instance& in) { return in.graph.edges(); })
        .def_property_readonly("identical", &Instance::identical)
        .def("utility", [](const Instance& in, std::size_t agent, Bundle bundle) {
            std::sort(bundle.begin(), bundle.end());
            return in.agents.at(agent).of(bundle);
        });

    m.def("algorithms", &algorithm_names);
    m.def("pick_algorithm", &pick_algorithm);
    m.def(
        "solve",
        [](const Instance& in, const std::string& algo) {
            auto r = solve(in, algo);
            return py::make_tuple(r.allocation.bundles, r.algo, r.info);
        },
        py::arg("instance"), py::arg("algo") = "auto",
        "Returns (bundles, algorithm used, info dict).");

    m.def(
        "check",
        [](const Instance& in, const Bundles& bundles, const std::string& criterion, Value num, Value den) {
            const auto c = FairnessCriterion::parse(criterion, FairnessRatio(num, den));
            return report_dict(check_fairness(in, to_allocation(bundles), c));
        },
        py::arg("instance"), py::arg("bundles"), py::arg("criterion") = "pmms", py::arg("num") = 1,
        py::arg("den") = 1);

    m.def(
        "mu",
        [](const Instance& in, std::size_t agent, Bundle bundle, std::size_t k) {
            std::sort(bundle.begin(), bundle.end());
            return mu_k(in.agents.at(agent), in.graph, bundle, k);
        },
        py::arg("instance"), py::arg("agent"), py::arg("bundle"), py::arg("k") = 2);

    m.def(
        "pmms_ratio",
        [](const Instance& in, const Bundles& bundles) {
            const auto r = realized_pmms_ratio(in, to_allocation(bundles));
            return py::make_tuple(r.num, r.den);
        },
        "Smallest u_i(A_i) / mu_2(A_i + A_j) over compared pairs as (num, den).");

    m.def(
        "brute_mnw",
        [](const Instance& in) {
            const auto r = brute_optimal(in, Objective::mnw);
            Bundles first = r.allocations.empty() ? Bundles{} : r.allocations.front().bundles;
            return py::make_tuple(r.allocations.size(), int128_to_string(r.nash_product), first);
        },
        "Returns (number of optimal allocations, Nash product as text, first optimum).");

    m.def("tree_mms_value", [](const Instance& in) {
        return tree_mms_value(in.graph, in.agents.at(0), in.n_agents());
    });

    m.def("fixture_names", &fixture_names);
    m.def("fixture", [](const std::string& name) { return get_fixture(name).instance; });
    m.def("check_fixture", [](const std::string& name) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& o : check_fixture(get_fixture(name))) {
            out.emplace_back(o.claim, o.pass);
        }
        return out;
    });

    m.def(
        "generate",
        [](const std::string& shape, std::size_t vertices, std::size_t agents, Value umax, std::uint64_t seed,
           bool identical) {
            GenOptions o;
            o.shape = parse_shape(shape);
            o.vertices = vertices;
            o.agents = agents;
            o.umax = umax;
            o.seed = seed;
            o.identical = identical;
            return generate_instance(o);
        },
        py::arg("shape") = "path", py::arg("vertices") = 5, py::arg("agents") = 2, py::arg("umax") = 10,
        py::arg("seed") = 0, py::arg("identical") = false);
}
