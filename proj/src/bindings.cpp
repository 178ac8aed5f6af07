#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gatecost/codes.hpp"
#include "gatecost/errors.hpp"
#include "gatecost/information.hpp"
#include "gatecost/landauer.hpp"
#include "gatecost/protocols.hpp"
#include "gatecost/scenario.hpp"

namespace py = pybind11;
using namespace gatecost;

namespace {

Eigen::MatrixXcd states_matrix(const EvolutionTrace& trace) {
    Eigen::MatrixXcd out(trace.times.size(), trace.dim());
    for (std::size_t j = 0; j < trace.states.size(); ++j) {
        out.row(j) = trace.states[j];
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hamiltonian gate protocols, marginal-information bounds and protocol costs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

    // linalg
    m.def("pauli_x", &pauli_x);
    m.def("pauli_z", &pauli_z);
    m.def("hadamard_gate", &hadamard_gate);
    m.def("operator_norm", &operator_norm, py::arg("hermitian"));
    m.def("pauli_rotation_exp", &pauli_rotation_exp, py::arg("hermitian"), py::arg("dt"));
    m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
    m.def("is_unitary", &is_unitary, py::arg("m"), py::arg("tol") = kUnitaryTol);
    m.def("is_hermitian", &is_hermitian, py::arg("m"), py::arg("tol") = kHermitianTol);

    // information
    m.def("marginal_probs", &marginal_probs, py::arg("psi"));
    m.def("shannon_nats", &shannon_nats, py::arg("probs"));
    m.def("surrogate_entropy", &surrogate_entropy, py::arg("probs"));
    m.def("surrogate_entropy_max", &surrogate_entropy_max, py::arg("dim"));
    m.def("delta_info_bits", &delta_info_bits, py::arg("psi_in"), py::arg("psi_out"));
    m.def("vn_entropy_pure", &vn_entropy_pure, py::arg("psi"));

    // dynamics
    py::class_<HamiltonianSchedule>(m, "HamiltonianSchedule")
        .def(py::init([](int dim, double tau, std::function<Matrix(double)> at) {
                 return HamiltonianSchedule{dim, tau, std::move(at)};
             }),
             py::arg("dim"), py::arg("tau"), py::arg("at"))
        .def_readonly("dim", &HamiltonianSchedule::dim)
        .def_readonly("tau", &HamiltonianSchedule::tau)
        .def("at", [](const HamiltonianSchedule& s, double t) { return s.at(t); }, py::arg("t"));
    m.def("zero_schedule", &zero_schedule, py::arg("dim"), py::arg("tau"));
    m.def("constant_schedule", &constant_schedule, py::arg("h"), py::arg("tau"));

    py::class_<EvolutionTrace>(m, "EvolutionTrace")
        .def_readonly("tau", &EvolutionTrace::tau)
        .def_readonly("times", &EvolutionTrace::times)
        .def_readonly("probs", &EvolutionTrace::probs)
        .def_readonly("h_norms", &EvolutionTrace::h_norms)
        .def_readonly("surrogate", &EvolutionTrace::surrogate)
        .def_property_readonly("states", &states_matrix)
        .def_property_readonly("dim", &EvolutionTrace::dim)
        .def_property_readonly("steps", &EvolutionTrace::steps);
    m.def("evolve", &evolve, py::arg("schedule"), py::arg("psi0"), py::arg("steps"));
    m.def("propagator", &propagator, py::arg("schedule"), py::arg("steps"));
    m.def("gate_fidelity", &gate_fidelity, py::arg("u"), py::arg("v"));

    // protocols
    py::class_<PhaseProtocol>(m, "PhaseProtocol")
        .def(py::init([](double tau, std::vector<double> fourier) {
                 return PhaseProtocol{tau, std::move(fourier)};
             }),
             py::arg("tau") = 1.0, py::arg("fourier") = std::vector<double>{})
        .def_readonly("tau", &PhaseProtocol::tau)
        .def_readonly("fourier", &PhaseProtocol::fourier);
    m.def("linear_protocol", &linear_protocol, py::arg("tau") = 1.0);
    m.def("single_mode_protocol", &single_mode_protocol, py::arg("amplitude"), py::arg("tau") = 1.0);
    m.def("phi", &phi, py::arg("protocol"), py::arg("t"));
    m.def("phi_dot", &phi_dot, py::arg("protocol"), py::arg("t"));
    m.def("hadamard_schedule", &hadamard_schedule, py::arg("protocol"));
    m.def("cost_numeric", &cost_numeric, py::arg("protocol"), py::arg("samples") = kDefaultCostSamples);
    m.def("cost_closed_form_single_mode", &cost_closed_form_single_mode, py::arg("amplitude"));
    m.def("cooper_pair_box", &cooper_pair_box, py::arg("josephson_energy"),
          py::arg("effective_charging_energy"));

    py::class_<OptimizeResult>(m, "OptimizeResult")
        .def_readonly("protocol", &OptimizeResult::protocol)
        .def_readonly("cost", &OptimizeResult::cost)
        .def_readonly("iterations", &OptimizeResult::iterations)
        .def_readonly("converged", &OptimizeResult::converged);
    m.def("optimize_protocol", &optimize_protocol, py::arg("modes"), py::arg("init"),
          py::arg("max_iters") = 500, py::arg("tol") = 1e-9, py::arg("tau") = 1.0,
          py::arg("cost_samples") = 1 << 14);

    // landauer
    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("delta_S_nats", &BoundReport::delta_S_nats)
        .def_readonly("delta_I_bits", &BoundReport::delta_I_bits)
        .def_readonly("rhs_trajectory_nats", &BoundReport::rhs_trajectory_nats)
        .def_readonly("rhs_dimension_bits", &BoundReport::rhs_dimension_bits)
        .def_readonly("rhs_reset_bits", &BoundReport::rhs_reset_bits)
        .def_readonly("rate_bound_violations", &BoundReport::rate_bound_violations)
        .def_readonly("slack_trajectory", &BoundReport::slack_trajectory)
        .def_readonly("slack_dimension", &BoundReport::slack_dimension)
        .def_readonly("pass_", &BoundReport::pass)
        .def("to_json", [](const BoundReport& r) { return r.to_json().dump(); });
    m.def("bound_trajectory", &bound_trajectory, py::arg("trace"));
    m.def("bound_dimension", &bound_dimension, py::arg("trace"), py::arg("dim"));
    m.def("bound_reset", &bound_reset, py::arg("protocol"), py::arg("samples") = kDefaultCostSamples);
    m.def(
        "verify",
        [](const EvolutionTrace& trace, std::optional<PhaseProtocol> protocol, double rhs_scale) {
            return verify(trace, protocol ? &*protocol : nullptr, rhs_scale);
        },
        py::arg("trace"), py::arg("protocol") = std::nullopt, py::arg("rhs_scale") = 1.0);

    // codes
    py::class_<CodeSpec>(m, "CodeSpec")
        .def_readonly("name", &CodeSpec::name)
        .def_readonly("n_physical", &CodeSpec::n_physical)
        .def_readonly("encode0", &CodeSpec::encode0)
        .def_readonly("encode1", &CodeSpec::encode1);
    m.def("shor_code", &shor_code);
    m.def("perfect_code", &perfect_code);
    m.def("encode", &encode, py::arg("code"), py::arg("alpha"), py::arg("beta"));
    m.def("encoded_marginal_bits", &encoded_marginal_bits, py::arg("code"), py::arg("alpha"),
          py::arg("beta"));
    m.def("code_cost_bound_bits", &code_cost_bound_bits, py::arg("code"),
          py::arg("single_qubit_integral"));

    // verification campaign
    py::class_<CampaignSummary>(m, "CampaignSummary")
        .def_readonly("draws", &CampaignSummary::draws)
        .def_readonly("rate_violations", &CampaignSummary::rate_violations)
        .def_readonly("trajectory_violations", &CampaignSummary::trajectory_violations)
        .def_readonly("dimension_violations", &CampaignSummary::dimension_violations)
        .def_readonly("holder_violations", &CampaignSummary::holder_violations)
        .def_readonly("worst_rate_slack", &CampaignSummary::worst_rate_slack)
        .def_readonly("worst_unitarity_defect", &CampaignSummary::worst_unitarity_defect)
        .def("total_violations", &CampaignSummary::total_violations)
        .def("ok", &CampaignSummary::pass)
        .def("to_json", [](const CampaignSummary& s) { return s.to_json().dump(); });
    m.def(
        "run_campaign",
        [](int draws, int steps, std::uint64_t seed, double rhs_scale) {
            CampaignOptions options;
            options.draws = draws;
            options.steps = steps;
            options.seed = seed;
            options.rhs_scale = rhs_scale;
            return run_campaign(options);
        },
        py::arg("draws") = 200, py::arg("steps") = 4096, py::arg("seed") = 7,
        py::arg("rhs_scale") = 1.0);
}
