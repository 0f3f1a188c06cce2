/*
 * Hypergraph states: the qudit phase-gate mode with its symmetry validation,
 * and the Hopf mode with multilinear edge functionals.
 */

#include <doctest.h>

#include <cmath>

#include <hopfstate/cluster_state.hpp>
#include <hopfstate/hypergraph.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {

constexpr double kTol = 1e-12;

Mat hadamard() {
    Mat H(2, 2);
    H << 1, 1, 1, -1;
    return H / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("CZ hypergraph state equals the qubit cluster state") {
    // Two qubits, |++⟩ then a phase π on |11⟩: (|00⟩+|01⟩+|10⟩−|11⟩)/2.
    QuditHyperedge cz;
    cz.vertices = {0, 1};
    cz.theta = {0.0, 0.0, 0.0, M_PI};
    cz.directed = false;
    const StateVector psi =
        hypergraph_state_qudit({2, 2}, {hadamard(), hadamard()}, {cz});
    for (int n = 0; n < 4; ++n)
        CHECK(std::abs(psi.amps[static_cast<std::size_t>(n)] -
                       cplx(n == 3 ? -0.5 : 0.5, 0.0)) <= kTol);
}

TEST_CASE("edge multiplicity multiplies the phase") {
    QuditHyperedge cz;
    cz.vertices = {0, 1};
    cz.theta = {0.0, 0.0, 0.0, M_PI / 2.0};
    cz.multiplicity = 2;  // two applications: full π phase
    cz.directed = false;
    QuditHyperedge full = cz;
    full.theta[3] = M_PI;
    full.multiplicity = 1;
    const std::vector<Mat> gates = {hadamard(), hadamard()};
    CHECK(state_distance(hypergraph_state_qudit({2, 2}, gates, {cz}),
                         hypergraph_state_qudit({2, 2}, gates, {full})) <=
          kTol);
}

TEST_CASE("undirected edges demand symmetric phase tables") {
    QuditHyperedge e;
    e.vertices = {0, 1};
    e.theta = {0.0, 1.0, 0.0, 0.0};  // θ(0,1) ≠ θ(1,0)
    e.directed = false;
    CHECK_THROWS_AS(
        hypergraph_state_qudit({2, 2}, {hadamard(), hadamard()}, {e}),
        AsymmetricFunctional);
    // The same table is fine on a directed edge.
    e.directed = true;
    CHECK_NOTHROW(
        hypergraph_state_qudit({2, 2}, {hadamard(), hadamard()}, {e}));
}

TEST_CASE("shape errors are rejected") {
    QuditHyperedge e;
    e.vertices = {0, 1};
    e.theta = {0.0, 0.0};  // wrong table size
    CHECK_THROWS_AS(
        hypergraph_state_qudit({2, 2}, {hadamard(), hadamard()}, {e}),
        ArityMismatch);
    e.theta = {0.0, 0.0, 0.0, 0.0};
    e.vertices = {0, 5};
    CHECK_THROWS_AS(
        hypergraph_state_qudit({2, 2}, {hadamard(), hadamard()}, {e}),
        UnknownVertex);
    CHECK_THROWS_AS(hypergraph_state_qudit({2, 2}, {hadamard()}, {}),
                    DimensionMismatch);
}

TEST_CASE("no edges gives the product of local-gate columns") {
    const StateVector psi =
        hypergraph_state_qudit({2, 2}, {hadamard(), hadamard()}, {});
    for (int n = 0; n < 4; ++n)
        CHECK(std::abs(psi.amps[static_cast<std::size_t>(n)] - cplx(0.5)) <=
              kTol);
}

TEST_CASE("Hopf mode reproduces the single-edge cluster state") {
    // Cluster state for odd→even with C X←-style dual encoding: vertex
    // states λ (odd) and ψ-functional |𝒜|·Λ∘μ on the pair reproduce the
    // two-site entangled state built by the circuit.
    for (const std::string& name : {std::string("Z2"), std::string("S3")}) {
        const HopfAlgebra A = zoo_algebra(name);
        CAPTURE(name);

        const ClusterGraph K = build_cluster_graph({true, false}, {{1, 0}});
        const StateVector circuit = cluster_state(A, K, /*normalized=*/false);

        DualElement scaled;
        scaled.coeffs = static_cast<double>(A.dim) * A.haar_measure().coeffs;
        HopfHyperedge edge;
        edge.vertices = {0, 1};
        edge.psi = functional_from_dual(A, scaled, 2);

        const StateVector hyper = hypergraph_state_hopf(
            A, {A.haar_integral(), A.haar_integral()},
            {{0, -1}, {0, -1}}, {edge});
        CHECK(state_distance(hyper, circuit) <= 1e-10);
    }
}

TEST_CASE("Hopf mode validates local orders and arity") {
    const HopfAlgebra A = zoo_algebra("Z2");
    HopfHyperedge edge;
    edge.vertices = {0, 1};
    edge.psi = functional_from_dual(A, counit_functional(A), 2);
    const std::vector<AlgebraElement> states = {A.haar_integral(),
                                                A.haar_integral()};
    // Missing physical slot in a local order.
    CHECK_THROWS_AS(
        hypergraph_state_hopf(A, states, {{0}, {0, -1}}, {edge}),
        ArityMismatch);
    // Functional table of the wrong size.
    edge.psi.pop_back();
    CHECK_THROWS_AS(
        hypergraph_state_hopf(A, states, {{0, -1}, {0, -1}}, {edge}),
        ArityMismatch);
}
