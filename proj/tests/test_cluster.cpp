/*
 * Cluster graphs and cluster states: chain builders, graph validation, a
 * hand-computed qubit state for the open L = 2 chain, and the stabilizer
 * eigen-relations on the state itself.
 */

#include <doctest.h>

#include <random>

#include <hopfstate/cluster_state.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {

constexpr double kTol = 1e-12;
constexpr double kLooseTol = 1e-10;

AlgebraElement random_element(const HopfAlgebra& A, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgebraElement x;
    x.coeffs = Vec::Zero(A.dim);
    for (int a = 0; a < A.dim; ++a) x.coeffs(a) = cplx(gauss(rng), gauss(rng));
    return x;
}

}  // namespace

TEST_CASE("1D chain builders produce the documented layouts") {
    // Periodic L = 3: six vertices alternating odd/even, wrap edge first.
    const ClusterGraph P = build_1d_lattice(3, true);
    REQUIRE(P.num_vertices() == 6);
    REQUIRE(P.num_edges() == 6);
    for (int v = 0; v < 6; ++v) CHECK(P.odd[v] == (v % 2 == 0));
    CHECK(P.edges[0].from == 5);
    CHECK(P.edges[0].to == 0);
    for (int e = 1; e < 6; ++e) {
        CHECK(P.edges[e].from == e - 1);
        CHECK(P.edges[e].to == e);
    }
    CHECK(P.lattice);
    // Every odd vertex sees its incoming edge before its outgoing edge.
    for (int v = 0; v < 6; v += 2) {
        REQUIRE(P.local_order[v].size() == 2);
        CHECK(!P.odd_to_even(P.local_order[v][0]));
        CHECK(P.odd_to_even(P.local_order[v][1]));
    }

    // Open L = 2: three vertices, both ends odd.
    const ClusterGraph O = build_1d_lattice(2, false);
    REQUIRE(O.num_vertices() == 3);
    REQUIRE(O.num_edges() == 2);
    CHECK(O.odd[0]);
    CHECK(!O.odd[1]);
    CHECK(O.odd[2]);

    CHECK_THROWS_AS(build_1d_lattice(1, true), InvalidSize);
    CHECK_THROWS_AS(build_1d_lattice(0, false), InvalidSize);
}

TEST_CASE("graph validation rejects bad parities and degrees") {
    CHECK_THROWS_AS(build_cluster_graph({true, true}, {{0, 1}}), NotBipartite);
    CHECK_THROWS_AS(build_cluster_graph({true}, {{0, 3}}), UnknownVertex);
    // Lattice flag: even vertices need in-degree 1 and out-degree 1.
    CHECK_THROWS_AS(
        build_cluster_graph({true, false}, {{0, 1}}, /*lattice=*/true),
        InvalidSize);
    // Isolated vertices are reported, not rejected.
    const ClusterGraph K =
        build_cluster_graph({true, false, true}, {{0, 1}});
    REQUIRE(K.isolated.size() == 1);
    CHECK(K.isolated[0] == 2);
}

TEST_CASE("open L = 2 qubit cluster state matches the hand computation") {
    // |Ω⟩ = |+, 0, +⟩; gates CX(0→1) then CX(2→1) give
    // |ψ⟩ = (1/2) Σ_{a,c} |a, a⊕c, c⟩.
    const HopfAlgebra A = zoo_algebra("Z2");
    const StateVector psi = cluster_state(A, build_1d_lattice(2, false));
    REQUIRE(psi.dims == std::vector<int>{2, 2, 2});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const cplx expect(b == (a ^ c) ? 0.5 : 0.0, 0.0);
                CHECK(std::abs(psi.amps[static_cast<std::size_t>(
                                   (a * 2 + b) * 2 + c)] -
                               expect) <= kTol);
            }
}

TEST_CASE("preferred product state has unit Hopf norm") {
    const HopfAlgebra A = zoo_algebra("S3");
    const ClusterGraph K = build_1d_lattice(2, true);
    const StateVector omega = preferred_state(A, K);
    std::vector<Mat> grams;
    for (int v = 0; v < K.num_vertices(); ++v) grams.push_back(A.gram());
    CHECK(std::abs(dot_with_grams(omega, omega, grams) - cplx(1.0)) <=
          kLooseTol);
}

TEST_CASE("entangler circuit round-trips through its inverse") {
    const HopfAlgebra A = zoo_algebra("FS3");
    const ClusterGraph K = build_1d_lattice(2, true);
    const auto gates = entangler_circuit(K);
    REQUIRE(gates.size() == static_cast<std::size_t>(K.num_edges()));
    const StateVector psi =
        random_state(std::vector<int>(K.num_vertices(), A.dim), 3);
    const StateVector forth = apply_circuit(A, gates, psi);
    CHECK(state_distance(apply_circuit(A, gates, forth, /*inverse=*/true),
                         psi) <= kLooseTol);
}

TEST_CASE("stabilizer eigen-relations hold on the cluster state") {
    for (const std::string& name : {std::string("S3"), std::string("FS3")}) {
        const HopfAlgebra A = zoo_algebra(name);
        const auto irreps = decompose_irreps(A);
        const ClusterGraph K = build_1d_lattice(2, true);
        const StateVector psi = cluster_state(A, K);
        CAPTURE(name);

        for (int v = 0; v < K.num_vertices(); ++v) {
            if (K.odd[v]) {
                // T|ψ⟩ = |ψ⟩ and T→_g|ψ⟩ = ε(g)|ψ⟩.
                CHECK(state_distance(
                          apply_stabilizer(A, K, v, StabilizerFlavor::T, psi),
                          psi) <= kLooseTol);
                const AlgebraElement g = random_element(A, 40 + v);
                StateVector scaled = psi;
                const cplx eps = counit_of(A, g);
                for (auto& amp : scaled.amps) amp *= eps;
                CHECK(state_distance(
                          apply_stabilizer(A, K, v, StabilizerFlavor::TFwd,
                                           psi, &g),
                          scaled) <= kLooseTol);
            } else {
                // Q|ψ⟩ = |ψ⟩ and Q_Γ|ψ⟩ = d_Γ|ψ⟩.
                CHECK(state_distance(
                          apply_stabilizer(A, K, v, StabilizerFlavor::Q, psi),
                          psi) <= kLooseTol);
                for (const Representation& R : irreps) {
                    StateVector scaled = psi;
                    for (auto& amp : scaled.amps)
                        amp *= static_cast<double>(R.dim);
                    CHECK(state_distance(
                              apply_stabilizer(A, K, v,
                                               StabilizerFlavor::QRep, psi,
                                               nullptr, &R),
                              scaled) <= kLooseTol);
                }
            }
        }
    }
}

TEST_CASE("stabilizers of the wrong parity are rejected") {
    const HopfAlgebra A = zoo_algebra("Z2");
    const ClusterGraph K = build_1d_lattice(2, true);
    const StateVector psi = cluster_state(A, K);
    CHECK_THROWS_AS(apply_stabilizer(A, K, 1, StabilizerFlavor::T, psi),
                    SiteParity);
    CHECK_THROWS_AS(apply_stabilizer(A, K, 0, StabilizerFlavor::Q, psi),
                    SiteParity);
}
