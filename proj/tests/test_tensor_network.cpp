/*
 * Tensor networks: structure-tensor identities in diagrammatic form, vertex
 * tensors against hand-built Sweedler towers, exact contraction versus the
 * circuit construction in both antipode encodings, and the local rewrite
 * rules.
 */

#include <doctest.h>

#include <hopfstate/cluster_state.hpp>
#include <hopfstate/tensor_network.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {
constexpr double kTol = 1e-10;
}

TEST_CASE("structure tensors satisfy the diagrammatic algebra identities") {
    for (const std::string& name : {std::string("S3"), std::string("FS3")}) {
        const HopfAlgebra A = zoo_algebra(name);
        const StructureTensors T = structure_tensors(A);
        const int d = T.dim;
        CAPTURE(name);

        // Unit: Σ_a η_a A_ab^c = δ_bc.
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                cplx s = 0;
                for (int a = 0; a < d; ++a)
                    s += T.unit(a) * T.mul[(static_cast<std::size_t>(a) * d + b) * d + c];
                CHECK(std::abs(s - cplx(b == c ? 1.0 : 0.0)) <= kTol);
            }

        // Counit: Σ_b C_a^{bc} ε_b = δ_ac.
        for (int a = 0; a < d; ++a)
            for (int c = 0; c < d; ++c) {
                cplx s = 0;
                for (int b = 0; b < d; ++b)
                    s += T.comul[(static_cast<std::size_t>(a) * d + b) * d + c] *
                         T.counit(b);
                CHECK(std::abs(s - cplx(a == c ? 1.0 : 0.0)) <= kTol);
            }

        // Antipode cap: Σ_{b,c,b'} C_a^{bc} S_b^{b'} A_{b'c}^e = ε_a η_e.
        for (int a = 0; a < d; ++a)
            for (int e = 0; e < d; ++e) {
                cplx s = 0;
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c)
                        for (int bp = 0; bp < d; ++bp)
                            s += T.comul[(static_cast<std::size_t>(a) * d + b) * d + c] *
                                 T.antipode(b, bp) *
                                 T.mul[(static_cast<std::size_t>(bp) * d + c) * d + e];
                CHECK(std::abs(s - T.counit(a) * T.unit(e)) <= kTol);
            }
    }
}

TEST_CASE("vertex tensors are Sweedler towers of the Haar integral") {
    const HopfAlgebra A = zoo_algebra("S3");
    const ClusterGraph K = build_cluster_graph({true, false}, {{0, 1}});

    // Odd vertex of an outgoing edge: √|𝒜|·Δ₂(λ), no antipode.
    const TensorNode odd = vertex_tensor(A, K, 0);
    REQUIRE(odd.dims == std::vector<int>{A.dim, A.dim});
    const SweedlerExpansion sw = comultiply_n(A, A.haar_integral(), 2);
    const double scale = std::sqrt(static_cast<double>(A.dim));
    for (std::size_t i = 0; i < odd.data.size(); ++i)
        CHECK(std::abs(odd.data[i] - scale * sw.tensor[i]) <= kTol);

    // Even vertex of degree 1: the identity wire into the physical leg.
    const TensorNode even = vertex_tensor(A, K, 1);
    REQUIRE(even.dims == std::vector<int>{A.dim, A.dim});
    for (int x = 0; x < A.dim; ++x)
        for (int p = 0; p < A.dim; ++p)
            CHECK(std::abs(even.data[static_cast<std::size_t>(x) * A.dim + p] -
                           cplx(x == p ? 1.0 : 0.0)) <= kTol);
}

TEST_CASE("contraction reproduces the circuit state in both encodings") {
    for (const std::string& name : {std::string("Z2"), std::string("S3"),
                                    std::string("FS3"), std::string("D4")}) {
        const HopfAlgebra A = zoo_algebra(name);
        CAPTURE(name);
        for (bool periodic : {false, true}) {
            const ClusterGraph K = build_1d_lattice(2, periodic);
            const StateVector circuit = cluster_state(A, K);
            for (bool antipode_on_odd : {true, false})
                CHECK(state_distance(
                          contract(cluster_network(A, K, antipode_on_odd)),
                          circuit) <= kTol);
        }
    }
}

TEST_CASE("unnormalized networks scale by the odd-vertex factor") {
    const HopfAlgebra A = zoo_algebra("S3");
    const ClusterGraph K = build_1d_lattice(2, false);
    const StateVector norm = contract(cluster_network(A, K));
    // Two odd vertices, √|𝒜| each: the plain network is smaller by |𝒜|.
    StateVector plain =
        contract(cluster_network(A, K, true, /*normalized=*/false));
    for (auto& amp : plain.amps) amp *= static_cast<double>(A.dim);
    CHECK(state_distance(plain, norm) <= kTol);
}

TEST_CASE("contraction respects the memory budget") {
    const HopfAlgebra A = zoo_algebra("S3");
    const ClusterGraph K = build_1d_lattice(3, true);
    CHECK_THROWS_AS(contract(cluster_network(A, K), /*budget=*/100),
                    MemoryBudgetExceeded);
}

TEST_CASE("rewrite rules hold for cocommutative and non-cocommutative algebras") {
    for (const std::string& name : {std::string("Z2"), std::string("S3"),
                                    std::string("FS3"), std::string("D4")}) {
        const HopfAlgebra A = zoo_algebra(name);
        const auto irreps = decompose_irreps(A);
        CAPTURE(name);
        CHECK(verify_rewrite_rules(A, irreps).max_residual() <= kTol);
    }
}
