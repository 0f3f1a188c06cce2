/*
 * Microbenchmarks for the hot paths: axiom verification, irrep
 * decomposition, entangler application, cluster-state construction, local
 * Hamiltonian terms, and tensor-network contraction.
 */

#include <benchmark/benchmark.h>

#include <hopfstate/cluster_state.hpp>
#include <hopfstate/lattice_model.hpp>
#include <hopfstate/tensor_network.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {

void BM_axiom_suite(benchmark::State& state, const std::string& name) {
    const HopfAlgebra A = zoo_algebra(name);
    for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(A));
}

void BM_decompose_irreps(benchmark::State& state, const std::string& name) {
    const HopfAlgebra A = zoo_algebra(name);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_irreps(A));
}

void BM_entangler(benchmark::State& state, const std::string& name) {
    const HopfAlgebra A = zoo_algebra(name);
    const int L = static_cast<int>(state.range(0));
    StateVector psi = random_state(std::vector<int>(2 * L, A.dim), 1);
    for (auto _ : state)
        psi = controlled_X(A, XDirection::Fwd, false, psi, 0, 1);
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(psi.size()));
}

void BM_cluster_state(benchmark::State& state, const std::string& name) {
    const HopfAlgebra A = zoo_algebra(name);
    const int L = static_cast<int>(state.range(0));
    const ClusterGraph K = build_1d_lattice(L, true);
    for (auto _ : state) benchmark::DoNotOptimize(cluster_state(A, K));
}

void BM_face_term(benchmark::State& state, const std::string& name) {
    const HopfAlgebra A = zoo_algebra(name);
    const auto irreps = decompose_irreps(A);
    const ChainModel m = make_chain(A, 2, true);
    const StateVector psi =
        random_state(std::vector<int>(m.num_sites(), A.dim), 1);
    for (auto _ : state) benchmark::DoNotOptimize(apply_B(m, 1, irreps, psi));
}

void BM_contract(benchmark::State& state, const std::string& name) {
    const HopfAlgebra A = zoo_algebra(name);
    const int L = static_cast<int>(state.range(0));
    const TensorNetwork net = cluster_network(A, build_1d_lattice(L, true));
    for (auto _ : state) benchmark::DoNotOptimize(contract(net));
}

}  // namespace

BENCHMARK_CAPTURE(BM_axiom_suite, Z2, "Z2");
BENCHMARK_CAPTURE(BM_axiom_suite, S3, "S3");
BENCHMARK_CAPTURE(BM_axiom_suite, D4, "D4");
BENCHMARK_CAPTURE(BM_decompose_irreps, S3, "S3");
BENCHMARK_CAPTURE(BM_decompose_irreps, D4, "D4");
BENCHMARK_CAPTURE(BM_entangler, Z2, "Z2")->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_entangler, S3, "S3")->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_cluster_state, Z2, "Z2")->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(BM_cluster_state, S3, "S3")->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_face_term, S3, "S3");
BENCHMARK_CAPTURE(BM_face_term, FS3, "FS3");
BENCHMARK_CAPTURE(BM_contract, Z2, "Z2")->Arg(4);
BENCHMARK_CAPTURE(BM_contract, S3, "S3")->Arg(2);

BENCHMARK_MAIN();
