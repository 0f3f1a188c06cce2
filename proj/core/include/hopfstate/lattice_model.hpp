#pragma once

/*
 * The 1D Hopf cluster Hamiltonian and its symmetries on a chain of 2L sites
 * (odd sites at even array indices 0, 2, …; even sites at 1, 3, …):
 *
 *   vertex terms    𝔄_i^h = Σ X←_{h⁽¹⁾}(i−1) ⊗ X→_{h⁽³⁾}(i) ⊗ X→_{h⁽²⁾}(i+1),
 *                   𝔄_i = 𝔄_i^λ                               (i odd)
 *   face terms      𝔅^Γ_j = Tr′[Z‡_Γ(j−1) ⊗ Z_Γ(j) ⊗ Z_Γ(j+1)],
 *                   𝔅_j  = Σ_Γ (d_Γ/|𝒜|) 𝔅^Γ_j,
 *                   𝔅^ψ_j = Σ ψ⁽¹⁾(S(x_{j−1}⁽¹⁾)) ψ⁽²⁾(x_j⁽²⁾) ψ⁽³⁾(x_{j+1}⁽²⁾)
 *                                                              (j even)
 *   Hopf symmetry   F_h = Σ ⊗_k X←_{h⁽ᵏ⁾}(odd site k)
 *   Rep symmetry    D_Γ = Tr′[Z̃_Γ(even sites, in order)]
 *
 * Local terms exist on periodic chains only (their three-site support wraps);
 * the symmetry operators work on both boundary conditions.
 *
 * The quantum-double constructions A_v^h and B_f^φ are built independently:
 * A_v^h from the regular-action edge list of the folded layout, B_f^φ by
 * distributing the dual comultiplication Δ̄₃(φ) over T₋(j−1), T₊(j), T₊(j+1).
 */

#include "hopfstate/cluster_graph.hpp"
#include "hopfstate/qudit_ops.hpp"
#include "hopfstate/report.hpp"

namespace hopfstate {

struct ChainModel {
    const HopfAlgebra* algebra = nullptr;
    int L = 0;
    bool periodic = true;

    const HopfAlgebra& A() const { return *algebra; }
    int num_sites() const { return periodic ? 2 * L : 2 * L - 1; }
    bool odd_site(int i) const { return i % 2 == 0; }
};

ChainModel make_chain(const HopfAlgebra& A, int L, bool periodic);
ClusterGraph chain_graph(const ChainModel& m);
StateVector chain_cluster_state(const ChainModel& m,
                                std::size_t budget = default_amp_budget());

// ── Local Hamiltonian terms (periodic chains) ────────────────────────────────

// Three-site kernels in site order (i−1, i, i+1), dim³ × dim³.
Mat a_term_kernel(const HopfAlgebra& A, const AlgebraElement& h);
Mat b_term_kernel_rep(const HopfAlgebra& A, const Representation& R);
Mat b_term_kernel_dual(const HopfAlgebra& A, const DualElement& psi);
Mat b_term_kernel_haar(const HopfAlgebra& A,
                       const std::vector<Representation>& irreps);

StateVector apply_A(const ChainModel& m, int i, const StateVector& psi,
                    const AlgebraElement* h = nullptr);  // default h = λ
StateVector apply_B_rep(const ChainModel& m, int j, const Representation& R,
                        const StateVector& psi);
StateVector apply_B(const ChainModel& m, int j,
                    const std::vector<Representation>& irreps,
                    const StateVector& psi);
StateVector apply_B_dual(const ChainModel& m, int j, const DualElement& psi_fn,
                         const StateVector& psi);

// Generic three-site application around center site i (wrapping).
StateVector apply_three_site(const ChainModel& m, int center, const Mat& K,
                             const StateVector& psi);

// ── Global symmetries ────────────────────────────────────────────────────────

Mat symmetry_F_kernel(const ChainModel& m, const AlgebraElement& h);  // on odd sites
Mat symmetry_D_kernel(const ChainModel& m, const Representation& R);  // on even sites

StateVector symmetry_F(const ChainModel& m, const AlgebraElement& h,
                       const StateVector& psi);
StateVector symmetry_D(const ChainModel& m, const Representation& R,
                       const StateVector& psi);

// ── Quantum-double operators (independent construction) ─────────────────────

Mat qd_vertex_kernel(const HopfAlgebra& A, const AlgebraElement& h);
Mat qd_face_kernel(const HopfAlgebra& A, const DualElement& phi);

StateVector apply_qd_vertex(const ChainModel& m, int i, const AlgebraElement& h,
                            const StateVector& psi);
StateVector apply_qd_face(const ChainModel& m, int j, const DualElement& phi,
                          const StateVector& psi);

// ── Verification suites ──────────────────────────────────────────────────────

// Projector / Hermiticity / pairwise-commutator residuals on random states.
Report check_lcp(const ChainModel& m, const std::vector<Representation>& irreps,
                 std::uint64_t seed = 1, int num_random_states = 3);

// 𝔄_i|GS⟩ = |GS⟩, 𝔅^Γ_j|GS⟩ = d_Γ|GS⟩, 𝔅_j|GS⟩ = |GS⟩, 𝔄^h|GS⟩ = ε(h)|GS⟩.
Report ground_state_check(const ChainModel& m,
                          const std::vector<Representation>& irreps,
                          std::uint64_t seed = 1);

}  // namespace hopfstate
