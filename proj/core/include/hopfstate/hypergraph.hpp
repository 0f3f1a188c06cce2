#pragma once

/*
 * Hypergraph states in two modes.
 *
 * Qudit mode:  |𝒢⟩ = (Π_e U_e^{m_e}) (⊗_v H_v)|0⟩ with U_e the diagonal
 * phase gate e^{iθ_e(i_{v₁},…,i_{v_k})} on the hyperedge's vertices.
 * Undirected hyperedges require θ_e symmetric in its arguments (the gate
 * must not depend on an arbitrary vertex order); asymmetric tables on
 * undirected edges are rejected.
 *
 * Hopf mode:  |𝒢⟩ = Σ [Π_e ψ_e(h^{(e)}_{v_{e,1}}, …)] ⊗_v |h_v^{(v)}⟩.
 * Each vertex state h_v is comultiplied deg(v)+1 times; the Sweedler
 * components are handed to the incident hyperedges and to the physical slot
 * (v) in the order given by the vertex's local ordering.  Edge functionals
 * are multilinear tables over basis indices; the φ∘μ class (a dual element
 * composed with k-fold multiplication) has a dedicated constructor.
 */

#include <vector>

#include "hopfstate/state_vector.hpp"

namespace hopfstate {

// ── Qudit mode ────────────────────────────────────────────────────────────────

struct QuditHyperedge {
    std::vector<int> vertices;  // ordered
    std::vector<double> theta;  // phase table, row-major over the vertex dims
    int multiplicity = 1;
    bool directed = true;  // undirected edges need a symmetric theta
};

StateVector hypergraph_state_qudit(const std::vector<int>& dims,
                                   const std::vector<Mat>& local_gates,
                                   const std::vector<QuditHyperedge>& edges,
                                   std::size_t budget = default_amp_budget());

// ── Hopf mode ─────────────────────────────────────────────────────────────────

struct HopfHyperedge {
    std::vector<int> vertices;  // ordered (functional argument order)
    std::vector<cplx> psi;      // functional table, dim^arity, row-major
};

// ψ = φ∘μ_k: ψ(a₁,…,a_k) = φ(g_{a₁}···g_{a_k}).
std::vector<cplx> functional_from_dual(const HopfAlgebra& A,
                                       const DualElement& phi, int arity);

// vertex_local_order[v] lists the incident hyperedge indices plus the value
// −1 (the physical slot), each exactly once, in Sweedler-component order.
StateVector hypergraph_state_hopf(
    const HopfAlgebra& A, const std::vector<AlgebraElement>& vertex_states,
    const std::vector<std::vector<int>>& vertex_local_order,
    const std::vector<HopfHyperedge>& edges,
    std::size_t budget = default_amp_budget());

}  // namespace hopfstate
