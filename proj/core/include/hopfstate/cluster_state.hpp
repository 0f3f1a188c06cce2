#pragma once

/*
 * Cluster-state construction: the preferred product state
 * |Ω⟩ = ⊗|𝟙⟩_odd ⊗ |1_𝒜⟩_even with |𝟙⟩ = √|𝒜|·λ, the global entangler
 * circuit U = U_{e_|E|}···U_{e_1} read off a cluster graph, the cluster
 * state |K,𝒜⟩ = U|Ω⟩, and vertex stabilizers obtained by conjugating local
 * operators through the circuit:  stab = U ∘ local ∘ U⁻¹.
 *
 * Stabilizer flavors and their cluster-state eigen-relations:
 *   T (odd)        conjugated Pauli-X            eigenvalue 1
 *   T→_g, T←_g     conjugated X→_g / X←_g        eigenvalue ε(g)
 *   Q (even)       conjugated Pauli-Z            eigenvalue 1
 *   Q_Γ, Q‡_Γ      conjugated J_Γ / J‡_Γ         eigenvalue d_Γ
 */

#include "hopfstate/cluster_graph.hpp"
#include "hopfstate/qudit_ops.hpp"

namespace hopfstate {

struct EntanglerGate {
    XDirection dir = XDirection::Fwd;
    int control = 0;  // odd vertex
    int target = 0;   // even vertex
};

// |Ω⟩; `normalized` selects |𝟙⟩ = √|𝒜|λ (default) vs plain |λ⟩ on odd sites.
StateVector preferred_state(const HopfAlgebra& A, const ClusterGraph& K,
                            bool normalized = true,
                            std::size_t budget = default_amp_budget());

// Gates in global-order application sequence (first entry applied first).
std::vector<EntanglerGate> entangler_circuit(const ClusterGraph& K);

// Apply the circuit (or its inverse: inverted gates in reverse order).
StateVector apply_circuit(const HopfAlgebra& A,
                          const std::vector<EntanglerGate>& gates,
                          StateVector psi, bool inverse = false);

// |K,𝒜⟩ = U|Ω⟩.
StateVector cluster_state(const HopfAlgebra& A, const ClusterGraph& K,
                          bool normalized = true,
                          std::size_t budget = default_amp_budget());

enum class StabilizerFlavor { T, TFwd, TBwd, Q, QRep, QRepDag };

// U ∘ local ∘ U⁻¹ applied to ψ.  TFwd/TBwd take the algebra element g;
// QRep/QRepDag take the representation; T and Q ignore both.
StateVector apply_stabilizer(const HopfAlgebra& A, const ClusterGraph& K,
                             int vertex, StabilizerFlavor flavor,
                             const StateVector& psi,
                             const AlgebraElement* g = nullptr,
                             const Representation* rep = nullptr);

}  // namespace hopfstate
