#pragma once

/*
 * The Hopf-qudit operator toolbox acting on StateVectors:
 *
 *   regular actions      X→_g|h⟩=|gh⟩, X←_g|h⟩=|hS(g)⟩, X̃→_g|h⟩=|S(g)h⟩, X̃←_g|h⟩=|hg⟩
 *   irrep actions        Z_Γ|h⟩ = Σ|h⁽¹⁾⟩⊗Γ(h⁽²⁾)        Z‡_Γ|h⟩ = ΣΓ(S(h⁽¹⁾))⊗|h⁽²⁾⟩
 *                        Z̃_Γ|h⟩ = ΣΓ(h⁽¹⁾)⊗|h⁽²⁾⟩        Z̃‡_Γ|h⟩ = Σ|h⁽¹⁾⟩⊗Γ(S(h⁽²⁾))
 *   traced symmetries    J_Γ = Tr′Z_Γ = T₊^{χ_Γ}, J‡_Γ = Tr′Z‡_Γ = T₋^{χ_Γ},
 *                        J̃_Γ = Tr′Z̃_Γ = T̃₋^{χ_Γ}, J̃‡_Γ = Tr′Z̃‡_Γ = T̃₊^{χ_Γ}
 *   preferred Paulis     X = X→_λ = X←_λ (Hermitian projector),
 *                        Z = T₊^Λ : Z|x⟩ = Λ(x)|1_𝒜⟩
 *   edge entanglers      C X→ : |g⟩|h⟩ ↦ Σ|g⁽²⁾⟩|g⁽¹⁾h⟩
 *                        C X← : |g⟩|h⟩ ↦ Σ|g⁽²⁾⟩|hS(g⁽¹⁾)⟩   (+ inverses)
 *
 * Z-type applications attach the representation leg as an explicit pair of
 * trailing axes (row index first); tracing is a separate reduction so the
 * distinction between Z_Γ and J_Γ stays visible.
 */

#include "hopfstate/rep_theory.hpp"
#include "hopfstate/state_vector.hpp"

namespace hopfstate {

enum class ZKind { Z, ZDag, ZTilde, ZTildeDag };
enum class JKind { J, JDag, JTilde, JTildeDag };

// X application (site dim must equal the algebra dim).
StateVector apply_X(const HopfAlgebra& A, XKind kind, const AlgebraElement& g,
                    const StateVector& psi, int site);

// Kernel of the Z action: (dim·d_Γ·d_Γ) × dim, output index (site, row, col).
Mat z_kernel(const HopfAlgebra& A, ZKind kind, const Representation& R);

// Z application; the output carries two extra trailing axes (row, col) of
// dimension d_Γ each.
StateVector apply_Z(const HopfAlgebra& A, ZKind kind, const Representation& R,
                    const StateVector& psi, int site);

// Map ZKind to the matching traced JKind.
inline JKind traced_kind(ZKind k) {
    switch (k) {
        case ZKind::Z: return JKind::J;
        case ZKind::ZDag: return JKind::JDag;
        case ZKind::ZTilde: return JKind::JTilde;
        default: return JKind::JTildeDag;
    }
}

// J application: apply the corresponding Z, then trace the rep leg.
StateVector apply_J(const HopfAlgebra& A, JKind kind, const Representation& R,
                    const StateVector& psi, int site);

// Single-site J kernel (dim × dim), built by tracing the Z kernel.
Mat j_matrix(const HopfAlgebra& A, JKind kind, const Representation& R);

// Preferred Pauli operators as dim×dim site kernels.
Mat pauli_X(const HopfAlgebra& A);  // regular action of λ
Mat pauli_Z(const HopfAlgebra& A);  // T₊^Λ

enum class XDirection { Fwd, Bwd };  // C X→ vs C X←

// Two-site entangler kernel, dim²×dim², index order (control, target).
Mat controlled_x_kernel(const HopfAlgebra& A, XDirection dir, bool inverse);

StateVector controlled_X(const HopfAlgebra& A, XDirection dir, bool inverse,
                         const StateVector& psi, int control, int target);

}  // namespace hopfstate
