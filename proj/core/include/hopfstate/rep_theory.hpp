#pragma once

/*
 * Representation theory of a finite-dimensional C*-Hopf algebra:
 * irreducible unitary representations, characters, Schur averaging, the
 * fusion ring N_{ΓΦ}^Ψ, and the fusion (irrep) basis
 *
 *   |Γ_ij⟩ = √(d_Γ|𝒜|) Σ_(λ) Γ_ij(λ^(1)) λ^(2),
 *
 * which is orthonormal in the Hopf inner product with Σ_Γ d_Γ² = |𝒜|.
 *
 * Irreps are derived from the regular representation:
 *   1. the center of 𝒜 is the nullspace of the commutator constraints;
 *   2. primitive central idempotents come from simultaneous diagonalization
 *      of multiplication operators on the center (one generic seeded element);
 *   3. each idempotent's two-sided ideal e𝒜 carries d copies of one irrep and
 *      is split with a Schur-averaged (seeded) random intertwiner;
 *   4. the chosen copy is orthonormalized by the positive square root of the
 *      Haar-inner-product Gram matrix, so Γ(x*) = Γ(x)† holds exactly.
 */

#include <string>
#include <vector>

#include "hopfstate/hopf_algebra.hpp"

namespace hopfstate {

// Matrix-valued algebra homomorphism with Γ(1) = I and Γ(x*) = Γ(x)†.
struct Representation {
    std::string label;
    int dim = 0;                 // d_Γ
    std::vector<Mat> matrices;   // one d_Γ×d_Γ matrix per basis element
};

// Evaluate Γ(x) = Σ_a x_a Γ(g_a).
Mat rep_apply(const Representation& R, const AlgebraElement& x);

// Max residual over the homomorphism + unit + unitarity conditions.
double representation_residual(const HopfAlgebra& A, const Representation& R);

// χ_Γ(g_a) = Tr Γ(g_a), as a DualElement.
DualElement character(const HopfAlgebra& A, const Representation& R);

// Trivial 1-dim rep Γ(x) = ε(x).
Representation trivial_representation(const HopfAlgebra& A);

// Tensor-product rep, action h ▷ (v⊗w) = Σ Γ(h^(1))v ⊗ Φ(h^(2))w.
Representation tensor_rep(const HopfAlgebra& A, const Representation& G,
                          const Representation& P);

// Schur average F = Σ_(λ) Φ(S(λ^(1))) f Γ(λ^(2)); F = 0 for non-isomorphic
// irreps, F = (Tr f / d_Γ)·I for Φ = Γ.
Mat schur_average(const HopfAlgebra& A, const Representation& Phi,
                  const Representation& Gamma, const Mat& f);

// Complete pairwise non-isomorphic list of unitary irreps, sorted by
// (d_Γ, lexicographic character rounded at tolerance); deterministic for a
// given seed.  If user irreps are supplied they are verified instead of
// derived (DecompositionIncomplete / AxiomViolation on failure).
std::vector<Representation> decompose_irreps(const HopfAlgebra& A,
                                             std::uint64_t seed = 1);
std::vector<Representation> decompose_irreps(
    const HopfAlgebra& A, const std::vector<Representation>& user_supplied);

// Index of the trivial irrep (character == ε) in a sorted irrep list.
int trivial_irrep_index(const HopfAlgebra& A,
                        const std::vector<Representation>& irreps);

// Fusion ring: N[(i·r + j)·r + k] = N_{Γ_i Γ_j}^{Γ_k}.
struct FusionRing {
    std::vector<std::string> labels;
    std::vector<int> dims;
    std::vector<int> N;
    int rank = 0;
    int n(int i, int j, int k) const { return N[(i * rank + j) * rank + k]; }
};

// Multiplicities of Γ_i ⊗ Γ_j via Schur-projector traces on the tensor rep.
std::vector<int> fusion_multiplicities(const HopfAlgebra& A,
                                       const std::vector<Representation>& irreps,
                                       int i, int j);

// Independent oracle: scalar character pairing
// N_{ΓΦ}^Ψ = Σ_(λ) χ_Ψ(S(λ^(1))) · (χ_Γ χ_Φ)(λ^(2)), no tensor rep built.
std::vector<int> fusion_multiplicities_character_oracle(
    const HopfAlgebra& A, const std::vector<Representation>& irreps, int i,
    int j);

FusionRing fusion_ring(const HopfAlgebra& A,
                       const std::vector<Representation>& irreps);

// Fusion basis elements keyed by (irrep, i, j).
struct FusionBasis {
    struct Entry {
        int irrep;  // index into the irrep list
        int i, j;   // 1 ≤ i,j ≤ d_Γ (stored 0-based)
        AlgebraElement element;
    };
    std::vector<Entry> entries;  // Σ d_Γ² of them
};

// Builds all |Γ_ij⟩ and verifies the Gram matrix is the identity
// (GramDefect otherwise).
FusionBasis fusion_basis(const HopfAlgebra& A,
                         const std::vector<Representation>& irreps);

// Max |Gram − I| without throwing.
double fusion_basis_gram_defect(const HopfAlgebra& A, const FusionBasis& basis);

}  // namespace hopfstate
