#pragma once

/*
 * Finite-dimensional C*-Hopf algebra 𝒜 over ℂ, stored by dense structure
 * constants in a fixed basis {g_0, …, g_{dim−1}} with g_0 = 1_𝒜:
 *
 *   multiplication     g_a g_b = Σ_c A_ab^c g_c            (mul tensor)
 *   comultiplication   Δ(g_a)  = Σ_bc C_a^{bc} g_b ⊗ g_c    (comul tensor)
 *   counit             ε(g_a)  = ε_a
 *   antipode           S(g_a)  = Σ_b S_a^b g_b
 *   star (antilinear)  (x*)_b  = Σ_a conj(x_a) Star_a^b
 *
 * The star map is stored as (matrix, conjugate-coefficients) so its
 * antilinearity is explicit rather than hidden in a convention.
 *
 * Derived data:
 *   Haar integral λ ∈ 𝒜 :  xλ = ε(x)λ = λx,  ε(λ) = 1   (unique, cached)
 *   Haar measure  Λ ∈ 𝒜̄ :  the Haar integral of the dual, Λ(1_𝒜) = 1
 *   inner product ⟨x, y⟩ = Λ(x* y), making 𝒜 a Hopf qudit.
 *
 * All equality checks use the per-algebra tolerance (max-norm, default 1e-10).
 * Instances are immutable after construction; the Haar caches fill lazily
 * under a shared mutex, so const instances are safely shareable across
 * threads and every operation is a pure function of its inputs.
 */

#include <complex>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hopfstate/errors.hpp"

namespace hopfstate {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

constexpr double kDefaultTolerance = 1e-10;

// ── Elements ──────────────────────────────────────────────────────────────────

// Element x = Σ_a coeffs[a] g_a of the algebra.
struct AlgebraElement {
    Vec coeffs;
};

// Functional φ ∈ 𝒜̄ recorded by its values on the basis: coeffs[a] = ⟨φ, g_a⟩.
struct DualElement {
    Vec coeffs;
};

// Δ_n(x): rank-n tensor of Sweedler components, all legs of size dim,
// row-major.  Coassociativity makes the recursive construction independent of
// parenthesization; comultiply_n always expands the last leg.
struct SweedlerExpansion {
    int rank = 0;
    int dim = 0;
    std::vector<cplx> tensor;  // dim^rank entries, row-major

    std::size_t size() const { return tensor.size(); }
    cplx& at(const std::vector<int>& idx);
    cplx at(const std::vector<int>& idx) const;
};

// ── The algebra ───────────────────────────────────────────────────────────────

class HopfAlgebra {
public:
    int dim = 0;
    std::string name;                        // zoo label or file origin
    std::vector<std::string> basis_labels;   // optional; defaults g0, g1, …

    std::vector<cplx> mul;    // A_ab^c at [(a·dim + b)·dim + c]
    std::vector<cplx> comul;  // C_a^{bc} at [(a·dim + b)·dim + c]
    Vec counit;               // ε_a
    Mat antipode;             // S_a^b (row a = image of g_a)
    Mat star;                 // Star_a^b, used with conjugated coefficients

    double tolerance = kDefaultTolerance;

    // Structure-constant accessors.
    cplx mul_abc(int a, int b, int c) const {
        return mul[(static_cast<std::size_t>(a) * dim + b) * dim + c];
    }
    cplx comul_abc(int a, int b, int c) const {
        return comul[(static_cast<std::size_t>(a) * dim + b) * dim + c];
    }

    // Haar data, lazily computed and cached (thread-safe).
    const AlgebraElement& haar_integral() const;
    const DualElement& haar_measure() const;

    // Gram matrix of the Hopf inner product, G_ij = Λ(g_i* g_j) (cached).
    const Mat& gram() const;

    HopfAlgebra() = default;

private:
    struct Cache {
        std::mutex m;
        std::optional<AlgebraElement> lambda;
        std::optional<DualElement> measure;
        std::optional<Mat> gram;
    };
    // shared_ptr so copies of an algebra share one cache.
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// ── Element algebra ───────────────────────────────────────────────────────────

AlgebraElement unit_element(const HopfAlgebra& A);          // 1_𝒜 = g_0
AlgebraElement basis_element(const HopfAlgebra& A, int a);  // g_a
DualElement counit_functional(const HopfAlgebra& A);        // ε as a DualElement

// (xy)_c = Σ_ab x_a y_b A_ab^c
AlgebraElement multiply(const HopfAlgebra& A, const AlgebraElement& x,
                        const AlgebraElement& y);

// ε(x) = Σ_a x_a ε_a
cplx counit_of(const HopfAlgebra& A, const AlgebraElement& x);

// S(x), linear.
AlgebraElement apply_antipode(const HopfAlgebra& A, const AlgebraElement& x);

// x*, antilinear: (x*)_b = Σ_a conj(x_a) Star_a^b.
AlgebraElement apply_star(const HopfAlgebra& A, const AlgebraElement& x);

// Canonical pairing ⟨φ, x⟩ = Σ_a φ_a x_a.
cplx pair(const DualElement& phi, const AlgebraElement& x);

// Δ_n(x) as a rank-n Sweedler tensor (n ≥ 1; n = 1 returns x itself).
SweedlerExpansion comultiply_n(const HopfAlgebra& A, const AlgebraElement& x,
                               int n);

// Star on dual elements: ⟨φ*, x⟩ = conj⟨φ, S(x)*⟩ evaluated on the basis.
DualElement apply_dual_star(const HopfAlgebra& A, const DualElement& phi);

// Product in 𝒜̄: ⟨φψ, x⟩ = Σ φ(x^(1)) ψ(x^(2)).
DualElement dual_multiply(const HopfAlgebra& A, const DualElement& phi,
                          const DualElement& psi);

// ── Regular actions and dual actions ─────────────────────────────────────────

// Four regular-action X operators on the algebra viewed as a Hilbert space:
//   Fwd       X→_g |h⟩ = |gh⟩            TildeFwd  X̃→_g |h⟩ = |S(g)h⟩
//   Bwd       X←_g |h⟩ = |hS(g)⟩         TildeBwd  X̃←_g |h⟩ = |hg⟩
enum class XKind { Fwd, Bwd, TildeFwd, TildeBwd };

// Four dual actions of φ ∈ 𝒜̄ on 𝒜:
//   Plus       T₊^φ x = Σ φ(x^(2)) x^(1)    TildePlus  T̃₊^φ x = Σ φ(S(x^(2))) x^(1)
//   Minus      T₋^φ x = Σ φ(S(x^(1))) x^(2) TildeMinus T̃₋^φ x = Σ φ(x^(1)) x^(2)
enum class TKind { Plus, Minus, TildePlus, TildeMinus };

// dim×dim matrix of the regular action (column b = image of g_b).
Mat x_matrix(const HopfAlgebra& A, XKind kind, const AlgebraElement& g);

// dim×dim matrix of the T action.
Mat t_matrix(const HopfAlgebra& A, TKind kind, const DualElement& phi);

AlgebraElement apply_T(const HopfAlgebra& A, TKind kind, const DualElement& phi,
                       const AlgebraElement& x);

// ── Haar data and inner product ───────────────────────────────────────────────

// λ via SVD nullspace of the stacked {L_x − ε(x)I, R_x − ε(x)I} system.
AlgebraElement haar_integral(const HopfAlgebra& A);

// Λ = Haar integral of the dual algebra, pulled back through the pairing.
DualElement haar_measure(const HopfAlgebra& A);

// ⟨x, y⟩ = Λ(x* y); sesquilinear (antilinear in x), positive definite.
cplx inner_product(const HopfAlgebra& A, const AlgebraElement& x,
                   const AlgebraElement& y);

// ── Dual algebra ──────────────────────────────────────────────────────────────

// 𝒜̄ together with the pairing matrix P_ij = ⟨f_i, g_j⟩ between the dual's
// basis {f_i} and the primal basis {g_j}.  The dual basis is the natural one
// except that f_0 is replaced by ε so the unit sits at index 0 (an always-
// invertible change of basis since ⟨ε, g_0⟩ = 1).
struct DualAlgebra {
    HopfAlgebra algebra;
    Mat pairing;  // P_ij = ⟨f_i, g_j⟩
};

DualAlgebra dual_algebra_with_pairing(const HopfAlgebra& A);
HopfAlgebra dual_algebra(const HopfAlgebra& A);

// Functional on A (values on {g_j}) → coefficient vector in the dual's basis.
Vec dual_coeffs_from_values(const DualAlgebra& D, const DualElement& phi);
// Coefficient vector in the dual's basis → functional values on {g_j}.
DualElement values_from_dual_coeffs(const DualAlgebra& D, const Vec& coeffs);

// ── Axioms ────────────────────────────────────────────────────────────────────

struct AxiomCheck {
    std::string name;
    double residual;
    bool pass;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    double max_residual = 0.0;
    bool all_pass = true;
};

// Runs every axiom in the HopfAlgebra invariant list (unit, counit,
// (co)associativity, bialgebra, antipode, S² = id, the five *-axioms) plus the
// positive-definiteness of the inner-product Gram matrix.
AxiomReport verify_axioms(const HopfAlgebra& A);

// Throws AxiomViolation on the first failing check.
void require_axioms(const HopfAlgebra& A);

// Shape validation + axiom suite; the canonical constructor entry point.
HopfAlgebra load_algebra(HopfAlgebra spec);

// ── Small helpers ─────────────────────────────────────────────────────────────

inline double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
inline double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const std::vector<cplx>& t);

// Max-norm distance between coefficient vectors.
inline double distance(const AlgebraElement& x, const AlgebraElement& y) {
    return max_abs(Vec(x.coeffs - y.coeffs));
}

}  // namespace hopfstate
