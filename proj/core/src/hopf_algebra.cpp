#include "hopfstate/hopf_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace hopfstate {

// ── SweedlerExpansion ────────────────────────────────────────────────────────

static std::size_t flat_index(const std::vector<int>& idx, int dim) {
    std::size_t f = 0;
    for (int i : idx) f = f * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    return f;
}

cplx& SweedlerExpansion::at(const std::vector<int>& idx) {
    return tensor[flat_index(idx, dim)];
}
cplx SweedlerExpansion::at(const std::vector<int>& idx) const {
    return tensor[flat_index(idx, dim)];
}

double max_abs(const std::vector<cplx>& t) {
    double m = 0.0;
    for (const cplx& v : t) m = std::max(m, std::abs(v));
    return m;
}

// ── Element algebra ──────────────────────────────────────────────────────────

AlgebraElement unit_element(const HopfAlgebra& A) { return basis_element(A, 0); }

AlgebraElement basis_element(const HopfAlgebra& A, int a) {
    Vec v = Vec::Zero(A.dim);
    v(a) = 1.0;
    return {v};
}

DualElement counit_functional(const HopfAlgebra& A) { return {A.counit}; }

AlgebraElement multiply(const HopfAlgebra& A, const AlgebraElement& x,
                        const AlgebraElement& y) {
    if (x.coeffs.size() != A.dim || y.coeffs.size() != A.dim)
        throw DimensionMismatch("multiply: element length != algebra dim");
    Vec out = Vec::Zero(A.dim);
    for (int a = 0; a < A.dim; ++a) {
        if (x.coeffs(a) == cplx(0)) continue;
        for (int b = 0; b < A.dim; ++b) {
            const cplx w = x.coeffs(a) * y.coeffs(b);
            if (w == cplx(0)) continue;
            for (int c = 0; c < A.dim; ++c) out(c) += w * A.mul_abc(a, b, c);
        }
    }
    return {out};
}

cplx counit_of(const HopfAlgebra& A, const AlgebraElement& x) {
    return A.counit.transpose() * x.coeffs;
}

AlgebraElement apply_antipode(const HopfAlgebra& A, const AlgebraElement& x) {
    // S(Σ x_a g_a) = Σ_a x_a S_a^b g_b  →  coeffs' = Sᵀ·coeffs
    return {A.antipode.transpose() * x.coeffs};
}

AlgebraElement apply_star(const HopfAlgebra& A, const AlgebraElement& x) {
    return {A.star.transpose() * x.coeffs.conjugate()};
}

cplx pair(const DualElement& phi, const AlgebraElement& x) {
    if (phi.coeffs.size() != x.coeffs.size())
        throw DimensionMismatch("pair: functional/element length mismatch");
    return phi.coeffs.transpose() * x.coeffs;
}

SweedlerExpansion comultiply_n(const HopfAlgebra& A, const AlgebraElement& x,
                               int n) {
    if (n < 1) throw DimensionMismatch("comultiply_n: n must be >= 1");
    if (x.coeffs.size() != A.dim)
        throw DimensionMismatch("comultiply_n: element length != algebra dim");
    SweedlerExpansion e;
    e.rank = 1;
    e.dim = A.dim;
    e.tensor.assign(x.coeffs.data(), x.coeffs.data() + A.dim);
    // Expand the last leg n−1 times: T'[…, b, c] = Σ_a T[…, a] C_a^{bc}.
    // Coassociativity (a verified axiom) makes this choice of leg immaterial.
    while (e.rank < n) {
        const std::size_t rows = e.tensor.size() / A.dim;
        std::vector<cplx> next(rows * A.dim * A.dim, cplx(0));
        for (std::size_t r = 0; r < rows; ++r) {
            for (int a = 0; a < A.dim; ++a) {
                const cplx w = e.tensor[r * A.dim + a];
                if (w == cplx(0)) continue;
                for (int b = 0; b < A.dim; ++b)
                    for (int c = 0; c < A.dim; ++c)
                        next[(r * A.dim + b) * A.dim + c] += w * A.comul_abc(a, b, c);
            }
        }
        e.tensor = std::move(next);
        ++e.rank;
    }
    return e;
}

DualElement apply_dual_star(const HopfAlgebra& A, const DualElement& phi) {
    // ⟨φ*, g_b⟩ = conj⟨φ, S(g_b)*⟩
    Vec out = Vec::Zero(A.dim);
    for (int b = 0; b < A.dim; ++b) {
        AlgebraElement sb = apply_star(A, apply_antipode(A, basis_element(A, b)));
        out(b) = std::conj(pair(phi, sb));
    }
    return {out};
}

DualElement dual_multiply(const HopfAlgebra& A, const DualElement& phi,
                          const DualElement& psi) {
    // (φψ)(g_a) = Σ_bc C_a^{bc} φ_b ψ_c
    Vec out = Vec::Zero(A.dim);
    for (int a = 0; a < A.dim; ++a) {
        cplx s = 0;
        for (int b = 0; b < A.dim; ++b) {
            if (phi.coeffs(b) == cplx(0)) continue;
            for (int c = 0; c < A.dim; ++c)
                s += A.comul_abc(a, b, c) * phi.coeffs(b) * psi.coeffs(c);
        }
        out(a) = s;
    }
    return {out};
}

// ── Regular actions and dual actions ─────────────────────────────────────────

Mat x_matrix(const HopfAlgebra& A, XKind kind, const AlgebraElement& g) {
    if (g.coeffs.size() != A.dim)
        throw DimensionMismatch("x_matrix: element length != algebra dim");
    const bool tilded = (kind == XKind::TildeFwd || kind == XKind::TildeBwd);
    // X̃→_g = X→_{S(g)} would also hold, but we build each kind from its own
    // definition so the conversion identities remain genuine tests.
    Vec gc = tilded && kind == XKind::TildeFwd
                 ? apply_antipode(A, g).coeffs
                 : (kind == XKind::Bwd ? apply_antipode(A, g).coeffs : g.coeffs);
    Mat M = Mat::Zero(A.dim, A.dim);
    switch (kind) {
        case XKind::Fwd:        // |h⟩ ↦ |gh⟩
        case XKind::TildeFwd:   // |h⟩ ↦ |S(g)h⟩
            for (int a = 0; a < A.dim; ++a) {
                if (gc(a) == cplx(0)) continue;
                for (int b = 0; b < A.dim; ++b)
                    for (int c = 0; c < A.dim; ++c) M(c, b) += gc(a) * A.mul_abc(a, b, c);
            }
            break;
        case XKind::Bwd:        // |h⟩ ↦ |hS(g)⟩
        case XKind::TildeBwd:   // |h⟩ ↦ |hg⟩
            for (int a = 0; a < A.dim; ++a) {
                if (gc(a) == cplx(0)) continue;
                for (int b = 0; b < A.dim; ++b)
                    for (int c = 0; c < A.dim; ++c) M(c, b) += gc(a) * A.mul_abc(b, a, c);
            }
            break;
    }
    return M;
}

Mat t_matrix(const HopfAlgebra& A, TKind kind, const DualElement& phi) {
    if (phi.coeffs.size() != A.dim)
        throw DimensionMismatch("t_matrix: functional length != algebra dim");
    // φ∘S values: (φS)_b = Σ_c S_b^c φ_c
    const Vec phiS = A.antipode * phi.coeffs;
    Mat M = Mat::Zero(A.dim, A.dim);
    for (int a = 0; a < A.dim; ++a) {
        for (int b = 0; b < A.dim; ++b) {
            for (int c = 0; c < A.dim; ++c) {
                const cplx C = A.comul_abc(a, b, c);
                if (C == cplx(0)) continue;
                switch (kind) {
                    case TKind::Plus:        M(b, a) += C * phi.coeffs(c);  break;  // φ(x⁽²⁾)x⁽¹⁾
                    case TKind::Minus:       M(c, a) += C * phiS(b);        break;  // φ(S(x⁽¹⁾))x⁽²⁾
                    case TKind::TildePlus:   M(b, a) += C * phiS(c);        break;  // φ(S(x⁽²⁾))x⁽¹⁾
                    case TKind::TildeMinus:  M(c, a) += C * phi.coeffs(b);  break;  // φ(x⁽¹⁾)x⁽²⁾
                }
            }
        }
    }
    return M;
}

AlgebraElement apply_T(const HopfAlgebra& A, TKind kind, const DualElement& phi,
                       const AlgebraElement& x) {
    return {t_matrix(A, kind, phi) * x.coeffs};
}

// ── Haar data ────────────────────────────────────────────────────────────────

static AlgebraElement compute_haar_integral(const HopfAlgebra& A) {
    const int d = A.dim;
    // Stack {L_{g_a} − ε_a I, R_{g_a} − ε_a I} over all basis a and find the
    // common nullspace by SVD.  Row ((side,a,c), column b):
    //   left:  Σ_b λ_b (A_ab^c − ε_a δ_bc) = 0
    //   right: Σ_b λ_b (A_ba^c − ε_a δ_bc) = 0
    Mat M(2 * d * d, d);
    for (int a = 0; a < d; ++a) {
        for (int c = 0; c < d; ++c) {
            for (int b = 0; b < d; ++b) {
                const cplx eps = (b == c) ? A.counit(a) : cplx(0);
                M(a * d + c, b) = A.mul_abc(a, b, c) - eps;
                M(d * d + a * d + c, b) = A.mul_abc(b, a, c) - eps;
            }
        }
    }
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = A.tolerance * (sv.size() ? sv(0) : 1.0);
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= cutoff) ++null_dim;
    if (null_dim == 0)
        throw NoIntegral("two-sided invariance system has full rank");
    if (null_dim > 1)
        throw NonUniqueIntegral("nullspace dimension " + std::to_string(null_dim));
    Vec lambda = svd.matrixV().col(d - 1);
    const cplx eps_l = A.counit.transpose() * lambda;
    if (std::abs(eps_l) < A.tolerance)
        throw NoIntegral("invariant element has ε(λ) = 0; cannot normalize");
    lambda /= eps_l;
    return {lambda};
}

// Raw dual construction (no axiom re-verification); shared by dual_algebra and
// haar_measure.
static DualAlgebra dual_raw(const HopfAlgebra& A) {
    const int d = A.dim;
    // Natural dual basis φ_i (⟨φ_i, g_j⟩ = δ_ij):
    //   (φ_a φ_b)(g_c) = (φ_a⊗φ_b)(Δ g_c)      → mulD(a,b,c)  = C_c^{ab}
    //   Δ̄(φ_a)(g_b⊗g_c) = φ_a(g_b g_c)          → comulD(a,b,c) = A_bc^a
    //   ε̄(φ_a) = φ_a(1_𝒜)                        → counitD_a = δ_{a0}
    //   1̄ = ε                                    (coefficients ε_j)
    //   S̄(φ_a)(g_b) = φ_a(S g_b)                 → antipodeD = Sᵀ
    //   ⟨φ_a*, g_b⟩ = conj⟨φ_a, S(g_b)*⟩          → starD(a,b) = Σ_c S_b^c conj(Star_c^a)
    HopfAlgebra Dn;
    Dn.dim = d;
    Dn.name = A.name.empty() ? "dual" : "dual(" + A.name + ")";
    Dn.tolerance = A.tolerance;
    Dn.mul.assign(static_cast<std::size_t>(d) * d * d, cplx(0));
    Dn.comul.assign(static_cast<std::size_t>(d) * d * d, cplx(0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                Dn.mul[(static_cast<std::size_t>(a) * d + b) * d + c] = A.comul_abc(c, a, b);
                Dn.comul[(static_cast<std::size_t>(a) * d + b) * d + c] = A.mul_abc(b, c, a);
            }
    Dn.counit = Vec::Zero(d);
    Dn.counit(0) = 1.0;
    Dn.antipode = A.antipode.transpose();
    Dn.star = Mat::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            cplx s = 0;
            for (int c = 0; c < d; ++c) s += A.antipode(b, c) * std::conj(A.star(c, a));
            Dn.star(a, b) = s;
        }

    // Change basis so the dual's unit (= ε) sits at index 0:
    // f_0 = Σ_j ε_j φ_j, f_i = φ_i (i ≥ 1).  Invertible since ε_0 = ε(1) = 1.
    Mat P = Mat::Identity(d, d);
    P.row(0) = A.counit.transpose();
    const Mat Pinv = P.inverse();

    HopfAlgebra D = Dn;
    D.mul.assign(static_cast<std::size_t>(d) * d * d, cplx(0));
    D.comul.assign(static_cast<std::size_t>(d) * d * d, cplx(0));
    // f_a f_b = Σ P_aj P_bk φ_jφ_k = Σ P_aj P_bk mulD(j,k,l) (P⁻¹)_lm f_m
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Vec prod = Vec::Zero(d);  // coefficients in φ basis
            for (int j = 0; j < d; ++j) {
                if (P(a, j) == cplx(0)) continue;
                for (int k = 0; k < d; ++k) {
                    const cplx w = P(a, j) * P(b, k);
                    if (w == cplx(0)) continue;
                    for (int l = 0; l < d; ++l)
                        prod(l) += w * Dn.mul[(static_cast<std::size_t>(j) * d + k) * d + l];
                }
            }
            const Vec out = Pinv.transpose() * prod;  // out_m = Σ_l prod_l (P⁻¹)_lm
            for (int m = 0; m < d; ++m)
                D.mul[(static_cast<std::size_t>(a) * d + b) * d + m] = out(m);
        }
    // Δ̄(f_a) = Σ P_aj comulD(j,k,l) (P⁻¹)_km (P⁻¹)_ln f_m⊗f_n
    for (int a = 0; a < d; ++a) {
        Mat T = Mat::Zero(d, d);  // in φ⊗φ basis
        for (int j = 0; j < d; ++j) {
            if (P(a, j) == cplx(0)) continue;
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    T(k, l) += P(a, j) * Dn.comul[(static_cast<std::size_t>(j) * d + k) * d + l];
        }
        const Mat Tn = Pinv.transpose() * T * Pinv;
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
                D.comul[(static_cast<std::size_t>(a) * d + m) * d + n] = Tn(m, n);
    }
    D.counit = P * Dn.counit;
    D.antipode = P * Dn.antipode * Pinv;
    D.star = P.conjugate() * Dn.star * Pinv;
    D.basis_labels.clear();
    return {std::move(D), P};
}

const AlgebraElement& HopfAlgebra::haar_integral() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->lambda) cache_->lambda = compute_haar_integral(*this);
    return *cache_->lambda;
}

const DualElement& HopfAlgebra::haar_measure() const {
    {
        std::lock_guard<std::mutex> lock(cache_->m);
        if (cache_->measure) return *cache_->measure;
    }
    // Λ = Haar integral of the dual, pulled back: Λ(g_j) = Σ_i λ̄_i ⟨f_i, g_j⟩.
    DualAlgebra D = dual_raw(*this);
    const AlgebraElement lam_dual = compute_haar_integral(D.algebra);
    Vec values = D.pairing.transpose() * lam_dual.coeffs;
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->measure) cache_->measure = DualElement{values};
    return *cache_->measure;
}

const Mat& HopfAlgebra::gram() const {
    {
        std::lock_guard<std::mutex> lock(cache_->m);
        if (cache_->gram) return *cache_->gram;
    }
    const DualElement& L = haar_measure();
    Mat G(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const AlgebraElement gi_star = apply_star(*this, basis_element(*this, i));
        for (int j = 0; j < dim; ++j)
            G(i, j) = pair(L, multiply(*this, gi_star, basis_element(*this, j)));
    }
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->gram) cache_->gram = std::move(G);
    return *cache_->gram;
}

AlgebraElement haar_integral(const HopfAlgebra& A) { return A.haar_integral(); }
DualElement haar_measure(const HopfAlgebra& A) { return A.haar_measure(); }

cplx inner_product(const HopfAlgebra& A, const AlgebraElement& x,
                   const AlgebraElement& y) {
    return pair(A.haar_measure(), multiply(A, apply_star(A, x), y));
}

DualAlgebra dual_algebra_with_pairing(const HopfAlgebra& A) {
    DualAlgebra D = dual_raw(A);
    D.algebra = load_algebra(std::move(D.algebra));  // full axiom suite
    return D;
}

HopfAlgebra dual_algebra(const HopfAlgebra& A) {
    return dual_algebra_with_pairing(A).algebra;
}

Vec dual_coeffs_from_values(const DualAlgebra& D, const DualElement& phi) {
    // values_j = Σ_i c_i P_ij  →  c = (Pᵀ)⁻¹ values
    return D.pairing.transpose().fullPivLu().solve(phi.coeffs);
}

DualElement values_from_dual_coeffs(const DualAlgebra& D, const Vec& coeffs) {
    return {D.pairing.transpose() * coeffs};
}

// ── Axiom suite ──────────────────────────────────────────────────────────────

AxiomReport verify_axioms(const HopfAlgebra& A) {
    const int d = A.dim;
    AxiomReport rep;
    auto add = [&](const std::string& name, double res) {
        const bool ok = res <= A.tolerance;
        rep.checks.push_back({name, res, ok});
        rep.max_residual = std::max(rep.max_residual, res);
        rep.all_pass = rep.all_pass && ok;
    };
    auto delta = [](int i, int j) { return i == j ? cplx(1) : cplx(0); };

    // unit: A_0b^c = A_b0^c = δ_bc
    {
        double r = 0;
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                r = std::max(r, std::abs(A.mul_abc(0, b, c) - delta(b, c)));
                r = std::max(r, std::abs(A.mul_abc(b, 0, c) - delta(b, c)));
            }
        add("unit", r);
    }
    // counit: (ε⊗id)Δ = id = (id⊗ε)Δ
    {
        double r = 0;
        for (int a = 0; a < d; ++a)
            for (int c = 0; c < d; ++c) {
                cplx l = 0, rr = 0;
                for (int b = 0; b < d; ++b) {
                    l += A.counit(b) * A.comul_abc(a, b, c);
                    rr += A.counit(b) * A.comul_abc(a, c, b);
                }
                r = std::max({r, std::abs(l - delta(a, c)), std::abs(rr - delta(a, c))});
            }
        add("counit", r);
    }
    // associativity via L_{g_a}L_{g_b} = Σ_c A_ab^c L_{g_c}
    {
        std::vector<Mat> L(d, Mat::Zero(d, d));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) L[a](c, b) = A.mul_abc(a, b, c);
        double r = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Mat rhs = Mat::Zero(d, d);
                for (int c = 0; c < d; ++c)
                    if (A.mul_abc(a, b, c) != cplx(0)) rhs += A.mul_abc(a, b, c) * L[c];
                r = std::max(r, max_abs(Mat(L[a] * L[b] - rhs)));
            }
        add("associativity", r);
    }
    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
    {
        double r = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int f = 0; f < d; ++f) {
                        cplx lhs = 0, rhs = 0;
                        for (int e = 0; e < d; ++e) {
                            lhs += A.comul_abc(a, e, f) * A.comul_abc(e, b, c);
                            rhs += A.comul_abc(a, b, e) * A.comul_abc(e, c, f);
                        }
                        r = std::max(r, std::abs(lhs - rhs));
                    }
        add("coassociativity", r);
    }
    // comultiplication unital: Δ(1) = 1⊗1
    {
        double r = 0;
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                r = std::max(r, std::abs(A.comul_abc(0, b, c) - delta(b, 0) * delta(c, 0)));
        add("comultiplication unital", r);
    }
    // bialgebra: Δ(g_a g_b) = Δ(g_a)Δ(g_b)
    {
        std::vector<Mat> Ae(d);  // (A_e)[j,l] = A_jl^e
        for (int e = 0; e < d; ++e) {
            Ae[e] = Mat::Zero(d, d);
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l) Ae[e](j, l) = A.mul_abc(j, l, e);
        }
        double r = 0;
        for (int a = 0; a < d; ++a) {
            Mat X(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) X(i, j) = A.comul_abc(a, i, j);
            for (int b = 0; b < d; ++b) {
                Mat Y(d, d);
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) Y(k, l) = A.comul_abc(b, k, l);
                for (int e = 0; e < d; ++e) {
                    // Z[i,k] = Σ_jl X_ij A_jl^e Y_kl
                    const Mat Z = X * Ae[e] * Y.transpose();
                    for (int dd = 0; dd < d; ++dd) {
                        // lhs(d,e) = Σ_c A_ab^c C_c^{de}; rhs = Σ_ik A_ik^d Z[i,k]
                        cplx lhs = 0, rhs = 0;
                        for (int c = 0; c < d; ++c)
                            lhs += A.mul_abc(a, b, c) * A.comul_abc(c, dd, e);
                        for (int i = 0; i < d; ++i)
                            for (int k = 0; k < d; ++k) rhs += A.mul_abc(i, k, dd) * Z(i, k);
                        r = std::max(r, std::abs(lhs - rhs));
                    }
                }
            }
        }
        add("bialgebra (Δ multiplicative)", r);
    }
    // counit multiplicative: ε(g_a g_b) = ε_a ε_b, ε(1) = 1
    {
        double r = std::abs(A.counit(0) - cplx(1));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                cplx s = 0;
                for (int c = 0; c < d; ++c) s += A.mul_abc(a, b, c) * A.counit(c);
                r = std::max(r, std::abs(s - A.counit(a) * A.counit(b)));
            }
        add("counit multiplicative", r);
    }
    // antipode: μ(S⊗id)Δ = ηε = μ(id⊗S)Δ
    {
        double r = 0;
        for (int a = 0; a < d; ++a)
            for (int e = 0; e < d; ++e) {
                cplx lhs = 0, rhs = 0;
                for (int b = 0; b < d; ++b)
                    for (int c = 0; c < d; ++c) {
                        const cplx C = A.comul_abc(a, b, c);
                        if (C == cplx(0)) continue;
                        for (int dd = 0; dd < d; ++dd) {
                            lhs += C * A.antipode(b, dd) * A.mul_abc(dd, c, e);
                            rhs += C * A.antipode(c, dd) * A.mul_abc(b, dd, e);
                        }
                    }
                const cplx target = A.counit(a) * delta(e, 0);
                r = std::max({r, std::abs(lhs - target), std::abs(rhs - target)});
            }
        add("antipode", r);
    }
    // S² = id (Larson–Radford in the semisimple C* setting)
    add("antipode involutive", max_abs(Mat(A.antipode * A.antipode - Mat::Identity(d, d))));
    // (x*)* = x : conj(Star)·Star = I
    add("star involutive", max_abs(Mat(A.star.conjugate() * A.star - Mat::Identity(d, d))));
    // 1* = 1
    {
        Vec e0 = Vec::Zero(d);
        e0(0) = 1.0;
        add("star unital", max_abs(Vec(A.star.row(0).transpose() - e0)));
    }
    // (xy)* = y* x*
    {
        double r = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    cplx lhs = 0, rhs = 0;
                    for (int dd = 0; dd < d; ++dd)
                        lhs += std::conj(A.mul_abc(a, b, dd)) * A.star(dd, c);
                    for (int e = 0; e < d; ++e)
                        for (int f = 0; f < d; ++f)
                            rhs += A.star(b, e) * A.star(a, f) * A.mul_abc(e, f, c);
                    r = std::max(r, std::abs(lhs - rhs));
                }
        add("star antimultiplicative", r);
    }
    // Δ(x*) = Δ(x)*  (componentwise star with conjugated coefficients)
    {
        double r = 0;
        for (int a = 0; a < d; ++a)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    cplx lhs = 0, rhs = 0;
                    for (int b = 0; b < d; ++b) lhs += A.star(a, b) * A.comul_abc(b, c, e);
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            rhs += std::conj(A.comul_abc(a, i, j)) * A.star(i, c) * A.star(j, e);
                    r = std::max(r, std::abs(lhs - rhs));
                }
        add("star comultiplicative", r);
    }
    // S(x)* = S(x*)
    add("antipode star", max_abs(Mat(A.antipode.conjugate() * A.star - A.star * A.antipode)));
    // Inner-product positivity: Gram Hermitian with eigenvalues above the
    // tolerance floor (Cholesky-style pivot check).
    {
        const Mat& G = A.gram();
        const double herm = max_abs(Mat(G - G.adjoint()));
        Eigen::SelfAdjointEigenSolver<Mat> es(G);
        const double min_eig = es.eigenvalues().minCoeff();
        add("inner product hermitian", herm);
        rep.checks.push_back({"inner product positive-definite",
                              std::max(0.0, A.tolerance - min_eig),
                              min_eig > A.tolerance});
        rep.all_pass = rep.all_pass && rep.checks.back().pass;
    }
    return rep;
}

void require_axioms(const HopfAlgebra& A) {
    const AxiomReport rep = verify_axioms(A);
    for (const auto& c : rep.checks)
        if (!c.pass) throw AxiomViolation(c.name, c.residual);
}

HopfAlgebra load_algebra(HopfAlgebra spec) {
    const int d = spec.dim;
    if (d <= 0) throw DimensionMismatch("dim must be positive");
    const std::size_t d3 = static_cast<std::size_t>(d) * d * d;
    if (spec.mul.size() != d3) throw DimensionMismatch("mul tensor size != dim^3");
    if (spec.comul.size() != d3) throw DimensionMismatch("comul tensor size != dim^3");
    if (spec.counit.size() != d) throw DimensionMismatch("counit length != dim");
    if (spec.antipode.rows() != d || spec.antipode.cols() != d)
        throw DimensionMismatch("antipode shape != dim x dim");
    if (spec.star.rows() != d || spec.star.cols() != d)
        throw DimensionMismatch("star shape != dim x dim");
    if (spec.tolerance <= 0) throw DimensionMismatch("tolerance must be positive");
    require_axioms(spec);
    return spec;
}

}  // namespace hopfstate
