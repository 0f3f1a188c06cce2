#include "hopfstate/qudit_ops.hpp"

#include "hopfstate/errors.hpp"

namespace hopfstate {

StateVector apply_X(const HopfAlgebra& A, XKind kind, const AlgebraElement& g,
                    const StateVector& psi, int site) {
    return apply_site_matrix(psi, site, x_matrix(A, kind, g));
}

/*
 * Z kernels.  Δ(g_a) = Σ_{bc} C_a^{bc} g_b ⊗ g_c; the surviving site index
 * and the rep argument pick the two Sweedler legs:
 *
 *   Z_Γ   : site keeps h⁽¹⁾=b, rep gets Γ(g_c)
 *   Z‡_Γ  : site keeps h⁽²⁾=c, rep gets Γ(S(g_b))
 *   Z̃_Γ   : site keeps h⁽²⁾=c, rep gets Γ(g_b)
 *   Z̃‡_Γ  : site keeps h⁽¹⁾=b, rep gets Γ(S(g_c))
 */
Mat z_kernel(const HopfAlgebra& A, ZKind kind, const Representation& R) {
    const int d = A.dim;
    const int r = R.dim;
    if (static_cast<int>(R.matrices.size()) != d)
        throw DimensionMismatch("representation/algebra dimension mismatch in z_kernel");

    const bool use_antipode = (kind == ZKind::ZDag || kind == ZKind::ZTildeDag);
    std::vector<Mat> rep(d);
    for (int a = 0; a < d; ++a) {
        if (use_antipode) {
            Mat img = Mat::Zero(r, r);
            for (int b = 0; b < d; ++b) img += A.antipode(a, b) * R.matrices[b];
            rep[a] = img;
        } else {
            rep[a] = R.matrices[a];
        }
    }

    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * r * r, d);
    const bool keep_first = (kind == ZKind::Z || kind == ZKind::ZTildeDag);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const cplx w = A.comul_abc(a, b, c);
                if (w == cplx{}) continue;
                const int site = keep_first ? b : c;
                const Mat& G = keep_first ? rep[c] : rep[b];
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        K((static_cast<Eigen::Index>(site) * r + i) * r + j, a) +=
                            w * G(i, j);
            }
    return K;
}

StateVector apply_Z(const HopfAlgebra& A, ZKind kind, const Representation& R,
                    const StateVector& psi, int site) {
    const int d = psi.dims.at(site);
    const int r = R.dim;
    StateVector out = apply_kernel(psi, {site}, z_kernel(A, kind, R), {d * r * r});
    out = split_axis(out, site, {d, r, r});
    // Move the (row, col) rep legs to the end.
    const int n = out.num_sites();
    std::vector<int> perm;
    perm.reserve(n);
    for (int a = 0; a < n; ++a)
        if (a != site + 1 && a != site + 2) perm.push_back(a);
    perm.push_back(site + 1);
    perm.push_back(site + 2);
    return permute_axes(out, perm);
}

Mat j_matrix(const HopfAlgebra& A, JKind kind, const Representation& R) {
    ZKind zk;
    switch (kind) {
        case JKind::J: zk = ZKind::Z; break;
        case JKind::JDag: zk = ZKind::ZDag; break;
        case JKind::JTilde: zk = ZKind::ZTilde; break;
        default: zk = ZKind::ZTildeDag; break;
    }
    const int d = A.dim;
    const int r = R.dim;
    const Mat K = z_kernel(A, zk, R);
    Mat M = Mat::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int i = 0; i < r; ++i)
                M(b, a) += K((static_cast<Eigen::Index>(b) * r + i) * r + i, a);
    return M;
}

StateVector apply_J(const HopfAlgebra& A, JKind kind, const Representation& R,
                    const StateVector& psi, int site) {
    ZKind zk;
    switch (kind) {
        case JKind::J: zk = ZKind::Z; break;
        case JKind::JDag: zk = ZKind::ZDag; break;
        case JKind::JTilde: zk = ZKind::ZTilde; break;
        default: zk = ZKind::ZTildeDag; break;
    }
    StateVector out = apply_Z(A, zk, R, psi, site);
    const int n = static_cast<int>(out.dims.size());
    return trace_axes(out, n - 2, n - 1);
}

Mat pauli_X(const HopfAlgebra& A) {
    return x_matrix(A, XKind::Fwd, A.haar_integral());
}

Mat pauli_Z(const HopfAlgebra& A) {
    return t_matrix(A, TKind::Plus, A.haar_measure());
}

/*
 * Entangler kernels on the ordered pair (control a, target b) → (p, q):
 *
 *   C X→      Σ|g⁽²⁾⟩|g⁽¹⁾h⟩        K = Σ_e C_a^{e p} A_{e b}^q
 *   C X→⁻¹    Σ|g⁽²⁾⟩|S(g⁽¹⁾)h⟩     K = Σ_{e f} C_a^{e p} S_e^f A_{f b}^q
 *   C X←      Σ|g⁽²⁾⟩|hS(g⁽¹⁾)⟩     K = Σ_{e f} C_a^{e p} S_e^f A_{b f}^q
 *   C X←⁻¹    Σ|g⁽²⁾⟩|hg⁽¹⁾⟩        K = Σ_e C_a^{e p} A_{b e}^q
 */
Mat controlled_x_kernel(const HopfAlgebra& A, XDirection dir, bool inverse) {
    const int d = A.dim;
    const bool antipode_on_first =
        (dir == XDirection::Fwd && inverse) || (dir == XDirection::Bwd && !inverse);
    const bool right_mult = (dir == XDirection::Bwd);

    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int e = 0; e < d; ++e)
            for (int p = 0; p < d; ++p) {
                const cplx cw = A.comul_abc(a, e, p);
                if (cw == cplx{}) continue;
                for (int f = 0; f < d; ++f) {
                    const cplx sw = antipode_on_first ? A.antipode(e, f)
                                                      : cplx(f == e ? 1.0 : 0.0);
                    if (sw == cplx{}) continue;
                    for (int b = 0; b < d; ++b)
                        for (int q = 0; q < d; ++q) {
                            const cplx mw = right_mult ? A.mul_abc(b, f, q)
                                                       : A.mul_abc(f, b, q);
                            if (mw == cplx{}) continue;
                            K(static_cast<Eigen::Index>(p) * d + q,
                              static_cast<Eigen::Index>(a) * d + b) += cw * sw * mw;
                        }
                }
            }
    return K;
}

StateVector controlled_X(const HopfAlgebra& A, XDirection dir, bool inverse,
                         const StateVector& psi, int control, int target) {
    const int d = A.dim;
    return apply_kernel(psi, {control, target}, controlled_x_kernel(A, dir, inverse),
                        {d, d});
}

}  // namespace hopfstate
