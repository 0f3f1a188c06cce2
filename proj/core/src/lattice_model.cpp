#include "hopfstate/lattice_model.hpp"

#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "hopfstate/cluster_state.hpp"

namespace hopfstate {

namespace {

constexpr double kNonzeroCut = 0.0;  // exact-zero skip only; no thresholding

// Nonzero comultiplication triples (a, b, c, C_a^{bc}).
struct ComulEntry {
    int a, b, c;
    cplx w;
};

std::vector<ComulEntry> comul_nonzeros(const HopfAlgebra& A) {
    std::vector<ComulEntry> nz;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int c = 0; c < A.dim; ++c) {
                const cplx w = A.comul_abc(a, b, c);
                if (std::abs(w) > kNonzeroCut) nz.push_back({a, b, c, w});
            }
    return nz;
}

std::vector<Mat> x_basis_matrices(const HopfAlgebra& A, XKind kind) {
    std::vector<Mat> out(A.dim);
    for (int a = 0; a < A.dim; ++a)
        out[a] = x_matrix(A, kind, basis_element(A, a));
    return out;
}

}  // namespace

ChainModel make_chain(const HopfAlgebra& A, int L, bool periodic) {
    if (L < 1) throw InvalidSize("chain length must be at least 1");
    if (periodic && L < 2)
        throw InvalidSize(
            "periodic chains require L >= 2 (three-site supports would "
            "overlap themselves)");
    return ChainModel{&A, L, periodic};
}

ClusterGraph chain_graph(const ChainModel& m) {
    return build_1d_lattice(m.L, m.periodic);
}

StateVector chain_cluster_state(const ChainModel& m, std::size_t budget) {
    return cluster_state(m.A(), chain_graph(m), true, budget);
}

// ── Local terms ──────────────────────────────────────────────────────────────

Mat a_term_kernel(const HopfAlgebra& A, const AlgebraElement& h) {
    const int d = A.dim;
    const auto XF = x_basis_matrices(A, XKind::Fwd);
    const auto XB = x_basis_matrices(A, XKind::Bwd);
    const SweedlerExpansion d3 = comultiply_n(A, h, 3);

    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d * d,
                      static_cast<Eigen::Index>(d) * d * d);
    // h⁽¹⁾ → X← at i−1, h⁽³⁾ → X→ at i, h⁽²⁾ → X→ at i+1.
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const cplx w = d3.at({a, b, c});
                if (w == cplx{}) continue;
                K += w * Eigen::kroneckerProduct(
                             XB[a], Eigen::kroneckerProduct(XF[c], XF[b]).eval())
                             .eval();
            }
    return K;
}

Mat b_term_kernel_rep(const HopfAlgebra& A, const Representation& R) {
    const int d = A.dim;
    const int r = R.dim;

    // Γ(S(g_a)) per basis element.
    std::vector<Mat> GS(d);
    for (int a = 0; a < d; ++a) {
        GS[a] = Mat::Zero(r, r);
        for (int b = 0; b < d; ++b) GS[a] += A.antipode(a, b) * R.matrices[b];
    }
    // Trace table Tr[Γ(S(g_{a1})) Γ(g_{b2}) Γ(g_{c2})].
    std::vector<cplx> t3(static_cast<std::size_t>(d) * d * d);
    for (int a1 = 0; a1 < d; ++a1)
        for (int b2 = 0; b2 < d; ++b2) {
            const Mat M = GS[a1] * R.matrices[b2];
            for (int c2 = 0; c2 < d; ++c2)
                t3[(static_cast<std::size_t>(a1) * d + b2) * d + c2] =
                    (M * R.matrices[c2]).trace();
        }

    const auto nz = comul_nonzeros(A);
    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d * d,
                      static_cast<Eigen::Index>(d) * d * d);
    // K[(a',b',c'),(a,b,c)] = Σ C_a^{a1 a'} C_b^{b' b2} C_c^{c' c2} t3[a1,b2,c2]
    for (const ComulEntry& ea : nz)        // a → (a1 = ea.b, a' = ea.c)
        for (const ComulEntry& eb : nz)    // b → (b' = eb.b, b2 = eb.c)
            for (const ComulEntry& ec : nz) {  // c → (c' = ec.b, c2 = ec.c)
                const cplx w =
                    ea.w * eb.w * ec.w *
                    t3[(static_cast<std::size_t>(ea.b) * d + eb.c) * d + ec.c];
                if (w == cplx{}) continue;
                K((static_cast<Eigen::Index>(ea.c) * d + eb.b) * d + ec.b,
                  (static_cast<Eigen::Index>(ea.a) * d + eb.a) * d + ec.a) += w;
            }
    return K;
}

Mat b_term_kernel_dual(const HopfAlgebra& A, const DualElement& psi) {
    const int d = A.dim;
    // Table ψ(S(g_{a1}) g_{b2} g_{c2}).
    std::vector<cplx> t3(static_cast<std::size_t>(d) * d * d);
    for (int a1 = 0; a1 < d; ++a1) {
        const AlgebraElement sa = apply_antipode(A, basis_element(A, a1));
        for (int b2 = 0; b2 < d; ++b2) {
            const AlgebraElement sab = multiply(A, sa, basis_element(A, b2));
            for (int c2 = 0; c2 < d; ++c2)
                t3[(static_cast<std::size_t>(a1) * d + b2) * d + c2] =
                    pair(psi, multiply(A, sab, basis_element(A, c2)));
        }
    }
    const auto nz = comul_nonzeros(A);
    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d * d,
                      static_cast<Eigen::Index>(d) * d * d);
    for (const ComulEntry& ea : nz)
        for (const ComulEntry& eb : nz)
            for (const ComulEntry& ec : nz) {
                const cplx w =
                    ea.w * eb.w * ec.w *
                    t3[(static_cast<std::size_t>(ea.b) * d + eb.c) * d + ec.c];
                if (w == cplx{}) continue;
                K((static_cast<Eigen::Index>(ea.c) * d + eb.b) * d + ec.b,
                  (static_cast<Eigen::Index>(ea.a) * d + eb.a) * d + ec.a) += w;
            }
    return K;
}

Mat b_term_kernel_haar(const HopfAlgebra& A,
                       const std::vector<Representation>& irreps) {
    const int d = A.dim;
    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d * d,
                      static_cast<Eigen::Index>(d) * d * d);
    for (const Representation& R : irreps)
        K += (static_cast<double>(R.dim) / d) * b_term_kernel_rep(A, R);
    return K;
}

StateVector apply_three_site(const ChainModel& m, int center, const Mat& K,
                             const StateVector& psi) {
    if (!m.periodic)
        throw InvalidSize("local Hamiltonian terms are defined on periodic chains");
    const int N = m.num_sites();
    const int d = m.A().dim;
    const int im1 = (center - 1 + N) % N;
    const int ip1 = (center + 1) % N;
    return apply_kernel(psi, {im1, center, ip1}, K, {d, d, d});
}

StateVector apply_A(const ChainModel& m, int i, const StateVector& psi,
                    const AlgebraElement* h) {
    if (!m.odd_site(i)) throw SiteParity("vertex term requires an odd site");
    const AlgebraElement& hh = h ? *h : m.A().haar_integral();
    return apply_three_site(m, i, a_term_kernel(m.A(), hh), psi);
}

StateVector apply_B_rep(const ChainModel& m, int j, const Representation& R,
                        const StateVector& psi) {
    if (m.odd_site(j)) throw SiteParity("face term requires an even site");
    return apply_three_site(m, j, b_term_kernel_rep(m.A(), R), psi);
}

StateVector apply_B(const ChainModel& m, int j,
                    const std::vector<Representation>& irreps,
                    const StateVector& psi) {
    if (m.odd_site(j)) throw SiteParity("face term requires an even site");
    return apply_three_site(m, j, b_term_kernel_haar(m.A(), irreps), psi);
}

StateVector apply_B_dual(const ChainModel& m, int j, const DualElement& psi_fn,
                         const StateVector& psi) {
    if (m.odd_site(j)) throw SiteParity("face term requires an even site");
    return apply_three_site(m, j, b_term_kernel_dual(m.A(), psi_fn), psi);
}

// ── Global symmetries ────────────────────────────────────────────────────────

namespace {

std::vector<int> odd_sites(const ChainModel& m) {
    std::vector<int> s;
    for (int i = 0; i < m.num_sites(); ++i)
        if (m.odd_site(i)) s.push_back(i);
    return s;
}

std::vector<int> even_sites(const ChainModel& m) {
    std::vector<int> s;
    for (int i = 0; i < m.num_sites(); ++i)
        if (!m.odd_site(i)) s.push_back(i);
    return s;
}

}  // namespace

Mat symmetry_F_kernel(const ChainModel& m, const AlgebraElement& h) {
    const HopfAlgebra& A = m.A();
    const int d = A.dim;
    const int n = static_cast<int>(odd_sites(m).size());
    const auto XB = x_basis_matrices(A, XKind::Bwd);
    const SweedlerExpansion sw = comultiply_n(A, h, n);

    Eigen::Index side = 1;
    for (int k = 0; k < n; ++k) side *= d;
    Mat K = Mat::Zero(side, side);

    std::vector<int> idx(n, 0);
    for (std::size_t f = 0; f < sw.size(); ++f) {
        if (sw.tensor[f] != cplx{}) {
            Mat term = XB[idx[0]];
            for (int k = 1; k < n; ++k)
                term = Eigen::kroneckerProduct(term, XB[idx[k]]).eval();
            K += sw.tensor[f] * term;
        }
        int p = n - 1;
        while (p >= 0 && ++idx[p] == d) idx[p--] = 0;
    }
    return K;
}

StateVector symmetry_F(const ChainModel& m, const AlgebraElement& h,
                       const StateVector& psi) {
    const auto sites = odd_sites(m);
    return apply_kernel(psi, sites, symmetry_F_kernel(m, h),
                        std::vector<int>(sites.size(), m.A().dim));
}

Mat symmetry_D_kernel(const ChainModel& m, const Representation& R) {
    const HopfAlgebra& A = m.A();
    const int d = A.dim;
    const int r = R.dim;
    const int n = static_cast<int>(even_sites(m).size());

    // Z̃ site blocks M[a][b] = Σ_c C_a^{c b} Γ(g_c).
    std::vector<std::vector<Mat>> M(d, std::vector<Mat>(d, Mat::Zero(r, r)));
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            for (int b = 0; b < d; ++b) {
                const cplx w = A.comul_abc(a, c, b);
                if (w != cplx{}) M[a][b] += w * R.matrices[c];
            }

    Eigen::Index side = 1;
    for (int k = 0; k < n; ++k) side *= d;
    Mat K = Mat::Zero(side, side);
    std::vector<int> ai(n, 0), bi(n, 0);
    for (Eigen::Index col = 0; col < side; ++col) {
        {
            Eigen::Index rem = col;
            for (int k = n - 1; k >= 0; --k) {
                ai[k] = static_cast<int>(rem % d);
                rem /= d;
            }
        }
        for (Eigen::Index row = 0; row < side; ++row) {
            Eigen::Index rem = row;
            for (int k = n - 1; k >= 0; --k) {
                bi[k] = static_cast<int>(rem % d);
                rem /= d;
            }
            Mat P = Mat::Identity(r, r);
            for (int k = 0; k < n; ++k) P = P * M[ai[k]][bi[k]];
            K(row, col) = P.trace();
        }
    }
    return K;
}

StateVector symmetry_D(const ChainModel& m, const Representation& R,
                       const StateVector& psi) {
    const auto sites = even_sites(m);
    return apply_kernel(psi, sites, symmetry_D_kernel(m, R),
                        std::vector<int>(sites.size(), m.A().dim));
}

// ── Quantum-double operators ─────────────────────────────────────────────────

/*
 * Vertex operator assembled from its edge list: around the site origin the
 * incident edges receive the Sweedler components of h in clockwise order,
 *   (i−1, L₋) ← h⁽¹⁾,  (i+1, L₊) ← h⁽²⁾,  (i, L₊) ← h⁽³⁾,
 * with L₊ = X→ and L₋ = X←.
 */
Mat qd_vertex_kernel(const HopfAlgebra& A, const AlgebraElement& h) {
    const int d = A.dim;
    const auto XF = x_basis_matrices(A, XKind::Fwd);
    const auto XB = x_basis_matrices(A, XKind::Bwd);
    const SweedlerExpansion d3 = comultiply_n(A, h, 3);

    struct EdgeSlot {
        int offset;  // site offset relative to i−1 (kernel factor position)
        bool forward;
    };
    const EdgeSlot slots[3] = {{0, false}, {2, true}, {1, true}};

    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d * d,
                      static_cast<Eigen::Index>(d) * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const cplx w = d3.at({a, b, c});
                if (w == cplx{}) continue;
                const int comp[3] = {a, b, c};
                Mat factor[3];
                for (int s = 0; s < 3; ++s)
                    factor[slots[s].offset] =
                        slots[s].forward ? XF[comp[s]] : XB[comp[s]];
                K += w * Eigen::kroneckerProduct(
                             factor[0],
                             Eigen::kroneckerProduct(factor[1], factor[2]).eval())
                             .eval();
            }
    return K;
}

/*
 * Face operator: Δ̄₃(φ) distributed over T₋(j−1), T₊(j), T₊(j+1); the dual
 * comultiplication is evaluated through Δ̄₃(φ)[p,q,r] = φ(g_p g_q g_r).
 */
Mat qd_face_kernel(const HopfAlgebra& A, const DualElement& phi) {
    const int d = A.dim;

    std::vector<Mat> TM(d), TP(d);
    for (int p = 0; p < d; ++p) {
        DualElement f;
        f.coeffs = Vec::Zero(d);
        f.coeffs(p) = 1.0;
        TM[p] = t_matrix(A, TKind::Minus, f);
        TP[p] = t_matrix(A, TKind::Plus, f);
    }

    Mat K = Mat::Zero(static_cast<Eigen::Index>(d) * d * d,
                      static_cast<Eigen::Index>(d) * d * d);
    for (int p = 0; p < d; ++p) {
        const AlgebraElement gp = basis_element(A, p);
        for (int q = 0; q < d; ++q) {
            const AlgebraElement gpq = multiply(A, gp, basis_element(A, q));
            const Mat PQ = Eigen::kroneckerProduct(TM[p], TP[q]).eval();
            for (int r = 0; r < d; ++r) {
                const cplx w = pair(phi, multiply(A, gpq, basis_element(A, r)));
                if (w == cplx{}) continue;
                K += w * Eigen::kroneckerProduct(PQ, TP[r]).eval();
            }
        }
    }
    return K;
}

StateVector apply_qd_vertex(const ChainModel& m, int i, const AlgebraElement& h,
                            const StateVector& psi) {
    if (!m.odd_site(i)) throw SiteParity("vertex operator requires an odd site");
    return apply_three_site(m, i, qd_vertex_kernel(m.A(), h), psi);
}

StateVector apply_qd_face(const ChainModel& m, int j, const DualElement& phi,
                          const StateVector& psi) {
    if (m.odd_site(j)) throw SiteParity("face operator requires an even site");
    return apply_three_site(m, j, qd_face_kernel(m.A(), phi), psi);
}

// ── Verification suites ──────────────────────────────────────────────────────

namespace {

StateVector normalized_random(const ChainModel& m, std::uint64_t seed) {
    StateVector psi =
        random_state(std::vector<int>(m.num_sites(), m.A().dim), seed);
    const double n = state_norm(psi);
    for (cplx& a : psi.amps) a /= n;
    return psi;
}

}  // namespace

Report check_lcp(const ChainModel& m, const std::vector<Representation>& irreps,
                 std::uint64_t seed, int num_random_states) {
    const HopfAlgebra& A = m.A();
    Report rep;
    rep.title = "lcp";
    rep.meta("algebra", A.name);
    rep.meta("L", std::to_string(m.L));
    rep.meta("boundary", m.periodic ? "periodic" : "open");
    rep.meta("seed", std::to_string(seed));

    const Mat aK = a_term_kernel(A, A.haar_integral());
    const Mat bK = b_term_kernel_haar(A, irreps);
    std::vector<Mat> bGK(irreps.size());
    for (std::size_t g = 0; g < irreps.size(); ++g)
        bGK[g] = b_term_kernel_rep(A, irreps[g]);

    const auto odds = odd_sites(m);
    const auto evens = even_sites(m);
    const std::vector<Mat> grams(m.num_sites(), A.gram());

    double proj_a = 0, proj_b = 0, herm_a = 0, herm_b = 0;
    double comm_aa = 0, comm_bb = 0, comm_ab = 0;

    for (int s = 0; s < num_random_states; ++s) {
        const StateVector psi = normalized_random(m, seed + 2 * s);
        const StateVector phi = normalized_random(m, seed + 2 * s + 1);

        std::vector<StateVector> a_psi, b_psi;
        for (int i : odds) a_psi.push_back(apply_three_site(m, i, aK, psi));
        for (int j : evens) b_psi.push_back(apply_three_site(m, j, bK, psi));

        for (std::size_t k = 0; k < odds.size(); ++k) {
            proj_a = std::max(proj_a,
                              state_distance(
                                  apply_three_site(m, odds[k], aK, a_psi[k]),
                                  a_psi[k]));
            const StateVector a_phi = apply_three_site(m, odds[k], aK, phi);
            herm_a = std::max(herm_a, std::abs(dot_with_grams(phi, a_psi[k], grams) -
                                               dot_with_grams(a_phi, psi, grams)));
        }
        for (std::size_t k = 0; k < evens.size(); ++k) {
            proj_b = std::max(proj_b,
                              state_distance(
                                  apply_three_site(m, evens[k], bK, b_psi[k]),
                                  b_psi[k]));
            const StateVector b_phi = apply_three_site(m, evens[k], bK, phi);
            herm_b = std::max(herm_b, std::abs(dot_with_grams(phi, b_psi[k], grams) -
                                               dot_with_grams(b_phi, psi, grams)));
        }
        for (std::size_t k = 0; k < odds.size(); ++k)
            for (std::size_t l = k + 1; l < odds.size(); ++l)
                comm_aa = std::max(
                    comm_aa,
                    state_distance(apply_three_site(m, odds[k], aK, a_psi[l]),
                                   apply_three_site(m, odds[l], aK, a_psi[k])));
        for (std::size_t k = 0; k < evens.size(); ++k)
            for (std::size_t l = k + 1; l < evens.size(); ++l)
                comm_bb = std::max(
                    comm_bb,
                    state_distance(apply_three_site(m, evens[k], bK, b_psi[l]),
                                   apply_three_site(m, evens[l], bK, b_psi[k])));
        // The stronger per-irrep statement [𝔄_i, 𝔅^Γ_j] = 0.
        for (std::size_t g = 0; g < irreps.size(); ++g)
            for (std::size_t k = 0; k < odds.size(); ++k)
                for (int j : evens)
                    comm_ab = std::max(
                        comm_ab,
                        state_distance(
                            apply_three_site(m, j, bGK[g], a_psi[k]),
                            apply_three_site(m, odds[k], aK,
                                             apply_three_site(m, j, bGK[g], psi))));
    }

    rep.check("projector_A", proj_a);
    rep.check("projector_B", proj_b);
    rep.check("hermitian_A", herm_a);
    rep.check("hermitian_B", herm_b);
    rep.check("commutator_AA", comm_aa);
    rep.check("commutator_BB", comm_bb);
    rep.check("commutator_AB_per_irrep", comm_ab);
    return rep;
}

Report ground_state_check(const ChainModel& m,
                          const std::vector<Representation>& irreps,
                          std::uint64_t seed) {
    const HopfAlgebra& A = m.A();
    Report rep;
    rep.title = "ground_state";
    rep.meta("algebra", A.name);
    rep.meta("L", std::to_string(m.L));
    rep.meta("boundary", m.periodic ? "periodic" : "open");

    const StateVector gs = chain_cluster_state(m);
    const auto odds = odd_sites(m);
    const auto evens = even_sites(m);

    double a_eig = 0, b_eig = 0, bg_eig = 0, ah_eig = 0;
    const Mat aK = a_term_kernel(A, A.haar_integral());
    const Mat bK = b_term_kernel_haar(A, irreps);
    for (int i : odds)
        a_eig = std::max(a_eig, state_distance(apply_three_site(m, i, aK, gs), gs));
    for (int j : evens) {
        b_eig = std::max(b_eig, state_distance(apply_three_site(m, j, bK, gs), gs));
        for (const Representation& R : irreps) {
            StateVector expect = gs;
            for (cplx& a : expect.amps) a *= static_cast<double>(R.dim);
            bg_eig = std::max(
                bg_eig,
                state_distance(
                    apply_three_site(m, j, b_term_kernel_rep(A, R), gs), expect));
        }
    }
    // 𝔄^h|GS⟩ = ε(h)|GS⟩ for random h.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 3; ++t) {
        AlgebraElement h;
        h.coeffs = Vec::Zero(A.dim);
        for (int a = 0; a < A.dim; ++a) h.coeffs(a) = cplx(gauss(rng), gauss(rng));
        StateVector expect = gs;
        const cplx eps = counit_of(A, h);
        for (cplx& a : expect.amps) a *= eps;
        for (int i : odds)
            ah_eig = std::max(
                ah_eig,
                state_distance(
                    apply_three_site(m, i, a_term_kernel(A, h), gs), expect));
    }

    rep.check("A_eigenvalue_one", a_eig);
    rep.check("B_eigenvalue_one", b_eig);
    rep.check("B_rep_eigenvalue_dim", bg_eig);
    rep.check("A_h_eigenvalue_counit", ah_eig);
    return rep;
}

}  // namespace hopfstate
