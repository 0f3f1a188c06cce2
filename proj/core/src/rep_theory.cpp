#include "hopfstate/rep_theory.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <random>

namespace hopfstate {

namespace {

// Left-multiplication matrix of g_a (column b = coefficients of g_a g_b).
Mat left_mult(const HopfAlgebra& A, int a) {
    Mat L = Mat::Zero(A.dim, A.dim);
    for (int b = 0; b < A.dim; ++b)
        for (int c = 0; c < A.dim; ++c) L(c, b) = A.mul_abc(a, b, c);
    return L;
}

Mat left_mult(const HopfAlgebra& A, const Vec& x) {
    Mat L = Mat::Zero(A.dim, A.dim);
    for (int a = 0; a < A.dim; ++a)
        if (x(a) != cplx(0)) L += x(a) * left_mult(A, a);
    return L;
}

// Orthonormal (Euclidean) basis of the column space, rank determined by the
// relative singular-value cutoff.
Mat column_space(const Mat& M, double tol) {
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * (sv.size() ? sv(0) : 1.0);
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
}

Vec random_complex_vec(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    return v;
}

// Positive inverse square root of a Hermitian positive-definite matrix.
Mat inv_sqrt_psd(const Mat& G) {
    Eigen::SelfAdjointEigenSolver<Mat> es(G);
    Vec d = es.eigenvalues().cast<cplx>();
    Mat D = Mat::Zero(G.rows(), G.cols());
    for (int i = 0; i < G.rows(); ++i) D(i, i) = cplx(1.0) / std::sqrt(d(i));
    return es.eigenvectors() * D * es.eigenvectors().adjoint();
}

}  // namespace

Mat rep_apply(const Representation& R, const AlgebraElement& x) {
    Mat M = Mat::Zero(R.dim, R.dim);
    for (int a = 0; a < static_cast<int>(R.matrices.size()); ++a)
        if (x.coeffs(a) != cplx(0)) M += x.coeffs(a) * R.matrices[a];
    return M;
}

double representation_residual(const HopfAlgebra& A, const Representation& R) {
    const int d = A.dim;
    double r = max_abs(Mat(R.matrices[0] - Mat::Identity(R.dim, R.dim)));
    for (int a = 0; a < d; ++a) {
        // unitarity: Γ(g_a*) = Γ(g_a)†
        Mat star_img = Mat::Zero(R.dim, R.dim);
        for (int b = 0; b < d; ++b)
            if (A.star(a, b) != cplx(0)) star_img += A.star(a, b) * R.matrices[b];
        r = std::max(r, max_abs(Mat(star_img - R.matrices[a].adjoint())));
        for (int b = 0; b < d; ++b) {
            Mat rhs = Mat::Zero(R.dim, R.dim);
            for (int c = 0; c < d; ++c)
                if (A.mul_abc(a, b, c) != cplx(0)) rhs += A.mul_abc(a, b, c) * R.matrices[c];
            r = std::max(r, max_abs(Mat(R.matrices[a] * R.matrices[b] - rhs)));
        }
    }
    return r;
}

DualElement character(const HopfAlgebra& A, const Representation& R) {
    Vec chi(A.dim);
    for (int a = 0; a < A.dim; ++a) chi(a) = R.matrices[a].trace();
    return {chi};
}

Representation trivial_representation(const HopfAlgebra& A) {
    Representation R;
    R.label = "1";
    R.dim = 1;
    for (int a = 0; a < A.dim; ++a) {
        Mat m(1, 1);
        m(0, 0) = A.counit(a);
        R.matrices.push_back(m);
    }
    return R;
}

Representation tensor_rep(const HopfAlgebra& A, const Representation& G,
                          const Representation& P) {
    Representation T;
    T.label = G.label + "x" + P.label;
    T.dim = G.dim * P.dim;
    for (int a = 0; a < A.dim; ++a) {
        Mat m = Mat::Zero(T.dim, T.dim);
        for (int b = 0; b < A.dim; ++b)
            for (int c = 0; c < A.dim; ++c) {
                const cplx C = A.comul_abc(a, b, c);
                if (C == cplx(0)) continue;
                m += C * Eigen::kroneckerProduct(G.matrices[b], P.matrices[c]).eval();
            }
        T.matrices.push_back(m);
    }
    return T;
}

Mat schur_average(const HopfAlgebra& A, const Representation& Phi,
                  const Representation& Gamma, const Mat& f) {
    if (f.rows() != Phi.dim || f.cols() != Gamma.dim)
        throw DimensionMismatch("schur_average: f shape != d_Phi x d_Gamma");
    const SweedlerExpansion dl = comultiply_n(A, A.haar_integral(), 2);
    Mat F = Mat::Zero(Phi.dim, Gamma.dim);
    for (int a = 0; a < A.dim; ++a) {
        // Φ(S(g_a)) = Σ_b S_a^b Φ(g_b)
        Mat PhiS = Mat::Zero(Phi.dim, Phi.dim);
        for (int b = 0; b < A.dim; ++b)
            if (A.antipode(a, b) != cplx(0)) PhiS += A.antipode(a, b) * Phi.matrices[b];
        Mat right = Mat::Zero(Gamma.dim, Gamma.dim);
        for (int b = 0; b < A.dim; ++b) {
            const cplx w = dl.tensor[static_cast<std::size_t>(a) * A.dim + b];
            if (w != cplx(0)) right += w * Gamma.matrices[b];
        }
        F += PhiS * f * right;
    }
    return F;
}

namespace {

// One irreducible copy inside the two-sided ideal spanned by the columns of
// U (Euclidean-orthonormal coordinates for e𝒜): returns d_Γ orthonormal
// columns in 𝒜 coordinates, Hopf-inner-product orthonormal.
Mat split_irreducible(const HopfAlgebra& A, const Mat& U, int d_irrep,
                      std::mt19937_64& rng) {
    const int bdim = static_cast<int>(U.cols());
    // Restricted regular rep ρ(g_a) = U† L_a U.
    std::vector<Mat> rho(A.dim);
    for (int a = 0; a < A.dim; ++a) rho[a] = U.adjoint() * left_mult(A, a) * U;
    const SweedlerExpansion dl = comultiply_n(A, A.haar_integral(), 2);

    for (int attempt = 0; attempt < 32; ++attempt) {
        // Random intertwiner F = Σ ρ(S(λ^(1))) f ρ(λ^(2)).
        Mat f(bdim, bdim);
        for (int i = 0; i < bdim; ++i) f.col(i) = random_complex_vec(rng, bdim);
        Mat F = Mat::Zero(bdim, bdim);
        for (int a = 0; a < A.dim; ++a) {
            Mat rhoS = Mat::Zero(bdim, bdim);
            for (int b = 0; b < A.dim; ++b)
                if (A.antipode(a, b) != cplx(0)) rhoS += A.antipode(a, b) * rho[b];
            Mat right = Mat::Zero(bdim, bdim);
            for (int b = 0; b < A.dim; ++b) {
                const cplx w = dl.tensor[static_cast<std::size_t>(a) * A.dim + b];
                if (w != cplx(0)) right += w * rho[b];
            }
            F += rhoS * f * right;
        }
        // Any eigenvector of the commutant element generates (via the ρ-orbit)
        // exactly one irreducible copy: the F-eigenspace it belongs to.
        Eigen::ComplexEigenSolver<Mat> es(F);
        if (es.info() != Eigen::Success) continue;
        for (int which = 0; which < bdim; ++which) {
            const Vec v = es.eigenvectors().col(which);
            Mat orbit(bdim, A.dim);
            for (int a = 0; a < A.dim; ++a) orbit.col(a) = rho[a] * v;
            const Mat W = column_space(orbit, 1e-8);
            if (W.cols() != d_irrep) continue;
            return U * W;  // back to 𝒜 coordinates
        }
    }
    throw DecompositionIncomplete("could not split an irreducible copy");
}

Representation rep_from_subspace(const HopfAlgebra& A, const Mat& W_raw,
                                 const std::string& label) {
    // Orthonormalize w.r.t. ⟨x,y⟩ = x†Gy by the positive square root of the
    // restricted Gram matrix.
    const Mat& G = A.gram();
    const Mat W = W_raw * inv_sqrt_psd(Mat(W_raw.adjoint() * G * W_raw));
    Representation R;
    R.label = label;
    R.dim = static_cast<int>(W.cols());
    for (int a = 0; a < A.dim; ++a)
        R.matrices.push_back(W.adjoint() * G * left_mult(A, a) * W);
    return R;
}

// Rounded lexicographic character comparison for deterministic ordering.
bool char_lex_less(const Vec& x, const Vec& y, double tol) {
    for (int i = 0; i < x.size(); ++i) {
        const double rx = std::round(x(i).real() / tol) * tol;
        const double ry = std::round(y(i).real() / tol) * tol;
        if (rx != ry) return rx < ry;
        const double ix = std::round(x(i).imag() / tol) * tol;
        const double iy = std::round(y(i).imag() / tol) * tol;
        if (ix != iy) return ix < iy;
    }
    return false;
}

void sort_and_label(const HopfAlgebra& A, std::vector<Representation>& irreps) {
    std::vector<Vec> chars;
    for (const auto& R : irreps) chars.push_back(character(A, R).coeffs);
    std::vector<int> order(irreps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    const double rt = std::max(A.tolerance * 100, 1e-8);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (irreps[i].dim != irreps[j].dim) return irreps[i].dim < irreps[j].dim;
        return char_lex_less(chars[i], chars[j], rt);
    });
    std::vector<Representation> sorted;
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted.push_back(std::move(irreps[order[k]]));
        sorted.back().label = "R" + std::to_string(k);
    }
    irreps = std::move(sorted);
}

}  // namespace

std::vector<Representation> decompose_irreps(const HopfAlgebra& A,
                                             std::uint64_t seed) {
    const int d = A.dim;
    std::mt19937_64 rng(seed);

    // 1. Center: Σ_b z_b (A_ba^c − A_ab^c) = 0 for all a, c.
    Mat M(d * d, d);
    for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
            for (int b = 0; b < d; ++b)
                M(a * d + c, b) = A.mul_abc(b, a, c) - A.mul_abc(a, b, c);
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = A.tolerance * std::max(1.0, sv.size() ? sv(0) : 1.0);
    int k = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= cutoff) ++k;
    if (k == 0) throw DecompositionIncomplete("center is empty");
    const Mat Z = svd.matrixV().rightCols(k);  // orthonormal center basis

    // 2. Primitive central idempotents: diagonalize multiplication by a
    //    generic center element restricted to the center.
    std::vector<Vec> idempotents;
    for (int attempt = 0; attempt < 32 && idempotents.empty(); ++attempt) {
        const Vec z = Z * random_complex_vec(rng, k);
        const Mat Lz = left_mult(A, z);
        const Mat Mz = Z.adjoint() * Lz * Z;  // k×k
        Eigen::ComplexEigenSolver<Mat> es(Mz);
        if (es.info() != Eigen::Success) continue;
        // require well-separated eigenvalues
        bool distinct = true;
        for (int i = 0; i < k && distinct; ++i)
            for (int j = i + 1; j < k; ++j)
                if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)) < 1e-6) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;
        std::vector<Vec> found;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            Vec u = Z * es.eigenvectors().col(i);  // center element
            // normalize to an idempotent: u² = γu on a 1-dim component
            const Vec u2 = left_mult(A, u) * u;
            const cplx gamma = u.dot(u2) / u.dot(u);  // least squares on the line
            if (std::abs(gamma) < 1e-9) {
                ok = false;
                break;
            }
            u /= gamma;
            const Vec res = left_mult(A, u) * u - u;
            if (max_abs(res) > 1e-7) {
                ok = false;
                break;
            }
            found.push_back(u);
        }
        if (ok) idempotents = std::move(found);
    }
    if (idempotents.empty())
        throw DecompositionIncomplete("central idempotent extraction failed");

    // 3./4. Split each isotypic ideal and orthonormalize.
    std::vector<Representation> irreps;
    int total = 0;
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const Mat U = column_space(left_mult(A, idempotents[i]), 1e-8);
        const int bdim = static_cast<int>(U.cols());
        const int di = static_cast<int>(std::lround(std::sqrt(double(bdim))));
        if (di * di != bdim)
            throw DecompositionIncomplete("isotypic block dim " + std::to_string(bdim) +
                                          " is not a perfect square");
        const Mat W = (di == bdim) ? U : split_irreducible(A, U, di, rng);
        Representation R = rep_from_subspace(A, W, "tmp");
        if (representation_residual(A, R) > std::max(A.tolerance * 100, 1e-8))
            throw DecompositionIncomplete("derived irrep fails verification");
        total += di * di;
        irreps.push_back(std::move(R));
    }
    if (total != d)
        throw DecompositionIncomplete("sum of d^2 = " + std::to_string(total) +
                                      " != dim = " + std::to_string(d));
    sort_and_label(A, irreps);
    return irreps;
}

std::vector<Representation> decompose_irreps(
    const HopfAlgebra& A, const std::vector<Representation>& user_supplied) {
    int total = 0;
    for (const auto& R : user_supplied) {
        const double res = representation_residual(A, R);
        if (res > A.tolerance * 100)
            throw AxiomViolation("user irrep " + R.label + " homomorphism/unitarity", res);
        total += R.dim * R.dim;
    }
    // pairwise non-isomorphic: Schur average of a generic map must vanish
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < user_supplied.size(); ++i)
        for (std::size_t j = i + 1; j < user_supplied.size(); ++j) {
            Mat f(user_supplied[i].dim, user_supplied[j].dim);
            for (int c = 0; c < f.cols(); ++c)
                f.col(c) = random_complex_vec(rng, static_cast<int>(f.rows()));
            if (max_abs(schur_average(A, user_supplied[i], user_supplied[j], f)) > 1e-8)
                throw DecompositionIncomplete("user irreps " + user_supplied[i].label +
                                              ", " + user_supplied[j].label +
                                              " are isomorphic");
        }
    if (total != A.dim)
        throw DecompositionIncomplete("user irreps: sum d^2 != dim");
    std::vector<Representation> irreps = user_supplied;
    sort_and_label(A, irreps);
    return irreps;
}

int trivial_irrep_index(const HopfAlgebra& A,
                        const std::vector<Representation>& irreps) {
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (irreps[i].dim != 1) continue;
        if (max_abs(Vec(character(A, irreps[i]).coeffs - A.counit)) <= 1e-8)
            return static_cast<int>(i);
    }
    throw DecompositionIncomplete("no trivial irrep found");
}

namespace {

int round_multiplicity(const HopfAlgebra& A, cplx n, const std::string& ctx) {
    const double rounded = std::round(n.real());
    if (std::abs(n - cplx(rounded)) > 100 * A.tolerance || rounded < -0.5)
        throw NonIntegerMultiplicity(ctx + ": " + std::to_string(n.real()) + "+" +
                                     std::to_string(n.imag()) + "i");
    return static_cast<int>(rounded);
}

}  // namespace

std::vector<int> fusion_multiplicities(const HopfAlgebra& A,
                                       const std::vector<Representation>& irreps,
                                       int i, int j) {
    const Representation T = tensor_rep(A, irreps[i], irreps[j]);
    const SweedlerExpansion dl = comultiply_n(A, A.haar_integral(), 2);
    std::vector<int> out;
    for (std::size_t p = 0; p < irreps.size(); ++p) {
        const Representation& Psi = irreps[p];
        const DualElement chi = character(A, Psi);
        const Vec chiS = A.antipode * chi.coeffs;  // χ_Ψ(S(g_a))
        // Isotypic projector P = d_Ψ Σ χ_Ψ(S(λ^(1))) Θ(λ^(2))
        Mat P = Mat::Zero(T.dim, T.dim);
        for (int a = 0; a < A.dim; ++a) {
            if (chiS(a) == cplx(0)) continue;
            for (int b = 0; b < A.dim; ++b) {
                const cplx w = dl.tensor[static_cast<std::size_t>(a) * A.dim + b];
                if (w != cplx(0)) P += chiS(a) * w * T.matrices[b];
            }
        }
        P *= cplx(Psi.dim);
        const double idem = max_abs(Mat(P * P - P));
        if (idem > 1e-7)
            throw NonIntegerMultiplicity("isotypic projector not idempotent (residual " +
                                         std::to_string(idem) + ")");
        out.push_back(round_multiplicity(A, P.trace() / cplx(Psi.dim),
                                         "N_{" + irreps[i].label + "," + irreps[j].label +
                                             "}^" + Psi.label));
    }
    return out;
}

std::vector<int> fusion_multiplicities_character_oracle(
    const HopfAlgebra& A, const std::vector<Representation>& irreps, int i,
    int j) {
    // N = Σ_(λ) χ_Ψ(S(λ^(1))) (χ_Γ χ_Φ)(λ^(2)), all scalar arithmetic.
    const DualElement prod =
        dual_multiply(A, character(A, irreps[i]), character(A, irreps[j]));
    const SweedlerExpansion dl = comultiply_n(A, A.haar_integral(), 2);
    std::vector<int> out;
    for (std::size_t p = 0; p < irreps.size(); ++p) {
        const Vec chiS = A.antipode * character(A, irreps[p]).coeffs;
        cplx n = 0;
        for (int a = 0; a < A.dim; ++a)
            for (int b = 0; b < A.dim; ++b)
                n += dl.tensor[static_cast<std::size_t>(a) * A.dim + b] * chiS(a) *
                     prod.coeffs(b);
        out.push_back(round_multiplicity(A, n, "oracle N"));
    }
    return out;
}

FusionRing fusion_ring(const HopfAlgebra& A,
                       const std::vector<Representation>& irreps) {
    FusionRing ring;
    ring.rank = static_cast<int>(irreps.size());
    for (const auto& R : irreps) {
        ring.labels.push_back(R.label);
        ring.dims.push_back(R.dim);
    }
    ring.N.assign(static_cast<std::size_t>(ring.rank) * ring.rank * ring.rank, 0);
    for (int i = 0; i < ring.rank; ++i)
        for (int j = 0; j < ring.rank; ++j) {
            const std::vector<int> n = fusion_multiplicities(A, irreps, i, j);
            for (int k = 0; k < ring.rank; ++k)
                ring.N[(static_cast<std::size_t>(i) * ring.rank + j) * ring.rank + k] = n[k];
        }
    return ring;
}

FusionBasis fusion_basis(const HopfAlgebra& A,
                         const std::vector<Representation>& irreps) {
    const SweedlerExpansion dl = comultiply_n(A, A.haar_integral(), 2);
    FusionBasis basis;
    for (std::size_t g = 0; g < irreps.size(); ++g) {
        const Representation& R = irreps[g];
        const double scale = std::sqrt(double(R.dim) * A.dim);
        for (int i = 0; i < R.dim; ++i)
            for (int j = 0; j < R.dim; ++j) {
                Vec v = Vec::Zero(A.dim);
                for (int a = 0; a < A.dim; ++a) {
                    const cplx gij = R.matrices[a](i, j);
                    if (gij == cplx(0)) continue;
                    for (int b = 0; b < A.dim; ++b)
                        v(b) += gij * dl.tensor[static_cast<std::size_t>(a) * A.dim + b];
                }
                basis.entries.push_back({static_cast<int>(g), i, j, {scale * v}});
            }
    }
    const double defect = fusion_basis_gram_defect(A, basis);
    if (defect > 1e-9) throw GramDefect(defect);
    return basis;
}

double fusion_basis_gram_defect(const HopfAlgebra& A, const FusionBasis& basis) {
    const int n = static_cast<int>(basis.entries.size());
    double defect = 0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const cplx ip = inner_product(A, basis.entries[p].element,
                                          basis.entries[q].element);
            defect = std::max(defect, std::abs(ip - (p == q ? cplx(1) : cplx(0))));
        }
    return defect;
}

}  // namespace hopfstate
