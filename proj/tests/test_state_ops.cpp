/*
 * State-vector plumbing and the site-local operator toolbox: axis surgery,
 * budget enforcement, the X/Z/J operators and their algebraic relations, the
 * preferred Pauli pair, and the two-site entanglers.
 */

#include <doctest.h>

#include <random>

#include <hopfstate/qudit_ops.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {

constexpr double kTol = 1e-12;
constexpr double kLooseTol = 1e-10;

AlgebraElement random_element(const HopfAlgebra& A, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgebraElement x;
    x.coeffs = Vec::Zero(A.dim);
    for (int a = 0; a < A.dim; ++a) x.coeffs(a) = cplx(gauss(rng), gauss(rng));
    return x;
}

}  // namespace

TEST_CASE("axis surgery: permute, split, trace") {
    // ψ[a, b] = 3a + b on dims {2, 3}.
    StateVector psi;
    psi.dims = {2, 3};
    psi.amps = {0, 1, 2, 3, 4, 5};

    const StateVector flipped = permute_axes(psi, {1, 0});
    REQUIRE(flipped.dims == std::vector<int>{3, 2});
    CHECK(flipped.amps[1 * 2 + 0] == cplx(1.0));  // old [0, 1]
    CHECK(flipped.amps[0 * 2 + 1] == cplx(3.0));  // old [1, 0]

    const StateVector split = split_axis(psi, 1, {3, 1});
    REQUIRE(split.dims == std::vector<int>{2, 3, 1});
    CHECK(state_distance(permute_axes(split, {0, 1, 2}), split) == 0.0);

    // Tracing a maximally-correlated pair gives the sum of the diagonal.
    StateVector pair;
    pair.dims = {2, 2};
    pair.amps = {cplx(1.0), cplx(2.0), cplx(3.0), cplx(4.0)};
    const StateVector traced = trace_axes(pair, 0, 1);
    REQUIRE(traced.dims == std::vector<int>{1});  // scalar carrier
    CHECK(std::abs(traced.amps[0] - cplx(5.0)) <= kTol);
}

TEST_CASE("amplitude budget is enforced") {
    CHECK_THROWS_AS(random_state({64, 64, 64}, 1, 1000),
                    MemoryBudgetExceeded);
    CHECK_THROWS_AS(basis_state({2, 2}, {0, 0}, 3), MemoryBudgetExceeded);
}

TEST_CASE("apply_kernel matches apply_site_matrix on one site") {
    const HopfAlgebra A = zoo_algebra("S3");
    const StateVector psi = random_state({6, 6}, 2);
    const Mat M = x_matrix(A, XKind::Fwd, random_element(A, 9));
    CHECK(state_distance(apply_site_matrix(psi, 1, M),
                         apply_kernel(psi, {1}, M, {6})) <= kTol);
}

TEST_CASE("regular actions on states compose and undo correctly") {
    const HopfAlgebra A = zoo_algebra("FS3");
    const StateVector psi = random_state({A.dim, A.dim}, 5);
    const AlgebraElement g = random_element(A, 6);
    const AlgebraElement h = random_element(A, 7);

    // X→_g X→_h = X→_{gh} on site 0 while leaving site 1 alone.
    const StateVector lhs =
        apply_X(A, XKind::Fwd, g, apply_X(A, XKind::Fwd, h, psi, 0), 0);
    const StateVector rhs = apply_X(A, XKind::Fwd, multiply(A, g, h), psi, 0);
    CHECK(state_distance(lhs, rhs) <= kLooseTol);

    // X̃→_g undoes X→_g for group-like g (basis elements of ℂ[G]).
    const HopfAlgebra G = zoo_algebra("S3");
    const StateVector phi = random_state({G.dim}, 8);
    for (int a = 0; a < G.dim; ++a) {
        const AlgebraElement ga = basis_element(G, a);
        CHECK(state_distance(
                  apply_X(G, XKind::TildeFwd, ga,
                          apply_X(G, XKind::Fwd, ga, phi, 0), 0),
                  phi) <= kTol);
    }
}

TEST_CASE("traced irrep actions equal the dual T actions on their characters") {
    for (const std::string& name : {std::string("S3"), std::string("FS3")}) {
        const HopfAlgebra A = zoo_algebra(name);
        CAPTURE(name);
        for (const Representation& R : decompose_irreps(A)) {
            const DualElement chi = character(A, R);
            CHECK(max_abs(Mat(j_matrix(A, JKind::J, R) -
                              t_matrix(A, TKind::Plus, chi))) <= kTol);
            CHECK(max_abs(Mat(j_matrix(A, JKind::JDag, R) -
                              t_matrix(A, TKind::Minus, chi))) <= kTol);
            CHECK(max_abs(Mat(j_matrix(A, JKind::JTilde, R) -
                              t_matrix(A, TKind::TildeMinus, chi))) <= kTol);
            CHECK(max_abs(Mat(j_matrix(A, JKind::JTildeDag, R) -
                              t_matrix(A, TKind::TildePlus, chi))) <= kTol);
        }
    }
}

TEST_CASE("apply_J is the rep-leg trace of apply_Z") {
    const HopfAlgebra A = zoo_algebra("S3");
    const auto irreps = decompose_irreps(A);
    const Representation& R = irreps.back();
    const StateVector psi = random_state({A.dim, A.dim}, 13);
    for (ZKind zk : {ZKind::Z, ZKind::ZDag, ZKind::ZTilde, ZKind::ZTildeDag}) {
        StateVector z = apply_Z(A, zk, R, psi, 1);
        const int n = z.num_sites();
        z = trace_axes(z, n - 2, n - 1);
        CHECK(state_distance(z, apply_J(A, traced_kind(zk), R, psi, 1)) <=
              kTol);
    }
}

TEST_CASE("preferred Pauli X is a Hermitian projector; Z collapses to the unit") {
    for (const std::string& name : {std::string("S3"), std::string("FS3")}) {
        const HopfAlgebra A = zoo_algebra(name);
        CAPTURE(name);
        const Mat X = pauli_X(A);
        CHECK(max_abs(Mat(X * X - X)) <= kLooseTol);
        // Hermitian with respect to the Hopf inner product: G X = X† G.
        CHECK(max_abs(Mat(A.gram() * X - X.adjoint() * A.gram())) <=
              kLooseTol);

        // Z|x⟩ = Λ(x)|1⟩: every column is a multiple of e_0.
        const Mat Z = pauli_Z(A);
        for (int b = 0; b < A.dim; ++b) {
            CHECK(std::abs(Z(0, b) - A.haar_measure().coeffs(b)) <= kLooseTol);
            for (int a = 1; a < A.dim; ++a) CHECK(std::abs(Z(a, b)) <= kTol);
        }
    }
}

TEST_CASE("for qubits the preferred pair reduces to |+⟩⟨+| and |0⟩⟨δ|") {
    const HopfAlgebra A = zoo_algebra("Z2");
    Mat Xo(2, 2), Zo(2, 2);
    Xo << 0.5, 0.5, 0.5, 0.5;  // projector onto |0⟩+|1⟩
    Zo << 1, 0, 0, 0;          // Λ = δ at the identity
    CHECK(max_abs(Mat(pauli_X(A) - Xo)) <= kTol);
    CHECK(max_abs(Mat(pauli_Z(A) - Zo)) <= kTol);
}

TEST_CASE("entanglers invert exactly and act on the expected pair") {
    const HopfAlgebra A = zoo_algebra("D4");
    const StateVector psi = random_state({A.dim, A.dim, A.dim}, 17);
    for (XDirection dir : {XDirection::Fwd, XDirection::Bwd}) {
        const StateVector once = controlled_X(A, dir, false, psi, 0, 2);
        CHECK(state_distance(controlled_X(A, dir, true, once, 0, 2), psi) <=
              kTol);
        // Site 1 is untouched: tracing it against a basis vector commutes.
        CHECK(once.dims == psi.dims);
    }
    CHECK_THROWS_AS(
        controlled_X(A, XDirection::Fwd, false,
                     random_state({A.dim, 3}, 1), 0, 1),
        SiteMismatch);
}

TEST_CASE("forward entangler on a group algebra is a generalized CNOT") {
    // C X→ |g⟩|h⟩ = |g⟩|gh⟩ for group-like control states.
    const HopfAlgebra A = zoo_algebra("S3");
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
            const StateVector in = basis_state({A.dim, A.dim}, {a, b});
            const AlgebraElement out =
                multiply(A, basis_element(A, a), basis_element(A, b));
            int c = 0;
            for (int k = 0; k < A.dim; ++k)
                if (std::abs(out.coeffs(k)) > 0.5) c = k;
            const StateVector expect = basis_state({A.dim, A.dim}, {a, c});
            CHECK(state_distance(
                      controlled_X(A, XDirection::Fwd, false, in, 0, 1),
                      expect) <= kTol);
        }
}

TEST_CASE("dot_with_grams reduces to dot with identity Grams") {
    const StateVector a = random_state({3, 4}, 21);
    const StateVector b = random_state({3, 4}, 22);
    const std::vector<Mat> grams = {Mat::Identity(3, 3), Mat()};
    CHECK(std::abs(dot_with_grams(a, b, grams) - dot(a, b)) <= kTol);
}
