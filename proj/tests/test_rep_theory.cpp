/*
 * Representation theory: irrep decomposition, characters, Schur averaging,
 * fusion multiplicities (both routes), and the fusion basis.
 *
 * Frozen oracles:
 *   ℂ[S₃]  irrep dimensions {1, 1, 2}, 2-dim character values {2, 0, −1}
 *          on {identity, transpositions, 3-cycles}
 *   ℂ[D₄]  irrep dimensions {1, 1, 1, 1, 2}
 *   F(S₃)  six 1-dim irreps (commutative algebra)
 */

#include <doctest.h>

#include <algorithm>
#include <set>

#include <hopfstate/rep_theory.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {
constexpr double kTol = 1e-10;

std::vector<int> irrep_dims(const std::vector<Representation>& irreps) {
    std::vector<int> dims;
    for (const Representation& R : irreps) dims.push_back(R.dim);
    return dims;
}
}  // namespace

TEST_CASE("irrep dimension multisets match the classical tables") {
    CHECK(irrep_dims(decompose_irreps(zoo_algebra("Z2"))) ==
          std::vector<int>{1, 1});
    CHECK(irrep_dims(decompose_irreps(zoo_algebra("Z4"))) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(irrep_dims(decompose_irreps(zoo_algebra("S3"))) ==
          std::vector<int>{1, 1, 2});
    CHECK(irrep_dims(decompose_irreps(zoo_algebra("D4"))) ==
          std::vector<int>{1, 1, 1, 1, 2});
    CHECK(irrep_dims(decompose_irreps(zoo_algebra("FS3"))) ==
          std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("every derived irrep is a unitary homomorphism with unit image") {
    for (const std::string& name : zoo_names()) {
        const HopfAlgebra A = zoo_algebra(name);
        CAPTURE(name);
        for (const Representation& R : decompose_irreps(A))
            CHECK(representation_residual(A, R) <= kTol);
    }
}

TEST_CASE("the S3 two-dimensional character takes values {2, 0, 0, 0, -1, -1}") {
    const HopfAlgebra A = zoo_algebra("S3");
    const auto irreps = decompose_irreps(A);
    const Representation& two = irreps.back();
    REQUIRE(two.dim == 2);
    const DualElement chi = character(A, two);
    std::multiset<int> values;
    for (int a = 0; a < A.dim; ++a) {
        const cplx v = chi.coeffs(a);
        CHECK(std::abs(v.imag()) <= kTol);
        values.insert(static_cast<int>(std::lround(v.real())));
    }
    CHECK(values == std::multiset<int>{-1, -1, 0, 0, 0, 2});
}

TEST_CASE("trivial irrep is detected and acts by the counit") {
    for (const std::string& name : {std::string("S3"), std::string("FS3")}) {
        const HopfAlgebra A = zoo_algebra(name);
        const auto irreps = decompose_irreps(A);
        const int t = trivial_irrep_index(A, irreps);
        REQUIRE(t >= 0);
        CAPTURE(name);
        for (int a = 0; a < A.dim; ++a)
            CHECK(std::abs(irreps[t].matrices[a](0, 0) - A.counit(a)) <= kTol);
    }
}

TEST_CASE("Schur averaging annihilates between non-isomorphic irreps") {
    const HopfAlgebra A = zoo_algebra("S3");
    const auto irreps = decompose_irreps(A);
    Mat f = Mat::Zero(irreps[2].dim, irreps[0].dim);
    f.setRandom();
    CHECK(max_abs(schur_average(A, irreps[2], irreps[0], f)) <= kTol);

    // Γ = Φ: the average is (Tr f / d)·I.
    Mat g = Mat::Random(2, 2);
    const Mat avg = schur_average(A, irreps[2], irreps[2], g);
    const Mat expect = (g.trace() / 2.0) * Mat::Identity(2, 2);
    CHECK(max_abs(Mat(avg - expect)) <= kTol);
}

TEST_CASE("both fusion routes agree and reproduce the S3 and Z4 tables") {
    for (const std::string& name : zoo_names()) {
        const HopfAlgebra A = zoo_algebra(name);
        const auto irreps = decompose_irreps(A);
        const int r = static_cast<int>(irreps.size());
        CAPTURE(name);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                CHECK(fusion_multiplicities(A, irreps, i, j) ==
                      fusion_multiplicities_character_oracle(A, irreps, i, j));
    }

    // ℤ₄: the fusion ring is the group ℤ₄ under character addition.
    {
        const HopfAlgebra A = zoo_algebra("Z4");
        const auto irreps = decompose_irreps(A);
        const FusionRing F = fusion_ring(A, irreps);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int total = 0;
                for (int k = 0; k < 4; ++k) total += F.n(i, j, k);
                CHECK(total == 1);  // abelian group: single fusion channel
            }
    }

    // ℂ[S₃]: 2 ⊗ 2 decomposes into all three irreps once.
    {
        const HopfAlgebra A = zoo_algebra("S3");
        const auto irreps = decompose_irreps(A);
        const FusionRing F = fusion_ring(A, irreps);
        CHECK(F.n(2, 2, 0) == 1);
        CHECK(F.n(2, 2, 1) == 1);
        CHECK(F.n(2, 2, 2) == 1);
    }

    // F(S₃): the fusion ring is S₃ itself, hence noncommutative.
    {
        const HopfAlgebra A = zoo_algebra("FS3");
        const auto irreps = decompose_irreps(A);
        const FusionRing F = fusion_ring(A, irreps);
        bool noncommutative = false;
        for (int i = 0; i < F.rank && !noncommutative; ++i)
            for (int j = 0; j < F.rank && !noncommutative; ++j)
                for (int k = 0; k < F.rank; ++k)
                    if (F.n(i, j, k) != F.n(j, i, k)) {
                        noncommutative = true;
                        break;
                    }
        CHECK(noncommutative);
    }
}

TEST_CASE("fusion with the trivial irrep is the identity") {
    for (const std::string& name : {std::string("S3"), std::string("D4")}) {
        const HopfAlgebra A = zoo_algebra(name);
        const auto irreps = decompose_irreps(A);
        const FusionRing F = fusion_ring(A, irreps);
        const int t = trivial_irrep_index(A, irreps);
        CAPTURE(name);
        for (int i = 0; i < F.rank; ++i)
            for (int k = 0; k < F.rank; ++k) {
                CHECK(F.n(t, i, k) == (i == k ? 1 : 0));
                CHECK(F.n(i, t, k) == (i == k ? 1 : 0));
            }
    }
}

TEST_CASE("fusion basis is orthonormal in the Hopf inner product") {
    for (const std::string& name : zoo_names()) {
        const HopfAlgebra A = zoo_algebra(name);
        const auto irreps = decompose_irreps(A);
        const FusionBasis basis = fusion_basis(A, irreps);
        CAPTURE(name);
        CHECK(basis.entries.size() == static_cast<std::size_t>(A.dim));
        CHECK(fusion_basis_gram_defect(A, basis) <= 1e-9);
    }
}

TEST_CASE("user-supplied irreps are verified, not trusted") {
    const HopfAlgebra A = zoo_algebra("S3");
    auto irreps = decompose_irreps(A);
    // An incomplete list fails the dimension count.
    std::vector<Representation> partial(irreps.begin(), irreps.end() - 1);
    CHECK_THROWS_AS(decompose_irreps(A, partial), DecompositionIncomplete);
    // A corrupted matrix fails the homomorphism check.
    irreps[2].matrices[3](0, 0) += 0.5;
    CHECK_THROWS_AS(decompose_irreps(A, irreps), AxiomViolation);
}
