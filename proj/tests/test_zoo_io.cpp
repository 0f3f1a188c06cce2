/*
 * Zoo construction and the JSON file formats: round trips, shape validation,
 * and rejection of malformed documents.
 */

#include <doctest.h>

#include <hopfstate/algebra_io.hpp>
#include <hopfstate/zoo.hpp>

using namespace hopfstate;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("zoo lists ten algebras, group algebras first") {
    const auto names = zoo_names();
    REQUIRE(names.size() == 10);
    CHECK(names[0] == "Z2");
    for (const std::string& name : names) CHECK(zoo_algebra(name).dim >= 2);
    CHECK_THROWS_AS(zoo_algebra("Q8"), ParseError);
}

TEST_CASE("group validation rejects broken multiplication tables") {
    GroupSpec bad;
    bad.name = "broken";
    bad.order = 2;
    bad.table = {{0, 1}, {1, 1}};  // 1·1 = 1 leaves 1 without an inverse
    CHECK_THROWS_AS(validate_group(bad), NotAGroup);
}

TEST_CASE("function algebra is the dual of the group algebra") {
    const HopfAlgebra FG = zoo_algebra("FS3");
    CHECK(FG.dim == 6);
    // F(G) is commutative: A_ab^c symmetric in a, b.
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                CHECK(std::abs(FG.mul_abc(a, b, c) - FG.mul_abc(b, a, c)) <=
                      kTol);
    // ℂ[S₃] is not.
    const HopfAlgebra G = zoo_algebra("S3");
    double asym = 0.0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                asym = std::max(asym,
                                std::abs(G.mul_abc(a, b, c) - G.mul_abc(b, a, c)));
    CHECK(asym > 0.5);
}

TEST_CASE("algebra documents round-trip through JSON") {
    const HopfAlgebra A = zoo_algebra("S3");
    const auto irreps = decompose_irreps(A);
    const AlgebraDocument doc = parse_algebra(serialize_algebra(A, irreps));

    CHECK(doc.algebra.dim == A.dim);
    CHECK(max_abs(Vec(doc.algebra.counit - A.counit)) <= kTol);
    CHECK(max_abs(Mat(doc.algebra.antipode - A.antipode)) <= kTol);
    CHECK(max_abs(Mat(doc.algebra.star - A.star)) <= kTol);
    for (std::size_t i = 0; i < A.mul.size(); ++i) {
        CHECK(std::abs(doc.algebra.mul[i] - A.mul[i]) <= kTol);
        CHECK(std::abs(doc.algebra.comul[i] - A.comul[i]) <= kTol);
    }
    REQUIRE(doc.irreps.size() == irreps.size());
    for (std::size_t k = 0; k < irreps.size(); ++k) {
        CHECK(doc.irreps[k].dim == irreps[k].dim);
        for (int a = 0; a < A.dim; ++a)
            CHECK(max_abs(Mat(doc.irreps[k].matrices[a] -
                              irreps[k].matrices[a])) <= kTol);
    }
}

TEST_CASE("malformed algebra documents raise ParseError") {
    CHECK_THROWS_AS(parse_algebra("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{}"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"dim": 2, "mul": "zebra"})"), ParseError);
    // Sparse triple with an out-of-range index.
    CHECK_THROWS_AS(
        parse_algebra(
            R"({"dim": 1, "mul": [[0, 0, 5, 1, 0]], "comul": [[0, 0, 0, 1, 0]],
                "counit": [[1, 0]], "antipode": [[[1, 0]]],
                "star_matrix": [[[1, 0]]]})"),
        ParseError);
}

TEST_CASE("documents whose unit is not at basis index 0 are rejected") {
    // A two-element 'group algebra' whose identity was moved to index 1:
    // g_0 g_0 = g_0 holds but g_1 is the unit, so the unit axiom at index 0
    // fails and loading must throw.
    const std::string doc = R"({
        "dim": 2,
        "mul": [[0, 0, 1, 1, 0], [0, 1, 0, 1, 0], [1, 0, 0, 1, 0],
                [1, 1, 1, 1, 0]],
        "comul": [[0, 0, 0, 1, 0], [1, 1, 1, 1, 0]],
        "counit": [[1, 0], [1, 0]],
        "antipode": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
        "star_matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})";
    CHECK_THROWS_AS(parse_algebra(doc), AxiomViolation);
}

TEST_CASE("graph documents round-trip and validate parity") {
    ClusterGraph K = build_1d_lattice(3, true);
    const ClusterGraph back = parse_graph(serialize_graph(K));
    REQUIRE(back.num_vertices() == K.num_vertices());
    REQUIRE(back.num_edges() == K.num_edges());
    for (int v = 0; v < K.num_vertices(); ++v) CHECK(back.odd[v] == K.odd[v]);
    for (int e = 0; e < K.num_edges(); ++e) {
        CHECK(back.edges[e].from == K.edges[e].from);
        CHECK(back.edges[e].to == K.edges[e].to);
    }
    CHECK(back.lattice == K.lattice);

    CHECK_THROWS_AS(
        parse_graph(R"({"odd": [true, true], "edges": [[0, 1]]})"),
        NotBipartite);
    CHECK_THROWS_AS(parse_graph(R"({"odd": [true], "edges": [[0, 7]]})"),
                    UnknownVertex);
    CHECK_THROWS_AS(parse_graph("[1, 2, 3]"), ParseError);
}

TEST_CASE("loaded files behave like the originals") {
    const std::string path = "/tmp/hopfstate_roundtrip.json";
    const HopfAlgebra A = zoo_algebra("FZ4");
    save_algebra_file(path, A);
    const AlgebraDocument doc = load_algebra_file(path);
    CHECK(doc.algebra.dim == A.dim);
    CHECK(distance(doc.algebra.haar_integral(), A.haar_integral()) <= 1e-10);
    CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"), ParseError);
}
