#include "hopfstate/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hopfstate {

using nlohmann::json;

namespace {

cplx parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("complex numbers must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json dump_complex(cplx z) { return json::array({z.real(), z.imag()}); }

Mat parse_matrix(const json& j, int rows, int cols, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError(std::string(what) + ": wrong row count");
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw ParseError(std::string(what) + ": wrong column count");
        for (int c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
    }
    return m;
}

json dump_matrix(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(dump_complex(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::vector<cplx> parse_sparse_triples(const json& j, int dim, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a list");
    std::vector<cplx> t(static_cast<std::size_t>(dim) * dim * dim, cplx(0));
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 5)
            throw ParseError(std::string(what) +
                             ": entries must be [a, b, c, re, im]");
        const int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
        if (a < 0 || a >= dim || b < 0 || b >= dim || c < 0 || c >= dim)
            throw ParseError(std::string(what) + ": index out of range");
        t[(static_cast<std::size_t>(a) * dim + b) * dim + c] +=
            cplx(e[3].get<double>(), e[4].get<double>());
    }
    return t;
}

json dump_sparse_triples(const std::vector<cplx>& t, int dim) {
    json out = json::array();
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c) {
                const cplx v = t[(static_cast<std::size_t>(a) * dim + b) * dim + c];
                if (v != cplx{})
                    out.push_back(json::array({a, b, c, v.real(), v.imag()}));
            }
    return out;
}

}  // namespace

AlgebraDocument parse_algebra(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.contains("dim")) throw ParseError("missing field: dim");
        const int dim = j["dim"].get<int>();
        if (dim < 1) throw ParseError("dim must be positive");

        HopfAlgebra spec;
        spec.dim = dim;
        spec.name = j.value("name", std::string("file"));
        if (j.contains("basis_labels"))
            spec.basis_labels = j["basis_labels"].get<std::vector<std::string>>();
        for (const char* f : {"mul", "comul", "counit", "antipode", "star_matrix"})
            if (!j.contains(f)) throw ParseError(std::string("missing field: ") + f);

        spec.mul = parse_sparse_triples(j["mul"], dim, "mul");
        spec.comul = parse_sparse_triples(j["comul"], dim, "comul");
        if (static_cast<int>(j["counit"].size()) != dim)
            throw ParseError("counit: wrong length");
        spec.counit = Vec(dim);
        for (int a = 0; a < dim; ++a) spec.counit(a) = parse_complex(j["counit"][a]);
        spec.antipode = parse_matrix(j["antipode"], dim, dim, "antipode");
        spec.star = parse_matrix(j["star_matrix"], dim, dim, "star_matrix");
        spec.tolerance = j.value("tolerance", kDefaultTolerance);

        AlgebraDocument doc;
        doc.algebra = load_algebra(std::move(spec));  // shape + axiom validation

        if (j.contains("irreps")) {
            for (const json& ij : j["irreps"]) {
                Representation r;
                r.label = ij.value("label", std::string());
                r.dim = ij["dim"].get<int>();
                if (static_cast<int>(ij["matrices"].size()) != dim)
                    throw ParseError("irreps: one matrix per basis element required");
                for (int a = 0; a < dim; ++a)
                    r.matrices.push_back(
                        parse_matrix(ij["matrices"][a], r.dim, r.dim, "irrep"));
                doc.irreps.push_back(std::move(r));
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra document: ") + e.what());
    }
}

AlgebraDocument load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

std::string serialize_algebra(const HopfAlgebra& A,
                              const std::vector<Representation>& irreps) {
    json j;
    j["dim"] = A.dim;
    j["name"] = A.name;
    if (!A.basis_labels.empty()) j["basis_labels"] = A.basis_labels;
    j["mul"] = dump_sparse_triples(A.mul, A.dim);
    j["comul"] = dump_sparse_triples(A.comul, A.dim);
    json counit = json::array();
    for (int a = 0; a < A.dim; ++a) counit.push_back(dump_complex(A.counit(a)));
    j["counit"] = counit;
    j["antipode"] = dump_matrix(A.antipode);
    j["star_matrix"] = dump_matrix(A.star);
    j["tolerance"] = A.tolerance;
    if (!irreps.empty()) {
        json irr = json::array();
        for (const Representation& r : irreps) {
            json rj;
            rj["label"] = r.label;
            rj["dim"] = r.dim;
            json mats = json::array();
            for (const Mat& m : r.matrices) mats.push_back(dump_matrix(m));
            rj["matrices"] = mats;
            irr.push_back(rj);
        }
        j["irreps"] = irr;
    }
    return j.dump(2) + "\n";
}

void save_algebra_file(const std::string& path, const HopfAlgebra& A,
                       const std::vector<Representation>& irreps) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << serialize_algebra(A, irreps);
}

ClusterGraph parse_graph(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.contains("odd") || !j.contains("edges"))
            throw ParseError("graph document requires 'odd' and 'edges'");
        std::vector<bool> odd = j["odd"].get<std::vector<bool>>();
        std::vector<GraphEdge> edges;
        for (const json& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("edges must be [from, to] pairs");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return build_cluster_graph(std::move(odd), std::move(edges),
                                   j.value("lattice", false));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph document: ") + e.what());
    }
}

ClusterGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const ClusterGraph& K) {
    json j;
    j["odd"] = std::vector<bool>(K.odd);
    json edges = json::array();
    for (const GraphEdge& e : K.edges) edges.push_back(json::array({e.from, e.to}));
    j["edges"] = edges;
    j["lattice"] = K.lattice;
    return j.dump(2) + "\n";
}

}  // namespace hopfstate
