#pragma once

/*
 * JSON parsing and serialization for algebra and graph definition files.
 *
 * Algebra document:
 *   {
 *     "dim": 6,
 *     "basis_labels": ["e", ...],            (optional)
 *     "mul":   [[a, b, c, re, im], ...],     (sparse triples)
 *     "comul": [[a, b, c, re, im], ...],
 *     "counit": [[re, im], ...],             (dense, length dim)
 *     "antipode": [[[re, im], ...], ...],    (dense dim×dim, row-major)
 *     "star_matrix": [[[re, im], ...], ...],
 *     "tolerance": 1e-10,                    (optional)
 *     "irreps": [{"label": "R0", "dim": 2,
 *                 "matrices": [dense d_Γ×d_Γ per basis element]}, ...]
 *                                            (optional)
 *   }
 * The loader validates shapes, requires the unit at basis index 0, and runs
 * the full axiom suite before returning.
 *
 * Graph document:
 *   { "odd": [true, false, ...],             (vertex parity, id order)
 *     "edges": [[from, to], ...],            (global order)
 *     "lattice": false }                     (optional)
 */

#include <string>
#include <vector>

#include "hopfstate/cluster_graph.hpp"
#include "hopfstate/hopf_algebra.hpp"
#include "hopfstate/rep_theory.hpp"

namespace hopfstate {

struct AlgebraDocument {
    HopfAlgebra algebra;
    std::vector<Representation> irreps;  // empty when absent
};

AlgebraDocument parse_algebra(const std::string& json_text);
AlgebraDocument load_algebra_file(const std::string& path);

std::string serialize_algebra(const HopfAlgebra& A,
                              const std::vector<Representation>& irreps = {});
void save_algebra_file(const std::string& path, const HopfAlgebra& A,
                       const std::vector<Representation>& irreps = {});

ClusterGraph parse_graph(const std::string& json_text);
ClusterGraph load_graph_file(const std::string& path);
std::string serialize_graph(const ClusterGraph& K);

}  // namespace hopfstate
