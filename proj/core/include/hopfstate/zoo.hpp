#pragma once

/*
 * Built-in algebra zoo.
 *
 * Group algebras ℂ[G] for G ∈ {ℤ₂, ℤ₃, ℤ₄, S₃, D₄} with the standard Hopf
 * structure Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹, g* = g⁻¹, and their duals
 * (function algebras F(G)) obtained through dual_algebra.  Exotic algebras
 * are not bundled; they load from files.
 */

#include <string>
#include <vector>

#include "hopfstate/hopf_algebra.hpp"

namespace hopfstate {

// A finite group by multiplication table: table[a][b] = index of g_a g_b,
// identity at index 0.
struct GroupSpec {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;  // filled by validate_group
};

// Checks identity/associativity/inverses and fills the inverse table;
// throws NotAGroup otherwise.
void validate_group(GroupSpec& spec);

// ℂ[G]
HopfAlgebra group_algebra(GroupSpec spec);

// F(G) = dual of ℂ[G]
HopfAlgebra function_algebra(GroupSpec spec);

// Built-in group tables.
GroupSpec cyclic_group(int n);   // ℤ_n
GroupSpec symmetric_group_s3();  // S₃
GroupSpec dihedral_group_d4();   // D₄ (order 8)

// Zoo lookup: "Z2", "Z3", "Z4", "S3", "D4" and their duals "FZ2" … "FD4".
// Throws ParseError for unknown names.
HopfAlgebra zoo_algebra(const std::string& name);

// All zoo names, group algebras first.
std::vector<std::string> zoo_names();

}  // namespace hopfstate
