#pragma once

/*
 * Hopf tensor networks.  Nodes are dense tensors built from the algebra's
 * structure constants:
 *
 *   odd vertex (degree n):  Δ_{n+1}(λ) with Sweedler components assigned to
 *     the virtual legs in local edge order and the last component on the
 *     physical leg; the antipode is applied on virtual legs whose edge points
 *     into the odd vertex (the C X← edges).  In 1D this is
 *     S(λ⁽¹⁾) ⊗ λ⁽²⁾ ⊗ λ⁽³⁾  (left, right, physical).
 *
 *   even vertex (degree n): the n-ary multiplication tensor; bond values are
 *     multiplied with the incoming bonds in reverse local order followed by
 *     the outgoing bonds in local order.  In 1D: (left)·(right).
 *
 * The antipode can alternatively be encoded on the even side (plain Δ on odd
 * tensors, S contracted into the even tensor's outgoing legs); both encodings
 * contract to the same state.
 *
 * Contraction is exact: self-traces first, then greedy pairwise contraction
 * minimizing the intermediate tensor size.  Representation legs are ordinary
 * bonds of dimension d_Γ.
 */

#include "hopfstate/cluster_graph.hpp"
#include "hopfstate/report.hpp"
#include "hopfstate/rep_theory.hpp"
#include "hopfstate/state_vector.hpp"

namespace hopfstate {

// Structure-constant tensors sliced from the algebra (for the diagrammatic
// axiom checks): mul[a,b,c] = A_ab^c, comul[a,b,c] = C_a^{bc}, antipode,
// counit, and the unit vector η_a = δ_{a0}.
struct StructureTensors {
    int dim = 0;
    std::vector<cplx> mul;    // [(a·d + b)·d + c]
    std::vector<cplx> comul;  // [(a·d + b)·d + c]
    Mat antipode;
    Vec counit;
    Vec unit;
};

StructureTensors structure_tensors(const HopfAlgebra& A);

struct TensorNode {
    std::string kind;       // "odd", "even", … (informational)
    std::vector<int> dims;  // leg dimensions
    std::vector<cplx> data; // row-major over legs
};

struct TensorBond {
    int node_a = 0, leg_a = 0;
    int node_b = 0, leg_b = 0;  // node_a == node_b encodes a self-trace
};

struct TensorNetwork {
    std::vector<TensorNode> nodes;
    std::vector<TensorBond> bonds;
    std::vector<std::pair<int, int>> dangling;  // (node, leg), site order
};

// Local tensor of one graph vertex; virtual legs in local edge order,
// physical leg last.  `normalized` scales odd tensors by √|𝒜| (the |𝟙⟩
// convention); `antipode_on_odd` selects the encoding side.
TensorNode vertex_tensor(const HopfAlgebra& A, const ClusterGraph& K, int v,
                         bool antipode_on_odd = true, bool normalized = true);

// Full network for a cluster graph: one node per vertex, one bond per edge,
// physical legs dangling in vertex order.
TensorNetwork cluster_network(const HopfAlgebra& A, const ClusterGraph& K,
                              bool antipode_on_odd = true,
                              bool normalized = true);

// Exact contraction to a state vector over the dangling legs.
StateVector contract(const TensorNetwork& net,
                     std::size_t budget = default_amp_budget());

// Local rewrite identities on the 1D odd/even tensors: X-type moves through
// both tensors, Z-type moves between physical and virtual legs, and the
// virtual-leg exchange identities; residuals per rule.
Report verify_rewrite_rules(const HopfAlgebra& A,
                            const std::vector<Representation>& irreps,
                            std::uint64_t seed = 1);

}  // namespace hopfstate
