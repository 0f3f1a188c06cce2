#pragma once

/*
 * Cluster graphs: bipartite graphs with oriented edges and a global edge
 * ordering.  Vertices carry a parity (odd/even); every edge joins an odd and
 * an even vertex and is directed.  The gate attached to an edge is
 * C X→ when the edge leaves its odd endpoint (odd→even) and C X← when it
 * enters it (even→odd); in both cases the odd endpoint is the control.
 *
 * A cluster lattice is the special case where every even vertex has exactly
 * one incoming and one outgoing edge.  The 1D chain builders use the site
 * layout odd, even, odd, even, … with all edges directed left-to-right; for
 * periodic chains the wrap-around edge is placed first in the global order so
 * that every odd vertex sees its left (C X←) edge before its right (C X→)
 * edge, making the per-vertex gate blocks W_v = C X→ ∘ C X← well defined.
 */

#include <string>
#include <vector>

#include "hopfstate/errors.hpp"

namespace hopfstate {

struct GraphEdge {
    int from = 0;  // source vertex (global id)
    int to = 0;    // target vertex (global id)
};

struct ClusterGraph {
    std::vector<bool> odd;         // parity per vertex id
    std::vector<GraphEdge> edges;  // in global order e_1 … e_|E|
    bool lattice = false;

    // Per-vertex incident edge indices, in global-order sequence (the induced
    // local ordering).
    std::vector<std::vector<int>> local_order;

    // Vertices with no incident edge (reported, not rejected).
    std::vector<int> isolated;

    int num_vertices() const { return static_cast<int>(odd.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    // Odd endpoint (the control) of edge e.
    int odd_endpoint(int e) const {
        return odd[edges[e].from] ? edges[e].from : edges[e].to;
    }
    int even_endpoint(int e) const {
        return odd[edges[e].from] ? edges[e].to : edges[e].from;
    }
    // True when edge e leaves its odd endpoint (gate C X→).
    bool odd_to_even(int e) const { return odd[edges[e].from]; }
};

// Validate parity/edges and derive local orderings and the isolated-vertex
// list.  Throws NotBipartite if any edge joins same-parity vertices; if
// `lattice` is set, checks that every even vertex has in-degree 1 and
// out-degree 1.
ClusterGraph build_cluster_graph(std::vector<bool> odd,
                                 std::vector<GraphEdge> edges,
                                 bool lattice = false);

// 1D chain with L odd vertices.  Periodic: 2L vertices (odd at 0, 2, …),
// edges i→i+1 plus the wrap edge 2L−1→0 placed first in the global order;
// requires L ≥ 2.  Open: 2L−1 vertices with both endpoints odd, edges
// left-to-right in natural order.
ClusterGraph build_1d_lattice(int L, bool periodic);

}  // namespace hopfstate
