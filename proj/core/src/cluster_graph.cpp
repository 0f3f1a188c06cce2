#include "hopfstate/cluster_graph.hpp"

namespace hopfstate {

ClusterGraph build_cluster_graph(std::vector<bool> odd,
                                 std::vector<GraphEdge> edges, bool lattice) {
    ClusterGraph K;
    K.odd = std::move(odd);
    K.edges = std::move(edges);
    K.lattice = lattice;

    const int nv = K.num_vertices();
    std::vector<int> in_deg(nv, 0), out_deg(nv, 0);
    K.local_order.assign(nv, {});
    for (int e = 0; e < K.num_edges(); ++e) {
        const GraphEdge& ed = K.edges[e];
        if (ed.from < 0 || ed.from >= nv || ed.to < 0 || ed.to >= nv)
            throw UnknownVertex("edge endpoint out of range");
        if (K.odd[ed.from] == K.odd[ed.to])
            throw NotBipartite("edge joins two vertices of the same parity");
        ++out_deg[ed.from];
        ++in_deg[ed.to];
        K.local_order[ed.from].push_back(e);
        K.local_order[ed.to].push_back(e);
    }
    for (int v = 0; v < nv; ++v) {
        if (in_deg[v] + out_deg[v] == 0) K.isolated.push_back(v);
        if (lattice && !K.odd[v] && (in_deg[v] != 1 || out_deg[v] != 1))
            throw InvalidSize(
                "cluster lattice requires every even vertex to have one "
                "incoming and one outgoing edge");
    }
    return K;
}

ClusterGraph build_1d_lattice(int L, bool periodic) {
    if (L < 1) throw InvalidSize("chain length must be at least 1");
    if (periodic && L < 2)
        throw InvalidSize("periodic chains require at least two odd vertices");

    const int nv = periodic ? 2 * L : 2 * L - 1;
    std::vector<bool> odd(nv);
    for (int v = 0; v < nv; ++v) odd[v] = (v % 2 == 0);

    std::vector<GraphEdge> edges;
    if (periodic) edges.push_back({nv - 1, 0});  // wrap edge first
    for (int v = 0; v + 1 < nv; ++v) edges.push_back({v, v + 1});

    return build_cluster_graph(std::move(odd), std::move(edges), true);
}

}  // namespace hopfstate
