#include "hopfstate/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hopfstate/errors.hpp"

namespace hopfstate {

namespace {

// Flat row-major index from per-position digits and dims.
std::size_t flat_index(const std::vector<int>& digits, const std::vector<int>& dims) {
    std::size_t f = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
        f = f * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(digits[i]);
    return f;
}

void check_symmetric_theta(const QuditHyperedge& e, const std::vector<int>& dims) {
    const int k = static_cast<int>(e.vertices.size());
    std::vector<int> edims(k);
    for (int i = 0; i < k; ++i) edims[i] = dims[e.vertices[i]];
    for (int i = 1; i < k; ++i)
        if (edims[i] != edims[0])
            throw AsymmetricFunctional(
                "undirected hyperedge joins vertices of unequal dimension");

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> idx(k, 0), pidx(k);
    do {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (int i = 0; i < k; ++i) pidx[i] = idx[perm[i]];
            const double a = e.theta[flat_index(idx, edims)];
            const double b = e.theta[flat_index(pidx, edims)];
            if (std::abs(a - b) > 1e-12)
                throw AsymmetricFunctional(
                    "undirected hyperedge has an asymmetric phase table");
            int p = k - 1;
            while (p >= 0 && ++idx[p] == edims[p]) idx[p--] = 0;
            if (p < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

StateVector hypergraph_state_qudit(const std::vector<int>& dims,
                                   const std::vector<Mat>& local_gates,
                                   const std::vector<QuditHyperedge>& edges,
                                   std::size_t budget) {
    const int nv = static_cast<int>(dims.size());
    if (static_cast<int>(local_gates.size()) != nv)
        throw DimensionMismatch("one local gate per vertex required");

    StateVector psi = basis_state(dims, std::vector<int>(nv, 0), budget);
    for (int v = 0; v < nv; ++v) psi = apply_site_matrix(psi, v, local_gates[v]);

    for (const QuditHyperedge& e : edges) {
        const int k = static_cast<int>(e.vertices.size());
        if (k == 0) throw ArityMismatch("empty hyperedge");
        std::vector<int> edims(k);
        std::size_t tbl = 1;
        for (int i = 0; i < k; ++i) {
            const int v = e.vertices[i];
            if (v < 0 || v >= nv) throw UnknownVertex("hyperedge vertex out of range");
            edims[i] = dims[v];
            tbl *= static_cast<std::size_t>(dims[v]);
        }
        if (e.theta.size() != tbl)
            throw ArityMismatch("phase table size does not match hyperedge dims");
        if (!e.directed) check_symmetric_theta(e, dims);

        // Diagonal phase: walk all amplitudes once per edge.
        std::vector<std::size_t> strides(nv);
        std::size_t st = 1;
        for (int v = nv - 1; v >= 0; --v) {
            strides[v] = st;
            st *= static_cast<std::size_t>(dims[v]);
        }
        std::vector<int> eidx(k);
        for (std::size_t a = 0; a < psi.size(); ++a) {
            for (int i = 0; i < k; ++i)
                eidx[i] = static_cast<int>(a / strides[e.vertices[i]]) %
                          dims[e.vertices[i]];
            const double th = e.theta[flat_index(eidx, edims)] * e.multiplicity;
            psi.amps[a] *= std::polar(1.0, th);
        }
    }
    return psi;
}

std::vector<cplx> functional_from_dual(const HopfAlgebra& A,
                                       const DualElement& phi, int arity) {
    if (arity < 1) throw ArityMismatch("functional arity must be positive");
    const int d = A.dim;
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(d);
    std::vector<cplx> table(n);
    std::vector<int> idx(arity, 0);
    const std::vector<int> dims(arity, d);
    for (std::size_t f = 0; f < n; ++f) {
        AlgebraElement x = basis_element(A, idx[0]);
        for (int i = 1; i < arity; ++i)
            x = multiply(A, x, basis_element(A, idx[i]));
        table[flat_index(idx, dims)] = pair(phi, x);
        int p = arity - 1;
        while (p >= 0 && ++idx[p] == d) idx[p--] = 0;
    }
    return table;
}

StateVector hypergraph_state_hopf(
    const HopfAlgebra& A, const std::vector<AlgebraElement>& vertex_states,
    const std::vector<std::vector<int>>& vertex_local_order,
    const std::vector<HopfHyperedge>& edges, std::size_t budget) {
    const int d = A.dim;
    const int nv = static_cast<int>(vertex_states.size());
    if (static_cast<int>(vertex_local_order.size()) != nv)
        throw DimensionMismatch("one local ordering per vertex required");

    // Validate edges and collect (edge, argument-position) legs.
    struct Leg {
        int edge, pos;
    };
    std::vector<Leg> legs;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const int k = static_cast<int>(edges[e].vertices.size());
        if (k == 0) throw ArityMismatch("empty hyperedge");
        std::size_t want = 1;
        for (int i = 0; i < k; ++i) want *= static_cast<std::size_t>(d);
        if (edges[e].psi.size() != want)
            throw ArityMismatch("functional table size does not match arity");
        for (int p = 0; p < k; ++p) {
            const int v = edges[e].vertices[p];
            if (v < 0 || v >= nv) throw UnknownVertex("hyperedge vertex out of range");
            legs.push_back({e, p});
        }
    }

    // Validate local orderings: each lists −1 once and every incidence once.
    for (int v = 0; v < nv; ++v) {
        std::vector<int> want;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            for (int u : edges[e].vertices)
                if (u == v) want.push_back(e);
        std::vector<int> have;
        int phys = 0;
        for (int s : vertex_local_order[v]) {
            if (s == -1)
                ++phys;
            else
                have.push_back(s);
        }
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        if (phys != 1 || have != want)
            throw ArityMismatch(
                "vertex local ordering must list the physical slot once and "
                "each incidence exactly once");
    }

    // Sweedler tensors Δ_{deg+1}(h_v).
    std::vector<SweedlerExpansion> sw(nv);
    for (int v = 0; v < nv; ++v)
        sw[v] = comultiply_n(A, vertex_states[v],
                             static_cast<int>(vertex_local_order[v].size()));

    // For each vertex slot, precompute which global leg feeds it (−1 = physical).
    // The i-th occurrence of edge e at vertex v pairs with the i-th occurrence
    // of v in e.vertices.
    std::vector<std::vector<int>> slot_leg(nv);
    for (int v = 0; v < nv; ++v) {
        std::vector<int> seen(edges.size(), 0);
        for (int s : vertex_local_order[v]) {
            if (s == -1) {
                slot_leg[v].push_back(-1);
                continue;
            }
            int occ = seen[s]++, hit = 0, found = -1;
            for (int l = 0; l < static_cast<int>(legs.size()); ++l)
                if (legs[l].edge == s && edges[s].vertices[legs[l].pos] == v &&
                    hit++ == occ) {
                    found = l;
                    break;
                }
            slot_leg[v].push_back(found);
        }
    }

    StateVector out;
    out.dims.assign(nv, d);
    out.amps.assign(checked_size(out.dims, budget), cplx(0));

    // Enumerate edge-leg assignments; each contributes a rank-nv product tensor.
    const std::size_t nlegs = legs.size();
    std::vector<int> assign(nlegs, 0);
    std::vector<std::vector<int>> vidx(nv);
    for (int v = 0; v < nv; ++v) vidx[v].resize(vertex_local_order[v].size());
    std::vector<Vec> slice(nv, Vec(d));
    while (true) {
        cplx w = 1.0;
        {
            std::size_t l = 0;
            for (const HopfHyperedge& e : edges) {
                std::size_t f = 0;
                for (std::size_t p = 0; p < e.vertices.size(); ++p)
                    f = f * d + static_cast<std::size_t>(assign[l++]);
                w *= e.psi[f];
                if (w == cplx{}) break;
            }
        }
        if (w != cplx{}) {
            for (int v = 0; v < nv; ++v) {
                int free_slot = -1;
                for (std::size_t s = 0; s < slot_leg[v].size(); ++s) {
                    if (slot_leg[v][s] == -1)
                        free_slot = static_cast<int>(s);
                    else
                        vidx[v][s] = assign[slot_leg[v][s]];
                }
                for (int b = 0; b < d; ++b) {
                    vidx[v][free_slot] = b;
                    slice[v](b) = sw[v].at(vidx[v]);
                }
            }
            // out += w · ⊗_v slice[v]
            std::vector<int> bidx(nv, 0);
            for (std::size_t a = 0; a < out.amps.size(); ++a) {
                cplx t = w;
                for (int v = 0; v < nv; ++v) t *= slice[v](bidx[v]);
                out.amps[a] += t;
                int p = nv - 1;
                while (p >= 0 && ++bidx[p] == d) bidx[p--] = 0;
            }
        }
        int p = static_cast<int>(nlegs) - 1;
        while (p >= 0 && ++assign[p] == d) assign[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

}  // namespace hopfstate
