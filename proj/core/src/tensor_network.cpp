#include "hopfstate/tensor_network.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hopfstate/qudit_ops.hpp"

namespace hopfstate {

StructureTensors structure_tensors(const HopfAlgebra& A) {
    StructureTensors t;
    t.dim = A.dim;
    t.mul = A.mul;
    t.comul = A.comul;
    t.antipode = A.antipode;
    t.counit = A.counit;
    t.unit = Vec::Zero(A.dim);
    t.unit(0) = 1.0;
    return t;
}

namespace {

// Treat a TensorNode's data as a StateVector so the axis machinery applies.
StateVector as_state(const TensorNode& n) {
    StateVector s;
    s.dims = n.dims;
    s.amps = n.data;
    return s;
}

// For element-valued legs (odd tensors): leg holds coefficients, so applying
// the antipode to the element means contracting with Sᵀ.
Mat antipode_on_coefficients(const HopfAlgebra& A) {
    return A.antipode.transpose();
}

}  // namespace

TensorNode vertex_tensor(const HopfAlgebra& A, const ClusterGraph& K, int v,
                         bool antipode_on_odd, bool normalized) {
    if (v < 0 || v >= K.num_vertices()) throw UnknownVertex("vertex out of range");
    const int d = A.dim;
    const auto& incident = K.local_order[v];
    const int deg = static_cast<int>(incident.size());

    TensorNode node;
    node.dims.assign(deg + 1, d);

    if (K.odd[v]) {
        node.kind = "odd";
        const SweedlerExpansion sw = comultiply_n(A, A.haar_integral(), deg + 1);
        node.data = sw.tensor;
        StateVector s = as_state(node);
        if (antipode_on_odd) {
            for (int k = 0; k < deg; ++k)
                if (!K.odd_to_even(incident[k]))  // C X← edge → antipode
                    s = apply_site_matrix(s, k, antipode_on_coefficients(A));
        }
        if (normalized) {
            const double scale = std::sqrt(static_cast<double>(d));
            for (cplx& a : s.amps) a *= scale;
        }
        node.data = std::move(s.amps);
        return node;
    }

    node.kind = "even";
    // Multiplication order: incoming bonds in reverse local order, then
    // outgoing bonds in local order.
    std::vector<int> in_slots, out_slots;
    for (int k = 0; k < deg; ++k)
        (K.odd_to_even(incident[k]) ? in_slots : out_slots).push_back(k);
    std::reverse(in_slots.begin(), in_slots.end());
    std::vector<int> order = in_slots;
    order.insert(order.end(), out_slots.begin(), out_slots.end());

    std::size_t n = 1;
    for (int k = 0; k < deg; ++k) n *= static_cast<std::size_t>(d);
    node.data.assign(n * d, cplx(0));
    std::vector<int> idx(deg, 0);
    for (std::size_t f = 0; f < n; ++f) {
        AlgebraElement prod = unit_element(A);
        for (int slot : order)
            prod = multiply(A, prod, basis_element(A, idx[slot]));
        for (int p = 0; p < d; ++p) node.data[f * d + p] = prod.coeffs(p);
        int q = deg - 1;
        while (q >= 0 && ++idx[q] == d) idx[q--] = 0;
    }

    if (!antipode_on_odd) {
        // Even-side encoding: contract S into the outgoing legs (input slots
        // of the multiplication receive S(x) instead of x).
        StateVector s = as_state(node);
        for (int k = 0; k < deg; ++k)
            if (!K.odd_to_even(incident[k]))
                s = apply_site_matrix(s, k, A.antipode);
        node.data = std::move(s.amps);
    }
    return node;
}

TensorNetwork cluster_network(const HopfAlgebra& A, const ClusterGraph& K,
                              bool antipode_on_odd, bool normalized) {
    TensorNetwork net;
    for (int v = 0; v < K.num_vertices(); ++v) {
        net.nodes.push_back(vertex_tensor(A, K, v, antipode_on_odd, normalized));
        net.dangling.emplace_back(v, static_cast<int>(K.local_order[v].size()));
    }
    for (int e = 0; e < K.num_edges(); ++e) {
        const int vo = K.odd_endpoint(e);
        const int ve = K.even_endpoint(e);
        const auto slot = [&](int v) {
            const auto& loc = K.local_order[v];
            // A vertex can be incident to an edge only once here (simple
            // bipartite edges), so find() is unambiguous.
            return static_cast<int>(
                std::find(loc.begin(), loc.end(), e) - loc.begin());
        };
        net.bonds.push_back({vo, slot(vo), ve, slot(ve)});
    }
    return net;
}

// ── Contraction engine ───────────────────────────────────────────────────────

namespace {

struct WorkTensor {
    std::vector<long> ids;  // global leg ids (duplicates = self-trace)
    std::vector<int> dims;
    std::vector<cplx> data;

    std::size_t size() const { return data.size(); }
};

// Generic transpose of a flat row-major tensor: new leg p = old leg order[p].
WorkTensor permute_work(const WorkTensor& t, const std::vector<int>& order) {
    const int n = static_cast<int>(t.dims.size());
    WorkTensor out;
    out.ids.resize(n);
    out.dims.resize(n);
    for (int p = 0; p < n; ++p) {
        out.ids[p] = t.ids[order[p]];
        out.dims[p] = t.dims[order[p]];
    }
    out.data.assign(t.data.size(), cplx(0));

    std::vector<std::size_t> old_strides(n, 1), new_strides(n, 1);
    for (int k = n - 2; k >= 0; --k)
        old_strides[k] = old_strides[k + 1] * t.dims[k + 1];
    for (int k = n - 2; k >= 0; --k)
        new_strides[k] = new_strides[k + 1] * out.dims[k + 1];

    std::vector<int> idx(n, 0);
    for (std::size_t f = 0; f < t.data.size(); ++f) {
        std::size_t nf = 0;
        for (int p = 0; p < n; ++p) nf += idx[order[p]] * new_strides[p];
        out.data[nf] = t.data[f];
        int k = n - 1;
        while (k >= 0 && ++idx[k] == t.dims[k]) idx[k--] = 0;
    }
    return out;
}

// Contract all duplicate leg ids within one tensor.
WorkTensor self_trace(WorkTensor t) {
    for (;;) {
        int a = -1, b = -1;
        const int n = static_cast<int>(t.ids.size());
        for (int i = 0; i < n && a < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t.ids[i] == t.ids[j]) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0) return t;

        // Move legs a, b to the end, then sum the diagonal.
        std::vector<int> order;
        for (int k = 0; k < n; ++k)
            if (k != a && k != b) order.push_back(k);
        order.push_back(a);
        order.push_back(b);
        WorkTensor p = permute_work(t, order);

        const int d = p.dims[n - 1];
        WorkTensor out;
        out.ids.assign(p.ids.begin(), p.ids.end() - 2);
        out.dims.assign(p.dims.begin(), p.dims.end() - 2);
        std::size_t rest = 1;
        for (int dsz : out.dims) rest *= static_cast<std::size_t>(dsz);
        out.data.assign(rest, cplx(0));
        for (std::size_t r = 0; r < rest; ++r) {
            cplx s = 0;
            const std::size_t base = r * static_cast<std::size_t>(d) * d;
            for (int k = 0; k < d; ++k)
                s += p.data[base + static_cast<std::size_t>(k) * d + k];
            out.data[r] = s;
        }
        t = std::move(out);
    }
}

// Contract two tensors over all shared leg ids (outer product if none).
WorkTensor contract_pair(const WorkTensor& t1, const WorkTensor& t2,
                         std::size_t budget) {
    std::vector<long> shared;
    for (long id : t1.ids)
        if (std::find(t2.ids.begin(), t2.ids.end(), id) != t2.ids.end())
            shared.push_back(id);

    const auto split = [&](const WorkTensor& t, bool shared_first) {
        std::vector<int> order;
        if (shared_first)
            for (long id : shared)
                order.push_back(static_cast<int>(
                    std::find(t.ids.begin(), t.ids.end(), id) - t.ids.begin()));
        for (int k = 0; k < static_cast<int>(t.ids.size()); ++k)
            if (std::find(shared.begin(), shared.end(), t.ids[k]) == shared.end())
                order.push_back(k);
        if (!shared_first)
            for (long id : shared)
                order.push_back(static_cast<int>(
                    std::find(t.ids.begin(), t.ids.end(), id) - t.ids.begin()));
        return permute_work(t, order);
    };

    const WorkTensor p1 = split(t1, /*shared_first=*/false);  // (free1, shared)
    const WorkTensor p2 = split(t2, /*shared_first=*/true);   // (shared, free2)

    std::size_t sh = 1;
    for (std::size_t k = 0; k < shared.size(); ++k)
        sh *= static_cast<std::size_t>(p2.dims[k]);
    const std::size_t free1 = p1.size() / std::max<std::size_t>(sh, 1);
    const std::size_t free2 = p2.size() / std::max<std::size_t>(sh, 1);
    if (free1 * free2 > budget)
        throw ContractionBudgetExceeded(free1 * free2, budget);

    WorkTensor out;
    out.ids.assign(p1.ids.begin(), p1.ids.end() - shared.size());
    out.dims.assign(p1.dims.begin(), p1.dims.end() - shared.size());
    out.ids.insert(out.ids.end(), p2.ids.begin() + shared.size(), p2.ids.end());
    out.dims.insert(out.dims.end(), p2.dims.begin() + shared.size(),
                    p2.dims.end());
    out.data.resize(free1 * free2);

    using CMat =
        Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>;
    using MMat = Eigen::Map<
        Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
    CMat m1(p1.data.data(), static_cast<Eigen::Index>(free1),
            static_cast<Eigen::Index>(sh));
    CMat m2(p2.data.data(), static_cast<Eigen::Index>(sh),
            static_cast<Eigen::Index>(free2));
    MMat mo(out.data.data(), static_cast<Eigen::Index>(free1),
            static_cast<Eigen::Index>(free2));
    mo = m1 * m2;
    return out;
}

}  // namespace

StateVector contract(const TensorNetwork& net, std::size_t budget) {
    // Assign global leg ids: bonds share an id, dangling legs get their own.
    std::vector<std::vector<long>> ids(net.nodes.size());
    for (std::size_t n = 0; n < net.nodes.size(); ++n)
        ids[n].assign(net.nodes[n].dims.size(), -1);

    long next = 0;
    for (const TensorBond& b : net.bonds) {
        if (ids.at(b.node_a).at(b.leg_a) != -1 ||
            ids.at(b.node_b).at(b.leg_b) != -1)
            throw InvalidSize("leg used by more than one bond");
        ids[b.node_a][b.leg_a] = next;
        ids[b.node_b][b.leg_b] = next;
        ++next;
    }
    std::vector<long> dangling_ids;
    for (const auto& [n, l] : net.dangling) {
        if (ids.at(n).at(l) != -1)
            throw InvalidSize("dangling leg is bonded");
        ids[n][l] = next;
        dangling_ids.push_back(next);
        ++next;
    }
    for (std::size_t n = 0; n < net.nodes.size(); ++n)
        for (long id : ids[n])
            if (id == -1) throw InvalidSize("unassigned tensor leg");

    std::vector<WorkTensor> work;
    for (std::size_t n = 0; n < net.nodes.size(); ++n) {
        WorkTensor t;
        t.ids = ids[n];
        t.dims = net.nodes[n].dims;
        t.data = net.nodes[n].data;
        work.push_back(self_trace(std::move(t)));
    }
    if (work.empty()) throw InvalidSize("empty tensor network");

    // Greedy: contract the pair with the smallest resulting tensor.
    while (work.size() > 1) {
        std::size_t best_i = 0, best_j = 1, best_size = SIZE_MAX;
        for (std::size_t i = 0; i < work.size(); ++i)
            for (std::size_t j = i + 1; j < work.size(); ++j) {
                std::size_t result = 1;
                for (std::size_t k = 0; k < work[i].ids.size(); ++k)
                    if (std::find(work[j].ids.begin(), work[j].ids.end(),
                                  work[i].ids[k]) == work[j].ids.end())
                        result *= static_cast<std::size_t>(work[i].dims[k]);
                for (std::size_t k = 0; k < work[j].ids.size(); ++k)
                    if (std::find(work[i].ids.begin(), work[i].ids.end(),
                                  work[j].ids[k]) == work[i].ids.end())
                        result *= static_cast<std::size_t>(work[j].dims[k]);
                if (result < best_size) {
                    best_size = result;
                    best_i = i;
                    best_j = j;
                }
            }
        WorkTensor merged =
            self_trace(contract_pair(work[best_i], work[best_j], budget));
        work.erase(work.begin() + best_j);
        work[best_i] = std::move(merged);
    }

    // Reorder to the dangling order.
    WorkTensor& t = work[0];
    if (t.ids.size() != dangling_ids.size())
        throw InvalidSize("contraction left unexpected legs");
    std::vector<int> order;
    for (long id : dangling_ids)
        order.push_back(static_cast<int>(
            std::find(t.ids.begin(), t.ids.end(), id) - t.ids.begin()));
    const WorkTensor fin = permute_work(t, order);

    StateVector out;
    out.dims = fin.dims;
    out.amps = fin.data;
    return out;
}

// ── Rewrite rules ────────────────────────────────────────────────────────────

namespace {

// 1D interior odd tensor S(λ⁽¹⁾)⊗λ⁽²⁾⊗λ⁽³⁾ as (left, right, physical).
StateVector odd_tensor_1d(const HopfAlgebra& A) {
    StateVector s;
    s.dims = {A.dim, A.dim, A.dim};
    s.amps = comultiply_n(A, A.haar_integral(), 3).tensor;
    return apply_site_matrix(s, 0, antipode_on_coefficients(A));
}

// 1D even tensor T[x, y, p] = A_xy^p as (left, right, physical).
StateVector even_tensor_1d(const HopfAlgebra& A) {
    StateVector s;
    s.dims = {A.dim, A.dim, A.dim};
    s.amps = A.mul;
    return s;
}

// Σ_{Δ(x)} apply x_matrix(k0, x⁽¹⁾) on leg0 and x_matrix(k1, x⁽²⁾) on leg1.
StateVector sweedler_pair_X(const HopfAlgebra& A, const AlgebraElement& x,
                            const StateVector& T, XKind k0, int leg0, XKind k1,
                            int leg1) {
    StateVector acc;
    acc.dims = T.dims;
    acc.amps.assign(T.amps.size(), cplx(0));
    const SweedlerExpansion sw = comultiply_n(A, x, 2);
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
            const cplx w = sw.tensor[static_cast<std::size_t>(a) * A.dim + b];
            if (w == cplx{}) continue;
            StateVector t =
                apply_X(A, k0, basis_element(A, a), T, leg0);
            t = apply_X(A, k1, basis_element(A, b), t, leg1);
            for (std::size_t f = 0; f < acc.amps.size(); ++f)
                acc.amps[f] += w * t.amps[f];
        }
    return acc;
}

double sv_distance(const StateVector& a, const StateVector& b) {
    return state_distance(a, b);
}

/*
 * The even tensor's virtual legs are argument slots (the tensor is a
 * multilinear map of the bond elements), so acting on the element that feeds
 * such a leg contracts the transposed operator into the leg.
 */
StateVector apply_X_input(const HopfAlgebra& A, XKind kind,
                          const AlgebraElement& g, const StateVector& T,
                          int leg) {
    return apply_site_matrix(T, leg, x_matrix(A, kind, g).transpose());
}

StateVector apply_Z_input(const HopfAlgebra& A, ZKind kind,
                          const Representation& R, const StateVector& T,
                          int leg) {
    const int d = T.dims.at(leg);
    const int r = R.dim;
    const Mat zk = z_kernel(A, kind, R);
    // K'[(x,i,j), b] = zk[(b,i,j), x]: transpose the Hopf index only.
    Mat kt = Mat::Zero(zk.rows(), zk.cols());
    for (int x = 0; x < d; ++x)
        for (int b = 0; b < d; ++b)
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    kt((static_cast<Eigen::Index>(x) * r + i) * r + j, b) =
                        zk((static_cast<Eigen::Index>(b) * r + i) * r + j, x);
    StateVector out = apply_kernel(T, {leg}, kt, {d * r * r});
    out = split_axis(out, leg, {d, r, r});
    const int n = out.num_sites();
    std::vector<int> perm;
    for (int a = 0; a < n; ++a)
        if (a != leg + 1 && a != leg + 2) perm.push_back(a);
    perm.push_back(leg + 1);
    perm.push_back(leg + 2);
    return permute_axes(out, perm);
}

// Apply Z-type kernels to two legs and chain their rep legs:
// first legA (appends i,k), then legB (appends k',j), trace k–k'.
StateVector chain_Z(const HopfAlgebra& A, ZKind kind, const Representation& R,
                    const StateVector& T, int legA, int legB) {
    StateVector t = apply_Z_input(A, kind, R, T, legA);
    t = apply_Z_input(A, kind, R, t, legB);
    // axes: original…, iA, jA, iB, jB → contract jA with iB
    const int n = t.num_sites();
    return trace_axes(t, n - 3, n - 2);
}

}  // namespace

Report verify_rewrite_rules(const HopfAlgebra& A,
                            const std::vector<Representation>& irreps,
                            std::uint64_t seed) {
    Report rep;
    rep.title = "rewrite_rules";
    rep.meta("algebra", A.name);
    rep.meta("seed", std::to_string(seed));

    const StateVector Todd = odd_tensor_1d(A);
    const StateVector Teven = even_tensor_1d(A);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgebraElement x;
    x.coeffs = Vec::Zero(A.dim);
    for (int a = 0; a < A.dim; ++a) x.coeffs(a) = cplx(gauss(rng), gauss(rng));

    // X-type moves through the odd tensor.
    rep.check("X_bwd_odd",
              sv_distance(apply_X(A, XKind::Bwd, x, Todd, 2),
                          sweedler_pair_X(A, x, Todd, XKind::TildeFwd, 0,
                                          XKind::TildeBwd, 1)));
    rep.check("X_fwd_odd",
              sv_distance(apply_X(A, XKind::Fwd, x, Todd, 2),
                          sweedler_pair_X(A, x, Todd, XKind::TildeFwd, 1,
                                          XKind::TildeBwd, 0)));

    // X-type pass-through on the even tensor (virtual legs are argument
    // slots, so the operator contracts transposed there).
    rep.check("X_fwd_even",
              sv_distance(apply_X(A, XKind::Fwd, x, Teven, 2),
                          apply_X_input(A, XKind::Fwd, x, Teven, 0)));
    rep.check("X_bwd_even",
              sv_distance(apply_X(A, XKind::Bwd, x, Teven, 2),
                          apply_X_input(A, XKind::Bwd, x, Teven, 1)));

    for (const Representation& R : irreps) {
        const std::string tag = "_" + R.label;
        // Z splits over the even tensor (chained rep legs).
        rep.check("Z_even" + tag,
                  sv_distance(apply_Z(A, ZKind::Z, R, Teven, 2),
                              chain_Z(A, ZKind::Z, R, Teven, 0, 1)));
        rep.check("Zdag_even" + tag,
                  sv_distance(apply_Z(A, ZKind::ZDag, R, Teven, 2),
                              chain_Z(A, ZKind::ZDag, R, Teven, 1, 0)));
        // Z moves between physical and virtual legs of the odd tensor.
        rep.check("Z_odd" + tag,
                  sv_distance(apply_Z(A, ZKind::Z, R, Todd, 2),
                              apply_Z(A, ZKind::ZTildeDag, R, Todd, 0)));
        rep.check("Zdag_odd" + tag,
                  sv_distance(apply_Z(A, ZKind::ZDag, R, Todd, 2),
                              apply_Z(A, ZKind::ZTildeDag, R, Todd, 1)));
        // Virtual-leg exchange identities.
        rep.check("Zdag_left_vs_Ztilde_right" + tag,
                  sv_distance(apply_Z(A, ZKind::ZDag, R, Todd, 0),
                              apply_Z(A, ZKind::ZTilde, R, Todd, 1)));
        rep.check("Ztilde_left_vs_Zdag_right" + tag,
                  sv_distance(apply_Z(A, ZKind::ZTilde, R, Todd, 0),
                              apply_Z(A, ZKind::ZDag, R, Todd, 1)));
    }
    return rep;
}

}  // namespace hopfstate
