#include "hopfstate/cluster_state.hpp"

#include <cmath>

namespace hopfstate {

StateVector preferred_state(const HopfAlgebra& A, const ClusterGraph& K,
                            bool normalized, std::size_t budget) {
    const double scale = normalized ? std::sqrt(static_cast<double>(A.dim)) : 1.0;
    Vec odd_factor = scale * A.haar_integral().coeffs;
    Vec even_factor = Vec::Zero(A.dim);
    even_factor(0) = 1.0;

    std::vector<Vec> factors(K.num_vertices());
    for (int v = 0; v < K.num_vertices(); ++v)
        factors[v] = K.odd[v] ? odd_factor : even_factor;
    return product_state(factors, budget);
}

std::vector<EntanglerGate> entangler_circuit(const ClusterGraph& K) {
    std::vector<EntanglerGate> gates;
    gates.reserve(K.num_edges());
    for (int e = 0; e < K.num_edges(); ++e)
        gates.push_back({K.odd_to_even(e) ? XDirection::Fwd : XDirection::Bwd,
                         K.odd_endpoint(e), K.even_endpoint(e)});
    return gates;
}

StateVector apply_circuit(const HopfAlgebra& A,
                          const std::vector<EntanglerGate>& gates,
                          StateVector psi, bool inverse) {
    if (!inverse) {
        for (const EntanglerGate& g : gates)
            psi = controlled_X(A, g.dir, false, psi, g.control, g.target);
    } else {
        for (auto it = gates.rbegin(); it != gates.rend(); ++it)
            psi = controlled_X(A, it->dir, true, psi, it->control, it->target);
    }
    return psi;
}

StateVector cluster_state(const HopfAlgebra& A, const ClusterGraph& K,
                          bool normalized, std::size_t budget) {
    return apply_circuit(A, entangler_circuit(K),
                         preferred_state(A, K, normalized, budget));
}

StateVector apply_stabilizer(const HopfAlgebra& A, const ClusterGraph& K,
                             int vertex, StabilizerFlavor flavor,
                             const StateVector& psi, const AlgebraElement* g,
                             const Representation* rep) {
    if (vertex < 0 || vertex >= K.num_vertices())
        throw UnknownVertex("stabilizer vertex out of range");
    const bool odd_flavor = (flavor == StabilizerFlavor::T ||
                             flavor == StabilizerFlavor::TFwd ||
                             flavor == StabilizerFlavor::TBwd);
    if (K.odd[vertex] != odd_flavor)
        throw SiteParity("stabilizer flavor does not match vertex parity");

    const auto gates = entangler_circuit(K);
    StateVector s = apply_circuit(A, gates, psi, /*inverse=*/true);
    switch (flavor) {
        case StabilizerFlavor::T: s = apply_site_matrix(s, vertex, pauli_X(A)); break;
        case StabilizerFlavor::TFwd:
            if (!g) throw InvalidSize("TFwd stabilizer requires an algebra element");
            s = apply_X(A, XKind::Fwd, *g, s, vertex);
            break;
        case StabilizerFlavor::TBwd:
            if (!g) throw InvalidSize("TBwd stabilizer requires an algebra element");
            s = apply_X(A, XKind::Bwd, *g, s, vertex);
            break;
        case StabilizerFlavor::Q: s = apply_site_matrix(s, vertex, pauli_Z(A)); break;
        case StabilizerFlavor::QRep:
            if (!rep) throw InvalidSize("QRep stabilizer requires a representation");
            s = apply_J(A, JKind::J, *rep, s, vertex);
            break;
        case StabilizerFlavor::QRepDag:
            if (!rep) throw InvalidSize("QRepDag stabilizer requires a representation");
            s = apply_J(A, JKind::JDag, *rep, s, vertex);
            break;
    }
    return apply_circuit(A, gates, std::move(s), /*inverse=*/false);
}

}  // namespace hopfstate
