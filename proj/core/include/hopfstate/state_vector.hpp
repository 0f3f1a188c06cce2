#pragma once

/*
 * Dense multi-qudit state vectors and site-local operator application.
 *
 * A StateVector is a complex amplitude array over an ordered list of site
 * dimensions (row-major: site 0 is the slowest index).  Operators are never
 * materialized on the full Hilbert space; application gathers the targeted
 * axes, applies the kernel matrix, and scatters back.  States are not
 * auto-normalized.
 *
 * The amplitude budget (default 2^26 amplitudes, overridable through the
 * HOPFSTATE_BUDGET environment variable or per call) bounds every allocation;
 * exceeding it throws MemoryBudgetExceeded instead of swapping.
 */

#include <cstdint>
#include <vector>

#include "hopfstate/hopf_algebra.hpp"

namespace hopfstate {

struct StateVector {
    std::vector<int> dims;
    std::vector<cplx> amps;

    int num_sites() const { return static_cast<int>(dims.size()); }
    std::size_t size() const { return amps.size(); }
};

// Default amplitude budget: HOPFSTATE_BUDGET env var if set, else 2^26.
std::size_t default_amp_budget();

// Product of dims with budget enforcement.
std::size_t checked_size(const std::vector<int>& dims, std::size_t budget);

// ⊗_s factors[s], one vector per site.
StateVector product_state(const std::vector<Vec>& factors,
                          std::size_t budget = default_amp_budget());

// Computational basis state |idx_0, idx_1, …⟩.
StateVector basis_state(const std::vector<int>& dims, const std::vector<int>& idx,
                        std::size_t budget = default_amp_budget());

// Seeded standard-complex-Gaussian state (not normalized).
StateVector random_state(const std::vector<int>& dims, std::uint64_t seed,
                         std::size_t budget = default_amp_budget());

// Reorder sites: new site p holds old site perm[p].
StateVector permute_axes(const StateVector& psi, const std::vector<int>& perm);

// Apply kernel M ((Π douts) × (Π dims[sites])) to the listed sites, replacing
// their dimensions by douts.  Kernel row/column index order matches `sites`.
StateVector apply_kernel(const StateVector& psi, const std::vector<int>& sites,
                         const Mat& M, const std::vector<int>& douts,
                         std::size_t budget = default_amp_budget());

// Single-site convenience (square or rectangular kernel).
StateVector apply_site_matrix(const StateVector& psi, int site, const Mat& M);

// Split site `site` (dim must equal Π parts) into consecutive axes.
StateVector split_axis(const StateVector& psi, int site,
                       const std::vector<int>& parts);

// Contract (trace) two equal-dimension axes against each other.
StateVector trace_axes(const StateVector& psi, int axis1, int axis2);

// Euclidean inner product ⟨ψ|φ⟩ (conjugate-linear in ψ).
cplx dot(const StateVector& psi, const StateVector& phi);

// Hopf inner product with one Gram matrix per site: ⟨ψ|φ⟩_G = ψ† (⊗G_s) φ.
// Pass an empty list entry (0×0) to mean the identity on that site.
cplx dot_with_grams(const StateVector& psi, const StateVector& phi,
                    const std::vector<Mat>& site_grams);

// Max-norm distance between amplitude arrays (shapes must match).
double state_distance(const StateVector& a, const StateVector& b);

// Distance after optimally aligning a global phase (insensitive comparison).
double state_distance_phase_insensitive(const StateVector& a,
                                        const StateVector& b);

double state_norm(const StateVector& a);

}  // namespace hopfstate
