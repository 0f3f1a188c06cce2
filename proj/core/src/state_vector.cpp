#include "hopfstate/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

namespace hopfstate {

std::size_t default_amp_budget() {
    static const std::size_t budget = [] {
        if (const char* env = std::getenv("HOPFSTATE_BUDGET")) {
            const unsigned long long v = std::strtoull(env, nullptr, 10);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 26;
    }();
    return budget;
}

std::size_t checked_size(const std::vector<int>& dims, std::size_t budget) {
    std::size_t n = 1;
    for (int d : dims) {
        if (d <= 0) throw DimensionMismatch("site dimension must be positive");
        if (n > budget / static_cast<std::size_t>(d))
            throw MemoryBudgetExceeded(n * static_cast<std::size_t>(d), budget);
        n *= static_cast<std::size_t>(d);
    }
    if (n > budget) throw MemoryBudgetExceeded(n, budget);
    return n;
}

StateVector product_state(const std::vector<Vec>& factors, std::size_t budget) {
    StateVector psi;
    for (const Vec& f : factors) psi.dims.push_back(static_cast<int>(f.size()));
    const std::size_t n = checked_size(psi.dims, budget);
    psi.amps.assign(n, cplx(1));
    std::size_t block = n;
    for (std::size_t s = 0; s < factors.size(); ++s) {
        const int d = psi.dims[s];
        block /= static_cast<std::size_t>(d);
        for (std::size_t idx = 0; idx < n; ++idx)
            psi.amps[idx] *= factors[s]((idx / block) % d);
    }
    return psi;
}

StateVector basis_state(const std::vector<int>& dims, const std::vector<int>& idx,
                        std::size_t budget) {
    if (idx.size() != dims.size())
        throw DimensionMismatch("basis_state: index list length != site count");
    StateVector psi;
    psi.dims = dims;
    psi.amps.assign(checked_size(dims, budget), cplx(0));
    std::size_t flat = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (idx[s] < 0 || idx[s] >= dims[s])
            throw DimensionMismatch("basis_state: index out of range");
        flat = flat * static_cast<std::size_t>(dims[s]) + static_cast<std::size_t>(idx[s]);
    }
    psi.amps[flat] = 1.0;
    return psi;
}

StateVector random_state(const std::vector<int>& dims, std::uint64_t seed,
                         std::size_t budget) {
    StateVector psi;
    psi.dims = dims;
    psi.amps.resize(checked_size(dims, budget));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (cplx& a : psi.amps) a = cplx(g(rng), g(rng));
    return psi;
}

static std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
    std::vector<std::size_t> st(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
        st[i] = st[i + 1] * static_cast<std::size_t>(dims[i + 1]);
    return st;
}

StateVector permute_axes(const StateVector& psi, const std::vector<int>& perm) {
    if (perm.size() != psi.dims.size())
        throw DimensionMismatch("permute_axes: perm length != site count");
    StateVector out;
    out.dims.resize(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) out.dims[p] = psi.dims[perm[p]];
    out.amps.resize(psi.amps.size());
    const auto in_st = strides_of(psi.dims);
    const auto out_st = strides_of(out.dims);
    const std::size_t n = psi.amps.size();
    const int rank = static_cast<int>(perm.size());
    std::vector<int> idx(rank, 0);
    for (std::size_t flat = 0; flat < n; ++flat) {
        // idx holds the output multi-index; map to input flat offset.
        std::size_t src = 0;
        for (int p = 0; p < rank; ++p) src += static_cast<std::size_t>(idx[p]) * in_st[perm[p]];
        out.amps[flat] = psi.amps[src];
        for (int p = rank - 1; p >= 0; --p) {
            if (++idx[p] < out.dims[p]) break;
            idx[p] = 0;
        }
    }
    return out;
}

StateVector apply_kernel(const StateVector& psi, const std::vector<int>& sites,
                         const Mat& M, const std::vector<int>& douts,
                         std::size_t budget) {
    const int rank = psi.num_sites();
    const int k = static_cast<int>(sites.size());
    if (douts.size() != sites.size())
        throw DimensionMismatch("apply_kernel: douts length != sites length");
    std::size_t din = 1, dout = 1;
    for (int s : sites) {
        if (s < 0 || s >= rank) throw SiteMismatch("apply_kernel: site out of range");
        din *= static_cast<std::size_t>(psi.dims[s]);
    }
    for (int d : douts) dout *= static_cast<std::size_t>(d);
    if (static_cast<std::size_t>(M.rows()) != dout ||
        static_cast<std::size_t>(M.cols()) != din)
        throw SiteMismatch("apply_kernel: kernel shape mismatch");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sites[i] == sites[j]) throw SiteMismatch("apply_kernel: duplicate site");

    StateVector out;
    out.dims = psi.dims;
    for (int i = 0; i < k; ++i) out.dims[sites[i]] = douts[i];
    out.amps.assign(checked_size(out.dims, budget), cplx(0));

    const auto in_st = strides_of(psi.dims);
    const auto out_st = strides_of(out.dims);

    // Enumerate the untouched ("rest") axes once; gather/scatter the targets.
    std::vector<int> rest_axes;
    for (int a = 0; a < rank; ++a)
        if (std::find(sites.begin(), sites.end(), a) == sites.end())
            rest_axes.push_back(a);
    std::size_t rest_n = 1;
    for (int a : rest_axes) rest_n *= static_cast<std::size_t>(psi.dims[a]);

    // Flat offsets of every input/output target combination.
    std::vector<std::size_t> in_off(din, 0), out_off(dout, 0);
    for (std::size_t c = 0; c < din; ++c) {
        std::size_t rem = c, off = 0;
        for (int i = k - 1; i >= 0; --i) {
            off += (rem % psi.dims[sites[i]]) * in_st[sites[i]];
            rem /= psi.dims[sites[i]];
        }
        in_off[c] = off;
    }
    for (std::size_t r = 0; r < dout; ++r) {
        std::size_t rem = r, off = 0;
        for (int i = k - 1; i >= 0; --i) {
            off += (rem % douts[i]) * out_st[sites[i]];
            rem /= douts[i];
        }
        out_off[r] = off;
    }

    std::vector<int> rest_idx(rest_axes.size(), 0);
    Vec gathered(din);
    for (std::size_t r = 0; r < rest_n; ++r) {
        std::size_t in_base = 0, out_base = 0;
        for (std::size_t a = 0; a < rest_axes.size(); ++a) {
            in_base += static_cast<std::size_t>(rest_idx[a]) * in_st[rest_axes[a]];
            out_base += static_cast<std::size_t>(rest_idx[a]) * out_st[rest_axes[a]];
        }
        for (std::size_t c = 0; c < din; ++c) gathered(c) = psi.amps[in_base + in_off[c]];
        const Vec result = M * gathered;
        for (std::size_t q = 0; q < dout; ++q) out.amps[out_base + out_off[q]] += result(q);
        for (int a = static_cast<int>(rest_axes.size()) - 1; a >= 0; --a) {
            if (++rest_idx[a] < psi.dims[rest_axes[a]]) break;
            rest_idx[a] = 0;
        }
    }
    return out;
}

StateVector apply_site_matrix(const StateVector& psi, int site, const Mat& M) {
    return apply_kernel(psi, {site}, M, {static_cast<int>(M.rows())});
}

StateVector split_axis(const StateVector& psi, int site,
                       const std::vector<int>& parts) {
    std::size_t prod = 1;
    for (int p : parts) prod *= static_cast<std::size_t>(p);
    if (site < 0 || site >= psi.num_sites() ||
        prod != static_cast<std::size_t>(psi.dims[site]))
        throw DimensionMismatch("split_axis: parts do not factor the site dim");
    StateVector out;
    out.dims.reserve(psi.dims.size() + parts.size() - 1);
    for (int a = 0; a < psi.num_sites(); ++a) {
        if (a == site)
            out.dims.insert(out.dims.end(), parts.begin(), parts.end());
        else
            out.dims.push_back(psi.dims[a]);
    }
    out.amps = psi.amps;  // row-major split is a pure reinterpretation
    return out;
}

StateVector trace_axes(const StateVector& psi, int axis1, int axis2) {
    const int rank = psi.num_sites();
    if (axis1 == axis2 || axis1 < 0 || axis2 < 0 || axis1 >= rank || axis2 >= rank)
        throw DimensionMismatch("trace_axes: bad axes");
    if (psi.dims[axis1] != psi.dims[axis2])
        throw DimensionMismatch("trace_axes: axis dims differ");
    const int d = psi.dims[axis1];
    StateVector out;
    for (int a = 0; a < rank; ++a)
        if (a != axis1 && a != axis2) out.dims.push_back(psi.dims[a]);
    if (out.dims.empty()) out.dims.push_back(1);  // scalar carrier
    std::size_t n_out = 1;
    for (int dd : out.dims) n_out *= static_cast<std::size_t>(dd);
    out.amps.assign(n_out, cplx(0));

    const auto in_st = strides_of(psi.dims);
    std::vector<int> rest_axes;
    for (int a = 0; a < rank; ++a)
        if (a != axis1 && a != axis2) rest_axes.push_back(a);
    std::vector<int> rest_idx(rest_axes.size(), 0);
    std::size_t rest_n = 1;
    for (int a : rest_axes) rest_n *= static_cast<std::size_t>(psi.dims[a]);
    for (std::size_t r = 0; r < rest_n; ++r) {
        std::size_t base = 0;
        for (std::size_t a = 0; a < rest_axes.size(); ++a)
            base += static_cast<std::size_t>(rest_idx[a]) * in_st[rest_axes[a]];
        cplx s = 0;
        for (int i = 0; i < d; ++i)
            s += psi.amps[base + static_cast<std::size_t>(i) * (in_st[axis1] + in_st[axis2])];
        out.amps[r] = s;
        for (int a = static_cast<int>(rest_axes.size()) - 1; a >= 0; --a) {
            if (++rest_idx[a] < psi.dims[rest_axes[a]]) break;
            rest_idx[a] = 0;
        }
    }
    return out;
}

cplx dot(const StateVector& psi, const StateVector& phi) {
    if (psi.amps.size() != phi.amps.size())
        throw DimensionMismatch("dot: amplitude counts differ");
    cplx s = 0;
    for (std::size_t i = 0; i < psi.amps.size(); ++i)
        s += std::conj(psi.amps[i]) * phi.amps[i];
    return s;
}

cplx dot_with_grams(const StateVector& psi, const StateVector& phi,
                    const std::vector<Mat>& site_grams) {
    if (site_grams.size() != phi.dims.size())
        throw DimensionMismatch("dot_with_grams: one Gram per site required");
    StateVector weighted = phi;
    for (std::size_t s = 0; s < site_grams.size(); ++s) {
        if (site_grams[s].size() == 0) continue;
        weighted = apply_site_matrix(weighted, static_cast<int>(s), site_grams[s]);
    }
    return dot(psi, weighted);
}

double state_distance(const StateVector& a, const StateVector& b) {
    if (a.amps.size() != b.amps.size())
        throw DimensionMismatch("state_distance: amplitude counts differ");
    double m = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

double state_distance_phase_insensitive(const StateVector& a,
                                        const StateVector& b) {
    const cplx ov = dot(a, b);
    if (std::abs(ov) == 0.0) return state_distance(a, b);
    const cplx phase = ov / std::abs(ov);
    double m = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        m = std::max(m, std::abs(a.amps[i] * phase - b.amps[i]));
    return m;
}

double state_norm(const StateVector& a) { return std::sqrt(std::abs(dot(a, a))); }

}  // namespace hopfstate
