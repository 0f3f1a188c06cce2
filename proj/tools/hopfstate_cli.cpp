// Command-line front end: runs the verification suites and emits
// line-oriented reports.  Exit codes: 0 ok, 1 usage, 2 parse error,
// 3 axiom violation, 4 budget exceeded, 5 residual above tolerance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "hopfstate/algebra_io.hpp"
#include "hopfstate/cluster_state.hpp"
#include "hopfstate/hypergraph.hpp"
#include "hopfstate/lattice_model.hpp"
#include "hopfstate/tensor_network.hpp"
#include "hopfstate/zoo.hpp"

namespace {

using namespace hopfstate;

constexpr int kExitParse = 2;
constexpr int kExitAxiom = 3;
constexpr int kExitBudget = 4;
constexpr int kExitResidual = 5;

struct CommonOpts {
    std::string zoo;
    std::string file;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::string out;
    std::uint64_t budget = 0;
    int L = 2;
    bool open_chain = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool chain = false) {
    cmd->add_option("--zoo", o.zoo, "built-in algebra name (Z2…D4, FZ2…FD4)");
    cmd->add_option("--file", o.file, "algebra definition file (JSON)");
    cmd->add_option("--tol", o.tol, "pass/fail tolerance");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--out", o.out, "write the report to this file");
    cmd->add_option("--budget", o.budget, "amplitude budget override");
    if (chain) {
        cmd->add_option("--L", o.L, "odd-vertex count of the chain");
        cmd->add_flag("--open", o.open_chain, "open boundary (default periodic)");
    }
}

AlgebraDocument resolve_algebra(const CommonOpts& o) {
    if (!o.file.empty()) return load_algebra_file(o.file);
    if (!o.zoo.empty()) return {zoo_algebra(o.zoo), {}};
    throw ParseError("one of --zoo or --file is required");
}

std::vector<Representation> resolve_irreps(const AlgebraDocument& doc,
                                           std::uint64_t seed) {
    if (!doc.irreps.empty()) return doc.irreps;
    return decompose_irreps(doc.algebra, seed);
}

AlgebraElement random_element(const HopfAlgebra& A, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgebraElement x;
    x.coeffs = Vec::Zero(A.dim);
    for (int a = 0; a < A.dim; ++a) x.coeffs(a) = cplx(gauss(rng), gauss(rng));
    return x;
}

int emit(const Report& rep, const CommonOpts& o) {
    const std::string text = rep.to_text(o.tol);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot write " << o.out << "\n";
            return kExitParse;
        }
        f << text;
    }
    std::cout << text;
    return rep.pass(o.tol) ? 0 : kExitResidual;
}

// ── suites ───────────────────────────────────────────────────────────────────

Report suite_verify(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    Report rep;
    rep.title = "verify";
    rep.meta("algebra", doc.algebra.name);

    const AxiomReport ax = verify_axioms(doc.algebra);
    for (const AxiomCheck& c : ax.checks) rep.check("axiom." + c.name, c.residual);
    const AxiomReport axd = verify_axioms(dual_algebra(doc.algebra));
    rep.check("axiom.dual_suite_max", axd.max_residual);

    const AlgebraElement& lam = doc.algebra.haar_integral();
    rep.check("haar.counit_one",
              std::abs(counit_of(doc.algebra, lam) - cplx(1.0)));
    rep.check("haar.idempotent",
              distance(multiply(doc.algebra, lam, lam), lam));
    rep.check("haar.antipode_fixed", distance(apply_antipode(doc.algebra, lam), lam));
    rep.check("haar.star_fixed", distance(apply_star(doc.algebra, lam), lam));
    return rep;
}

Report suite_fusion(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    const auto irreps = resolve_irreps(doc, o.seed);
    Report rep;
    rep.title = "fusion";
    rep.meta("algebra", doc.algebra.name);

    int sum_sq = 0;
    std::string dims;
    for (const Representation& r : irreps) {
        sum_sq += r.dim * r.dim;
        dims += (dims.empty() ? "" : ",") + std::to_string(r.dim);
    }
    rep.meta("irrep_dims", dims);
    rep.check("peter_weyl_sum_d2",
              std::abs(static_cast<double>(sum_sq - doc.algebra.dim)));

    const FusionRing ring = fusion_ring(doc.algebra, irreps);
    double dev = 0;
    for (int i = 0; i < ring.rank; ++i)
        for (int j = 0; j < ring.rank; ++j) {
            const auto oracle =
                fusion_multiplicities_character_oracle(doc.algebra, irreps, i, j);
            for (int k = 0; k < ring.rank; ++k)
                dev = std::max(dev, std::abs(static_cast<double>(
                                        ring.n(i, j, k) - oracle[k])));
        }
    rep.check("projector_vs_character_oracle", dev);
    try {
        rep.check("fusion_basis_gram_defect",
                  fusion_basis_gram_defect(doc.algebra,
                                           fusion_basis(doc.algebra, irreps)));
    } catch (const GramDefect&) {
        rep.check("fusion_basis_gram_defect", 1.0);
    }

    for (std::size_t i = 0; i < irreps.size(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < irreps.size(); ++j) {
            std::string cell;
            for (std::size_t k = 0; k < irreps.size(); ++k) {
                const int n = ring.n(static_cast<int>(i), static_cast<int>(j),
                                     static_cast<int>(k));
                if (n == 0) continue;
                if (!cell.empty()) cell += "+";
                if (n > 1) cell += std::to_string(n) + "*";
                cell += irreps[k].label;
            }
            row += (j ? " | " : "") + irreps[i].label + "x" + irreps[j].label +
                   "=" + cell;
        }
        rep.meta("fusion_row_" + irreps[i].label, row);
    }
    return rep;
}

Report suite_cluster(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    const HopfAlgebra& A = doc.algebra;
    const auto irreps = resolve_irreps(doc, o.seed);
    const ClusterGraph K = build_1d_lattice(o.L, !o.open_chain);

    Report rep;
    rep.title = "cluster";
    rep.meta("algebra", A.name);
    rep.meta("L", std::to_string(o.L));
    rep.meta("boundary", o.open_chain ? "open" : "periodic");

    const StateVector cs = cluster_state(A, K);
    std::mt19937_64 rng(o.seed);
    double t_res = 0, q_res = 0, tg_res = 0, qg_res = 0;
    for (int v = 0; v < K.num_vertices(); ++v) {
        if (K.odd[v]) {
            t_res = std::max(t_res,
                             state_distance(apply_stabilizer(A, K, v,
                                                             StabilizerFlavor::T, cs),
                                            cs));
            const AlgebraElement g = random_element(A, rng);
            StateVector expect = cs;
            const cplx eps = counit_of(A, g);
            for (cplx& a : expect.amps) a *= eps;
            tg_res = std::max(
                tg_res, state_distance(apply_stabilizer(A, K, v,
                                                        StabilizerFlavor::TFwd, cs,
                                                        &g),
                                       expect));
        } else {
            q_res = std::max(q_res,
                             state_distance(apply_stabilizer(A, K, v,
                                                             StabilizerFlavor::Q, cs),
                                            cs));
            for (const Representation& R : irreps) {
                StateVector expect = cs;
                for (cplx& a : expect.amps) a *= static_cast<double>(R.dim);
                qg_res = std::max(
                    qg_res,
                    state_distance(apply_stabilizer(A, K, v,
                                                    StabilizerFlavor::QRep, cs,
                                                    nullptr, &R),
                                   expect));
            }
        }
    }
    rep.check("stabilizer_T", t_res);
    rep.check("stabilizer_Q", q_res);
    rep.check("stabilizer_T_fwd_counit", tg_res);
    rep.check("stabilizer_Q_rep_dim", qg_res);
    return rep;
}

Report suite_lcp(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    const auto irreps = resolve_irreps(doc, o.seed);
    const ChainModel m = make_chain(doc.algebra, o.L, !o.open_chain);
    Report rep = check_lcp(m, irreps, o.seed);
    rep.merge(ground_state_check(m, irreps, o.seed), "gs.");
    return rep;
}

// Random element of the cocommutative subspace of 𝒜 (spanned by the dual
// algebra's irrep characters pulled back through the pairing).  On a closed
// chain the face terms only commute with F_h for cocommutative h; for group
// algebras this subspace is all of ℂ[G].
AlgebraElement random_cocommutative_element(const HopfAlgebra& A,
                                            std::mt19937_64& rng) {
    const DualAlgebra D = dual_algebra_with_pairing(A);
    const auto dual_irreps = decompose_irreps(D.algebra);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec values = Vec::Zero(A.dim);
    for (const Representation& R : dual_irreps)
        values += cplx(gauss(rng), gauss(rng)) *
                  character(D.algebra, R).coeffs;
    AlgebraElement h;
    h.coeffs = D.pairing.fullPivLu().solve(values);
    return h;
}

Report suite_symmetry(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    const HopfAlgebra& A = doc.algebra;
    const auto irreps = resolve_irreps(doc, o.seed);
    const ChainModel m = make_chain(A, o.L, !o.open_chain);

    Report rep;
    rep.title = "symmetry";
    rep.meta("algebra", A.name);
    rep.meta("L", std::to_string(o.L));

    std::mt19937_64 rng(o.seed);
    const Mat aK = a_term_kernel(A, A.haar_integral());
    const Mat bK = b_term_kernel_haar(A, irreps);

    double f_comm = 0, d_comm = 0, f_group = 0;
    for (int t = 0; t < 5; ++t) {
        StateVector psi = random_state(std::vector<int>(m.num_sites(), A.dim),
                                       o.seed + 100 + t);
        const double n = state_norm(psi);
        for (cplx& a : psi.amps) a /= n;
        const AlgebraElement g = random_element(A, rng);
        const AlgebraElement h = random_element(A, rng);
        const AlgebraElement gc = random_cocommutative_element(A, rng);

        for (int i = 0; i < m.num_sites(); i += 2)
            f_comm = std::max(
                f_comm, state_distance(
                            symmetry_F(m, g, apply_three_site(m, i, aK, psi)),
                            apply_three_site(m, i, aK, symmetry_F(m, g, psi))));
        for (int j = 1; j < m.num_sites(); j += 2)
            f_comm = std::max(
                f_comm,
                state_distance(
                    symmetry_F(m, gc, apply_three_site(m, j, bK, psi)),
                    apply_three_site(m, j, bK, symmetry_F(m, gc, psi))));
        for (const Representation& R : irreps) {
            for (int i = 0; i < m.num_sites(); i += 2)
                d_comm = std::max(
                    d_comm,
                    state_distance(
                        symmetry_D(m, R, apply_three_site(m, i, aK, psi)),
                        apply_three_site(m, i, aK, symmetry_D(m, R, psi))));
            for (int j = 1; j < m.num_sites(); j += 2)
                d_comm = std::max(
                    d_comm,
                    state_distance(
                        symmetry_D(m, R, apply_three_site(m, j, bK, psi)),
                        apply_three_site(m, j, bK, symmetry_D(m, R, psi))));
        }
        f_group = std::max(
            f_group,
            state_distance(symmetry_F(m, g, symmetry_F(m, h, psi)),
                           symmetry_F(m, multiply(A, g, h), psi)));
    }
    rep.check("commutator_F_H", f_comm);
    rep.check("commutator_D_H", d_comm);
    rep.check("F_group_law", f_group);
    return rep;
}

Report suite_qd(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    const HopfAlgebra& A = doc.algebra;
    const auto irreps = resolve_irreps(doc, o.seed);

    Report rep;
    rep.title = "quantum_double";
    rep.meta("algebra", A.name);

    rep.check("vertex_A_vs_qd",
              max_abs(Mat(a_term_kernel(A, A.haar_integral()) -
                          qd_vertex_kernel(A, A.haar_integral()))));
    double face_rep = 0;
    for (const Representation& R : irreps) {
        DualElement chi = character(A, R);
        face_rep = std::max(face_rep, max_abs(Mat(b_term_kernel_rep(A, R) -
                                                  qd_face_kernel(A, chi))));
    }
    rep.check("face_B_rep_vs_qd_character", face_rep);
    rep.check("face_B_vs_qd_haar_measure",
              max_abs(Mat(b_term_kernel_haar(A, irreps) -
                          qd_face_kernel(A, A.haar_measure()))));
    return rep;
}

Report suite_tn(const CommonOpts& o) {
    const AlgebraDocument doc = resolve_algebra(o);
    const HopfAlgebra& A = doc.algebra;
    const auto irreps = resolve_irreps(doc, o.seed);

    Report rep;
    rep.title = "tensor_network";
    rep.meta("algebra", A.name);
    rep.meta("L", std::to_string(o.L));

    const ClusterGraph K = build_1d_lattice(o.L, !o.open_chain);
    const StateVector circuit = cluster_state(A, K);
    rep.check("contract_vs_circuit",
              state_distance(contract(cluster_network(A, K)), circuit));
    rep.check("contract_vs_circuit_even_encoding",
              state_distance(contract(cluster_network(A, K, false)), circuit));
    rep.merge(verify_rewrite_rules(A, irreps, o.seed), "rule.");
    return rep;
}

Report suite_hypergraph(const CommonOpts& o) {
    Report rep;
    rep.title = "hypergraph";

    // CCZ|+++⟩: 3 qubits, Hadamards, θ = π·i₁i₂i₃.
    const double isq = 1.0 / std::sqrt(2.0);
    Mat H(2, 2);
    H << isq, isq, isq, -isq;
    QuditHyperedge e;
    e.vertices = {0, 1, 2};
    e.theta.assign(8, 0.0);
    e.theta[7] = M_PI;
    e.directed = false;
    const StateVector g =
        hypergraph_state_qudit({2, 2, 2}, {H, H, H}, {e});
    double dev = 0;
    const double amp = 1.0 / std::sqrt(8.0);
    for (int k = 0; k < 8; ++k)
        dev = std::max(dev, std::abs(g.amps[k] - cplx(k == 7 ? -amp : amp)));
    rep.check("ccz_plus_state_oracle", dev);

    // Hopf mode reproducing the single-edge (even→odd, C X←) cluster state:
    // both vertex states λ, edge functional ψ = |𝒜|·Λ∘μ.
    const AlgebraDocument doc = resolve_algebra(o);
    const HopfAlgebra& A = doc.algebra;
    const ClusterGraph K =
        build_cluster_graph({true, false}, {GraphEdge{1, 0}});
    const StateVector cs = cluster_state(A, K, /*normalized=*/false);

    HopfHyperedge he;
    he.vertices = {0, 1};
    he.psi = functional_from_dual(A, A.haar_measure(), 2);
    for (cplx& v : he.psi) v *= static_cast<double>(A.dim);
    const StateVector hyper = hypergraph_state_hopf(
        A, {A.haar_integral(), A.haar_integral()}, {{0, -1}, {0, -1}}, {he});
    rep.check("hopf_single_edge_vs_circuit", state_distance(hyper, cs));
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf-algebra cluster state verification suites"};
    app.require_subcommand(1);

    CommonOpts o;
    CLI::App* c_verify = app.add_subcommand("verify", "axiom + Haar suite");
    add_common(c_verify, o);
    CLI::App* c_fusion = app.add_subcommand("fusion", "irreps and fusion ring");
    add_common(c_fusion, o);
    CLI::App* c_cluster = app.add_subcommand("cluster", "cluster state + stabilizers");
    add_common(c_cluster, o, true);
    CLI::App* c_lcp = app.add_subcommand("lcp", "commuting-projector Hamiltonian");
    add_common(c_lcp, o, true);
    CLI::App* c_sym = app.add_subcommand("symmetry", "F/D global symmetries");
    add_common(c_sym, o, true);
    CLI::App* c_qd = app.add_subcommand("qd", "quantum-double correspondence");
    add_common(c_qd, o);
    CLI::App* c_tn = app.add_subcommand("tn", "tensor-network equivalence");
    add_common(c_tn, o, true);
    CLI::App* c_hyper = app.add_subcommand("hypergraph", "hypergraph states");
    add_common(c_hyper, o);

    CLI11_PARSE(app, argc, argv);

    if (o.budget > 0) {
        const std::string v = std::to_string(o.budget);
        setenv("HOPFSTATE_BUDGET", v.c_str(), 1);
    }

    try {
        Report rep;
        if (c_verify->parsed()) rep = suite_verify(o);
        else if (c_fusion->parsed()) rep = suite_fusion(o);
        else if (c_cluster->parsed()) rep = suite_cluster(o);
        else if (c_lcp->parsed()) rep = suite_lcp(o);
        else if (c_sym->parsed()) rep = suite_symmetry(o);
        else if (c_qd->parsed()) rep = suite_qd(o);
        else if (c_tn->parsed()) rep = suite_tn(o);
        else if (c_hyper->parsed()) rep = suite_hypergraph(o);
        return emit(rep, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const AxiomViolation& e) {
        std::cerr << "axiom violation: " << e.what() << "\n";
        return kExitAxiom;
    } catch (const MemoryBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const HopfError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
