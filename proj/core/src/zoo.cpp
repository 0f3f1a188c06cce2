#include "hopfstate/zoo.hpp"

#include <algorithm>

namespace hopfstate {

void validate_group(GroupSpec& spec) {
    const int n = spec.order;
    if (n <= 0 || static_cast<int>(spec.table.size()) != n)
        throw NotAGroup(spec.name + ": table size != order");
    for (const auto& row : spec.table) {
        if (static_cast<int>(row.size()) != n)
            throw NotAGroup(spec.name + ": ragged table");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup(spec.name + ": entry out of range");
    }
    // identity at 0
    for (int a = 0; a < n; ++a)
        if (spec.table[0][a] != a || spec.table[a][0] != a)
            throw NotAGroup(spec.name + ": index 0 is not the identity");
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (spec.table[spec.table[a][b]][c] != spec.table[a][spec.table[b][c]])
                    throw NotAGroup(spec.name + ": associativity fails");
    // inverses
    spec.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (spec.table[a][b] == 0 && spec.table[b][a] == 0) {
                spec.inverse[a] = b;
                break;
            }
        if (spec.inverse[a] < 0) throw NotAGroup(spec.name + ": missing inverse");
    }
}

HopfAlgebra group_algebra(GroupSpec spec) {
    validate_group(spec);
    const int n = spec.order;
    HopfAlgebra A;
    A.dim = n;
    A.name = "C[" + spec.name + "]";
    A.mul.assign(static_cast<std::size_t>(n) * n * n, cplx(0));
    A.comul.assign(static_cast<std::size_t>(n) * n * n, cplx(0));
    A.counit = Vec::Ones(n);
    A.antipode = Mat::Zero(n, n);
    A.star = Mat::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            A.mul[(static_cast<std::size_t>(a) * n + b) * n + spec.table[a][b]] = 1.0;
        // group-like: Δ(g) = g⊗g
        A.comul[(static_cast<std::size_t>(a) * n + a) * n + a] = 1.0;
        A.antipode(a, spec.inverse[a]) = 1.0;  // S(g) = g⁻¹
        A.star(a, spec.inverse[a]) = 1.0;      // g* = g⁻¹
    }
    return load_algebra(std::move(A));
}

HopfAlgebra function_algebra(GroupSpec spec) {
    HopfAlgebra F = dual_algebra(group_algebra(std::move(spec)));
    // dual_algebra names it dual(C[G]); rename to the conventional F(G).
    auto l = F.name.find("C["), r = F.name.find(']');
    if (l != std::string::npos && r != std::string::npos)
        F.name = "F(" + F.name.substr(l + 2, r - l - 2) + ")";
    return F;
}

GroupSpec cyclic_group(int n) {
    GroupSpec s;
    s.name = "Z" + std::to_string(n);
    s.order = n;
    s.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.table[a][b] = (a + b) % n;
    validate_group(s);
    return s;
}

GroupSpec symmetric_group_s3() {
    // Permutations of {0,1,2} listed as: e, (01), (02), (12), (012), (021),
    // i.e. index 0 = identity, 1–3 transpositions, 4–5 3-cycles.
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                             {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    GroupSpec s;
    s.name = "S3";
    s.order = 6;
    s.table.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            // (σ_a ∘ σ_b)(i) = σ_a(σ_b(i))
            for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
            for (int c = 0; c < 6; ++c)
                if (comp[0] == perms[c][0] && comp[1] == perms[c][1] && comp[2] == perms[c][2]) {
                    s.table[a][b] = c;
                    break;
                }
        }
    validate_group(s);
    return s;
}

GroupSpec dihedral_group_d4() {
    // D₄ = ⟨r, f | r⁴ = f² = e, frf = r⁻¹⟩; index a = r^(a%4) f^(a/4).
    GroupSpec s;
    s.name = "D4";
    s.order = 8;
    s.table.assign(8, std::vector<int>(8));
    auto idx = [](int rot, int flip) { return (rot % 4 + 4) % 4 + 4 * (flip % 2); };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int ra = a % 4, fa = a / 4, rb = b % 4, fb = b / 4;
            // (r^ra f^fa)(r^rb f^fb) = r^(ra ± rb) f^(fa+fb), minus when fa = 1
            const int rot = fa ? ra - rb : ra + rb;
            s.table[a][b] = idx(rot, fa + fb);
        }
    validate_group(s);
    return s;
}

HopfAlgebra zoo_algebra(const std::string& name) {
    auto group_for = [](const std::string& g) -> GroupSpec {
        if (g == "Z2") return cyclic_group(2);
        if (g == "Z3") return cyclic_group(3);
        if (g == "Z4") return cyclic_group(4);
        if (g == "S3") return symmetric_group_s3();
        if (g == "D4") return dihedral_group_d4();
        throw ParseError("unknown zoo algebra: " + g);
    };
    if (!name.empty() && name[0] == 'F') return function_algebra(group_for(name.substr(1)));
    return group_algebra(group_for(name));
}

std::vector<std::string> zoo_names() {
    return {"Z2", "Z3", "Z4", "S3", "D4", "FZ2", "FZ3", "FZ4", "FS3", "FD4"};
}

}  // namespace hopfstate
