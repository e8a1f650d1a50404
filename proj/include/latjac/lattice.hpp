#pragma once

// Integral lattices: construction, invariants (det, parity, level, n2),
// shadow cosets, and structural operations.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"

namespace latjac {

enum class Definiteness { PositiveDefinite, NonDegenerate };

struct Lattice {
    IntMat gram;                      // gram[i][j] = beta(e_i, e_j)
    std::optional<std::string> name;  // optional display name
    Definiteness definiteness = Definiteness::PositiveDefinite;

    std::size_t rank() const { return gram.size(); }
    bool operator==(const Lattice& o) const { return gram == o.gram; }
};

struct ShadowCoset {
    RatVec rep;     // coordinates in [0,1)
    Rat beta_mod1;  // beta(rep) mod 1
    bool order2;    // 2*rep integral
};

struct LatticeInfo {
    Int det;
    bool even;
    long level;
    int n2;
    std::vector<Int> elementary_divisors;  // nontrivial invariant factors
};

// ---------------------------------------------------------------------------
// Construction and the bilinear form.
// ---------------------------------------------------------------------------

inline Lattice make_lattice(const IntMat& gram,
                            Definiteness def = Definiteness::PositiveDefinite,
                            std::optional<std::string> name = std::nullopt) {
    std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw NonSymmetricError("gram matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw NonSymmetricError("gram matrix not symmetric");
    if (def == Definiteness::PositiveDefinite) {
        std::vector<Int> minors = leading_minors(gram);
        if (n > 0 && minors.back() == 0)
            throw DegenerateError("gram matrix is singular");
        for (const Int& m : minors)
            if (m <= 0)
                throw NotPositiveDefiniteError(
                    "gram matrix not positive definite");
    } else {
        if (n > 0 && det_int(gram) == 0)
            throw DegenerateError("gram matrix is singular");
    }
    return Lattice{gram, std::move(name), def};
}

inline Rat beta_pair(const Lattice& L, const RatVec& x, const RatVec& y) {
    if (x.size() != L.rank() || y.size() != L.rank())
        throw DimensionMismatchError("vector length != lattice rank");
    Rat s = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank(); ++j)
            if (y[j] != 0) s += x[i] * Rat(L.gram[i][j]) * y[j];
    }
    return s;
}

inline Rat beta_value(const Lattice& L, const RatVec& x) {
    return beta_pair(L, x, x) / 2;
}

// ---------------------------------------------------------------------------
// Structural operations.
// ---------------------------------------------------------------------------

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    IntMat g(n + m, IntVec(n + m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    Definiteness def = (a.definiteness == Definiteness::PositiveDefinite &&
                        b.definiteness == Definiteness::PositiveDefinite)
                           ? Definiteness::PositiveDefinite
                           : Definiteness::NonDegenerate;
    return make_lattice(g, def);
}

inline Lattice rescale(const Lattice& L, const Int& a) {
    if (a < 1) throw Error("rescale factor must be >= 1");
    IntMat g = L.gram;
    for (auto& row : g)
        for (auto& x : row) x *= a;
    return make_lattice(g, L.definiteness);
}

// Hermite-style reduction: basis (as rows) of the sublattice generated by the
// given row vectors; requires full rank.
inline IntMat row_lattice_basis(IntMat rows) {
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    IntMat basis;
    std::size_t col = 0;
    while (col < n && !rows.empty()) {
        // Reduce column `col` by gcd steps.
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (piv == rows.size() ||
                     abs(rows[i][col]) < abs(rows[piv][col])))
                    piv = i;
            if (piv == rows.size()) break;  // column zero
            bool others = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == piv || rows[i][col] == 0) continue;
                Int f = floor_div(rows[i][col], rows[piv][col]);
                for (std::size_t j = 0; j < n; ++j)
                    rows[i][j] -= f * rows[piv][j];
                if (rows[i][col] != 0) others = true;
            }
            if (!others) {
                if (rows[piv][col] < 0)
                    for (auto& x : rows[piv]) x = -x;
                basis.push_back(rows[piv]);
                rows.erase(rows.begin() + static_cast<long>(piv));
                break;
            }
        }
        ++col;
    }
    return basis;
}

// Maximal even sublattice: returns (lattice, basis change B) with
// B * gram * B^T the new gram; B = identity when L is already even.
inline std::pair<Lattice, IntMat> even_sublattice(const Lattice& L) {
    std::size_t n = L.rank();
    bool even = true;
    for (std::size_t i = 0; i < n; ++i)
        if (L.gram[i][i] % 2 != 0) even = false;
    if (even) return {L, identity_matrix<Int>(n)};
    // Kernel of x -> sum over odd-diagonal coordinates mod 2.
    std::size_t first_odd = n;
    IntMat gens;
    for (std::size_t i = 0; i < n; ++i)
        if (L.gram[i][i] % 2 != 0 && first_odd == n) first_odd = i;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec v(n, 0);
        if (L.gram[i][i] % 2 == 0) {
            v[i] = 1;
        } else if (i == first_odd) {
            v[i] = 2;
        } else {
            v[i] = 1;
            v[first_odd] = 1;
        }
        gens.push_back(v);
    }
    IntMat B = row_lattice_basis(gens);
    IntMat G = mat_mul(mat_mul(B, L.gram), transpose(B));
    return {make_lattice(G, L.definiteness), B};
}

inline Lattice radical_quotient(const IntMat& gram) {
    std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw NonSymmetricError("gram matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw NonSymmetricError("gram matrix not symmetric");
    SmithResult snf = smith_normal_form(gram);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (snf.D[i][i] != 0) keep.push_back(i);
    if (keep.size() == n) {  // zero radical
        try {
            return make_lattice(gram);
        } catch (const NotPositiveDefiniteError&) {
            throw NotSemiDefiniteError("gram matrix not positive semi-definite");
        }
    }
    IntMat q(keep.size(), IntVec(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    s += snf.U[keep[a]][i] * gram[i][j] * snf.U[keep[b]][j];
            q[a][b] = s;
        }
    // The quotient must be positive definite, else the input was not
    // positive semi-definite.
    for (const Int& m : leading_minors(q))
        if (m <= 0)
            throw NotSemiDefiniteError("gram matrix not positive semi-definite");
    return make_lattice(q);
}

// ---------------------------------------------------------------------------
// Shadow cosets.
// ---------------------------------------------------------------------------

inline std::vector<ShadowCoset> shadow_reps(const Lattice& L) {
    std::size_t n = L.rank();
    Int d = det_int(L.gram);
    if (d == 0) throw DegenerateError("gram matrix is singular");
    SmithResult snf = smith_normal_form(L.gram);
    // dual L = Z^n * G^{-1} = Z^n * D^{-1} * U  (rows; V unimodular absorbed).
    RatMat Uq = to_rat(snf.U);
    std::vector<RatVec> duals;  // coset reps of dual L / L
    std::vector<long> divs;
    for (std::size_t i = 0; i < n; ++i) divs.push_back(snf.D[i][i].get_si());
    std::vector<long> idx(n, 0);
    while (true) {
        RatVec r(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (idx[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                r[j] += ratio(idx[i], divs[i]) * Uq[i][j];
        }
        for (auto& x : r) x = frac(x);
        duals.push_back(r);
        std::size_t p = 0;
        while (p < n && ++idx[p] == divs[p]) idx[p++] = 0;
        if (p == n) break;
    }
    // Base shift for odd lattices: r0 with r0*G = (g11/2, ..., gnn/2).
    RatVec r0(n, Rat(0));
    bool odd = false;
    for (std::size_t i = 0; i < n; ++i)
        if (L.gram[i][i] % 2 != 0) odd = true;
    if (odd) {
        RatMat Ginv = rat_inverse(to_rat(L.gram));
        RatVec half(n);
        for (std::size_t i = 0; i < n; ++i) half[i] = ratio(L.gram[i][i], 2);
        r0 = vec_mat(half, Ginv);
    }
    std::vector<ShadowCoset> out;
    for (auto& dr : duals) {
        RatVec r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = frac(r0[i] + dr[i]);
        Rat b = frac(beta_value(L, r));
        bool o2 = true;
        for (const auto& x : r)
            if (!is_integer(Rat(2) * x)) o2 = false;
        out.push_back(ShadowCoset{std::move(r), b, o2});
    }
    std::sort(out.begin(), out.end(),
              [](const ShadowCoset& a, const ShadowCoset& b) {
                  return a.rep < b.rep;
              });
    return out;
}

// ---------------------------------------------------------------------------
// Invariants.
// ---------------------------------------------------------------------------

// n2: rank of the unimodular constituent of the 2-adic Jordan splitting.
// Symmetric elimination over Z localized at 2 (rationals with odd
// denominators), splitting rank-1 blocks at diagonal pivots of minimal
// 2-adic valuation (preferred) or rank-2 blocks at off-diagonal pivots.
inline int jordan_n2(const IntMat& gram) {
    std::size_t n = gram.size();
    RatMat a = to_rat(gram);
    std::vector<std::size_t> act(n);
    for (std::size_t i = 0; i < n; ++i) act[i] = i;
    int n2 = 0;
    while (!act.empty()) {
        // Minimal 2-adic valuation over active entries.
        bool found = false;
        long minval = 0;
        for (std::size_t i : act)
            for (std::size_t j : act)
                if (a[i][j] != 0) {
                    long v = val2(a[i][j]);
                    if (!found || v < minval) {
                        minval = v;
                        found = true;
                    }
                }
        if (!found) throw DegenerateError("degenerate block in n2 computation");
        // Prefer a diagonal pivot achieving the minimum, lowest index first.
        std::size_t pd = n;
        for (std::size_t i : act)
            if (a[i][i] != 0 && val2(a[i][i]) == minval) {
                pd = i;
                break;
            }
        if (pd != n) {
            for (std::size_t k : act) {
                if (k == pd || a[k][pd] == 0) continue;
                Rat f = a[k][pd] / a[pd][pd];
                for (std::size_t j : act) a[k][j] -= f * a[pd][j];
                for (std::size_t j : act) a[j][k] -= f * a[j][pd];
            }
            if (minval == 0) n2 += 1;
            act.erase(std::find(act.begin(), act.end(), pd));
        } else {
            // Off-diagonal pivot (i,j), lowest (i,j) in row-major order.
            std::size_t pi = n, pj = n;
            for (std::size_t i : act) {
                for (std::size_t j : act)
                    if (i != j && a[i][j] != 0 && val2(a[i][j]) == minval) {
                        pi = i;
                        pj = j;
                        break;
                    }
                if (pi != n) break;
            }
            Rat det2 = a[pi][pi] * a[pj][pj] - a[pi][pj] * a[pj][pi];
            for (std::size_t k : act) {
                if (k == pi || k == pj) continue;
                if (a[k][pi] == 0 && a[k][pj] == 0) continue;
                // Solve (x,y) * [[a_ii, a_ij],[a_ji,a_jj]] = (a_ki, a_kj).
                Rat x = (a[k][pi] * a[pj][pj] - a[k][pj] * a[pj][pi]) / det2;
                Rat y = (a[pi][pi] * a[k][pj] - a[pi][pj] * a[k][pi]) / det2;
                for (std::size_t j : act)
                    a[k][j] -= x * a[pi][j] + y * a[pj][j];
                for (std::size_t j : act)
                    a[j][k] -= x * a[j][pi] + y * a[j][pj];
            }
            if (minval == 0) n2 += 2;
            act.erase(std::find(act.begin(), act.end(), pj));
            act.erase(std::find(act.begin(), act.end(), pi));
        }
    }
    return n2;
}

inline LatticeInfo invariants_of(const Lattice& L) {
    Int d = det_int(L.gram);
    if (d == 0) throw DegenerateError("gram matrix is singular");
    bool even = true;
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (L.gram[i][i] % 2 != 0) even = false;
    // Level: smallest l with l * Q_ev^{-1} integral and even diagonal.
    Lattice ev = even_sublattice(L).first;
    RatMat Qinv = rat_inverse(to_rat(ev.gram));
    Int lev = 1;
    for (std::size_t i = 0; i < ev.rank(); ++i)
        for (std::size_t j = 0; j < ev.rank(); ++j) {
            Rat entry = (i == j) ? Qinv[i][j] / 2 : Qinv[i][j];
            lev = lcm(lev, entry.get_den());
        }
    SmithResult snf = smith_normal_form(L.gram);
    std::vector<Int> divsv;
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (snf.D[i][i] > 1) divsv.push_back(snf.D[i][i]);
    return LatticeInfo{abs(d), even, lev.get_si(), jordan_n2(L.gram), divsv};
}

// ---------------------------------------------------------------------------
// Named lattices.
// ---------------------------------------------------------------------------

inline Lattice lattice_Zn(std::size_t n) {
    return make_lattice(identity_matrix<Int>(n), Definiteness::PositiveDefinite,
                        "Z" + std::to_string(n));
}

// A_n with the all-positive off-diagonal convention: 2 on the diagonal,
// +1 between neighbours.
inline Lattice lattice_An(std::size_t n) {
    if (n < 1) throw UnknownLatticeError("A_n requires n >= 1");
    IntMat g(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
    for (std::size_t i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    return make_lattice(g, Definiteness::PositiveDefinite,
                        "A" + std::to_string(n));
}

// D_n: path 1..n-2, with nodes n-1 and n attached to node n-2.
inline Lattice lattice_Dn(std::size_t n) {
    if (n < 3) throw UnknownLatticeError("D_n requires n >= 3");
    IntMat g(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
    for (std::size_t i = 0; i + 1 < n - 2; ++i) g[i][i + 1] = g[i + 1][i] = -1;
    g[n - 3][n - 2] = g[n - 2][n - 3] = -1;
    g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
    return make_lattice(g, Definiteness::PositiveDefinite,
                        "D" + std::to_string(n));
}

// E_6, E_7, E_8: Bourbaki node ordering, so E6 and E7 are the leading
// principal blocks of E8.
inline Lattice lattice_En(std::size_t n) {
    if (n < 6 || n > 8) throw UnknownLatticeError("E_n requires n in {6,7,8}");
    IntMat g(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
    auto edge = [&](std::size_t a, std::size_t b) {  // 1-based node labels
        if (a <= n && b <= n) g[a - 1][b - 1] = g[b - 1][a - 1] = -1;
    };
    edge(1, 3);
    edge(2, 4);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    return make_lattice(g, Definiteness::PositiveDefinite,
                        "E" + std::to_string(n));
}

}  // namespace latjac
