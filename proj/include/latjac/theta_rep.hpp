#pragma once

// The det(L)-dimensional representation on coset functions of the shadow:
// generator matrices rho(T), rho(S), rho(Z), relation/trace verification,
// and singular-weight dimensions via joint eigenspaces.

#include <vector>

#include "cyclotomic.hpp"
#include "lattice.hpp"
#include "matrix.hpp"

namespace latjac {

using CycloMat = Mat<CycloNum>;
using CycloVec = std::vector<CycloNum>;

struct WSpace {
    Lattice lattice;
    std::vector<ShadowCoset> basis;  // canonical shadow_reps order
    std::size_t dim() const { return basis.size(); }
};

struct RepMatrices {
    WSpace space;
    CycloMat T;  // diagonal, entries e(-beta(x))
    CycloMat S;  // (e_8(n)/sqrt(det)) [e(beta(x,y))]
    CycloMat Z;  // monomial, action of (-1, i)
};

struct CharacterConstants {
    CycloNum eps_T = cyclo_e(Rat(1, 24));  // epsilon(T*)
    CycloNum eps_S = e8(-1);               // epsilon(S*)
};

namespace detail {

inline CycloMat cyclo_zero_matrix(std::size_t n) {
    return CycloMat(n, CycloVec(n, CycloNum(Rat(0))));
}

inline CycloMat cyclo_mat_mul(const CycloMat& a, const CycloMat& b) {
    std::size_t n = a.size();
    CycloMat c = cyclo_zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline bool cyclo_mat_eq(const CycloMat& a, const CycloMat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

inline CycloNum cyclo_trace(const CycloMat& a) {
    CycloNum t(Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// Index of the canonical representative of -rep within the shadow basis.
inline std::size_t negate_coset_index(const std::vector<ShadowCoset>& basis,
                                      const RatVec& rep) {
    RatVec neg(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) neg[i] = frac(-rep[i]);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].rep == neg) return i;
    throw Error("shadow not closed under negation");
}

}  // namespace detail

inline RepMatrices rep_matrices(const Lattice& L) {
    WSpace w{L, shadow_reps(L)};
    std::size_t d = w.dim();
    long n = static_cast<long>(L.rank());
    CycloMat T = detail::cyclo_zero_matrix(d);
    CycloMat S = detail::cyclo_zero_matrix(d);
    CycloMat Z = detail::cyclo_zero_matrix(d);
    // 1/sqrt(det) = sqrt(det)/det.
    CycloNum pref =
        e8(n) * sqrt_positive_integer(Int(static_cast<long>(d))) /
        Rat(static_cast<long>(d));
    CycloNum in = cyclo_root(4, n);  // i^n
    for (std::size_t x = 0; x < d; ++x) {
        T[x][x] = cyclo_e(-w.basis[x].beta_mod1);
        for (std::size_t y = 0; y < d; ++y)
            S[x][y] = pref * cyclo_e(beta_pair(L, w.basis[x].rep,
                                               w.basis[y].rep));
        // Z: lambda_r -> i^n e(beta(r + r')) lambda_{r'}, r' the canonical
        // representative of -r.
        std::size_t xp = detail::negate_coset_index(w.basis, w.basis[x].rep);
        RatVec sum(L.rank());
        for (std::size_t i = 0; i < L.rank(); ++i)
            sum[i] = w.basis[x].rep[i] + w.basis[xp].rep[i];
        Z[xp][x] = in * cyclo_e(beta_value(L, sum));
    }
    return RepMatrices{std::move(w), std::move(T), std::move(S), std::move(Z)};
}

struct RelationReport {
    bool s2_is_z;
    bool st3_is_z;
    bool z2_is_pm_id;
    bool z4_is_id;
    bool all() const { return s2_is_z && st3_is_z && z2_is_pm_id && z4_is_id; }
};

inline RelationReport verify_relations(const Lattice& L) {
    RepMatrices m = rep_matrices(L);
    using namespace detail;
    std::size_t d = m.space.dim();
    long n = static_cast<long>(L.rank());
    CycloMat s2 = cyclo_mat_mul(m.S, m.S);
    CycloMat st = cyclo_mat_mul(m.S, m.T);
    CycloMat st3 = cyclo_mat_mul(cyclo_mat_mul(st, st), st);
    CycloMat z2 = cyclo_mat_mul(m.Z, m.Z);
    CycloMat z4 = cyclo_mat_mul(z2, z2);
    CycloMat id = cyclo_zero_matrix(d);
    CycloMat mid = cyclo_zero_matrix(d);
    for (std::size_t i = 0; i < d; ++i) {
        id[i][i] = CycloNum(Rat(1));
        mid[i][i] = CycloNum(Rat(n % 2 == 0 ? 1 : -1));
    }
    return RelationReport{cyclo_mat_eq(s2, m.Z), cyclo_mat_eq(st3, m.Z),
                          cyclo_mat_eq(z2, mid), cyclo_mat_eq(z4, id)};
}

struct TraceReport {
    CycloNum trT, trS, trR, trZR, trZ;
    bool trT_matches, trS_matches, trR_matches, trZR_matches, trZ_matches;
    bool all() const {
        return trT_matches && trS_matches && trR_matches && trZR_matches &&
               trZ_matches;
    }
};

inline TraceReport traces(const Lattice& L) {
    RepMatrices m = rep_matrices(L);
    using namespace detail;
    long n = static_cast<long>(L.rank());
    LatticeInfo info = invariants_of(L);
    CycloMat R = cyclo_mat_mul(m.S, m.T);
    CycloMat ZR = cyclo_mat_mul(m.Z, R);
    TraceReport r;
    r.trT = cyclo_trace(m.T);
    r.trS = cyclo_trace(m.S);
    r.trR = cyclo_trace(R);
    r.trZR = cyclo_trace(ZR);
    r.trZ = cyclo_trace(m.Z);
    // Closed forms.
    CycloNum expT(Rat(0));
    for (const auto& c : m.space.basis) expT += cyclo_e(-c.beta_mod1);
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2,
                  static_cast<unsigned long>(n - info.n2));
    Rat zval = Rat(info.n2 % 2 == 0 ? 1 : -1) * Rat(two_pow);
    CycloNum expZ = cyclo_root(4, n) * zval;
    r.trT_matches = (r.trT == expT);
    r.trS_matches = (r.trS == e8(n) * gauss_sum_chi(L, 2));
    r.trR_matches = (r.trR == cyclo_root(4, n));
    r.trZR_matches = (r.trZR == e8(3 * n) * gauss_sum_chi(L, -3));
    r.trZ_matches = (r.trZ == expZ);
    return r;
}

// ---------------------------------------------------------------------------
// Joint eigenspaces: singular-weight dimensions and bases.
// ---------------------------------------------------------------------------

namespace detail {

// Null space basis of an m x s matrix over a cyclotomic field.
inline std::vector<CycloVec> cyclo_nullspace(CycloMat a) {
    std::size_t m = a.size(), s = m == 0 ? 0 : a[0].size();
    std::vector<long> pivot_col_of_row;
    std::size_t row = 0;
    std::vector<bool> is_pivot(s, false);
    for (std::size_t col = 0; col < s && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(a[row], a[piv]);
        CycloNum inv = a[row][col].inverse();
        for (std::size_t j = col; j < s; ++j) a[row][j] = inv * a[row][j];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            CycloNum f = a[i][col];
            for (std::size_t j = col; j < s; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        is_pivot[col] = true;
        ++row;
    }
    std::vector<CycloVec> basis;
    for (std::size_t free = 0; free < s; ++free) {
        if (is_pivot[free]) continue;
        CycloVec v(s, CycloNum(Rat(0)));
        v[free] = CycloNum(Rat(1));
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

// Basis of {lambda : rho(T)lambda = e(-h/24)lambda, rho(S)lambda = e_8(h)lambda},
// i.e. the invariants of Theta(L) tensor C(eps^h); vectors over the full
// shadow basis.
inline std::vector<CycloVec> singular_basis(const Lattice& L, long h) {
    h %= 24;
    if (h < 0) h += 24;
    RepMatrices m = rep_matrices(L);
    std::size_t d = m.space.dim();
    // T condition: support on cosets with beta(x) = h/24 mod 1.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < d; ++i)
        if (frac(m.space.basis[i].beta_mod1 - Rat(h, 24)) == 0)
            support.push_back(i);
    if (support.empty()) return {};
    // S condition restricted to the support: for every x,
    // sum_j S[x][j] lambda_j = e_8(h) [x in support] lambda_x.
    CycloNum ev = e8(h);
    CycloMat A(d, CycloVec(support.size(), CycloNum(Rat(0))));
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t jj = 0; jj < support.size(); ++jj) {
            A[x][jj] = m.S[x][support[jj]];
            if (support[jj] == x) A[x][jj] -= ev;
        }
    std::vector<CycloVec> null = detail::cyclo_nullspace(std::move(A));
    std::vector<CycloVec> out;
    for (auto& v : null) {
        CycloVec full(d, CycloNum(Rat(0)));
        for (std::size_t jj = 0; jj < support.size(); ++jj)
            full[support[jj]] = v[jj];
        out.push_back(std::move(full));
    }
    return out;
}

inline long singular_dimension(const Lattice& L, long h) {
    return static_cast<long>(singular_basis(L, h).size());
}

}  // namespace latjac
