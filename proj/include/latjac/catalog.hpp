#pragma once

// Constructors for the explicit Jacobi forms used throughout: the odd theta
// function and its level-3 companion, the distinguished singular forms of the
// unimodular lattices and of A2, the Eisenstein-type generators for A2 and
// D3, and the root-lattice embeddings into E8 used for low-weight lower
// bounds.

#include "jacobi.hpp"

namespace latjac {

// theta = sum_{r in Z+1/2} (-4/2r) q^{r^2/2} zeta^r, weight 1/2, character 3.
inline JacobiQExp form_theta(long N) {
    return theta_series(lattice_Zn(1), {Rat(1)}, Rat(N));
}

// thetatilde on Z(3) with lambda = (12/.) on the cosets {1/6, 1/2, 5/6},
// weight 1/2, character 1.
inline JacobiQExp form_theta_tilde(long N) {
    return theta_series(rescale(lattice_Zn(1), 3), {Rat(1), Rat(0), Rat(-1)},
                        Rat(N));
}

// Singular form of Z^n: the n-fold tensor power of theta.
inline JacobiQExp distjac_Zn(long n, long N) {
    JacobiQExp phi = form_theta(N);
    JacobiQExp out = phi;
    for (long i = 1; i < n; ++i) out = jacobi_tensor(out, phi);
    return out;
}

// Singular form of E8: theta series with constant lambda = 1.
inline JacobiQExp distjac_E8(long N) {
    return theta_series(lattice_En(8), {Rat(1)}, Rat(N));
}

// Singular odd form of A2: lambda = Legendre symbol on dual/A2 = Z/3Z.
// Weight 1, character 8.  The cosets in canonical order are
// {(0,0), (1/3,1/3), (2/3,2/3)}; the sign is fixed by the identity
// distjac_A2 = eta^{-1} theta(a1 z) theta(a2 z) theta(a1 z + a2 z).
inline JacobiQExp distjac_A2(long N) {
    return theta_series(lattice_An(2), {Rat(0), Rat(-1), Rat(1)}, Rat(N));
}

// Singular form of A2+A2 with the antisymmetric wedge coefficient
// A2(s)A2c(r) - A2c(s)A2(r); weight 2, character 8.
inline JacobiQExp distjac_A2A2_8(long N) {
    Lattice a2a2 = direct_sum(lattice_An(2), lattice_An(2));
    auto reps = shadow_reps(a2a2);
    RatVec zero{Rat(0), Rat(0)};
    // A2(s) is the characteristic function of the trivial coset; A2c its
    // complement in the dual.
    std::vector<Rat> lambda(reps.size(), Rat(0));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        RatVec s(reps[i].rep.begin(), reps[i].rep.begin() + 2);
        RatVec r(reps[i].rep.begin() + 2, reps[i].rep.end());
        int val = 0;
        if (s == zero && r != zero) val = 1;
        if (s != zero && r == zero) val = -1;
        lambda[i] = val;
    }
    return theta_series(a2a2, lambda, Rat(N));
}

// Eis_{2,A2,8}: the pullback of distjac_{A2+A2,8} retaining the second
// elliptic variable (the paper's displayed double sum).  Weight 2,
// character 8.
inline JacobiQExp eis_2_A2_8(long N) {
    RatMat A{{Rat(0), Rat(0), Rat(1), Rat(0)},
             {Rat(0), Rat(0), Rat(0), Rat(1)}};
    JacobiQExp phi = pullback(distjac_A2A2_8(N), A, lattice_An(2));
    phi.k = Rat(2);
    return phi;
}

// Eis_{4,A2,8} = 12 delta Eis_{2,A2,8}, weight 4, character 8.
inline JacobiQExp eis_4_A2_8(long N) {
    return jacobi_scale(delta_operator(eis_2_A2_8(N)), Rat(12));
}

// Eis_{4,A2,0} = (E6 Eis_{2,A2,8} + E4 Eis_{4,A2,8}) / eta^8, weight 4,
// trivial character, holomorphic.
inline JacobiQExp eis_4_A2_0(long N) {
    JacobiQExp num = jacobi_add(jacobi_scalar_mul(series_E(6, N), eis_2_A2_8(N)),
                                jacobi_scalar_mul(series_E(4, N), eis_4_A2_8(N)));
    return jacobi_scalar_mul(series_eta_pow(-8, N), num);
}

// Eis_{6,A2,0} = (E4^2 Eis_{2,A2,8} + E6 Eis_{4,A2,8}) / eta^8, weight 6,
// trivial character, holomorphic.
inline JacobiQExp eis_6_A2_0(long N) {
    QSeries24 e4sq = qs_mul(series_E(4, N), series_E(4, N));
    JacobiQExp num = jacobi_add(jacobi_scalar_mul(e4sq, eis_2_A2_8(N)),
                                jacobi_scalar_mul(series_E(6, N), eis_4_A2_8(N)));
    return jacobi_scalar_mul(series_eta_pow(-8, N), num);
}

// D3 = ev(Z^3) together with its basis inside Z^3.
struct D3Model {
    Lattice lattice;
    IntMat basis;
};

inline D3Model d3_model() {
    auto [lat, basis] = even_sublattice(lattice_Zn(3));
    return D3Model{lat, basis};
}

// iota_1: the inclusion D3 -> Z^3; pullback of distjac_{Z^3} is the unique
// singular form of D3 (weight 3/2, character 9).
inline JacobiQExp iota1_pullback(long N) {
    D3Model d3 = d3_model();
    return pullback(distjac_Zn(3, N), to_rat(d3.basis), d3.lattice);
}

// iota_2: the identification D3 = A3 inside Z^4, in the paper's coordinates
// z -> (z1+z2-z3, z1-z2+z3, -z1+z2+z3, -z1-z2-z3)/2 where z_i are the
// Z^3-coordinates.  Pullback of distjac_{Z^4} has weight 2, character 12.
inline JacobiQExp iota2_pullback(long N) {
    D3Model d3 = d3_model();
    RatMat C{{ratio(Int(1), Int(2)), ratio(Int(1), Int(2)),
              ratio(Int(-1), Int(2)), ratio(Int(-1), Int(2))},
             {ratio(Int(1), Int(2)), ratio(Int(-1), Int(2)),
              ratio(Int(1), Int(2)), ratio(Int(-1), Int(2))},
             {ratio(Int(-1), Int(2)), ratio(Int(1), Int(2)),
              ratio(Int(1), Int(2)), ratio(Int(-1), Int(2))}};
    RatMat A = mat_mul(to_rat(d3.basis), C);
    return pullback(distjac_Zn(4, N), A, d3.lattice);
}

// The generators of Theorem on modules over D3.
inline JacobiQExp d3_gen_odd(long N) {    // eta^15 iota1*, weight 9, char 0
    return jacobi_scalar_mul(series_eta_pow(15, N), iota1_pullback(N));
}

inline JacobiQExp d3_gen_even8(long N) {  // eta^12 iota2*, weight 8, char 0
    return jacobi_scalar_mul(series_eta_pow(12, N), iota2_pullback(N));
}

// Bourbaki simple roots of E8 as rows in orthonormal coordinates of R^8;
// the Gram matrix of these rows is the Cartan matrix used by lattice_En(8).
inline RatMat bourbaki_E8_basis() {
    RatMat b(8, RatVec(8, Rat(0)));
    Rat half = ratio(Int(1), Int(2));
    b[0] = {half, -half, -half, -half, -half, -half, -half, half};
    b[1][0] = 1;
    b[1][1] = 1;
    for (std::size_t i = 2; i < 8; ++i) {
        b[i][i - 2] = -1;
        b[i][i - 1] = 1;
    }
    return b;
}

// D3 = ev(Z^3) embedded into E8 via (x,y,z) -> (0,0,0,0,x,y,z,0) in the
// orthonormal model, converted to the simple-root basis.
inline RatMat embedding_D3_E8() {
    D3Model d3 = d3_model();
    RatMat w(3, RatVec(8, Rat(0)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) w[i][4 + j] = Rat(d3.basis[i][j]);
    return mat_mul(w, rat_inverse(bourbaki_E8_basis()));
}

// Root-subdiagram embeddings: rows select simple roots of E8.
inline RatMat embedding_E6_E8() {
    RatMat a(6, RatVec(8, Rat(0)));
    for (std::size_t i = 0; i < 6; ++i) a[i][i] = 1;
    return a;
}

inline RatMat embedding_E7_E8() {
    RatMat a(7, RatVec(8, Rat(0)));
    for (std::size_t i = 0; i < 7; ++i) a[i][i] = 1;
    return a;
}

inline RatMat embedding_D5_E8() {
    RatMat a(5, RatVec(8, Rat(0)));
    const std::size_t nodes[5] = {5, 4, 3, 1, 2};  // E8 nodes 6,5,4,2,3
    for (std::size_t i = 0; i < 5; ++i) a[i][nodes[i]] = 1;
    return a;
}

// Eisenstein generators for D3 from the E8 singular form.
inline JacobiQExp eis_4_D3_0(long N) {
    return pullback(distjac_E8(N), embedding_D3_E8(), d3_model().lattice);
}

inline JacobiQExp eis_6_D3_0(long N) { return delta_operator(eis_4_D3_0(N)); }

// Lower bound for dim J_{4,L}(1) from a nonzero pullback of the E8 singular
// form along an isometric embedding L -> E8.
inline long weight4_pullback_lower_bound(const Lattice& L, const RatMat& emb) {
    JacobiQExp phi = pullback(distjac_E8(2), emb, L);
    return phi.c.empty() ? 0 : 1;
}

}  // namespace latjac
