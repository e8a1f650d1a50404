#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latjac/theta_rep.hpp>

using namespace latjac;

TEST_CASE("rank-1 anchor matrices") {
    RepMatrices m = rep_matrices(lattice_Zn(1));
    REQUIRE(m.space.dim() == 1);
    CHECK(m.T[0][0] == cyclo_e(Rat(-1, 8)));
    CHECK(m.S[0][0] == e8(3));
    // Z acts on lambda_{1/2} by i * e(beta(1/2 + 1/2)) = i * e(1/2) = -i.
    CHECK(m.Z[0][0] == -cyclo_root(4, 1));
}

TEST_CASE("defining relations") {
    for (const Lattice& L :
         {lattice_Zn(1), lattice_Zn(2), rescale(lattice_Zn(1), 3),
          lattice_An(2), lattice_An(3), lattice_Dn(4),
          make_lattice({{3, 1}, {1, 5}})}) {
        RelationReport r = verify_relations(L);
        CHECK(r.s2_is_z);
        CHECK(r.st3_is_z);
        CHECK(r.z2_is_pm_id);
        CHECK(r.z4_is_id);
    }
}

TEST_CASE("character constants") {
    CharacterConstants eps;
    CHECK(eps.eps_T == cyclo_root(24, 1));
    CHECK(eps.eps_S == e8(-1));
    // The character has order 24.
    CycloNum p(Rat(1));
    for (int i = 0; i < 24; ++i) p *= eps.eps_T;
    CHECK(p == CycloNum(Rat(1)));
}

TEST_CASE("trace identities") {
    for (const Lattice& L :
         {lattice_Zn(1), lattice_Zn(2), rescale(lattice_Zn(1), 3),
          lattice_An(2), lattice_An(3), lattice_Dn(4), lattice_Dn(5),
          make_lattice({{1, 0}, {0, 3}})}) {
        TraceReport t = traces(L);
        CHECK(t.trT_matches);
        CHECK(t.trS_matches);
        CHECK(t.trR_matches);
        CHECK(t.trZR_matches);
        CHECK(t.trZ_matches);
    }
    // Spot values.
    CHECK(traces(lattice_An(2)).trZ == CycloNum(Rat(-1)));
    CHECK(traces(lattice_Zn(1)).trR == cyclo_root(4, 1));
}

TEST_CASE("singular dimensions, rank 1") {
    for (long h = 0; h < 24; ++h) {
        CHECK(singular_dimension(lattice_Zn(1), h) == (h == 3 ? 1 : 0));
        CHECK(singular_dimension(rescale(lattice_Zn(1), 3), h) ==
              (h == 1 ? 1 : 0));
    }
}

TEST_CASE("singular dimensions, known spaces") {
    CHECK(singular_dimension(lattice_An(2), 8) == 1);
    CHECK(singular_dimension(lattice_En(8), 0) == 1);
    // Basis vectors genuinely satisfy both eigen-equations.
    RepMatrices m = rep_matrices(lattice_An(2));
    auto basis = singular_basis(lattice_An(2), 8);
    REQUIRE(basis.size() == 1);
    const CycloVec& v = basis[0];
    CycloNum evT = cyclo_e(Rat(-8, 24)), evS = e8(8);
    for (std::size_t i = 0; i < m.space.dim(); ++i) {
        CycloNum ti = m.T[i][i] * v[i];
        CHECK(ti == evT * v[i]);
        CycloNum si(Rat(0));
        for (std::size_t j = 0; j < m.space.dim(); ++j) si += m.S[i][j] * v[j];
        CHECK(si == evS * v[i]);
    }
    // The A2 singular vector is supported on the two nontrivial cosets with
    // opposite signs.
    CHECK(v[0].is_zero() != v[1].is_zero());
    CHECK(v[0].is_zero() != v[2].is_zero());
}

TEST_CASE("singular dimension respects character shift under rescale(Z,3)^k") {
    // direct sums shift the admissible h additively: Z + Z admits h = 6.
    Lattice z2 = lattice_Zn(2);
    for (long h = 0; h < 24; ++h)
        CHECK(singular_dimension(z2, h) == (h == 6 ? 1 : 0));
}
