#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latjac/lattice.hpp>

using namespace latjac;

TEST_CASE("make_lattice validation") {
    CHECK(make_lattice({{2, 1}, {1, 2}}).rank() == 2);
    CHECK(invariants_of(make_lattice({{2, 1}, {1, 2}})).det == 3);
    CHECK_FALSE(invariants_of(lattice_Zn(1)).even);
    CHECK_THROWS_AS(make_lattice({{1, 1}, {1, 1}}), DegenerateError);
    CHECK_THROWS_AS(make_lattice({{1, 2}, {3, 4}}), NonSymmetricError);
    CHECK_THROWS_AS(make_lattice({{-2, 0}, {0, 3}}), NotPositiveDefiniteError);
}

TEST_CASE("invariants of named lattices") {
    LatticeInfo z1 = invariants_of(lattice_Zn(1));
    CHECK(z1.det == 1);
    CHECK_FALSE(z1.even);
    CHECK(z1.level == 8);
    CHECK(z1.n2 == 1);

    LatticeInfo a2 = invariants_of(lattice_An(2));
    CHECK(a2.det == 3);
    CHECK(a2.even);
    CHECK(a2.level == 3);
    CHECK(a2.n2 == 2);

    LatticeInfo d4 = invariants_of(lattice_Dn(4));
    CHECK(d4.det == 4);
    CHECK(d4.even);
    CHECK(d4.level == 2);  // equals level(Z^4) since D4 = ev(Z^4)
    CHECK(d4.n2 == 2);

    // Z^n level is 2, 4, 8 according to n mod 4 = 0, 2, 1 (or 3).
    CHECK(invariants_of(lattice_Zn(4)).level == 2);
    CHECK(invariants_of(lattice_Zn(2)).level == 4);
    CHECK(invariants_of(lattice_Zn(5)).level == 8);
    CHECK(invariants_of(lattice_Zn(3)).level == 8);

    CHECK(invariants_of(lattice_En(8)).det == 1);
    CHECK(invariants_of(lattice_En(8)).level == 1);
    CHECK(invariants_of(lattice_En(7)).det == 2);
    CHECK(invariants_of(lattice_En(6)).det == 3);
    CHECK(invariants_of(lattice_An(3)).det == 4);
    CHECK(invariants_of(lattice_Dn(5)).det == 4);
}

// Independent oracle for n2: the number of order-2 shadow cosets is 2^(n-n2).
static int n2_from_order2_count(const Lattice& L) {
    int count = 0;
    for (const auto& c : shadow_reps(L))
        if (c.order2) ++count;
    int n = static_cast<int>(L.rank());
    int k = 0;
    while ((1 << k) < count) ++k;
    REQUIRE((1 << k) == count);
    return n - k;
}

TEST_CASE("n2 cross-check against order-2 coset counts") {
    for (const Lattice& L :
         {lattice_Zn(1), lattice_Zn(2), lattice_Zn(3), lattice_An(2),
          lattice_An(3), lattice_Dn(3), lattice_Dn(4), lattice_Dn(5),
          lattice_En(6), lattice_En(7), lattice_En(8),
          rescale(lattice_Zn(1), 3), rescale(lattice_Zn(1), 4),
          rescale(lattice_An(2), 2)}) {
        CHECK(invariants_of(L).n2 == n2_from_order2_count(L));
    }
    CHECK(invariants_of(lattice_Dn(5)).n2 == 4);
    CHECK(invariants_of(lattice_En(7)).n2 == 6);
}

TEST_CASE("shadow cosets") {
    auto z = shadow_reps(lattice_Zn(1));
    REQUIRE(z.size() == 1);
    CHECK(z[0].rep == RatVec{Rat(1, 2)});
    CHECK(z[0].beta_mod1 == Rat(1, 8));

    auto z3 = shadow_reps(rescale(lattice_Zn(1), 3));
    REQUIRE(z3.size() == 3);
    CHECK(z3[0].rep == RatVec{Rat(1, 6)});
    CHECK(z3[1].rep == RatVec{Rat(1, 2)});
    CHECK(z3[2].rep == RatVec{Rat(5, 6)});
    CHECK(z3[0].beta_mod1 == Rat(1, 24));
    CHECK(z3[1].beta_mod1 == Rat(3, 8));
    CHECK(z3[2].beta_mod1 == Rat(1, 24));

    auto a2 = shadow_reps(lattice_An(2));
    REQUIRE(a2.size() == 3);
    std::multiset<Rat> betas;
    for (const auto& c : a2) betas.insert(c.beta_mod1);
    CHECK(betas == std::multiset<Rat>{Rat(0), Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("shadow congruence property") {
    for (const Lattice& L :
         {lattice_Zn(3), lattice_An(2), lattice_Dn(4), rescale(lattice_Zn(2), 3),
          make_lattice({{1, 0}, {0, 3}}), make_lattice({{3, 1}, {1, 5}})}) {
        auto reps = shadow_reps(L);
        CHECK(reps.size() ==
              static_cast<std::size_t>(invariants_of(L).det.get_si()));
        for (const auto& c : reps)
            for (std::size_t i = 0; i < L.rank(); ++i) {
                RatVec ei(L.rank(), Rat(0));
                ei[i] = 1;
                Rat diff = beta_pair(L, c.rep, ei) - beta_value(L, ei);
                CHECK(is_integer(diff));
            }
    }
}

TEST_CASE("even sublattice") {
    auto [d3, B] = even_sublattice(lattice_Zn(3));
    CHECK(d3.rank() == 3);
    CHECK(invariants_of(d3).det == 4);
    CHECK(invariants_of(d3).even);
    // Index 2: determinant of the basis change is +-2.
    CHECK(abs(det_int(B)) == 2);
    // ev is idempotent and level(L) = level(ev L).
    CHECK(even_sublattice(d3).first.gram == d3.gram);
    CHECK(invariants_of(d3).level == invariants_of(lattice_Zn(3)).level);
    CHECK(invariants_of(lattice_An(2)).level ==
          invariants_of(even_sublattice(lattice_An(2)).first).level);
}

TEST_CASE("direct sum and rescale") {
    Lattice s = direct_sum(lattice_An(2), lattice_Zn(1));
    CHECK(s.rank() == 3);
    CHECK(invariants_of(s).det == 3);
    CHECK(rescale(lattice_Zn(1), 3).gram == IntMat{{3}});
}

TEST_CASE("radical quotient") {
    CHECK(radical_quotient({{1, 1}, {1, 1}}).gram == IntMat{{1}});
    CHECK(radical_quotient({{2, 1}, {1, 2}}).gram == IntMat{{2, 1}, {1, 2}});
    CHECK(radical_quotient({{0, 0}, {0, 0}}).rank() == 0);
    CHECK_THROWS_AS(radical_quotient({{1, 0}, {0, -1}}), NotSemiDefiniteError);
    // Idempotent.
    auto q = radical_quotient({{2, 2, 0}, {2, 2, 0}, {0, 0, 3}});
    CHECK(radical_quotient(q.gram).gram == q.gram);
}

TEST_CASE("beta values") {
    CHECK(beta_value(lattice_Zn(1), {Rat(1, 2)}) == Rat(1, 8));
    CHECK(beta_value(rescale(lattice_Zn(1), 3), {Rat(1, 6)}) == Rat(1, 24));
    CHECK(beta_value(lattice_An(2), {Rat(2, 3), Rat(-1, 3)}) == Rat(1, 3));
    CHECK_THROWS_AS(beta_value(lattice_Zn(2), {Rat(1)}),
                    DimensionMismatchError);
}

TEST_CASE("smith normal form consistency") {
    for (const Lattice& L : {lattice_An(3), lattice_Dn(4), lattice_Dn(5),
                             rescale(lattice_Zn(2), 6)}) {
        auto info = invariants_of(L);
        Int prod = 1;
        for (const auto& d : info.elementary_divisors) prod *= d;
        CHECK(prod == info.det);
    }
    // D5 discriminant group is cyclic of order 4.
    CHECK(invariants_of(lattice_Dn(5)).elementary_divisors ==
          std::vector<Int>{4});
    // D4 discriminant group is (Z/2)^2.
    CHECK(invariants_of(lattice_Dn(4)).elementary_divisors ==
          std::vector<Int>{2, 2});
}
